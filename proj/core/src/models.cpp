#include "entropart/models.hpp"

#include <cmath>

#include "entropart/error.hpp"

namespace entropart {
namespace {

void require_positive_distance(double distance) {
  if (!(distance > 0.0) || !std::isfinite(distance))
    throw Error("internuclear distance must be positive and finite");
}

// sigma_g, sigma_u coefficients over {phiA, phiB} (columns).
Eigen::Matrix2d mo_coefficients(double s) {
  Eigen::Matrix2d c;
  const double g = 1.0 / std::sqrt(2.0 * (1.0 + s));
  const double u = 1.0 / std::sqrt(2.0 * (1.0 - s));
  c << g, u, g, -u;
  return c;
}

std::array<double, 16> transform_eri(const IntegralSet& ints, const Eigen::Matrix2d& c) {
  std::array<double, 16> mo{};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          double v = 0.0;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                  v += c(i, p) * c(j, q) * c(k, r) * c(l, s) * ints.two_electron(i, j, k, l);
          mo[((p * 2 + q) * 2 + r) * 2 + s] = v;
        }
  return mo;
}

double mo_eri(const std::array<double, 16>& mo, int p, int q, int r, int s) {
  return mo[((p * 2 + q) * 2 + r) * 2 + s];
}

Molecule h2_geometry(double distance) { return homonuclear_diatomic("H", distance); }

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::HartreeFock: return "hf";
    case Method::HeitlerLondon: return "hl";
    case Method::FullCI: return "fci";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "hf") return Method::HartreeFock;
  if (name == "hl") return Method::HeitlerLondon;
  if (name == "fci") return Method::FullCI;
  throw Error("unknown method '" + std::string(name) + "' (expected hf, hl or fci)");
}

PairCoefficients hf_pair_weights(double overlap) {
  return {1.0 / (1.0 + overlap), 1.0 / (1.0 + overlap)};
}

PairCoefficients hl_pair_weights(double overlap) {
  const double d = 1.0 + overlap * overlap;
  return {1.0 / d, overlap / d};
}

PairCoefficients ci_pair_weights(double overlap, double c1, double c2) {
  const double g = c1 * c1 / (1.0 + overlap);
  const double u = c2 * c2 / (1.0 - overlap);
  return {g + u, g - u};
}

Eigen::Matrix2d ci_hamiltonian(const IntegralSet& ints) {
  const double s = ints.overlap(0, 1);
  const Eigen::Matrix2d c = mo_coefficients(s);
  const Eigen::Matrix2d h = c.transpose() * ints.core() * c;
  const auto mo = transform_eri(ints, c);
  const double repulsion = 1.0 / ints.distance;
  Eigen::Matrix2d hci;
  hci(0, 0) = 2.0 * h(0, 0) + mo_eri(mo, 0, 0, 0, 0) + repulsion;
  hci(1, 1) = 2.0 * h(1, 1) + mo_eri(mo, 1, 1, 1, 1) + repulsion;
  hci(0, 1) = hci(1, 0) = mo_eri(mo, 0, 1, 0, 1);
  if (!hci.allFinite()) throw Error("CI matrix is not finite");
  return hci;
}

CiVector lowest_ci_root(const Eigen::Matrix2d& h) {
  if (!h.allFinite()) throw Error("CI matrix is not finite");
  const double a = h(0, 0), d = h(1, 1), b = h(0, 1);
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::hypot(half_gap, b);
  CiVector out;
  out.energy = mean - radius;
  if (b == 0.0) {
    if (a < d) {
      out.c1 = 1.0, out.c2 = 0.0;
    } else if (d < a) {
      out.c1 = 0.0, out.c2 = 1.0;
    } else {
      out.c1 = out.c2 = 1.0 / std::sqrt(2.0);
    }
    return out;
  }
  // Eigenvector via the half-angle rotation: tan(2 theta) = 2b / (a - d).
  const double theta = 0.5 * std::atan2(2.0 * b, a - d);
  // The higher root is (cos, sin); the lower one is orthogonal to it.
  double c1 = -std::sin(theta), c2 = std::cos(theta);
  if (c1 < 0.0 || (c1 == 0.0 && c2 < 0.0)) c1 = -c1, c2 = -c2;
  out.c1 = c1;
  out.c2 = c2;
  return out;
}

DensityMatrix expand_pair_weights(const ContractedS& basis, const PairCoefficients& w) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  DensityMatrix d;
  d.coefficients = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const double dd = basis.coefficients()[i] * basis.coefficients()[j];
      d.coefficients(i, j) = w.same_center * dd;
      d.coefficients(k + i, k + j) = w.same_center * dd;
      d.coefficients(i, k + j) = w.cross_center * dd;
      d.coefficients(k + i, j) = w.cross_center * dd;
    }
  d.n_electrons = 2.0;
  return d;
}

DensityMatrix hf_pair_coefficients(double distance, const ContractedS& basis) {
  require_positive_distance(distance);
  return expand_pair_weights(basis, hf_pair_weights(contracted_overlap(basis, basis, distance)));
}

DensityMatrix hl_pair_coefficients(double distance, const ContractedS& basis) {
  require_positive_distance(distance);
  return expand_pair_weights(basis, hl_pair_weights(contracted_overlap(basis, basis, distance)));
}

CiVector fci_coefficients(double distance, const ContractedS& basis) {
  require_positive_distance(distance);
  return lowest_ci_root(ci_hamiltonian(integral_engine(basis, basis, distance)));
}

DensityMatrix fci_pair_coefficients(double distance, const ContractedS& basis) {
  const CiVector ci = fci_coefficients(distance, basis);
  return expand_pair_weights(
      basis, ci_pair_weights(contracted_overlap(basis, basis, distance), ci.c1, ci.c2));
}

H2Model build_h2_model(Method method, double distance, const ContractedS& basis) {
  require_positive_distance(distance);
  H2Model m;
  m.method = method;
  m.distance = distance;
  m.molecule = h2_geometry(distance);
  const auto coef_a = place_contracted_s(basis, m.molecule, 0, m.primitives);
  const auto coef_b = place_contracted_s(basis, m.molecule, 1, m.primitives);
  (void)coef_b;

  const IntegralSet ints = integral_engine(basis, basis, distance);
  const double s = ints.overlap(0, 1);
  m.overlap = s;
  const Eigen::Matrix2d hci = ci_hamiltonian(ints);

  PairCoefficients weights;
  switch (method) {
    case Method::HartreeFock:
      m.ci = {1.0, 0.0, hci(0, 0)};
      weights = hf_pair_weights(s);
      break;
    case Method::HeitlerLondon: {
      const double norm = std::sqrt(2.0 * (1.0 + s * s));
      const Eigen::Vector2d c((1.0 + s) / norm, -(1.0 - s) / norm);
      m.ci = {c(0), c(1), c.dot(hci * c)};
      weights = hl_pair_weights(s);
      break;
    }
    case Method::FullCI:
      m.ci = lowest_ci_root(hci);
      weights = ci_pair_weights(s, m.ci.c1, m.ci.c2);
      break;
  }
  m.energy = m.ci.energy;
  m.density = expand_pair_weights(basis, weights);

  // Orbitals over the primitive list (A block then B block).
  const std::size_t k = basis.size();
  const Eigen::Matrix2d c = mo_coefficients(s);
  const Eigen::Matrix2d h = c.transpose() * ints.core() * c;
  const auto mo = transform_eri(ints, c);
  const std::array<double, 2> eps = {
      h(0, 0) + mo_eri(mo, 0, 0, 0, 0),
      h(1, 1) + 2.0 * mo_eri(mo, 0, 0, 1, 1) - mo_eri(mo, 0, 1, 1, 0)};
  for (int p = 0; p < 2; ++p) {
    MolecularOrbital orb;
    orb.occupation = 2.0 * (p == 0 ? m.ci.c1 * m.ci.c1 : m.ci.c2 * m.ci.c2);
    orb.energy = method == Method::HartreeFock ? eps[p] : 0.0;
    orb.coefficients.resize(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      orb.coefficients[i] = c(0, p) * coef_a[i];
      orb.coefficients[k + i] = c(1, p) * coef_a[i];
    }
    m.orbitals.push_back(std::move(orb));
  }
  return m;
}

double hydrogen_atom_energy(const ContractedS& basis, double charge) {
  std::vector<Primitive> prims;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Primitive p;
    p.exponent = basis.exponents()[k];
    p.normalization = cartesian_normalization(p.exponent, {0, 0, 0});
    prims.push_back(p);
  }
  // Second center is a ghost with zero charge, placed on top of the first.
  const IntegralSet ints =
      integral_engine(prims, basis.coefficients(), prims, basis.coefficients(), charge, 0.0);
  return ints.kinetic(0, 0) + ints.nuclear[0](0, 0);
}

AtomModel atom_reference(const ContractedS& basis) {
  AtomModel a;
  a.molecule = Molecule({{"H", 1, Vec3::Zero()}});
  const auto coef = place_contracted_s(basis, a.molecule, 0, a.primitives);
  MolecularOrbital orb;
  orb.occupation = 1.0;
  orb.energy = hydrogen_atom_energy(basis);
  orb.coefficients = coef;
  a.orbitals.push_back(orb);
  a.density = density_from_orbitals(a.orbitals, a.primitives.size());
  a.energy = orb.energy;
  return a;
}

}  // namespace entropart
