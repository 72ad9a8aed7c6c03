#include "entropart/density.hpp"

#include <cmath>
#include <utility>

#include "entropart/error.hpp"

namespace entropart {

void validate(const DensityMatrix& density) {
  const auto& c = density.coefficients;
  if (c.rows() != c.cols()) throw Error("density matrix must be square");
  if (!c.allFinite()) throw Error("density matrix has non-finite entries");
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(c(i, j) - c(j, i)) > 1e-12 * std::max(1.0, std::abs(c(i, j))))
        throw Error("density matrix is not symmetric at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
  if (!(density.n_electrons > 0.0)) throw Error("electron count must be positive");
}

PairDensityField::PairDensityField(Molecule molecule, std::vector<Primitive> primitives,
                                   DensityMatrix density)
    : molecule_(std::move(molecule)),
      primitives_(std::move(primitives)),
      density_(std::move(density)),
      by_atom_(molecule_.size()) {
  validate(density_);
  if (static_cast<std::size_t>(density_.coefficients.rows()) != primitives_.size())
    throw Error("density matrix dimension " + std::to_string(density_.coefficients.rows()) +
                " does not match " + std::to_string(primitives_.size()) + " primitives");
  // Exact symmetry makes rho^{AB} and rho^{BA} bit-identical.
  auto& c = density_.coefficients;
  c = (0.5 * (c + c.transpose())).eval();
  for (std::size_t i = 0; i < primitives_.size(); ++i) {
    if (primitives_[i].center >= molecule_.size())
      throw Error("primitive " + std::to_string(i) + " refers to a missing center");
    by_atom_[primitives_[i].center].push_back(i);
  }
}

void PairDensityField::primitive_values(const Vec3& r, std::vector<double>& values) const {
  values.resize(primitives_.size());
  for (std::size_t i = 0; i < primitives_.size(); ++i) values[i] = eval_primitive(primitives_[i], r);
}

double PairDensityField::density(const Vec3& r) const {
  thread_local std::vector<double> phi;
  primitive_values(r, phi);
  const auto& c = density_.coefficients;
  double rho = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) row += c(i, j) * phi[j];
    rho += phi[i] * row;
  }
  return rho;
}

double PairDensityField::pair_density(std::size_t a, std::size_t b, const Vec3& r) const {
  if (a >= atom_count() || b >= atom_count()) throw Error("atom index out of range");
  if (a > b) std::swap(a, b);
  const auto& c = density_.coefficients;
  // Evaluated for the ordered pair (min, max) and in the same order as
  // pair_densities(), so (A,B), (B,A) and both entry points agree bitwise.
  double value = 0.0;
  for (std::size_t i : by_atom_[a]) {
    const double pi = eval_primitive(primitives_[i], r);
    if (pi == 0.0) continue;
    double row = 0.0;
    for (std::size_t j : by_atom_[b]) row += c(i, j) * eval_primitive(primitives_[j], r);
    value += pi * row;
  }
  return value;
}

void PairDensityField::pair_densities(const Vec3& r, std::span<double> out) const {
  const std::size_t n = atom_count();
  if (out.size() < n * n) throw Error("pair density buffer too small");
  thread_local std::vector<double> phi;
  primitive_values(r, phi);
  const auto& c = density_.coefficients;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double value = 0.0;
      for (std::size_t i : by_atom_[a]) {
        if (phi[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j : by_atom_[b]) row += c(i, j) * phi[j];
        value += phi[i] * row;
      }
      out[a * n + b] = value;
      out[b * n + a] = value;
    }
  }
}

}  // namespace entropart

namespace entropart {

DensityMatrix density_from_orbitals(std::span<const MolecularOrbital> orbitals,
                                    std::size_t n_primitives) {
  DensityMatrix d;
  const auto n = static_cast<Eigen::Index>(n_primitives);
  d.coefficients = Eigen::MatrixXd::Zero(n, n);
  for (const auto& mo : orbitals) {
    if (mo.occupation < 0.0) throw Error("negative orbital occupation");
    if (mo.coefficients.size() != n_primitives)
      throw Error("orbital has " + std::to_string(mo.coefficients.size()) +
                  " coefficients, expected " + std::to_string(n_primitives));
    if (mo.occupation == 0.0) continue;
    const Eigen::Map<const Eigen::VectorXd> c(mo.coefficients.data(), n);
    d.coefficients.noalias() += mo.occupation * c * c.transpose();
    d.n_electrons += mo.occupation;
  }
  return d;
}

}  // namespace entropart
