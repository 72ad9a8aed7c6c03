#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "entropart/error.hpp"
#include "entropart/integrals.hpp"
#include "entropart/models.hpp"

namespace ep = entropart;

namespace {

template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

double basis_derivative(const ep::ContractedS& f, double r) {
  double d = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double a = f.exponents()[k];
    d += f.coefficients()[k] * ep::cartesian_normalization(a, {0, 0, 0}) * (-2.0 * a * r) *
         std::exp(-a * r * r);
  }
  return d;
}

const std::vector<double> kLadder = {1.4, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0};

}  // namespace

TEST(Boys, MatchesErfFormAndSeries) {
  EXPECT_DOUBLE_EQ(ep::boys_f0(0.0), 1.0);
  for (double t : {1e-9, 1e-7, 1e-5, 0.01, 0.5, 3.0, 17.0, 200.0}) {
    const double ref = 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(std::sqrt(t));
    EXPECT_NEAR(ep::boys_f0(t), ref, 1e-14) << t;
  }
  EXPECT_NEAR(ep::boys_f0(1e-7), 1.0 - 1e-7 / 3.0 + 1e-14 / 10.0, 2e-16);
  EXPECT_THROW(ep::boys_f0(-1.0), ep::Error);
}

TEST(Integrals, AtomEnergyMatchesRadialQuadrature) {
  const auto f = ep::sto6g_hydrogen();
  const double T = simpson(
      [&](double r) {
        const double d = basis_derivative(f, r);
        return 0.5 * 4 * std::numbers::pi * r * r * d * d;
      },
      0.0, 30.0, 40000);
  const double V = -simpson([&](double r) { return 4 * std::numbers::pi * r * f.value(r) * f.value(r); },
                            0.0, 30.0, 40000);
  EXPECT_NEAR(ep::hydrogen_atom_energy(f), T + V, 1e-10);
  // Slater 1s with zeta = 1.24: E = zeta^2/2 - zeta.
  EXPECT_NEAR(ep::hydrogen_atom_energy(f), 0.5 * 1.24 * 1.24 - 1.24, 1e-3);
  EXPECT_GT(ep::hydrogen_atom_energy(f), -0.5);
}

TEST(Integrals, OneCenterCoulombMatchesShellTheorem) {
  // (AA|AA) = int 4 pi r^2 rho(r) V(r) dr with the spherical potential
  // V(r) = Q(r)/r + int_r^inf 4 pi s rho(s) ds.
  const auto f = ep::sto6g_hydrogen();
  auto rho = [&](double r) { return f.value(r) * f.value(r); };
  const int n = 3000;
  const double rmax = 25.0, h = rmax / n;
  std::vector<double> inner(n + 1, 0.0), outer(n + 1, 0.0);
  // Cumulative trapezoid integrals refined with midpoint correction (fine mesh).
  for (int i = 1; i <= n; ++i) {
    const double a = (i - 1) * h, b = i * h, m = 0.5 * (a + b);
    auto q = [&](double s) { return 4 * std::numbers::pi * s * s * rho(s); };
    inner[i] = inner[i - 1] + h / 6.0 * (q(a) + 4 * q(m) + q(b));
  }
  for (int i = n - 1; i >= 0; --i) {
    const double a = i * h, b = (i + 1) * h, m = 0.5 * (a + b);
    auto q = [&](double s) { return 4 * std::numbers::pi * s * rho(s); };
    outer[i] = outer[i + 1] + h / 6.0 * (q(a) + 4 * q(m) + q(b));
  }
  double J = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * h;
    const double V = (i == 0 ? 0.0 : inner[i] / r) + outer[i];
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    J += w * h * 4 * std::numbers::pi * r * r * rho(r) * V;
  }
  const auto ints = ep::integral_engine(f, f, 1.4);
  EXPECT_NEAR(ints.two_electron(0, 0, 0, 0), J, 1e-6);
  EXPECT_NEAR(ints.two_electron(1, 1, 1, 1), ints.two_electron(0, 0, 0, 0), 1e-15);
  // A Slater 1s with exponent zeta gives 5 zeta / 8; the fit uses zeta = 1.24.
  EXPECT_NEAR(J, 5.0 * 1.24 / 8.0, 0.01);
}

TEST(Integrals, SymmetriesAndLimits) {
  const auto f = ep::sto6g_hydrogen();
  const auto ints = ep::integral_engine(f, f, 1.4);
  EXPECT_NEAR(ints.overlap(0, 1), ep::contracted_overlap(f, f, 1.4), 1e-15);
  EXPECT_NEAR(ints.overlap(0, 0), 1.0, 1e-14);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const double v = ints.two_electron(i, j, k, l);
          EXPECT_NEAR(v, ints.two_electron(j, i, k, l), 1e-15);
          EXPECT_NEAR(v, ints.two_electron(k, l, i, j), 1e-15);
        }
  EXPECT_NEAR(ints.kinetic(0, 1), ints.kinetic(1, 0), 1e-15);
  // At large R, (AA|BB) -> 1/R.
  const auto far = ep::integral_engine(f, f, 50.0);
  EXPECT_NEAR(far.two_electron(0, 0, 1, 1), 1.0 / 50.0, 1e-12);
  EXPECT_THROW(ep::integral_engine(f, f, -0.1), ep::Error);
}

TEST(PairWeights, HeitlerLondonMatchesCiForm) {
  for (double s : {0.0, 0.2, 0.66, 0.95}) {
    const auto w = ep::hl_pair_weights(s);
    const double n = std::sqrt(2.0 * (1.0 + s * s));
    const auto ci = ep::ci_pair_weights(s, (1 + s) / n, -(1 - s) / n);
    EXPECT_NEAR(w.same_center, ci.same_center, 1e-14);
    EXPECT_NEAR(w.cross_center, ci.cross_center, 1e-14);
    EXPECT_NEAR(w.same_center, 1.0 / (1.0 + s * s), 1e-15);
    EXPECT_NEAR(w.cross_center, s / (1.0 + s * s), 1e-15);
  }
}

TEST(PairWeights, HartreeFockIsSingleDeterminantLimit) {
  for (double s : {0.0, 0.3, 0.7}) {
    const auto hf = ep::hf_pair_weights(s);
    const auto ci = ep::ci_pair_weights(s, 1.0, 0.0);
    EXPECT_DOUBLE_EQ(hf.same_center, ci.same_center);
    EXPECT_DOUBLE_EQ(hf.cross_center, ci.cross_center);
  }
}

TEST(PairWeights, TwoElectronsForAnyNormalizedCiVector) {
  for (double s : {0.1, 0.5, 0.8})
    for (double t : {0.0, 0.4, 1.1, 2.9}) {
      const auto w = ep::ci_pair_weights(s, std::cos(t), std::sin(t));
      EXPECT_NEAR(2 * w.same_center + 2 * w.cross_center * s, 2.0, 1e-13);
    }
}

TEST(CiRoot, MatchesDenseEigensolver) {
  const std::vector<Eigen::Matrix2d> cases = [] {
    std::vector<Eigen::Matrix2d> v;
    Eigen::Matrix2d h;
    h << -1.8, 0.18, 0.18, -0.3;
    v.push_back(h);
    h << -0.5, -0.2, -0.2, -0.49;
    v.push_back(h);
    h << 0.3, 1e-12, 1e-12, 0.3;
    v.push_back(h);
    return v;
  }();
  for (const auto& h : cases) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    const auto root = ep::lowest_ci_root(h);
    EXPECT_NEAR(root.energy, es.eigenvalues()(0), 1e-14);
    Eigen::Vector2d v(root.c1, root.c2);
    EXPECT_NEAR(v.norm(), 1.0, 1e-14);
    EXPECT_LT((h * v - root.energy * v).norm(), 1e-13);
    EXPECT_GE(root.c1, 0.0);
  }
}

TEST(CiRoot, DegenerateDiagonalPicksEqualMix) {
  Eigen::Matrix2d h;
  h << -0.7, 0.0, 0.0, -0.7;
  const auto root = ep::lowest_ci_root(h);
  EXPECT_DOUBLE_EQ(root.c1, 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(root.c2, 1.0 / std::sqrt(2.0));
  h << -0.2, 0.0, 0.0, -0.7;
  EXPECT_DOUBLE_EQ(ep::lowest_ci_root(h).c2, 1.0);
}

TEST(Models, HeitlerLondonEnergyMatchesValenceBondFormula) {
  const auto f = ep::sto6g_hydrogen();
  for (double R : kLadder) {
    const auto ints = ep::integral_engine(f, f, R);
    const double s = ints.overlap(0, 1);
    const auto h = ints.core();
    const double e = (2 * h(0, 0) + 2 * s * h(0, 1) + ints.two_electron(0, 0, 1, 1) +
                      ints.two_electron(0, 1, 0, 1)) /
                         (1 + s * s) +
                     1.0 / R;
    EXPECT_NEAR(ep::build_h2_model(ep::Method::HeitlerLondon, R).energy, e, 1e-12) << R;
  }
}

TEST(Models, VariationalOrderingAndDissociation) {
  const double e_atom = ep::hydrogen_atom_energy();
  for (double R : kLadder) {
    const double hf = ep::build_h2_model(ep::Method::HartreeFock, R).energy;
    const double hl = ep::build_h2_model(ep::Method::HeitlerLondon, R).energy;
    const double fci = ep::build_h2_model(ep::Method::FullCI, R).energy;
    EXPECT_LE(fci, hf + 1e-14) << R;
    EXPECT_LE(fci, hl + 1e-14) << R;
  }
  const double fci50 = ep::build_h2_model(ep::Method::FullCI, 50.0).energy;
  const double hf50 = ep::build_h2_model(ep::Method::HartreeFock, 50.0).energy;
  EXPECT_NEAR(fci50, 2 * e_atom, 1e-6);
  EXPECT_GT(hf50 - 2 * e_atom, 0.05);
  // Bound near equilibrium.
  EXPECT_LT(ep::build_h2_model(ep::Method::FullCI, 1.4).energy, 2 * e_atom - 0.1);
}

TEST(Models, OrbitalsReproduceDensityMatrix) {
  for (auto m : {ep::Method::HartreeFock, ep::Method::HeitlerLondon, ep::Method::FullCI})
    for (double R : {1.4, 4.0}) {
      const auto model = ep::build_h2_model(m, R);
      ASSERT_EQ(model.orbitals.size(), 2u);
      double occ = 0.0;
      for (const auto& o : model.orbitals) occ += o.occupation;
      EXPECT_NEAR(occ, 2.0, 1e-14);
      const auto d = ep::density_from_orbitals(model.orbitals, model.primitives.size());
      EXPECT_LT((d.coefficients - model.density.coefficients).cwiseAbs().maxCoeff(), 1e-13);
      EXPECT_NO_THROW(ep::validate(model.density));
    }
  const auto hf = ep::build_h2_model(ep::Method::HartreeFock, 1.4);
  EXPECT_LT(hf.orbitals[0].energy, 0.0);
  EXPECT_LT(hf.orbitals[0].energy, hf.orbitals[1].energy);
  EXPECT_EQ(hf.orbitals[1].occupation, 0.0);
}

TEST(Models, FciCoefficientsApproachEqualMixAtDissociation) {
  const auto ci = ep::fci_coefficients(50.0);
  EXPECT_NEAR(ci.c1, 1 / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(ci.c2, -1 / std::sqrt(2.0), 1e-8);
  const auto eq = ep::fci_coefficients(1.4);
  EXPECT_GT(eq.c1, 0.99);
  EXPECT_LT(eq.c2, 0.0);
}

TEST(Models, RejectBadInput) {
  EXPECT_THROW(ep::build_h2_model(ep::Method::FullCI, 0.0), ep::Error);
  EXPECT_THROW(ep::build_h2_model(ep::Method::FullCI, -1.0), ep::Error);
  EXPECT_THROW(ep::hf_pair_coefficients(std::nan("")), ep::Error);
  EXPECT_THROW(ep::parse_method("ccsd"), ep::Error);
  EXPECT_EQ(ep::parse_method("hl"), ep::Method::HeitlerLondon);
  EXPECT_EQ(ep::to_string(ep::Method::FullCI), "fci");
}
