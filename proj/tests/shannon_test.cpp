#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "entropart/error.hpp"
#include "entropart/models.hpp"
#include "entropart/shannon.hpp"
#include "entropart/summation.hpp"

namespace ep = entropart;
using ep::Vec3;

namespace {

ep::MolecularGrid default_grid(const ep::Molecule& m) {
  return ep::build_molecular_grid(m, ep::AtomicGridSpec{});
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(PointTerms, SingleCenterIsAllNet) {
  const std::vector<double> p = {0.37};
  const auto t = ep::shannon_point_terms(p, 1);
  EXPECT_DOUBLE_EQ(t.total, -0.37 * std::log(0.37));
  EXPECT_DOUBLE_EQ(t.net[0], t.total);
  EXPECT_EQ(t.nadd, 0.0);
  EXPECT_TRUE(t.overlap.empty());
}

TEST(PointTerms, EqualHalvesGiveLogTwoNonadditivity) {
  const double rho = 0.8;
  const std::vector<double> p = {rho / 2, 0.0, 0.0, rho / 2};
  const auto t = ep::shannon_point_terms(p, 2);
  EXPECT_NEAR(t.nadd, rho * std::log(2.0), 1e-15);
  EXPECT_EQ(t.overlap[0], 0.0);
  EXPECT_NEAR(t.add - t.nadd, t.total, 1e-15);
}

TEST(PointTerms, HartreeFockMidpointClosedForm) {
  // At the bond midpoint phiA = phiB = phi, so each ordered pair density is
  // x = phi^2 / (1+S) and rho = 4x.
  const auto model = ep::build_h2_model(ep::Method::HartreeFock, 1.4);
  const double s = model.overlap;
  const double phi = ep::sto6g_hydrogen().value(0.7);
  const double x = phi * phi / (1 + s);
  const double rho = 4 * x;

  std::vector<double> pairs(4);
  model.field().pair_densities(Vec3::Zero(), pairs);
  for (double v : pairs) EXPECT_NEAR(v, x, 1e-15);
  const auto t = ep::shannon_point_terms(pairs, 2);
  EXPECT_NEAR(t.total, -rho * std::log(rho), 1e-14);
  EXPECT_NEAR(t.net[0], -x * std::log(x), 1e-14);
  EXPECT_NEAR(t.net[1], -x * std::log(x), 1e-14);
  EXPECT_NEAR(t.overlap[0], -2 * x * std::log(x), 1e-14);
  EXPECT_NEAR(t.nadd, rho * std::log(4.0), 1e-14);
}

TEST(PointTerms, ClosureAtRandomPointsForAllModels) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> box(-4.0, 4.0);
  for (auto m : {ep::Method::HartreeFock, ep::Method::HeitlerLondon, ep::Method::FullCI})
    for (double R : {1.4, 4.0, 50.0}) {
      const auto field = ep::build_h2_model(m, R).field();
      std::vector<double> pairs(4);
      for (int k = 0; k < 10000; ++k) {
        const Vec3 r(box(rng), box(rng), box(rng) + (k % 2 ? R / 2 : -R / 2));
        field.pair_densities(r, pairs);
        for (double scale : {1.0, 2.0}) {
          const auto t = ep::shannon_point_terms(pairs, 2, scale);
          double add = t.net[0] + t.net[1] + t.overlap[0];
          ASSERT_EQ(add, t.add);
          const double ref = std::max(std::abs(t.total), std::abs(t.add));
          ASSERT_LE(std::abs(t.add - t.nadd - t.total), 1e-10 * std::max(ref, 1e-300));
        }
      }
    }
}

TEST(PointTerms, NegativeDensitiesAreClampedOrCounted) {
  ep::DensityDiagnostics d;
  const std::vector<double> tiny = {-1e-14};
  const auto t = ep::shannon_point_terms(tiny, 1, 1.0, &d);
  EXPECT_EQ(t.total, 0.0);
  EXPECT_EQ(t.net[0], 0.0);
  EXPECT_EQ(d.clamped, 1u);
  const std::vector<double> neg = {0.3, -0.2, -0.2, 0.05};  // rho = -0.05
  const auto u = ep::shannon_point_terms(neg, 2, 1.0, &d);
  EXPECT_EQ(d.negative, 1u);
  EXPECT_TRUE(std::isfinite(u.total));
  EXPECT_NEAR(u.add - u.nadd, u.total, 1e-15);
  const std::vector<double> zero = {0.0, 0.0, 0.0, 0.0};
  const auto z = ep::shannon_point_terms(zero, 2);
  EXPECT_EQ(z.total, 0.0);
  EXPECT_EQ(z.nadd, 0.0);
}

TEST(Decompose, GaussianDensityMatchesDifferentialEntropy) {
  // One normalized s primitive squared is a Gaussian with variance 1/(4a).
  const ep::Molecule mol({{"H", 1, Vec3::Zero()}});
  for (double a : {0.4, 2.5}) {
    std::vector<ep::Primitive> prims = {ep::make_primitive(mol, 0, {0, 0, 0}, a)};
    ep::DensityMatrix dm{Eigen::MatrixXd::Ones(1, 1), 1.0};
    const ep::PairDensityField field(mol, prims, dm);
    const auto d = ep::shannon_decompose(field, default_grid(mol));
    const double var = 1.0 / (4.0 * a);
    EXPECT_NEAR(d.density.total, 1.5 * std::log(2 * std::numbers::pi * std::numbers::e * var), 1e-9);
    EXPECT_EQ(d.density.nadd, 0.0);
    EXPECT_DOUBLE_EQ(d.density.net[0], d.density.total);
    EXPECT_NEAR(d.shape.total, d.density.total, 1e-14);  // N = 1
  }
}

TEST(Decompose, ScaledGaussianFollowsShapeRelation) {
  const ep::Molecule mol({{"H", 1, Vec3::Zero()}});
  std::vector<ep::Primitive> prims = {ep::make_primitive(mol, 0, {0, 0, 0}, 1.0)};
  ep::DensityMatrix dm{Eigen::MatrixXd::Constant(1, 1, 3.0), 3.0};
  const auto d = ep::shannon_decompose({mol, prims, dm}, default_grid(mol));
  const double var = 0.25;
  const double s_sigma = 1.5 * std::log(2 * std::numbers::pi * std::numbers::e * var);
  EXPECT_NEAR(d.shape.total, s_sigma, 1e-9);
  EXPECT_NEAR(d.density.total, 3 * s_sigma - 3 * std::log(3.0), 1e-9);
}

TEST(Decompose, IntegratedClosureAndQuadratureShapeIdentity) {
  for (auto m : {ep::Method::HartreeFock, ep::Method::HeitlerLondon, ep::Method::FullCI})
    for (double R : {1.4, 3.0, 10.0}) {
      const auto model = ep::build_h2_model(m, R);
      const auto d = ep::shannon_decompose(model.field(), default_grid(model.molecule));
      EXPECT_LE(std::abs(d.density.add - d.density.nadd - d.density.total), 1e-8);
      EXPECT_LE(std::abs(d.shape.add - d.shape.nadd - d.shape.total), 1e-8);
      // On a quadrature, sigma log sigma integrates to S_rho/N + (Q[rho]/N) log N.
      const double N = d.electrons;
      EXPECT_LE(relative_gap(d.density.total, N * d.shape.total - d.grid_electrons * std::log(N)), 1e-12);
      EXPECT_NEAR(d.grid_electrons, 2.0, 1e-5);
      EXPECT_NEAR(d.density.net[0], d.density.net[1], 1e-9);
      EXPECT_EQ(d.diagnostics.negative, 0u);
    }
}

TEST(Decompose, AtomHasNoNonadditivity) {
  const auto atom = ep::atom_reference();
  const auto d = ep::shannon_decompose(atom.field(), default_grid(atom.molecule));
  EXPECT_EQ(d.density.nadd, 0.0);
  EXPECT_EQ(d.density.total, d.density.net[0]);
  EXPECT_NEAR(d.shape.total, d.density.total, 1e-13);
  // The fitted Slater 1s (zeta = 1.24) has S = 3 + ln(pi) - 3 ln(zeta).
  EXPECT_NEAR(d.density.total, 3.0 + std::log(std::numbers::pi) - 3.0 * std::log(1.24), 1e-3);
}

TEST(Decompose, DissociationLimitsAndHump) {
  const auto atom = ep::atom_reference();
  const double s_atom = ep::shannon_decompose(atom.field(), default_grid(atom.molecule)).density.total;
  for (auto m : {ep::Method::HartreeFock, ep::Method::HeitlerLondon, ep::Method::FullCI}) {
    const auto model = ep::build_h2_model(m, 50.0);
    const auto d = ep::shannon_decompose(model.field(), default_grid(model.molecule));
    EXPECT_NEAR(d.density.total, 2 * s_atom, 1e-4);
    EXPECT_LE(std::abs(d.density.overlap[0]), 1e-6);
    EXPECT_LE(std::abs(d.density.nadd), 1e-6);
    EXPECT_NEAR(d.shape.total, s_atom + std::log(2.0), 1e-4);
  }
  const auto hf4 = ep::build_h2_model(ep::Method::HartreeFock, 4.0);
  const auto fci4 = ep::build_h2_model(ep::Method::FullCI, 4.0);
  EXPECT_GT(ep::shannon_decompose(hf4.field(), default_grid(hf4.molecule)).density.total, 2 * s_atom);
  EXPECT_LT(ep::shannon_decompose(fci4.field(), default_grid(fci4.molecule)).density.total, 2 * s_atom);
}

TEST(Decompose, FullCiApproachesAtomsMonotonically) {
  const auto atom = ep::atom_reference();
  const double s2 = 2 * ep::shannon_decompose(atom.field(), default_grid(atom.molecule)).density.total;
  double prev_gap = INFINITY;
  for (double R : {1.4, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0}) {
    const auto model = ep::build_h2_model(ep::Method::FullCI, R);
    const double s = ep::shannon_decompose(model.field(), default_grid(model.molecule)).density.total;
    const double gap = std::abs(s - s2);
    EXPECT_LT(gap, prev_gap + 1e-7) << "R=" << R;
    prev_gap = gap;
  }
}

TEST(Decompose, BitIdenticalAcrossThreadCounts) {
  const auto model = ep::build_h2_model(ep::Method::FullCI, 2.0);
  ep::AtomicGridSpec spec;
  spec.n_radial = 120;
  spec.lebedev_order = 110;
  const auto g = ep::build_molecular_grid(model.molecule, spec);
  const unsigned saved = ep::worker_threads();
  ep::set_worker_threads(1);
  const auto a = ep::shannon_decompose(model.field(), g);
  ep::set_worker_threads(5);
  const auto b = ep::shannon_decompose(model.field(), g);
  ep::set_worker_threads(saved);
  EXPECT_EQ(a.density.total, b.density.total);
  EXPECT_EQ(a.density.nadd, b.density.nadd);
  EXPECT_EQ(a.shape.overlap[0], b.shape.overlap[0]);
}

TEST(Decompose, CoarseGridFailsNormalizationCheck) {
  const auto model = ep::build_h2_model(ep::Method::HartreeFock, 1.4);
  ep::AtomicGridSpec spec;
  spec.n_radial = 4;
  spec.lebedev_order = 6;
  const auto g = ep::build_molecular_grid(model.molecule, spec);
  EXPECT_THROW(ep::shannon_decompose(model.field(), g), ep::Error);
}

TEST(DefaultGrid, ConvergedAgainstFineGridAtEquilibrium) {
  ep::AtomicGridSpec fine;
  fine.n_radial = 1000;
  fine.lebedev_order = 434;
  for (auto m : {ep::Method::HartreeFock, ep::Method::FullCI}) {
    const auto model = ep::build_h2_model(m, 1.4);
    const double s_default = ep::shannon_decompose(model.field(), default_grid(model.molecule)).density.total;
    const double s_fine =
        ep::shannon_decompose(model.field(), ep::build_molecular_grid(model.molecule, fine)).density.total;
    EXPECT_LT(std::abs(s_default - s_fine), 1e-7);
  }
}

TEST(Reference, HomonuclearPenaltyIsLogTwo) {
  const std::vector<ep::FragmentShannon> two = {{3.5, 1.0}, {3.5, 1.0}};
  const auto lim = ep::asymptotic_shannon_reference(two);
  EXPECT_DOUBLE_EQ(lim.density, 7.0);
  EXPECT_NEAR(lim.shape, 3.5 + std::log(2.0), 1e-15);
  EXPECT_NEAR(std::log(2.0), 0.69315, 5e-6);
}

TEST(Reference, PenaltyIsLogOfCenterCount) {
  for (int n : {1, 3, 7}) {
    std::vector<ep::FragmentShannon> f(n, {2.0, 4.0});
    const auto lim = ep::asymptotic_shannon_reference(f);
    const double atom_shape = ep::shape_entropy_from_density(2.0, 4.0);
    EXPECT_NEAR(lim.shape, atom_shape + std::log(double(n)), 1e-14);
    EXPECT_NEAR(lim.density, 2.0 * n, 1e-14);
  }
}

TEST(Reference, MixedFragmentsAreConsistentWithShapeRelation) {
  // The combined density limit must map onto the combined shape limit.
  const std::vector<ep::FragmentShannon> f = {{5.0, 3.0}, {1.2, 1.0}};
  const auto lim = ep::asymptotic_shannon_reference(f);
  EXPECT_NEAR(lim.shape, lim.density / 4.0 + std::log(4.0), 1e-14);
}

TEST(Reference, RejectsBadFragments) {
  EXPECT_THROW(ep::asymptotic_shannon_reference({}), ep::Error);
  const std::vector<ep::FragmentShannon> bad = {{1.0, 0.0}};
  EXPECT_THROW(ep::asymptotic_shannon_reference(bad), ep::Error);
  EXPECT_THROW(ep::shape_entropy_from_density(1.0, -1.0), ep::Error);
}
