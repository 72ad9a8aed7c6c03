#pragma once

#include <span>
#include <vector>

#include "entropart/density.hpp"
#include "entropart/quadrature.hpp"

namespace entropart {

/// Index of the unordered pair (a, b), a < b, among n atoms.
inline std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Shannon entropy terms; either an entropy density at one point (nats/bohr^3)
/// or an integrated value (nats).
///   total = add - nadd,  add = sum_A net[A] + sum_{A<B} overlap[AB]
/// overlap[AB] already contains both ordered pairs (AB and BA).
struct ShannonTerms {
  double total = 0.0;
  double add = 0.0;
  double nadd = 0.0;
  std::vector<double> net;
  std::vector<double> overlap;
};

/// x log|x| with 0 log 0 = 0.
double xlogx_abs(double x);

/// Entropy-density terms from the n x n ordered pair densities at a point.
/// `scale` divides every pair density first (1 for rho, N for the shape
/// function). A total density below -1e-12 is used through |rho| and counted
/// as negative; a tiny negative is clamped to zero (all terms vanish).
ShannonTerms shannon_point_terms(std::span<const double> pair_density, std::size_t n_atoms,
                                 double scale = 1.0, DensityDiagnostics* diagnostics = nullptr);

struct ShannonDecomposition {
  std::size_t atoms = 0;
  double electrons = 0.0;       // N from the density matrix
  double grid_electrons = 0.0;  // quadrature of rho
  ShannonTerms density;         // S_rho terms
  ShannonTerms shape;           // S_sigma terms, sigma = rho / N
  DensityDiagnostics diagnostics;
};

/// Absolute tolerance on |int rho - N| before the grid is declared inadequate.
inline constexpr double kNormalizationTolerance = 1e-4;

ShannonDecomposition shannon_decompose(const PairDensityField& field, const MolecularGrid& grid);

struct FragmentShannon {
  double entropy_rho;  // S_rho of the isolated (or deformed) fragment
  double electrons;    // N_A
};

struct ShannonLimit {
  double density;
  double shape;
};

/// Infinite-separation references
///   S_rho = sum_A S_A,
///   S_sigma = sum_A (N_A/N) S_sigma^A - sum_A (N_A/N) log(N_A/N).
ShannonLimit asymptotic_shannon_reference(std::span<const FragmentShannon> fragments);

/// S_sigma of a single fragment from its S_rho: S_rho/N + log N.
double shape_entropy_from_density(double entropy_rho, double electrons);

}  // namespace entropart
