#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entropart/density.hpp"
#include "entropart/quadrature.hpp"

namespace entropart {

/// Orders closer to 1 than this are rejected; use the Shannon routines.
inline constexpr double kRenyiOrderGuard = 1e-9;

struct RenyiTotal {
  double alpha = 2.0;
  double density = 0.0;  // (1/(1-alpha)) log int rho^alpha
  double shape = 0.0;    // same for sigma = rho/N
};

/// Per-atom net and intra-atomic nonadditive terms
///   p_A = int (rho^{AA})^alpha / int rho^alpha
///   net = 1/(1-alpha) sum_A p_A log int (rho^{AA})^alpha
///   nadd_intra = 1/(1-alpha) sum_A p_A log p_A
/// At infinite separation total = net - nadd_intra.
struct RenyiAtomTerms {
  double alpha = 2.0;
  std::vector<double> p_atom;
  std::vector<double> atom_integrals;  // int (rho^{AA})^alpha
  double net_density = 0.0;
  double net_shape = 0.0;
  double nadd_intra = 0.0;
};

/// Four-index partition of the order-2 entropy over ordered center pairs:
///   p[AB,CD] = int rho^{AB} rho^{CD} / int rho^2
///   add  = -sum p log'|int rho^{AB} rho^{CD}|
///   nadd = -sum p log'|p|        (so that total = add - nadd)
struct Renyi2Partition {
  std::size_t atoms = 0;
  std::vector<double> p;          // n^4, index ((A*n+B)*n+C)*n+D
  std::vector<double> integrals;  // same layout
  double add = 0.0;
  double nadd = 0.0;
  double total = 0.0;

  double at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return p[((a * atoms + b) * atoms + c) * atoms + d];
  }
};

struct RenyiDecomposition {
  RenyiTotal total;
  RenyiAtomTerms atoms;
  std::optional<Renyi2Partition> partition;  // alpha == 2 only
  double grid_electrons = 0.0;
};

RenyiTotal renyi_total(const PairDensityField& field, const MolecularGrid& grid, double alpha);
RenyiAtomTerms renyi_net_nadd_intra(const PairDensityField& field, const MolecularGrid& grid,
                                    double alpha);
Renyi2Partition renyi2_partition(const PairDensityField& field, const MolecularGrid& grid);

/// Single grid pass producing all of the above.
RenyiDecomposition renyi_decompose(const PairDensityField& field, const MolecularGrid& grid,
                                   double alpha);

struct FragmentRenyi {
  double entropy_rho;  // S^alpha of the isolated (or deformed) fragment density
  double p;            // p_A fraction
  double electrons;    // N_A
};

struct RenyiLimit {
  double density;
  double shape;
};

/// Infinite-separation references
///   S_rho   = sum p_A S_A - 1/(1-alpha) sum p_A log p_A
///   S_sigma = sum p_A S_sigma^A - 1/(1-alpha) sum p_A log p_A
///             + alpha/(1-alpha) sum p_A log(N_A/N)
RenyiLimit asymptotic_renyi_reference(std::span<const FragmentRenyi> fragments, double alpha);

}  // namespace entropart
