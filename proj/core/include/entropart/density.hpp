#pragma once

#include <Eigen/Core>
#include <atomic>
#include <span>
#include <vector>

#include "entropart/basis.hpp"
#include "entropart/molecule.hpp"

namespace entropart {

/// Symmetric coefficient matrix over normalized primitives defining
/// rho(r) = sum_ij c_ij phi_i(r) phi_j(r), together with the electron count.
struct DensityMatrix {
  Eigen::MatrixXd coefficients;
  double n_electrons = 0.0;
};

/// Throws unless the matrix is square, finite and symmetric to 1e-12.
void validate(const DensityMatrix& density);

/// Counters for density values that needed clamping before a logarithm.
struct DensityDiagnostics {
  std::size_t clamped = 0;   // tiny negatives in (-1e-12, 0) set to 0
  std::size_t negative = 0;  // values below -1e-12 (|rho| used)

  DensityDiagnostics& operator+=(const DensityDiagnostics& o) {
    clamped += o.clamped;
    negative += o.negative;
    return *this;
  }
};

inline constexpr double kNegativeDensityTolerance = 1e-12;

/// Molecular density with its Mulliken-like atom-pair resolution.
/// rho^{AB}(r) = sum_{i in A} sum_{j in B} c_ij phi_i(r) phi_j(r); the A != B
/// terms are one-sided, so rho = sum over all ordered pairs (A, B).
class PairDensityField {
 public:
  PairDensityField(Molecule molecule, std::vector<Primitive> primitives, DensityMatrix density);

  const Molecule& molecule() const noexcept { return molecule_; }
  std::span<const Primitive> primitives() const noexcept { return primitives_; }
  const DensityMatrix& density_matrix() const noexcept { return density_; }
  std::size_t atom_count() const noexcept { return molecule_.size(); }
  double electrons() const noexcept { return density_.n_electrons; }

  /// Raw rho(r); may carry roundoff negatives.
  double density(const Vec3& r) const;

  double pair_density(std::size_t a, std::size_t b, const Vec3& r) const;

  /// All ordered pair densities at r, row-major n x n.
  void pair_densities(const Vec3& r, std::span<double> out) const;

 private:
  void primitive_values(const Vec3& r, std::vector<double>& values) const;

  Molecule molecule_;
  std::vector<Primitive> primitives_;
  DensityMatrix density_;
  std::vector<std::vector<std::size_t>> by_atom_;
};

}  // namespace entropart

namespace entropart {

/// Orbital expanded over normalized primitives.
struct MolecularOrbital {
  double occupation = 0.0;
  double energy = 0.0;
  std::vector<double> coefficients;
};

/// c_ij = sum_k occ_k C_ki C_kj; orbitals with zero occupation are skipped.
DensityMatrix density_from_orbitals(std::span<const MolecularOrbital> orbitals,
                                    std::size_t n_primitives);

}  // namespace entropart
