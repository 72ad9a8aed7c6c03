#pragma once

#include <string_view>
#include <vector>

#include "entropart/basis.hpp"
#include "entropart/density.hpp"
#include "entropart/integrals.hpp"
#include "entropart/molecule.hpp"

namespace entropart {

/// Minimal-basis two-electron homodiatomic wavefunction models.
enum class Method { HartreeFock, HeitlerLondon, FullCI };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);  // "hf", "hl", "fci"

/// Coefficients of the two-determinant expansion c1 |sg^2| + c2 |su^2|,
/// with c1 > 0. `energy` includes the nuclear repulsion 1/R.
struct CiVector {
  double c1 = 1.0;
  double c2 = 0.0;
  double energy = 0.0;
};

/// AO-level partition weights: rho = C_AA (phiA^2 + phiB^2) + 2 C_AB phiA phiB.
struct PairCoefficients {
  double same_center = 0.0;
  double cross_center = 0.0;
};

PairCoefficients hf_pair_weights(double overlap);
PairCoefficients hl_pair_weights(double overlap);
PairCoefficients ci_pair_weights(double overlap, double c1, double c2);

/// 2x2 CI Hamiltonian in the {|sg^2|, |su^2|} basis, nuclear repulsion included.
Eigen::Matrix2d ci_hamiltonian(const IntegralSet& integrals);

/// Lowest root of the CI Hamiltonian, sign-fixed to c1 >= 0. A diagonal,
/// exactly degenerate matrix resolves to c1 = c2 = 1/sqrt(2).
CiVector lowest_ci_root(const Eigen::Matrix2d& hamiltonian);

/// Expands AO pair weights over the primitives of both centers (A first).
DensityMatrix expand_pair_weights(const ContractedS& basis, const PairCoefficients& weights);

DensityMatrix hf_pair_coefficients(double distance, const ContractedS& basis = sto6g_hydrogen());
DensityMatrix hl_pair_coefficients(double distance, const ContractedS& basis = sto6g_hydrogen());
CiVector fci_coefficients(double distance, const ContractedS& basis = sto6g_hydrogen());
DensityMatrix fci_pair_coefficients(double distance, const ContractedS& basis = sto6g_hydrogen());

/// A fully built model: geometry, primitives, density and orbitals.
struct H2Model {
  Method method = Method::HartreeFock;
  double distance = 0.0;
  double overlap = 0.0;
  CiVector ci;
  double energy = 0.0;
  Molecule molecule;
  std::vector<Primitive> primitives;
  DensityMatrix density;
  /// Canonical (HF) or natural (HL, FCI) orbitals over the primitives.
  std::vector<MolecularOrbital> orbitals;

  PairDensityField field() const { return {molecule, primitives, density}; }
};

H2Model build_h2_model(Method method, double distance,
                       const ContractedS& basis = sto6g_hydrogen());

/// Isolated one-electron atom described by one contracted s function.
struct AtomModel {
  double energy = 0.0;
  Molecule molecule;
  std::vector<Primitive> primitives;
  DensityMatrix density;
  std::vector<MolecularOrbital> orbitals;

  PairDensityField field() const { return {molecule, primitives, density}; }
};

AtomModel atom_reference(const ContractedS& basis = sto6g_hydrogen());

/// <phi| -1/2 nabla^2 - Z/r |phi> for a hydrogen-like atom.
double hydrogen_atom_energy(const ContractedS& basis = sto6g_hydrogen(), double charge = 1.0);

}  // namespace entropart
