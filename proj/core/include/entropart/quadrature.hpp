#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "entropart/molecule.hpp"

namespace entropart {

/// Per-atom product grid parameters.
struct AtomicGridSpec {
  int n_radial = 400;
  int lebedev_order = 194;  // number of angular nodes
  double bragg_radius = 0.0;  // bohr; <= 0 means "look up from the element"
  int stiffness = 3;          // Becke smoothing iterations
};

/// Becke partition options shared by all atoms of a grid.
struct PartitionOptions {
  int stiffness = 3;
  bool size_adjust = true;
};

/// Union of Becke-weighted atomic grids. Weights already include the Becke
/// cell weight, the radial weight (Jacobian and r^2) and 4*pi times the
/// angular weight.
struct MolecularGrid {
  std::vector<Vec3> points;
  std::vector<double> weights;
  std::vector<std::size_t> owner_atom;

  std::size_t size() const noexcept { return points.size(); }
};

struct RadialGrid {
  std::vector<double> nodes;    // bohr
  std::vector<double> weights;  // includes r^2
};

struct AngularGrid {
  std::vector<Vec3> directions;  // unit vectors
  std::vector<double> weights;   // sum to 1
  int algebraic_order = 0;       // exact for polynomials up to this degree
};

struct BeckeCenter {
  Vec3 position;
  double bragg_radius;  // bohr
};

/// Becke fuzzy-cell partition over a fixed set of centers.
class BeckePartition {
 public:
  BeckePartition(std::vector<BeckeCenter> centers, PartitionOptions options = {});

  std::size_t size() const noexcept { return centers_.size(); }

  /// Writes the normalized cell weights at `point` into `out` (size() values).
  void weights(const Vec3& point, std::span<double> out) const;

  /// Weight of a single center; cheaper than weights() only in bookkeeping.
  double weight(const Vec3& point, std::size_t center) const;

 private:
  std::vector<BeckeCenter> centers_;
  std::vector<double> inv_distance_;  // 1/R_AB, row-major
  std::vector<double> adjust_;        // a_AB size adjustment, row-major
  int stiffness_;
};

std::vector<double> becke_weights(const Vec3& point, std::span<const BeckeCenter> centers,
                                  int stiffness = 3, bool size_adjust = true);

/// Second-kind Gauss-Chebyshev nodes q_i = cos(i*pi/(n+1)) mapped by
/// r = R (1+q)/(1-q). Nodes are returned in increasing r.
RadialGrid radial_grid(int n, double bragg_radius);

/// Lebedev-Laikov rule with `n_nodes` points.
AngularGrid lebedev_grid(int n_nodes);
std::span<const int> supported_lebedev_orders();

/// Points whose combined weight falls below this are dropped.
inline constexpr double kWeightScreen = 1e-16;

/// One spec per atom. All specs must share the same stiffness.
MolecularGrid build_molecular_grid(const Molecule& molecule, std::span<const AtomicGridSpec> spec,
                                   bool size_adjust = true);
/// Same spec for every atom (bragg_radius <= 0 resolves per element).
MolecularGrid build_molecular_grid(const Molecule& molecule, const AtomicGridSpec& spec,
                                   bool size_adjust = true);

using ScalarField = std::function<double(const Vec3&)>;

/// Sum_i w_i f(p_i) with a deterministic parallel reduction. Throws if the
/// field is not finite at some grid point.
double integrate(const ScalarField& field, const MolecularGrid& grid);

/// Vector-valued variant: `field(point, out)` fills `width` values.
using VectorField = std::function<void(const Vec3&, std::span<double>)>;
std::vector<double> integrate(const VectorField& field, std::size_t width,
                              const MolecularGrid& grid);

/// CSV with header x,y,z,weight,owner_atom.
void write_grid_csv(std::ostream& out, const MolecularGrid& grid);

}  // namespace entropart
