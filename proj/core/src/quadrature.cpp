#include "entropart/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "entropart/elements.hpp"
#include "entropart/error.hpp"
#include "entropart/summation.hpp"

namespace entropart {
namespace {

double cell_function(double nu, int stiffness) {
  for (int k = 0; k < stiffness; ++k) nu = 0.5 * nu * (3.0 - nu * nu);
  return 0.5 * (1.0 - nu);
}

}  // namespace

BeckePartition::BeckePartition(std::vector<BeckeCenter> centers, PartitionOptions options)
    : centers_(std::move(centers)), stiffness_(options.stiffness) {
  if (centers_.empty()) throw Error("Becke partition needs at least one center");
  if (stiffness_ < 1) throw Error("Becke stiffness must be >= 1");
  const std::size_t n = centers_.size();
  inv_distance_.assign(n * n, 0.0);
  adjust_.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!(centers_[a].bragg_radius > 0.0))
      throw Error("Bragg radius must be positive (center " + std::to_string(a) + ")");
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const double d = (centers_[a].position - centers_[b].position).norm();
      if (d == 0.0)
        throw Error("coincident centers " + std::to_string(a) + " and " + std::to_string(b) +
                    " in Becke partition");
      inv_distance_[a * n + b] = 1.0 / d;
      if (options.size_adjust) {
        const double chi = centers_[a].bragg_radius / centers_[b].bragg_radius;
        const double u = (chi - 1.0) / (chi + 1.0);
        double adj = u / (u * u - 1.0);
        adj = std::clamp(adj, -0.5, 0.5);
        adjust_[a * n + b] = adj;
      }
    }
  }
}

void BeckePartition::weights(const Vec3& point, std::span<double> out) const {
  const std::size_t n = centers_.size();
  if (n == 1) {
    out[0] = 1.0;
    return;
  }
  thread_local std::vector<double> dist;
  dist.resize(n);
  for (std::size_t a = 0; a < n; ++a) dist[a] = (point - centers_[a].position).norm();

  double total = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    double p = 1.0;
    for (std::size_t b = 0; b < n && p != 0.0; ++b) {
      if (a == b) continue;
      const double mu = (dist[a] - dist[b]) * inv_distance_[a * n + b];
      const double nu = mu + adjust_[a * n + b] * (1.0 - mu * mu);
      p *= cell_function(nu, stiffness_);
    }
    out[a] = p;
    total += p;
  }
  for (std::size_t a = 0; a < n; ++a) out[a] /= total;
}

double BeckePartition::weight(const Vec3& point, std::size_t center) const {
  thread_local std::vector<double> w;
  w.resize(centers_.size());
  weights(point, w);
  return w[center];
}

std::vector<double> becke_weights(const Vec3& point, std::span<const BeckeCenter> centers,
                                  int stiffness, bool size_adjust) {
  if (!point.allFinite()) throw Error("Becke weights requested at a non-finite point");
  BeckePartition partition({centers.begin(), centers.end()}, {stiffness, size_adjust});
  std::vector<double> out(centers.size());
  partition.weights(point, out);
  return out;
}

RadialGrid radial_grid(int n, double bragg_radius) {
  if (n < 1) throw Error("radial grid needs n >= 1");
  if (!(bragg_radius > 0.0)) throw Error("radial grid needs a positive Bragg radius");
  RadialGrid grid;
  grid.nodes.reserve(n);
  grid.weights.reserve(n);
  const double h = std::numbers::pi / (n + 1);
  // i = n .. 1 gives increasing r.
  for (int i = n; i >= 1; --i) {
    const double theta = i * h;
    const double half = 0.5 * theta;
    const double one_minus_q = 2.0 * std::sin(half) * std::sin(half);
    const double one_plus_q = 2.0 * std::cos(half) * std::cos(half);
    const double r = bragg_radius * one_plus_q / one_minus_q;
    // Chebyshev-II weight over sqrt(1-q^2) = sin(theta), times dr/dq and r^2.
    const double w = h * std::sin(theta) * (2.0 * bragg_radius / (one_minus_q * one_minus_q)) * r * r;
    grid.nodes.push_back(r);
    grid.weights.push_back(w);
  }
  return grid;
}

MolecularGrid build_molecular_grid(const Molecule& molecule, std::span<const AtomicGridSpec> spec,
                                   bool size_adjust) {
  if (molecule.empty()) throw Error("cannot build a grid for an empty molecule");
  if (spec.size() != molecule.size())
    throw Error("need one grid spec per atom (" + std::to_string(molecule.size()) + "), got " +
                std::to_string(spec.size()));
  const int stiffness = spec[0].stiffness;
  std::vector<BeckeCenter> centers;
  for (std::size_t a = 0; a < molecule.size(); ++a) {
    if (spec[a].stiffness != stiffness)
      throw Error("all atoms must share the same Becke stiffness");
    const double radius =
        spec[a].bragg_radius > 0.0 ? spec[a].bragg_radius : bragg_radius(molecule[a].atomic_number);
    centers.push_back({molecule[a].position, radius});
  }
  const BeckePartition partition(centers, {stiffness, size_adjust});

  MolecularGrid grid;
  std::vector<double> cell(molecule.size());
  for (std::size_t a = 0; a < molecule.size(); ++a) {
    const RadialGrid radial = radial_grid(spec[a].n_radial, centers[a].bragg_radius);
    const AngularGrid angular = lebedev_grid(spec[a].lebedev_order);
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
      for (std::size_t j = 0; j < angular.directions.size(); ++j) {
        const Vec3 p = centers[a].position + radial.nodes[i] * angular.directions[j];
        partition.weights(p, cell);
        const double w =
            radial.weights[i] * 4.0 * std::numbers::pi * angular.weights[j] * cell[a];
        if (!(w >= kWeightScreen)) continue;
        grid.points.push_back(p);
        grid.weights.push_back(w);
        grid.owner_atom.push_back(a);
      }
    }
  }
  return grid;
}

MolecularGrid build_molecular_grid(const Molecule& molecule, const AtomicGridSpec& spec,
                                   bool size_adjust) {
  std::vector<AtomicGridSpec> specs(molecule.size(), spec);
  return build_molecular_grid(molecule, specs, size_adjust);
}

std::vector<double> integrate(const VectorField& field, std::size_t width,
                              const MolecularGrid& grid) {
  return parallel_chunked_sum(
      grid.size(), width, [&](std::size_t begin, std::size_t end, std::span<double> out) {
        for (std::size_t i = begin; i < end; ++i) {
          auto values = out.subspan((i - begin) * width, width);
          field(grid.points[i], values);
          for (double& v : values) {
            if (!std::isfinite(v)) {
              std::ostringstream msg;
              msg << "non-finite field value at grid point " << i << " ("
                  << grid.points[i].x() << ", " << grid.points[i].y() << ", "
                  << grid.points[i].z() << ")";
              throw Error(msg.str());
            }
            v *= grid.weights[i];
          }
        }
      });
}

double integrate(const ScalarField& field, const MolecularGrid& grid) {
  return integrate([&](const Vec3& p, std::span<double> out) { out[0] = field(p); }, 1, grid)[0];
}

void write_grid_csv(std::ostream& out, const MolecularGrid& grid) {
  out << "x,y,z,weight,owner_atom\n";
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = grid.points[i];
    out << p.x() << ',' << p.y() << ',' << p.z() << ',' << grid.weights[i] << ','
        << grid.owner_atom[i] << '\n';
  }
  out.precision(old);
}

}  // namespace entropart
