#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "entropart/error.hpp"
#include "entropart/quadrature.hpp"

namespace entropart {
namespace {

struct OrbitRep {
  double u, v, w;
  double weight;
  int count;
};

struct RuleTable {
  int n_nodes;
  int degree;
  std::span<const OrbitRep> orbits;
};

#include "lebedev_tables.inc"

constexpr auto kOrders = [] {
  std::array<int, std::size(kRules)> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = kRules[i].n_nodes;
  return out;
}();

// All sign/permutation images of one representative, without duplicates.
void expand_orbit(const OrbitRep& rep, AngularGrid& grid) {
  std::array<double, 3> c = {rep.w, rep.v, rep.u};
  std::vector<Vec3> images;
  do {
    for (int s = 0; s < 8; ++s) {
      Vec3 p((s & 1) ? -c[0] : c[0], (s & 2) ? -c[1] : c[1], (s & 4) ? -c[2] : c[2]);
      if (std::none_of(images.begin(), images.end(), [&](const Vec3& q) { return q == p; }))
        images.push_back(p);
    }
  } while (std::next_permutation(c.begin(), c.end()));
  if (static_cast<int>(images.size()) != rep.count)
    throw Error("Lebedev orbit expansion produced " + std::to_string(images.size()) +
                " points, expected " + std::to_string(rep.count));
  for (const auto& p : images) {
    grid.directions.push_back(p.normalized());
    grid.weights.push_back(rep.weight);
  }
}

}  // namespace

std::span<const int> supported_lebedev_orders() { return kOrders; }

AngularGrid lebedev_grid(int n_nodes) {
  for (const auto& rule : kRules) {
    if (rule.n_nodes != n_nodes) continue;
    AngularGrid grid;
    grid.algebraic_order = rule.degree;
    grid.directions.reserve(n_nodes);
    grid.weights.reserve(n_nodes);
    for (const auto& rep : rule.orbits) expand_orbit(rep, grid);
    return grid;
  }
  std::ostringstream msg;
  msg << "unsupported Lebedev grid size " << n_nodes << "; supported:";
  for (int n : kOrders) msg << ' ' << n;
  throw Error(msg.str());
}

}  // namespace entropart
