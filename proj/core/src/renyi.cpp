#include "entropart/renyi.hpp"

#include <cmath>
#include <sstream>

#include "entropart/error.hpp"
#include "entropart/shannon.hpp"
#include "entropart/summation.hpp"

namespace entropart {
namespace {

void check_order(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error("Renyi order must be positive and finite");
  if (std::abs(alpha - 1.0) <= kRenyiOrderGuard)
    throw Error("Renyi order too close to 1; use the Shannon decomposition instead");
}

bool is_integer(double alpha) { return alpha == std::round(alpha); }

bool is_order_two(double alpha) { return alpha == 2.0; }

// x^alpha with the sign rules for pair densities.
double power(double x, double alpha, bool integer_order, const char* what, std::size_t point) {
  if (x >= 0.0) return std::pow(x, alpha);
  if (x > -kNegativeDensityTolerance) return 0.0;
  if (!integer_order) {
    std::ostringstream msg;
    msg << what << " is negative (" << x << ") at grid point " << point
        << "; non-integer Renyi orders are undefined there";
    throw Error(msg.str());
  }
  return std::pow(x, alpha);
}

double safe_log_abs(double x) { return std::log(std::abs(x)); }

struct Options {
  bool atoms = false;
  bool partition = false;
};

RenyiDecomposition decompose(const PairDensityField& field, const MolecularGrid& grid,
                             double alpha, Options opt) {
  check_order(alpha);
  if (opt.partition && !is_order_two(alpha))
    throw Error("the four-index partition is defined for alpha = 2 only");
  const std::size_t n = field.atom_count();
  const std::size_t n2 = n * n;
  const bool integer_order = is_integer(alpha);
  const double electrons = field.electrons();

  // Columns: int rho, int rho^a, int sigma^a, [int (rho^AA)^a], [pair-pair products].
  const std::size_t atom_col = 3;
  const std::size_t prod_col = atom_col + (opt.atoms ? n : 0);
  const std::size_t n_prod = opt.partition ? n2 * (n2 + 1) / 2 : 0;
  const std::size_t width = prod_col + n_prod;

  const std::vector<double> sums = parallel_chunked_sum(
      grid.size(), width, [&](std::size_t begin, std::size_t end, std::span<double> buffer) {
        std::vector<double> pairs(n2);
        for (std::size_t i = begin; i < end; ++i) {
          auto out = buffer.subspan((i - begin) * width, width);
          field.pair_densities(grid.points[i], pairs);
          double rho = 0.0;
          for (double v : pairs) rho += v;
          const double w = grid.weights[i];
          out[0] = w * rho;
          out[1] = w * power(rho, alpha, integer_order, "density", i);
          out[2] = w * power(rho / electrons, alpha, integer_order, "density", i);
          if (opt.atoms)
            for (std::size_t a = 0; a < n; ++a)
              out[atom_col + a] =
                  w * power(pairs[a * n + a], alpha, integer_order, "same-center density", i);
          if (opt.partition) {
            std::size_t k = prod_col;
            for (std::size_t x = 0; x < n2; ++x)
              for (std::size_t y = x; y < n2; ++y) out[k++] = w * pairs[x] * pairs[y];
          }
          for (double v : out)
            if (!std::isfinite(v))
              throw Error("non-finite Renyi integrand at grid point " + std::to_string(i));
        }
      });

  RenyiDecomposition d;
  d.grid_electrons = sums[0];
  if (std::abs(d.grid_electrons - electrons) > kNormalizationTolerance)
    throw Error("grid normalization check failed: integral of rho = " +
                std::to_string(d.grid_electrons) + ", expected N = " + std::to_string(electrons));
  const double int_rho = sums[1];
  const double int_sigma = sums[2];
  if (!(int_rho > 0.0) || !(int_sigma > 0.0))
    throw Error("integral of rho^alpha is not positive");
  const double pre = 1.0 / (1.0 - alpha);
  d.total = {alpha, pre * std::log(int_rho), pre * std::log(int_sigma)};

  if (opt.atoms) {
    RenyiAtomTerms& t = d.atoms;
    t.alpha = alpha;
    const double log_n = std::log(electrons);
    for (std::size_t a = 0; a < n; ++a) {
      const double ia = sums[atom_col + a];
      const double p = ia / int_rho;
      t.atom_integrals.push_back(ia);
      t.p_atom.push_back(p);
      if (p == 0.0) continue;
      t.net_density += pre * p * safe_log_abs(ia);
      t.net_shape += pre * p * (safe_log_abs(ia) - alpha * log_n);
      t.nadd_intra += pre * p * safe_log_abs(p);
    }
  }

  if (opt.partition) {
    Renyi2Partition& part = d.partition.emplace();
    part.atoms = n;
    part.p.assign(n2 * n2, 0.0);
    part.integrals.assign(n2 * n2, 0.0);
    std::size_t k = prod_col;
    for (std::size_t x = 0; x < n2; ++x)
      for (std::size_t y = x; y < n2; ++y, ++k) {
        part.integrals[x * n2 + y] = part.integrals[y * n2 + x] = sums[k];
        part.p[x * n2 + y] = part.p[y * n2 + x] = sums[k] / int_rho;
      }
    for (std::size_t x = 0; x < n2 * n2; ++x) {
      const double p = part.p[x];
      if (p == 0.0) continue;
      part.add -= p * safe_log_abs(part.integrals[x]);
      part.nadd -= p * safe_log_abs(p);
    }
    part.total = d.total.density;
  }
  return d;
}

}  // namespace

RenyiTotal renyi_total(const PairDensityField& field, const MolecularGrid& grid, double alpha) {
  return decompose(field, grid, alpha, {}).total;
}

RenyiAtomTerms renyi_net_nadd_intra(const PairDensityField& field, const MolecularGrid& grid,
                                    double alpha) {
  return decompose(field, grid, alpha, {.atoms = true}).atoms;
}

Renyi2Partition renyi2_partition(const PairDensityField& field, const MolecularGrid& grid) {
  return *decompose(field, grid, 2.0, {.atoms = false, .partition = true}).partition;
}

RenyiDecomposition renyi_decompose(const PairDensityField& field, const MolecularGrid& grid,
                                   double alpha) {
  return decompose(field, grid, alpha, {.atoms = true, .partition = is_order_two(alpha)});
}

RenyiLimit asymptotic_renyi_reference(std::span<const FragmentRenyi> fragments, double alpha) {
  check_order(alpha);
  if (fragments.empty()) throw Error("need at least one fragment");
  double p_sum = 0.0, n_total = 0.0;
  for (const auto& f : fragments) {
    if (!(f.p >= 0.0) || f.p > 1.0 + 1e-10) throw Error("fragment fraction outside [0, 1]");
    if (!(f.electrons > 0.0)) throw Error("fragment electron count must be positive");
    p_sum += f.p;
    n_total += f.electrons;
  }
  if (std::abs(p_sum - 1.0) > 1e-6)
    throw Error("fragment fractions sum to " + std::to_string(p_sum) + ", expected 1");
  const double pre = 1.0 / (1.0 - alpha);
  RenyiLimit out{0.0, 0.0};
  for (const auto& f : fragments) {
    const double plogp = f.p == 0.0 ? 0.0 : f.p * std::log(f.p);
    const double shape_a = f.entropy_rho + alpha / (alpha - 1.0) * std::log(f.electrons);
    out.density += f.p * f.entropy_rho - pre * plogp;
    out.shape += f.p * shape_a - pre * plogp + alpha * pre * f.p * std::log(f.electrons / n_total);
  }
  return out;
}

}  // namespace entropart
