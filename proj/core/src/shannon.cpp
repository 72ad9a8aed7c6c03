#include "entropart/shannon.hpp"

#include <cmath>

#include "entropart/error.hpp"
#include "entropart/summation.hpp"

namespace entropart {

double xlogx_abs(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log(std::abs(x));
}

ShannonTerms shannon_point_terms(std::span<const double> pair_density, std::size_t n,
                                 double scale, DensityDiagnostics* diagnostics) {
  if (pair_density.size() < n * n) throw Error("pair density span too small");
  ShannonTerms t;
  t.net.assign(n, 0.0);
  t.overlap.assign(n * (n - 1) / 2, 0.0);

  const double inv = 1.0 / scale;
  double rho = 0.0;
  for (std::size_t k = 0; k < n * n; ++k) rho += pair_density[k] * inv;

  if (rho <= 0.0) {
    if (rho > -kNegativeDensityTolerance * inv) {
      if (rho < 0.0 && diagnostics) ++diagnostics->clamped;
      return t;
    }
    if (diagnostics) ++diagnostics->negative;
  }
  const double log_rho = std::log(std::abs(rho));

  t.total = -rho * log_rho;
  double nadd = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const double x = pair_density[a * n + a] * inv;
    t.net[a] = -xlogx_abs(x);
    if (x != 0.0) nadd -= x * (std::log(std::abs(x)) - log_rho);
    for (std::size_t b = a + 1; b < n; ++b) {
      const double y = pair_density[a * n + b] * inv;
      t.overlap[pair_index(a, b, n)] = -2.0 * xlogx_abs(y);
      if (y != 0.0) nadd -= 2.0 * y * (std::log(std::abs(y)) - log_rho);
    }
  }
  double add = 0.0;
  for (double v : t.net) add += v;
  for (double v : t.overlap) add += v;
  t.add = add;
  t.nadd = nadd;
  return t;
}

ShannonDecomposition shannon_decompose(const PairDensityField& field, const MolecularGrid& grid) {
  const std::size_t n = field.atom_count();
  const std::size_t n_pairs = n * (n - 1) / 2;
  const std::size_t block = 3 + n + n_pairs;
  const std::size_t width = 1 + 2 * block + 2;  // rho, rho terms, sigma terms, diagnostics
  const double electrons = field.electrons();

  auto pack = [&](const ShannonTerms& t, std::span<double> out) {
    out[0] = t.total;
    out[1] = t.add;
    out[2] = t.nadd;
    for (std::size_t a = 0; a < n; ++a) out[3 + a] = t.net[a];
    for (std::size_t p = 0; p < n_pairs; ++p) out[3 + n + p] = t.overlap[p];
  };
  auto unpack = [&](std::span<const double> in) {
    ShannonTerms t;
    t.total = in[0];
    t.add = in[1];
    t.nadd = in[2];
    t.net.assign(in.begin() + 3, in.begin() + 3 + n);
    t.overlap.assign(in.begin() + 3 + n, in.begin() + 3 + n + n_pairs);
    return t;
  };

  // The last two columns are unweighted diagnostic counters.
  std::vector<double> sums = parallel_chunked_sum(
      grid.size(), width, [&](std::size_t begin, std::size_t end, std::span<double> buffer) {
        std::vector<double> pairs(n * n);
        for (std::size_t i = begin; i < end; ++i) {
          auto out = buffer.subspan((i - begin) * width, width);
          field.pair_densities(grid.points[i], pairs);
          DensityDiagnostics diag;
          double rho = 0.0;
          for (double v : pairs) rho += v;
          const ShannonTerms rt = shannon_point_terms(pairs, n, 1.0, &diag);
          const ShannonTerms st = shannon_point_terms(pairs, n, electrons, nullptr);
          const double w = grid.weights[i];
          out[0] = w * rho;
          pack(rt, out.subspan(1, block));
          pack(st, out.subspan(1 + block, block));
          for (std::size_t k = 1; k < 1 + 2 * block; ++k) {
            if (!std::isfinite(out[k]))
              throw Error("non-finite entropy density at grid point " + std::to_string(i));
            out[k] *= w;
          }
          out[width - 2] = static_cast<double>(diag.clamped);
          out[width - 1] = static_cast<double>(diag.negative);
        }
      });

  ShannonDecomposition d;
  d.atoms = n;
  d.electrons = electrons;
  d.grid_electrons = sums[0];
  d.density = unpack(std::span<const double>(sums).subspan(1, block));
  d.shape = unpack(std::span<const double>(sums).subspan(1 + block, block));
  d.diagnostics.clamped = static_cast<std::size_t>(sums[width - 2]);
  d.diagnostics.negative = static_cast<std::size_t>(sums[width - 1]);
  if (std::abs(d.grid_electrons - electrons) > kNormalizationTolerance)
    throw Error("grid normalization check failed: integral of rho = " +
                std::to_string(d.grid_electrons) + ", expected N = " + std::to_string(electrons));
  return d;
}

double shape_entropy_from_density(double entropy_rho, double electrons) {
  if (!(electrons > 0.0)) throw Error("fragment electron count must be positive");
  return entropy_rho / electrons + std::log(electrons);
}

ShannonLimit asymptotic_shannon_reference(std::span<const FragmentShannon> fragments) {
  if (fragments.empty()) throw Error("need at least one fragment");
  double n_total = 0.0;
  for (const auto& f : fragments) {
    if (!(f.electrons > 0.0)) throw Error("fragment electron count must be positive");
    n_total += f.electrons;
  }
  ShannonLimit out{0.0, 0.0};
  for (const auto& f : fragments) {
    const double frac = f.electrons / n_total;
    out.density += f.entropy_rho;
    out.shape += frac * shape_entropy_from_density(f.entropy_rho, f.electrons) -
                 frac * std::log(frac);
  }
  return out;
}

}  // namespace entropart
