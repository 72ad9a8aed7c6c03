#include "entropart/integrals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "entropart/error.hpp"

namespace entropart {
namespace {

struct Shell {
  std::vector<double> exponents;
  std::vector<double> weights;  // contraction coefficient times normalization
  Vec3 origin;
};

Shell to_shell(std::span<const Primitive> prims, std::span<const double> coef) {
  if (prims.empty() || prims.size() != coef.size())
    throw Error("integral engine needs matching, non-empty primitive/coefficient lists");
  Shell s;
  s.origin = prims.front().origin;
  for (std::size_t k = 0; k < prims.size(); ++k) {
    if (prims[k].angular_momentum() != 0)
      throw Error("integral engine supports s-type functions only");
    if ((prims[k].origin - s.origin).norm() != 0.0)
      throw Error("all primitives of a contracted function must share one center");
    s.exponents.push_back(prims[k].exponent);
    s.weights.push_back(coef[k] * prims[k].normalization);
  }
  return s;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

double boys_f0(double t) {
  if (t < 0.0) throw Error("Boys function argument must be non-negative");
  if (t < 1e-6) return 1.0 - t / 3.0 + t * t / 10.0 - t * t * t / 42.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(kPi) * std::erf(st) / st;
}

IntegralSet integral_engine(std::span<const Primitive> a, std::span<const double> coef_a,
                            std::span<const Primitive> b, std::span<const double> coef_b,
                            double charge_a, double charge_b) {
  const std::array<Shell, 2> sh = {to_shell(a, coef_a), to_shell(b, coef_b)};
  const std::array<double, 2> charge = {charge_a, charge_b};

  IntegralSet out;
  out.distance = (sh[1].origin - sh[0].origin).norm();

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double s = 0.0, t = 0.0;
      std::array<double, 2> v = {0.0, 0.0};
      for (std::size_t p = 0; p < sh[i].exponents.size(); ++p) {
        for (std::size_t q = 0; q < sh[j].exponents.size(); ++q) {
          const double ap = sh[i].exponents[p], aq = sh[j].exponents[q];
          const double w = sh[i].weights[p] * sh[j].weights[q];
          const double zeta = ap + aq;
          const double mu = ap * aq / zeta;
          const double r2 = (sh[i].origin - sh[j].origin).squaredNorm();
          const double k = std::exp(-mu * r2);
          const Vec3 centroid = (ap * sh[i].origin + aq * sh[j].origin) / zeta;
          const double sab = std::pow(kPi / zeta, 1.5) * k;
          s += w * sab;
          t += w * mu * (3.0 - 2.0 * mu * r2) * sab;
          for (int c = 0; c < 2; ++c) {
            const double pc2 = (centroid - sh[c].origin).squaredNorm();
            v[c] += -w * charge[c] * 2.0 * kPi / zeta * k * boys_f0(zeta * pc2);
          }
        }
      }
      out.overlap(i, j) = s;
      out.kinetic(i, j) = t;
      out.nuclear[0](i, j) = v[0];
      out.nuclear[1](i, j) = v[1];
    }
  }

  auto eri = [&](int i, int j, int k, int l) {
    double sum = 0.0;
    for (std::size_t p = 0; p < sh[i].exponents.size(); ++p)
      for (std::size_t q = 0; q < sh[j].exponents.size(); ++q) {
        const double ap = sh[i].exponents[p], aq = sh[j].exponents[q];
        const double zeta = ap + aq;
        const double kab = std::exp(-ap * aq / zeta * (sh[i].origin - sh[j].origin).squaredNorm());
        const Vec3 P = (ap * sh[i].origin + aq * sh[j].origin) / zeta;
        const double wab = sh[i].weights[p] * sh[j].weights[q];
        for (std::size_t r = 0; r < sh[k].exponents.size(); ++r)
          for (std::size_t s = 0; s < sh[l].exponents.size(); ++s) {
            const double ar = sh[k].exponents[r], as = sh[l].exponents[s];
            const double eta = ar + as;
            const double kcd =
                std::exp(-ar * as / eta * (sh[k].origin - sh[l].origin).squaredNorm());
            const Vec3 Q = (ar * sh[k].origin + as * sh[l].origin) / eta;
            const double rho = zeta * eta / (zeta + eta);
            sum += wab * sh[k].weights[r] * sh[l].weights[s] * 2.0 * std::pow(kPi, 2.5) /
                   (zeta * eta * std::sqrt(zeta + eta)) * kab * kcd *
                   boys_f0(rho * (P - Q).squaredNorm());
          }
      }
    return sum;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out.eri[((i * 2 + j) * 2 + k) * 2 + l] = eri(i, j, k, l);

  for (double x : out.eri)
    if (!std::isfinite(x)) throw Error("non-finite two-electron integral");
  return out;
}

IntegralSet integral_engine(const ContractedS& a, const ContractedS& b, double distance,
                            double charge_a, double charge_b) {
  if (!(distance >= 0.0)) throw Error("distance must be non-negative");
  // Coincident centers are allowed here (R = 0 self-integrals); build the
  // primitives directly instead of going through Molecule.
  std::vector<Primitive> pa, pb;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Primitive p;
    p.center = 0;
    p.exponent = a.exponents()[k];
    p.normalization = cartesian_normalization(p.exponent, {0, 0, 0});
    p.origin = Vec3(0.0, 0.0, -0.5 * distance);
    pa.push_back(p);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    Primitive p;
    p.center = 1;
    p.exponent = b.exponents()[k];
    p.normalization = cartesian_normalization(p.exponent, {0, 0, 0});
    p.origin = Vec3(0.0, 0.0, 0.5 * distance);
    pb.push_back(p);
  }
  return integral_engine(pa, a.coefficients(), pb, b.coefficients(), charge_a, charge_b);
}

}  // namespace entropart
