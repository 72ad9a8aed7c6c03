#include "entropart/basis.hpp"

#include <cmath>
#include <numbers>

#include "entropart/error.hpp"

namespace entropart {
namespace {

double double_factorial_odd(int n) {  // (2n-1)!!
  double r = 1.0;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

double s_overlap(double a, double b, double r2) {
  const double p = a + b;
  return std::pow(std::numbers::pi / p, 1.5) * std::exp(-a * b / p * r2);
}

}  // namespace

double cartesian_normalization(double exponent, const CartesianPowers& powers) {
  if (!(exponent > 0.0)) throw Error("Gaussian exponent must be positive");
  const int l = powers[0] + powers[1] + powers[2];
  return std::pow(2.0 * exponent / std::numbers::pi, 0.75) * std::pow(4.0 * exponent, 0.5 * l) /
         std::sqrt(double_factorial_odd(powers[0]) * double_factorial_odd(powers[1]) *
                   double_factorial_odd(powers[2]));
}

Primitive make_primitive(const Molecule& molecule, std::size_t center,
                         const CartesianPowers& powers, double exponent) {
  for (int k : powers)
    if (k < 0) throw Error("negative Cartesian power");
  if (powers[0] + powers[1] + powers[2] > 3)
    throw Error("Cartesian Gaussians beyond f are not supported");
  Primitive p;
  p.center = center;
  p.powers = powers;
  p.exponent = exponent;
  p.normalization = cartesian_normalization(exponent, powers);
  p.origin = molecule[center].position;
  return p;
}

double eval_primitive(const Primitive& p, const Vec3& r) {
  const Vec3 d = r - p.origin;
  const double r2 = d.squaredNorm();
  double v = p.normalization * std::exp(-p.exponent * r2);
  if (v == 0.0) return 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < p.powers[k]; ++i) v *= d[k];
  return v;
}

ContractedS::ContractedS(std::vector<double> exponents, std::vector<double> coefficients,
                         std::string label)
    : exponents_(std::move(exponents)), coefficients_(std::move(coefficients)),
      label_(std::move(label)) {
  if (exponents_.empty() || exponents_.size() != coefficients_.size())
    throw Error("contracted function needs matching, non-empty exponent/coefficient lists");
  for (double a : exponents_)
    if (!(a > 0.0)) throw Error("Gaussian exponent must be positive");
  double norm2 = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      norm2 += coefficients_[i] * coefficients_[j] *
               cartesian_normalization(exponents_[i], {0, 0, 0}) *
               cartesian_normalization(exponents_[j], {0, 0, 0}) *
               s_overlap(exponents_[i], exponents_[j], 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& c : coefficients_) c *= scale;
}

double ContractedS::value(double r) const {
  double v = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    v += coefficients_[i] * cartesian_normalization(exponents_[i], {0, 0, 0}) *
         std::exp(-exponents_[i] * r * r);
  return v;
}

ContractedS sto6g_hydrogen() {
  return ContractedS({0.3552322122e+02, 0.6513143725e+01, 0.1822142904e+01, 0.6259552659e+00,
                      0.2430767471e+00, 0.1001124280e+00},
                     {0.9163596281e-02, 0.4936149294e-01, 0.1685383049e+00, 0.3705627997e+00,
                      0.4164915298e+00, 0.1303340841e+00},
                     "STO-6G H 1s");
}

double contracted_overlap(const ContractedS& a, const ContractedS& b, double distance) {
  if (!(distance >= 0.0)) throw Error("distance must be non-negative");
  const double r2 = distance * distance;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s += a.coefficients()[i] * b.coefficients()[j] *
           cartesian_normalization(a.exponents()[i], {0, 0, 0}) *
           cartesian_normalization(b.exponents()[j], {0, 0, 0}) *
           s_overlap(a.exponents()[i], b.exponents()[j], r2);
  return s;
}

double contracted_overlap(std::span<const Primitive> a, std::span<const double> coef_a,
                          std::span<const Primitive> b, std::span<const double> coef_b) {
  if (a.size() != coef_a.size() || b.size() != coef_b.size())
    throw Error("primitive/coefficient count mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i].angular_momentum() != 0 || b[j].angular_momentum() != 0)
        throw Error("contracted_overlap supports s-type primitives only");
      const double r2 = (a[i].origin - b[j].origin).squaredNorm();
      s += coef_a[i] * coef_b[j] * a[i].normalization * b[j].normalization *
           s_overlap(a[i].exponent, b[j].exponent, r2);
    }
  }
  return s;
}

std::vector<double> place_contracted_s(const ContractedS& f, const Molecule& molecule,
                                       std::size_t center, std::vector<Primitive>& primitives) {
  std::vector<double> coef;
  for (std::size_t k = 0; k < f.size(); ++k) {
    primitives.push_back(make_primitive(molecule, center, {0, 0, 0}, f.exponents()[k]));
    coef.push_back(f.coefficients()[k]);
  }
  return coef;
}

}  // namespace entropart
