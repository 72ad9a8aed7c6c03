#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "entropart/molecule.hpp"

namespace entropart {

/// Cartesian monomial exponents (a, b, c) of x^a y^b z^c; a+b+c <= 3.
using CartesianPowers = std::array<int, 3>;

/// Normalized atom-centered Cartesian Gaussian
///   N x^a y^b z^c exp(-exponent |r - origin|^2).
struct Primitive {
  std::size_t center = 0;
  CartesianPowers powers{0, 0, 0};
  double exponent = 1.0;
  double normalization = 1.0;
  Vec3 origin = Vec3::Zero();

  int angular_momentum() const noexcept { return powers[0] + powers[1] + powers[2]; }
};

/// Normalization constant of a Cartesian Gaussian with the given powers.
double cartesian_normalization(double exponent, const CartesianPowers& powers);

/// Builds a normalized primitive centered on `molecule[center]`.
Primitive make_primitive(const Molecule& molecule, std::size_t center,
                         const CartesianPowers& powers, double exponent);

double eval_primitive(const Primitive& p, const Vec3& r);

/// Contracted s function sum_k d_k g_k(alpha_k) over normalized primitives;
/// the contraction coefficients are rescaled so the function is normalized.
class ContractedS {
 public:
  ContractedS(std::vector<double> exponents, std::vector<double> coefficients,
              std::string label = {});

  std::span<const double> exponents() const noexcept { return exponents_; }
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const std::string& label() const noexcept { return label_; }

  double value(double r) const;

 private:
  std::vector<double> exponents_;
  std::vector<double> coefficients_;
  std::string label_;
};

/// STO-6G hydrogen 1s (Basis Set Exchange, Hehre-Stewart-Pople 1969).
ContractedS sto6g_hydrogen();

/// Overlap <fA|fB> of two normalized contracted s functions a distance R apart.
double contracted_overlap(const ContractedS& a, const ContractedS& b, double distance);

/// Overload taking primitive lists; every primitive must be s-type.
double contracted_overlap(std::span<const Primitive> a, std::span<const double> coef_a,
                          std::span<const Primitive> b, std::span<const double> coef_b);

/// Places a contracted s function on `center`: appends its primitives to
/// `primitives`, returning the matching contraction coefficients.
std::vector<double> place_contracted_s(const ContractedS& f, const Molecule& molecule,
                                       std::size_t center, std::vector<Primitive>& primitives);

}  // namespace entropart
