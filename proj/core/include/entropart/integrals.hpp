#pragma once

#include <Eigen/Core>
#include <array>
#include <span>

#include "entropart/basis.hpp"

namespace entropart {

/// F_0(t) = int_0^1 exp(-t u^2) du, with F_0(0) = 1.
double boys_f0(double t);

/// One- and two-electron integrals over two s functions {phi_A, phi_B}
/// placed at z = -R/2 and z = +R/2 (atomic units).
struct IntegralSet {
  double distance = 0.0;
  Eigen::Matrix2d overlap = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d kinetic = Eigen::Matrix2d::Zero();
  /// Attraction to nucleus A and to nucleus B.
  std::array<Eigen::Matrix2d, 2> nuclear{Eigen::Matrix2d::Zero(), Eigen::Matrix2d::Zero()};
  /// (ij|kl) in chemists' notation, flat index ((i*2+j)*2+k)*2+l.
  std::array<double, 16> eri{};

  double two_electron(int i, int j, int k, int l) const { return eri[((i * 2 + j) * 2 + k) * 2 + l]; }
  Eigen::Matrix2d core() const { return kinetic + nuclear[0] + nuclear[1]; }
};

IntegralSet integral_engine(const ContractedS& a, const ContractedS& b, double distance,
                            double charge_a = 1.0, double charge_b = 1.0);

/// Same integrals from explicit primitive lists (each list on one center).
/// Every primitive must be s-type.
IntegralSet integral_engine(std::span<const Primitive> a, std::span<const double> coef_a,
                            std::span<const Primitive> b, std::span<const double> coef_b,
                            double charge_a = 1.0, double charge_b = 1.0);

}  // namespace entropart
