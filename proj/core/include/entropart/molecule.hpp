#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace entropart {

using Vec3 = Eigen::Vector3d;

struct Atom {
  std::string symbol;
  int atomic_number = 1;
  Vec3 position = Vec3::Zero();  // bohr
};

/// Nuclear framework. Positions must be pairwise distinct.
class Molecule {
 public:
  Molecule() = default;
  explicit Molecule(std::vector<Atom> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  double distance(std::size_t a, std::size_t b) const;

 private:
  std::vector<Atom> atoms_;
};

/// Two identical atoms on the z axis at -R/2 and +R/2.
Molecule homonuclear_diatomic(const std::string& symbol, double distance);

}  // namespace entropart
