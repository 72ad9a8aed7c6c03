#include "entropart/molecule.hpp"

#include "entropart/elements.hpp"
#include "entropart/error.hpp"

namespace entropart {

Molecule::Molecule(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    if (atoms_[a].atomic_number < 1)
      throw Error("atom " + std::to_string(a) + " has atomic number < 1");
    if (!atoms_[a].position.allFinite())
      throw Error("atom " + std::to_string(a) + " has a non-finite position");
    for (std::size_t b = 0; b < a; ++b)
      if ((atoms_[a].position - atoms_[b].position).norm() == 0.0)
        throw Error("atoms " + std::to_string(b) + " and " + std::to_string(a) +
                    " are coincident");
  }
}

double Molecule::distance(std::size_t a, std::size_t b) const {
  return (atoms_.at(a).position - atoms_.at(b).position).norm();
}

Molecule homonuclear_diatomic(const std::string& symbol, double distance) {
  if (!(distance > 0.0)) throw Error("internuclear distance must be positive");
  const int z = atomic_number(symbol);
  return Molecule({{symbol, z, Vec3(0.0, 0.0, -0.5 * distance)},
                   {symbol, z, Vec3(0.0, 0.0, 0.5 * distance)}});
}

}  // namespace entropart
