#include "entropart/elements.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "entropart/error.hpp"

namespace entropart {
namespace {

constexpr std::array<std::string_view, 54> kSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si",
    "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni",
    "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo",
    "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe"};

// Slater (1964) radii in angstrom; H set to 0.35 following Becke. Noble gases
// are not in Slater's table and use the values common in DFT grid codes.
constexpr std::array<double, 54> kBraggAngstrom = {
    0.35, 1.40, 1.45, 1.05, 0.85, 0.70, 0.65, 0.60, 0.50, 1.50, 1.80, 1.50, 1.25, 1.10,
    1.00, 1.00, 1.00, 1.80, 2.20, 1.80, 1.60, 1.40, 1.35, 1.40, 1.40, 1.40, 1.35, 1.35,
    1.35, 1.35, 1.30, 1.25, 1.15, 1.15, 1.15, 1.90, 2.35, 2.00, 1.80, 1.55, 1.45, 1.45,
    1.35, 1.30, 1.35, 1.40, 1.60, 1.55, 1.55, 1.45, 1.45, 1.40, 1.40, 2.10};

}  // namespace

int atomic_number(std::string_view symbol) {
  std::string s(symbol);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return !std::isalpha(c); }),
          s.end());
  if (s.empty()) throw Error("empty element symbol");
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 0; i < kSymbols.size(); ++i)
    if (kSymbols[i] == s) return static_cast<int>(i) + 1;
  throw Error("unknown element symbol '" + std::string(symbol) + "'");
}

std::string element_symbol(int z) {
  if (z < 1 || z > static_cast<int>(kSymbols.size()))
    throw Error("atomic number out of range: " + std::to_string(z));
  return std::string(kSymbols[z - 1]);
}

double bragg_radius(int z) {
  if (z < 1 || z > static_cast<int>(kBraggAngstrom.size()))
    throw Error("no Bragg radius tabulated for Z = " + std::to_string(z));
  return kBraggAngstrom[z - 1] * kBohrPerAngstrom;
}

}  // namespace entropart
