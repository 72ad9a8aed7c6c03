#pragma once

#include <string>
#include <string_view>

namespace entropart {

inline constexpr double kBohrPerAngstrom = 1.0 / 0.52917721092;

/// Atomic number for an element symbol (case-insensitive); throws on unknown symbols.
int atomic_number(std::string_view symbol);

std::string element_symbol(int z);

/// Bragg-Slater radius in bohr (H = 0.35 angstrom, as in Becke's scheme).
/// Available for Z = 1..54; throws otherwise.
double bragg_radius(int z);

}  // namespace entropart
