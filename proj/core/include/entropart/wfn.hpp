#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropart/basis.hpp"
#include "entropart/density.hpp"
#include "entropart/molecule.hpp"

namespace entropart {

/// How MO coefficients in a `.wfn` file relate to the primitives.
///  - Raw: coefficients multiply bare x^a y^b z^c exp(-a r^2) (AIMPAC, Gaussian, GAMESS).
///  - Normalized: coefficients multiply normalized primitives.
enum class PrimitiveConvention { Raw, Normalized };

struct WfnNucleus {
  std::string symbol;
  double charge = 0.0;
  Vec3 position = Vec3::Zero();  // bohr
};

struct WfnOrbital {
  double occupation = 0.0;
  double energy = 0.0;
  std::vector<double> coefficients;  // as stored in the file
};

/// In-memory image of an AIM `.wfn` file. Center indices are 0-based here
/// (1-based in the file); type codes follow the AIMPAC 1..20 table.
struct WfnDocument {
  std::string title;
  std::string program = "GAUSSIAN";
  std::vector<WfnNucleus> nuclei;
  std::vector<std::size_t> prim_center;
  std::vector<int> prim_type;
  std::vector<double> prim_exponent;
  std::vector<WfnOrbital> orbitals;
  std::optional<double> total_energy;
  std::optional<double> virial;

  std::size_t primitive_count() const noexcept { return prim_exponent.size(); }
  double electrons() const;
};

/// Cartesian powers for an AIMPAC type code (1 = s, 2-4 = p, 5-10 = d, 11-20 = f).
CartesianPowers wfn_type_powers(int code);
int wfn_type_code(const CartesianPowers& powers);

/// Parses `.wfn` text. Errors carry `source_name` and the 1-based line.
WfnDocument parse_wfn(std::string_view text, std::string_view source_name = "<wfn>");
WfnDocument read_wfn_file(const std::filesystem::path& path);

struct WfnWriteOptions {
  /// Classic AIMPAC field widths (D14.7 exponents, D16.8 coefficients).
  /// The default writes 17 significant digits so files round-trip exactly.
  bool legacy_widths = false;
};

std::string write_wfn(const WfnDocument& doc, const WfnWriteOptions& options = {});

/// Builds a document from normalized-primitive orbitals; coefficients are
/// stored in the raw convention.
WfnDocument make_wfn(std::string title, const Molecule& molecule,
                     std::span<const Primitive> primitives,
                     std::span<const MolecularOrbital> orbitals,
                     std::optional<double> total_energy = std::nullopt);

Molecule molecule_from_wfn(const WfnDocument& doc);
std::vector<Primitive> primitives_from_wfn(const WfnDocument& doc, const Molecule& molecule);

/// c_ij = sum_k occ_k C_ki C_kj over normalized primitives.
DensityMatrix density_matrix_from_mos(const WfnDocument& doc,
                                      PrimitiveConvention convention = PrimitiveConvention::Raw);

PairDensityField field_from_wfn(const WfnDocument& doc,
                                PrimitiveConvention convention = PrimitiveConvention::Raw);

}  // namespace entropart
