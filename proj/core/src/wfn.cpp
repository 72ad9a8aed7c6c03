#include "entropart/wfn.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "entropart/elements.hpp"
#include "entropart/error.hpp"

namespace entropart {
namespace {

constexpr std::array<CartesianPowers, 20> kTypePowers = {{
    {0, 0, 0},                                                  // s
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1},                            // p
    {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},  // d
    {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1},      // f
    {0, 2, 1}, {1, 2, 0}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1},
}};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view source) : source_(source) {
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back({line, number++});
      if (end == text.size()) break;
      start = end + 1;
    }
    while (!lines_.empty() && trim(lines_.back().text).empty()) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek(const std::string& record) const {
    if (done()) fail(lines_.empty() ? 1 : lines_.back().number, record, "unexpected end of file");
    return lines_[pos_];
  }
  const Line& next(const std::string& record) {
    const Line& l = peek(record);
    ++pos_;
    return l;
  }

  [[noreturn]] void fail(std::size_t line, const std::string& record, const std::string& what) const {
    throw ParseError(std::string(source_), line, record, what);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

 private:
  std::string_view source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

bool starts_with(std::string_view s, std::string_view prefix) {
  s = Cursor::trim(s);
  return s.substr(0, prefix.size()) == prefix;
}

// Scans Fortran-style reals (E or D exponent markers). Adjacent fields
// without separating blanks ("-0.1D+00-0.2D+00") are split correctly.
std::vector<double> scan_reals(std::string_view s, const Cursor& cur, const Line& line,
                               const std::string& record) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::string token;
    const std::size_t start = i;
    if (s[i] == '+' || s[i] == '-') token += s[i++];
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) token += s[i++], digits = true;
    if (i < s.size() && s[i] == '.') {
      token += s[i++];
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) token += s[i++], digits = true;
    }
    if (digits && i < s.size() && std::strchr("EeDd", s[i])) {
      std::size_t j = i + 1;
      std::string exp = "E";
      if (j < s.size() && (s[j] == '+' || s[j] == '-')) exp += s[j++];
      bool exp_digits = false;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) exp += s[j++], exp_digits = true;
      if (exp_digits) {
        token += exp;
        i = j;
      }
    }
    if (!digits) {
      std::size_t end = start;
      while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
      cur.fail(line.number, record,
               "malformed real '" + std::string(s.substr(start, end - start)) + "'");
    }
    char* endp = nullptr;
    const double v = std::strtod(token.c_str(), &endp);
    if (endp != token.c_str() + token.size() || !std::isfinite(v))
      cur.fail(line.number, record, "malformed real '" + token + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<long> scan_ints(std::string_view s, const Cursor& cur, const Line& line,
                            const std::string& record) {
  std::vector<long> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    char* endp = nullptr;
    const long v = std::strtol(tok.c_str(), &endp, 10);
    if (endp != tok.c_str() + tok.size())
      cur.fail(line.number, record, "malformed integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// AIMPAC writes (A20,20I3); for >99 centers the fields run together.
std::vector<long> scan_assignments(const Line& line, std::size_t label_len, const Cursor& cur,
                                   const std::string& record) {
  const std::string_view body = line.text.substr(std::min(label_len, line.text.size()));
  std::istringstream probe{std::string(body)};
  std::string tok;
  bool fixed = false;
  while (probe >> tok)
    if (tok.size() > 3) fixed = true;
  if (!fixed) return scan_ints(body, cur, line, record);
  std::vector<long> out;
  const std::string_view fields = line.text.size() > 20 ? line.text.substr(20) : std::string_view{};
  for (std::size_t k = 0; k < fields.size(); k += 3) {
    const auto f = Cursor::trim(fields.substr(k, 3));
    if (f.empty()) continue;
    const auto v = scan_ints(f, cur, line, record);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

double value_after(std::string_view s, std::string_view key, const Cursor& cur, const Line& line,
                   const std::string& record) {
  const auto at = s.find(key);
  if (at == std::string_view::npos)
    cur.fail(line.number, record, "missing '" + std::string(key) + "'");
  auto rest = s.substr(at + key.size());
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos) cur.fail(line.number, record, "missing '=' after " + std::string(key));
  rest = rest.substr(eq + 1);
  rest = Cursor::trim(rest);
  std::size_t end = 0;
  while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
  // Stop at the next alphabetic label other than an exponent marker.
  const auto vals = scan_reals(rest.substr(0, end), cur, line, record);
  if (vals.empty()) cur.fail(line.number, record, "missing value after " + std::string(key));
  return vals.front();
}

std::string fortran_real(double v, int digits, int width, char marker = 'D') {
  std::string body;
  if (v == 0.0) {
    body = "0." + std::string(digits, '0') + marker + "+00";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*E", digits - 1, std::abs(v));
    // buf = d.ddddE+xx -> 0.dddddD+(xx+1)
    std::string s(buf);
    const auto e = s.find('E');
    std::string mant = s.substr(0, 1) + s.substr(2, e - 2);
    const int exponent = std::atoi(s.c_str() + e + 1) + 1;
    char ebuf[16];
    std::snprintf(ebuf, sizeof ebuf, "%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
    body = std::string(v < 0 ? "-" : "") + "0." + mant + marker + ebuf;
  }
  if (static_cast<int>(body.size()) < width) body.insert(0, width - body.size(), ' ');
  return body;
}

}  // namespace

double WfnDocument::electrons() const {
  double n = 0.0;
  for (const auto& mo : orbitals) n += mo.occupation;
  return n;
}

CartesianPowers wfn_type_powers(int code) {
  if (code < 1 || code > static_cast<int>(kTypePowers.size()))
    throw Error("unknown .wfn primitive type code " + std::to_string(code));
  return kTypePowers[code - 1];
}

int wfn_type_code(const CartesianPowers& powers) {
  for (std::size_t k = 0; k < kTypePowers.size(); ++k)
    if (kTypePowers[k] == powers) return static_cast<int>(k) + 1;
  throw Error("angular momentum beyond f cannot be written to .wfn");
}

WfnDocument parse_wfn(std::string_view text, std::string_view source_name) {
  Cursor cur(text, source_name);
  if (cur.done()) throw ParseError(std::string(source_name), 1, "TITLE", "empty file");
  WfnDocument doc;
  doc.title = std::string(Cursor::trim(cur.next("TITLE").text));

  const Line& header = cur.next("HEADER");
  static const std::regex header_re(
      R"(^\s*(\S+).*?(\d+)\s+MOL\s+ORBITALS\s+(\d+)\s+PRIMITIVES\s+(\d+)\s+NUCLEI)",
      std::regex::icase);
  std::cmatch m;
  const std::string header_text(header.text);
  if (!std::regex_search(header_text.c_str(), m, header_re))
    cur.fail(header.number, "HEADER", "expected '<program> n MOL ORBITALS n PRIMITIVES n NUCLEI'");
  doc.program = m[1].str();
  const std::size_t n_mo = std::stoul(m[2].str());
  const std::size_t n_prim = std::stoul(m[3].str());
  const std::size_t n_nuc = std::stoul(m[4].str());
  if (n_nuc == 0) cur.fail(header.number, "HEADER", "no nuclei declared");

  for (std::size_t a = 0; a < n_nuc; ++a) {
    const Line& l = cur.next("NUCLEI");
    const auto close = l.text.find(')');
    const auto charge_at = l.text.find("CHARGE");
    if (close == std::string_view::npos || charge_at == std::string_view::npos || charge_at < close)
      cur.fail(l.number, "NUCLEI", "expected '<symbol> <n> (CENTRE <n>) x y z CHARGE = q'");
    WfnNucleus nuc;
    std::string_view lead = Cursor::trim(l.text.substr(0, l.text.find('(')));
    std::string sym;
    for (char c : lead) {
      if (std::isalpha(static_cast<unsigned char>(c))) sym += c;
      else if (!sym.empty()) break;
    }
    if (sym.empty()) cur.fail(l.number, "NUCLEI", "missing element symbol");
    nuc.symbol = sym;
    const auto xyz = scan_reals(l.text.substr(close + 1, charge_at - close - 1), cur, l, "NUCLEI");
    if (xyz.size() != 3)
      cur.fail(l.number, "NUCLEI", "expected 3 coordinates, found " + std::to_string(xyz.size()));
    nuc.position = Vec3(xyz[0], xyz[1], xyz[2]);
    nuc.charge = value_after(l.text, "CHARGE", cur, l, "NUCLEI");
    doc.nuclei.push_back(nuc);
  }

  auto read_int_record = [&](std::string_view label, const std::string& record) {
    std::vector<long> values;
    while (values.size() < n_prim) {
      const Line& l = cur.peek(record);
      if (!starts_with(l.text, label))
        cur.fail(l.number, record,
                 "expected " + std::to_string(n_prim) + " entries, found " + std::to_string(values.size()));
      cur.next(record);
      const auto label_end = l.text.find(label) + label.size();
      const auto v = scan_assignments(l, label_end, cur, record);
      if (v.empty()) cur.fail(l.number, record, "no entries on line");
      values.insert(values.end(), v.begin(), v.end());
      if (values.size() > n_prim)
        cur.fail(l.number, record,
                 "expected " + std::to_string(n_prim) + " entries, found " + std::to_string(values.size()));
    }
    return values;
  };

  {
    const Line& first = cur.peek("CENTRE ASSIGNMENTS");
    const auto centers = read_int_record("CENTRE ASSIGNMENTS", "CENTRE ASSIGNMENTS");
    for (long c : centers) {
      if (c < 1 || static_cast<std::size_t>(c) > n_nuc)
        cur.fail(first.number, "CENTRE ASSIGNMENTS", "center index " + std::to_string(c) + " out of range");
      doc.prim_center.push_back(static_cast<std::size_t>(c - 1));
    }
  }
  {
    const Line& first = cur.peek("TYPE ASSIGNMENTS");
    const auto types = read_int_record("TYPE ASSIGNMENTS", "TYPE ASSIGNMENTS");
    for (long t : types) {
      if (t < 1 || t > static_cast<long>(kTypePowers.size()))
        cur.fail(first.number, "TYPE ASSIGNMENTS", "unknown type code " + std::to_string(t));
      doc.prim_type.push_back(static_cast<int>(t));
    }
  }
  while (doc.prim_exponent.size() < n_prim) {
    const Line& l = cur.peek("EXPONENTS");
    if (!starts_with(l.text, "EXPONENTS"))
      cur.fail(l.number, "EXPONENTS",
               "expected " + std::to_string(n_prim) + " exponents, found " +
                   std::to_string(doc.prim_exponent.size()));
    cur.next("EXPONENTS");
    const auto v = scan_reals(l.text.substr(l.text.find("EXPONENTS") + 9), cur, l, "EXPONENTS");
    for (double e : v)
      if (!(e > 0.0)) cur.fail(l.number, "EXPONENTS", "non-positive exponent");
    doc.prim_exponent.insert(doc.prim_exponent.end(), v.begin(), v.end());
    if (doc.prim_exponent.size() > n_prim)
      cur.fail(l.number, "EXPONENTS", "more exponents than declared primitives");
  }

  for (std::size_t k = 0; k < n_mo; ++k) {
    const std::string record = "MO " + std::to_string(k + 1);
    const Line& h = cur.next(record);
    if (!starts_with(h.text, "MO"))
      cur.fail(h.number, record, "expected MO header line (truncated MO block?)");
    WfnOrbital mo;
    mo.occupation = value_after(h.text, "OCC NO", cur, h, record);
    if (mo.occupation < 0.0) cur.fail(h.number, record, "negative occupation");
    const auto e_at = h.text.find("ENERGY");
    if (e_at != std::string_view::npos) mo.energy = value_after(h.text, "ENERGY", cur, h, record);
    while (mo.coefficients.size() < n_prim) {
      if (cur.done())
        cur.fail(h.number, record,
                 "truncated MO block: " + std::to_string(mo.coefficients.size()) + " of " +
                     std::to_string(n_prim) + " coefficients");
      const Line& l = cur.peek(record);
      if (starts_with(l.text, "MO") || starts_with(l.text, "END DATA"))
        cur.fail(l.number, record,
                 "truncated MO block: " + std::to_string(mo.coefficients.size()) + " of " +
                     std::to_string(n_prim) + " coefficients");
      cur.next(record);
      const auto v = scan_reals(l.text, cur, l, record);
      mo.coefficients.insert(mo.coefficients.end(), v.begin(), v.end());
      if (mo.coefficients.size() > n_prim)
        cur.fail(l.number, record, "more coefficients than declared primitives");
    }
    doc.orbitals.push_back(std::move(mo));
  }

  const Line& end = cur.next("END DATA");
  if (!starts_with(end.text, "END DATA"))
    cur.fail(end.number, "END DATA",
             "expected END DATA after " + std::to_string(n_mo) + " orbitals");
  if (!cur.done()) {
    const Line& t = cur.next("TRAILER");
    if (t.text.find("TOTAL ENERGY") != std::string_view::npos)
      doc.total_energy = value_after(t.text, "TOTAL ENERGY", cur, t, "TRAILER");
    if (t.text.find("VIRIAL") != std::string_view::npos)
      doc.virial = value_after(t.text, "VIRIAL(-V/T)", cur, t, "TRAILER");
  }
  return doc;
}

WfnDocument read_wfn_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_wfn(buf.str(), path.string());
}

std::string write_wfn(const WfnDocument& doc, const WfnWriteOptions& options) {
  const std::size_t n_prim = doc.primitive_count();
  if (doc.prim_center.size() != n_prim || doc.prim_type.size() != n_prim)
    throw Error("inconsistent primitive arrays in .wfn document");
  for (const auto& mo : doc.orbitals)
    if (mo.coefficients.size() != n_prim) throw Error("orbital coefficient count mismatch");
  for (int t : doc.prim_type) (void)wfn_type_powers(t);

  const bool legacy = options.legacy_widths;
  std::ostringstream out;
  char buf[256];
  out << doc.title << '\n';
  std::snprintf(buf, sizeof buf, "%-8s%15zu MOL ORBITALS %6zu PRIMITIVES %8zu NUCLEI",
                doc.program.substr(0, 8).c_str(), doc.orbitals.size(), n_prim, doc.nuclei.size());
  out << buf << '\n';
  for (std::size_t a = 0; a < doc.nuclei.size(); ++a) {
    const auto& n = doc.nuclei[a];
    if (legacy)
      std::snprintf(buf, sizeof buf, "  %-2s%4zu    (CENTRE%3zu) %12.8f%12.8f%12.8f  CHARGE =%5.1f",
                    n.symbol.c_str(), a + 1, a + 1, n.position.x(), n.position.y(),
                    n.position.z(), n.charge);
    else
      std::snprintf(buf, sizeof buf, "  %-2s%4zu    (CENTRE%3zu) %24.16E %24.16E %24.16E  CHARGE = %.17g",
                    n.symbol.c_str(), a + 1, a + 1, n.position.x(), n.position.y(),
                    n.position.z(), n.charge);
    out << buf << '\n';
  }
  auto int_record = [&](const char* label, auto value) {
    for (std::size_t i = 0; i < n_prim; i += 20) {
      out << label;
      for (std::size_t k = i; k < std::min(n_prim, i + 20); ++k) {
        std::snprintf(buf, sizeof buf, "%3ld", static_cast<long>(value(k)));
        out << buf;
      }
      out << '\n';
    }
  };
  int_record("CENTRE ASSIGNMENTS  ", [&](std::size_t k) { return doc.prim_center[k] + 1; });
  int_record("TYPE ASSIGNMENTS    ", [&](std::size_t k) { return doc.prim_type[k]; });

  const int e_digits = legacy ? 7 : 17, e_width = legacy ? 14 : 25;
  const int c_digits = legacy ? 8 : 17, c_width = legacy ? 16 : 25;
  const std::size_t per_line = legacy ? 5 : 4;
  for (std::size_t i = 0; i < n_prim; i += per_line) {
    out << "EXPONENTS ";
    for (std::size_t k = i; k < std::min(n_prim, i + per_line); ++k)
      out << fortran_real(doc.prim_exponent[k], e_digits, e_width);
    out << '\n';
  }
  for (std::size_t m = 0; m < doc.orbitals.size(); ++m) {
    const auto& mo = doc.orbitals[m];
    if (legacy)
      std::snprintf(buf, sizeof buf, "MO%5zu     MO 0.0        OCC NO = %13.7f  ORB. ENERGY =%12.6f",
                    m + 1, mo.occupation, mo.energy);
    else
      std::snprintf(buf, sizeof buf, "MO%5zu     MO 0.0        OCC NO = %.17g  ORB. ENERGY = %.17g",
                    m + 1, mo.occupation, mo.energy);
    out << buf << '\n';
    for (std::size_t i = 0; i < n_prim; i += per_line) {
      for (std::size_t k = i; k < std::min(n_prim, i + per_line); ++k)
        out << fortran_real(mo.coefficients[k], c_digits, c_width);
      out << '\n';
    }
  }
  out << "END DATA\n";
  if (doc.total_energy) {
    if (legacy)
      std::snprintf(buf, sizeof buf, " TOTAL ENERGY = %20.12f THE VIRIAL(-V/T)= %12.8f",
                    *doc.total_energy, doc.virial.value_or(0.0));
    else
      std::snprintf(buf, sizeof buf, " TOTAL ENERGY = %.17g THE VIRIAL(-V/T)= %.17g",
                    *doc.total_energy, doc.virial.value_or(0.0));
    out << buf << '\n';
  }
  return out.str();
}

WfnDocument make_wfn(std::string title, const Molecule& molecule,
                     std::span<const Primitive> primitives,
                     std::span<const MolecularOrbital> orbitals,
                     std::optional<double> total_energy) {
  WfnDocument doc;
  doc.title = std::move(title);
  for (const auto& atom : molecule.atoms())
    doc.nuclei.push_back({atom.symbol, static_cast<double>(atom.atomic_number), atom.position});
  for (const auto& p : primitives) {
    doc.prim_center.push_back(p.center);
    doc.prim_type.push_back(wfn_type_code(p.powers));
    doc.prim_exponent.push_back(p.exponent);
  }
  for (const auto& mo : orbitals) {
    if (mo.coefficients.size() != primitives.size())
      throw Error("orbital coefficient count mismatch");
    WfnOrbital w;
    w.occupation = mo.occupation;
    w.energy = mo.energy;
    for (std::size_t i = 0; i < primitives.size(); ++i)
      w.coefficients.push_back(mo.coefficients[i] * primitives[i].normalization);
    doc.orbitals.push_back(std::move(w));
  }
  doc.total_energy = total_energy;
  if (total_energy) doc.virial = 0.0;
  return doc;
}

Molecule molecule_from_wfn(const WfnDocument& doc) {
  std::vector<Atom> atoms;
  for (const auto& n : doc.nuclei) atoms.push_back({n.symbol, atomic_number(n.symbol), n.position});
  return Molecule(std::move(atoms));
}

std::vector<Primitive> primitives_from_wfn(const WfnDocument& doc, const Molecule& molecule) {
  std::vector<Primitive> out;
  out.reserve(doc.primitive_count());
  for (std::size_t i = 0; i < doc.primitive_count(); ++i)
    out.push_back(make_primitive(molecule, doc.prim_center.at(i), wfn_type_powers(doc.prim_type.at(i)),
                                 doc.prim_exponent.at(i)));
  return out;
}

DensityMatrix density_matrix_from_mos(const WfnDocument& doc, PrimitiveConvention convention) {
  const std::size_t n_prim = doc.primitive_count();
  std::vector<double> inv_norm(n_prim, 1.0);
  if (convention == PrimitiveConvention::Raw)
    for (std::size_t i = 0; i < n_prim; ++i)
      inv_norm[i] = 1.0 / cartesian_normalization(doc.prim_exponent[i],
                                                  wfn_type_powers(doc.prim_type[i]));
  std::vector<MolecularOrbital> orbitals;
  for (const auto& mo : doc.orbitals) {
    if (mo.occupation < 0.0) throw Error("negative orbital occupation in .wfn document");
    MolecularOrbital o;
    o.occupation = mo.occupation;
    o.energy = mo.energy;
    o.coefficients.resize(n_prim);
    for (std::size_t i = 0; i < n_prim; ++i) o.coefficients[i] = mo.coefficients.at(i) * inv_norm[i];
    orbitals.push_back(std::move(o));
  }
  return density_from_orbitals(orbitals, n_prim);
}

PairDensityField field_from_wfn(const WfnDocument& doc, PrimitiveConvention convention) {
  Molecule molecule = molecule_from_wfn(doc);
  auto prims = primitives_from_wfn(doc, molecule);
  return PairDensityField(std::move(molecule), std::move(prims),
                          density_matrix_from_mos(doc, convention));
}

}  // namespace entropart
