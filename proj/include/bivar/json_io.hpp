#pragma once

// JSON encoding of scalars, points, node sets, polynomials, lines, bases,
// matrices and sweep reports. Scalars are strings "p/q" (or "p"); polynomials
// are arrays of {e1, e2, coeff} in canonical monomial order. Parsing failures
// raise InputError with the offending path.

#include <bivar/hbasis.hpp>
#include <bivar/lattices.hpp>
#include <bivar/sweep.hpp>
#include <bivar/syzygy.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace bivar {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void malformed(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) malformed(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) malformed(path, "expected an array");
  return j;
}

}  // namespace detail

inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": invalid JSON (" + e.what() + ")");
  }
}

inline Json to_json(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return to_string(c);
}

/// Accepts "p", "p/q" or a JSON integer.
inline Scalar scalar_from_json(const Json& j, const std::string& path = "$") {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const InputError& e) {
      detail::malformed(path, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  detail::malformed(path, "expected a rational as a string \"p/q\" or an integer");
}

inline Json to_json(const Point& p) { return Json::array({to_json(p.x1), to_json(p.x2)}); }

inline Point point_from_json(const Json& j, const std::string& path = "$") {
  if (!j.is_array() || j.size() != 2) detail::malformed(path, "expected a point [x1, x2]");
  return {scalar_from_json(j[0], path + "[0]"), scalar_from_json(j[1], path + "[1]")};
}

inline Json points_to_json(const NodeSet& y) {
  Json pts = Json::array();
  for (const auto& p : y) pts.push_back(to_json(p));
  return pts;
}

inline Json to_json(const NodeSet& y) { return Json{{"nodes", points_to_json(y)}}; }

inline NodeSet points_from_json(const Json& j, const std::string& path) {
  std::vector<Point> pts;
  const Json& arr = detail::array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) pts.push_back(point_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
  return NodeSet(std::move(pts));
}

/// {"nodes": [[x1, x2], ...]}.
inline NodeSet nodeset_from_json(const Json& j, const std::string& path = "$") {
  return points_from_json(detail::field(j, "nodes", path), path + ".nodes");
}

inline Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"e1", m.e1}, {"e2", m.e2}, {"coeff", to_json(c)}});
  return terms;
}

inline Poly poly_from_json(const Json& j, const std::string& path = "$") {
  Poly p;
  const Json& arr = detail::array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string at = path + "[" + std::to_string(i) + "]";
    const Json& e1 = detail::field(arr[i], "e1", at);
    const Json& e2 = detail::field(arr[i], "e2", at);
    if (!e1.is_number_unsigned() || !e2.is_number_unsigned()) detail::malformed(at, "exponents must be nonnegative integers");
    p.add_term({e1.get<unsigned>(), e2.get<unsigned>()}, scalar_from_json(detail::field(arr[i], "coeff", at), at + ".coeff"));
  }
  return p;
}

/// [a0, a1, a2] for a0 + a1 x1 + a2 x2.
inline Json to_json(const LinearForm& k) { return Json::array({to_json(k.a0), to_json(k.a1), to_json(k.a2)}); }

inline LinearForm line_from_json(const Json& j, const std::string& path = "$") {
  if (!j.is_array() || j.size() != 3) detail::malformed(path, "expected a line [a0, a1, a2]");
  return {scalar_from_json(j[0], path + "[0]"), scalar_from_json(j[1], path + "[1]"), scalar_from_json(j[2], path + "[2]")};
}

inline std::vector<LinearForm> lines_from_json(const Json& j, const std::string& path) {
  std::vector<LinearForm> out;
  const Json& arr = detail::array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(line_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json polys_to_json(const std::vector<Poly>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_json(p));
  return arr;
}

inline Json to_json(const LagrangeBasis& b) {
  return Json{{"degree", b.degree}, {"nodes", points_to_json(b.nodes)}, {"lagrange", polys_to_json(b.polys)}};
}

inline Json to_json(const HBasis& h) {
  return Json{{"degree", h.degree}, {"origin", to_string(h.origin)}, {"elements", polys_to_json(h.elements)}};
}

inline HBasisOrigin origin_from_string(const std::string& s, const std::string& path) {
  for (auto o : {HBasisOrigin::BRExtension, HBasisOrigin::ErrorMonomials, HBasisOrigin::Lattice,
                 HBasisOrigin::Factorizable, HBasisOrigin::Reconstructed, HBasisOrigin::Witness})
    if (to_string(o) == s) return o;
  detail::malformed(path, "unknown H-basis origin \"" + s + "\"");
}

/// {"degree": n, "origin": tag, "elements": [poly, ...]}; origin is optional.
inline HBasis hbasis_from_json(const Json& j, const std::string& path = "$") {
  const Json& deg = detail::field(j, "degree", path);
  if (!deg.is_number_integer()) detail::malformed(path + ".degree", "expected an integer");
  HBasis h{deg.get<int>(), {}, HBasisOrigin::Reconstructed};
  if (j.contains("origin")) {
    if (!j["origin"].is_string()) detail::malformed(path + ".origin", "expected a string");
    h.origin = origin_from_string(j["origin"].get<std::string>(), path + ".origin");
  }
  const Json& el = detail::array_at(detail::field(j, "elements", path), path + ".elements");
  for (std::size_t i = 0; i < el.size(); ++i)
    h.elements.push_back(poly_from_json(el[i], path + ".elements[" + std::to_string(i) + "]"));
  return h;
}

/// Rows of polynomials.
inline Json to_json(const SyzygyMatrix& s) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.rows(); ++r) rows.push_back(polys_to_json(s.row(r)));
  return rows;
}

inline SyzygyMatrix syzygy_from_json(const Json& j, const std::string& path = "$") {
  const Json& rows = detail::array_at(j, path);
  if (rows.empty()) detail::malformed(path, "empty matrix");
  std::vector<Syzygy> out;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string at = path + "[" + std::to_string(r) + "]";
    const Json& row = detail::array_at(rows[r], at);
    if (r == 0) cols = row.size();
    if (row.size() != cols) detail::malformed(at, "rows differ in length");
    Syzygy s;
    for (std::size_t c = 0; c < row.size(); ++c) s.push_back(poly_from_json(row[c], at + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(s));
  }
  return from_rows(out, cols);
}

inline Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"steps": [{"line": [a0, a1, a2], "points": [[x1, x2], ...]}, ...]}.
inline std::vector<std::pair<LinearForm, NodeSet>> br_steps_from_json(const Json& j, const std::string& path = "$") {
  const Json& steps = detail::array_at(detail::field(j, "steps", path), path + ".steps");
  std::vector<std::pair<LinearForm, NodeSet>> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string at = path + ".steps[" + std::to_string(i) + "]";
    out.emplace_back(line_from_json(detail::field(steps[i], "line", at), at + ".line"),
                     points_from_json(detail::field(steps[i], "points", at), at + ".points"));
  }
  return out;
}

inline Json br_steps_to_json(const std::vector<BRStep>& steps) {
  Json arr = Json::array();
  for (const auto& s : steps) arr.push_back(Json{{"line", to_json(s.k)}, {"points", points_to_json(s.points)}});
  return Json{{"steps", arr}};
}

/// {"lines": [line, ...], "extension": line}; extension is optional.
inline NaturalLatticeSpec natural_spec_from_json(const Json& j, const std::string& path = "$") {
  NaturalLatticeSpec spec;
  spec.lines = lines_from_json(detail::field(j, "lines", path), path + ".lines");
  if (j.contains("extension")) spec.extension = line_from_json(j["extension"], path + ".extension");
  return spec;
}

inline Json to_json(const NaturalLatticeSpec& spec) {
  Json lines = Json::array();
  for (const auto& k : spec.lines) lines.push_back(to_json(k));
  Json out{{"lines", lines}};
  if (spec.extension) out["extension"] = to_json(*spec.extension);
  return out;
}

/// {"pencils": [[line, ...], [line, ...], [line, ...]]}.
inline GPLSpec gpl_spec_from_json(const Json& j, const std::string& path = "$") {
  const Json& p = detail::array_at(detail::field(j, "pencils", path), path + ".pencils");
  if (p.size() != 3) detail::malformed(path + ".pencils", "expected three pencils");
  GPLSpec spec;
  for (std::size_t i = 0; i < 3; ++i)
    spec.pencils[i] = lines_from_json(p[i], path + ".pencils[" + std::to_string(i) + "]");
  return spec;
}

inline Json to_json(const GPLSpec& spec) {
  Json pencils = Json::array();
  for (const auto& pencil : spec.pencils) {
    Json lines = Json::array();
    for (const auto& k : pencil) lines.push_back(to_json(k));
    pencils.push_back(std::move(lines));
  }
  return Json{{"pencils", pencils}};
}

inline Json to_json(const SweepReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json gens = Json::object();
    for (auto g : kGCGenerators) {
      const auto& t = d.generators[static_cast<std::size_t>(g)];
      gens[to_string(g)] = Json{{"trials", t.trials},
                                {"skipped", t.skipped},
                                {"min_maximal_lines", t.min_maximal_lines},
                                {"max_maximal_lines", t.max_maximal_lines}};
    }
    degrees.push_back(Json{{"degree", d.degree},
                           {"trials", d.trials},
                           {"gc_sets", d.gc_sets},
                           {"skipped", d.skipped},
                           {"with_maximal_line", d.with_maximal_line},
                           {"generators", gens}});
  }
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"degree", v.degree},
                              {"trial", v.trial},
                              {"generator", to_string(v.generator)},
                              {"nodes", points_to_json(v.nodes)}});
  return Json{{"seed", r.seed},
              {"trials_per_degree", r.trials},
              {"max_degree", r.max_degree},
              {"degrees", degrees},
              {"violations", violations},
              {"skip_reasons", r.skip_reasons}};
}

namespace detail {

inline bool is_leaf(const Json& j) {
  if (j.is_array()) {
    for (const auto& e : j)
      if (e.is_structured()) return false;
    return true;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (v.is_structured()) return false;
    return j.size() <= 3;
  }
  return true;
}

inline void write_json(const Json& j, int indent, std::string& out) {
  if (is_leaf(j) || j.empty()) {
    // One line, with a space after separators outside string values.
    const std::string raw = j.dump();
    bool in_string = false, escaped = false;
    for (const char c : raw) {
      out += c;
      if (in_string) {
        if (escaped) escaped = false;
        else if (c == '\\') escaped = true;
        else if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == ',' || c == ':') {
        out += ' ';
      }
    }
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (const auto& [k, v] : j.items()) {
    out += pad;
    if (obj) out += Json(k).dump() + ": ";
    write_json(v, indent + 2, out);
    out += ++i < j.size() ? ",\n" : "\n";
  }
  out += std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

}  // namespace detail

/// Indented JSON with arrays of scalars and flat objects kept on one line.
inline std::string format_json(const Json& j) {
  std::string out;
  detail::write_json(j, 0, out);
  return out + "\n";
}

/// {"error": {"kind": kind, "message": message}}.
inline Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace bivar
