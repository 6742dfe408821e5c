#include "cli.hpp"

#include <bivar/bivar.hpp>
#include <bivar/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace bivar::cli {
namespace {

struct Options {
  std::string input;
  std::string input2;
  std::optional<int> degree;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  int max_degree = 5;
  unsigned threads = 0;
  std::string method;
  std::string out;
  std::string format = "json";
  std::string line;
  std::string extension_file;
  std::string previous_file;
  std::string nodes_file;
  std::string reference_file;
  int omit = 0;
  bool random = false;
  bool with_lagrange = false;
  bool with_hbasis = false;
  bool with_minors = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return parse_json_text(read_input(path), path); }

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// "a0,a1,a2" or a JSON array.
LinearForm parse_line_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') return line_from_json(parse_json_text(text, "line"), "line");
  std::vector<Scalar> c;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) c.push_back(parse_scalar(trim(part)));
  if (c.size() != 3) throw InputError("line: expected a0,a1,a2, got '" + text + "'");
  return {c[0], c[1], c[2]};
}

/// The n with dim Pi_n = #Y, unless --degree was given.
int degree_for(const Options& o, const NodeSet& y) {
  if (o.degree) return *o.degree;
  for (int n = 0; static_cast<std::size_t>(dim_pi(n)) <= y.size(); ++n)
    if (static_cast<std::size_t>(dim_pi(n)) == y.size()) return n;
  throw DomainError(std::to_string(y.size()) + " nodes is not (n+1)(n+2)/2 for any n; pass --degree");
}

int require_degree(const Options& o) {
  if (!o.degree) throw InputError("--degree is required");
  return *o.degree;
}

HBasis hbasis_for(const Options& o, const NodeSet& y, int n) {
  const std::string method = o.method.empty() ? "error-monomials" : o.method;
  if (method == "error-monomials") return hbasis_error_monomials(y, n);
  if (method == "br") {
    if (!o.extension_file.empty()) return hbasis_from_extension(y, nodeset_from_json(load(o.extension_file)), n);
    // A seeded line avoiding Y, carrying n+2 fresh points.
    LagrangeBasis basis = lagrange_basis(y, n);
    Rng rng(o.seed);
    while (true) {
      LinearForm k = random_line(rng);
      bool clear = true;
      for (const auto& p : y) clear = clear && !is_zero(k(p));
      if (!clear) continue;
      std::set<Point> pts;
      while (static_cast<int>(pts.size()) < n + 2) pts.insert(point_on_line(k, rng.rational(9, 3)));
      return hbasis_from_extension(br_extend(basis, BRStep::make(k, NodeSet({pts.begin(), pts.end()}))));
    }
  }
  if (method == "factorizable") {
    NodeSet prev = o.previous_file.empty() ? default_previous_set(y, n) : nodeset_from_json(load(o.previous_file));
    return factorizable_hbasis(y, n, prev);
  }
  throw InputError("unknown H-basis method '" + method + "' (br, error-monomials, factorizable)");
}

/// An H-basis document, or a node set from which one is computed.
HBasis load_hbasis(const Options& o, const std::string& path) {
  Json j = load(path);
  if (j.is_object() && j.contains("nodes") && !j.contains("elements")) {
    NodeSet y = nodeset_from_json(j);
    return hbasis_for(o, y, degree_for(o, y));
  }
  return hbasis_from_json(j);
}

/// A matrix document: rows, or an object with a "matrix" field.
SyzygyMatrix load_matrix(const std::string& path) {
  Json j = load(path);
  if (j.is_object()) return syzygy_from_json(detail::field(j, "matrix", "$"), "$.matrix");
  return syzygy_from_json(j);
}

Json line_incidence_json(const LineIncidence& inc) {
  return Json{{"line", to_json(inc.line)}, {"nodes", points_to_json(inc.nodes_on_line)}};
}

Json labels_json(const Lattice& lat) {
  Json labels = Json::array();
  for (const auto& l : lat.labels) labels.push_back(l);
  return labels;
}

Json cmd_poised(const Options& o) {
  NodeSet y = nodeset_from_json(load(o.input));
  int n = degree_for(o, y);
  Json out{{"poised", is_poised(y, n)}, {"degree", n}};
  if (!out["poised"].get<bool>()) {
    try {
      lagrange_basis(y, n);
    } catch (const DomainError& e) {
      out["reason"] = e.what();
    }
  }
  return out;
}

Json cmd_lagrange(const Options& o) {
  NodeSet y = nodeset_from_json(load(o.input));
  return to_json(lagrange_basis(y, degree_for(o, y)));
}

Json cmd_hbasis(const Options& o) {
  NodeSet y = nodeset_from_json(load(o.input));
  int n = degree_for(o, y);
  HBasis h = hbasis_for(o, y, n);
  if (!is_hbasis(h, y)) throw InternalError("hbasis: result is not an H-basis");
  return to_json(h);
}

Json cmd_reduce(const Options& o) {
  HBasis h = load_hbasis(o, o.input);
  Json pj = load(o.input2);
  Poly p = pj.is_object() ? poly_from_json(detail::field(pj, "poly", "$"), "$.poly") : poly_from_json(pj);
  Reduction r = reduce(p, h);
  Json out{{"coefficients", polys_to_json(r.coefficients)}, {"remainder", to_json(r.remainder)}};
  out["in_ideal"] = r.remainder.is_zero();
  if (!o.nodes_file.empty()) out["in_ideal"] = ideal_membership(p, nodeset_from_json(load(o.nodes_file)), h);
  return out;
}

Json cmd_syzygy(const Options& o) {
  HBasis h = load_hbasis(o, o.input);
  SyzygyMatrix s = syzygy_matrix(h);
  Json out{{"degree", h.degree}, {"matrix", to_json(s)}};
  if (o.with_minors) {
    std::vector<Poly> minors;
    for (std::size_t j = 0; j < s.cols(); ++j) minors.push_back(minor(s, j));
    out["minors"] = polys_to_json(minors);
  }
  return out;
}

Json cmd_minors(const Options& o) {
  SyzygyMatrix s = load_matrix(o.input);
  std::vector<Poly> minors;
  for (std::size_t j = 0; j < s.cols(); ++j) minors.push_back(minor(s, j));
  Json out{{"minors", polys_to_json(minors)}};
  if (!o.reference_file.empty()) {
    auto r = reconstruct_hbasis(s, load_hbasis(o, o.reference_file));
    out["w"] = to_json(r.w);
    out["hbasis"] = to_json(r.basis);
  }
  return out;
}

Json cmd_maximal_lines(const Options& o) {
  NodeSet y = nodeset_from_json(load(o.input));
  int n = degree_for(o, y);
  const std::string method = o.method.empty() ? "both" : o.method;
  if (method != "geometric" && method != "syzygy" && method != "both")
    throw InputError("unknown method '" + method + "' (geometric, syzygy, both)");
  if (!is_poised(y, n)) lagrange_basis(y, n);  // throws the poisedness diagnosis
  Json out{{"degree", n}};
  std::set<LinearForm> geometric, algebraic;
  if (method != "syzygy") {
    Json lines = Json::array();
    for (const auto& inc : geometric_maximal_lines(y, n)) {
      geometric.insert(inc.line);
      lines.push_back(line_incidence_json(inc));
    }
    out["geometric"] = lines;
  }
  if (method != "geometric") {
    SyzygyMatrix s = syzygy_matrix(hbasis_error_monomials(y, n));
    Json direct = Json::array();
    for (const auto& d : column_line_detect(s)) direct.push_back(Json{{"column", d.column}, {"line", to_json(d.line)}});
    Json found = Json::array();
    for (const auto& t : transform_search(s, y, n)) {
      algebraic.insert(t.line);
      found.push_back(Json{{"line", to_json(t.line)}, {"column", t.column}, {"a", to_json(t.a)}, {"b", to_json(t.b)}});
    }
    out["syzygy"] = Json{{"columns", direct}, {"transforms", found}};
  }
  if (method == "both") out["agree"] = geometric == algebraic;
  return out;
}

Json cmd_witness(const Options& o) {
  NodeSet y = nodeset_from_json(load(o.input));
  int n = degree_for(o, y);
  if (o.line.empty()) throw InputError("--line is required");
  Witness w = witness_matrix(y, n, parse_line_arg(o.line));
  return Json{{"line", to_json(w.line)}, {"hbasis", to_json(w.basis)}, {"matrix", to_json(w.matrix)}};
}

Json lattice_output(const Lattice& lat, const Options& o) {
  Json out{{"nodes", points_to_json(lat.nodes)}, {"degree", lat.basis.degree}, {"labels", labels_json(lat)}};
  if (o.with_lagrange) out["lagrange"] = polys_to_json(lat.basis.polys);
  return out;
}

Json cmd_lattice_natural(const Options& o) {
  NaturalLatticeSpec spec;
  if (o.random) {
    Rng rng(o.seed);
    spec = random_natural_lattice(rng, require_degree(o), o.with_hbasis);
  } else {
    if (o.input.empty()) throw InputError("lattice natural: pass --lines or --random");
    spec = natural_spec_from_json(load(o.input));
  }
  if (!o.line.empty()) spec.extension = parse_line_arg(o.line);
  int n = static_cast<int>(spec.lines.size()) - 2;
  if (o.degree && *o.degree != n)
    throw DomainError("lattice natural: degree " + std::to_string(*o.degree) + " needs " + std::to_string(*o.degree + 2) +
                      " lines, got " + std::to_string(spec.lines.size()));
  Json out = lattice_output(natural_lattice(spec, n), o);
  if (o.random) out["spec"] = to_json(spec);
  if (o.with_hbasis) out["hbasis"] = to_json(natural_lattice_hbasis(spec, n));
  return out;
}

Json cmd_lattice_gpl(const Options& o) {
  GPLSpec spec;
  if (o.random) {
    Rng rng(o.seed);
    spec = random_gpl(rng, require_degree(o));
  } else if (o.input.empty()) {
    spec = classical_principal_lattice(require_degree(o));
  } else {
    spec = gpl_spec_from_json(load(o.input));
  }
  int n = static_cast<int>(spec.pencils[0].size()) - 1;
  if (o.degree && *o.degree != n)
    throw DomainError("lattice gpl: degree " + std::to_string(*o.degree) + " needs " + std::to_string(*o.degree + 1) +
                      " lines per pencil, got " + std::to_string(spec.pencils[0].size()));
  Json out = lattice_output(generalized_principal_lattice(spec, n), o);
  if (o.random || o.input.empty()) out["spec"] = to_json(spec);
  if (o.with_hbasis) out["hbasis"] = to_json(gpl_hbasis(spec, n, o.omit));
  return out;
}

Json cmd_br(const Options& o) {
  BRChain chain;
  if (o.random) {
    Rng rng(o.seed);
    chain = random_br_chain(rng, require_degree(o));
  } else {
    if (o.input.empty()) throw InputError("br: pass a chain file or --random");
    chain = br_chain(br_steps_from_json(load(o.input)));
  }
  Json out{{"degree", chain.degree()}, {"nodes", points_to_json(chain.nodes())}};
  if (o.random) out["steps"] = br_steps_to_json(chain.steps)["steps"];
  if (o.with_lagrange) out["lagrange"] = polys_to_json(chain.result.polys);
  return out;
}

Json cmd_sweep(const Options& o) {
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  return to_json(gasca_maeztu_sweep(o.max_degree, o.trials, o.seed, threads));
}

/// Fixed-width grid of the matrix entries.
std::string render_grid(const Json& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(row[c].is_string() ? row[c].get<std::string>() : to_string(poly_from_json(row[c])));
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::string out;
  for (const auto& line : cells) {
    out += "  [";
    for (std::size_t c = 0; c < line.size(); ++c)
      out += " " + line[c] + std::string(width[c] - line[c].size(), ' ') + " ";
    out += "]\n";
  }
  return out;
}

bool looks_like_poly(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& t : j)
    if (!t.is_object() || t.size() != 3 || !t.contains("e1") || !t.contains("e2") || !t.contains("coeff")) return false;
  return true;
}

/// Polynomials replaced by their readable form.
Json readable(const Json& j) {
  if (looks_like_poly(j)) return to_string(poly_from_json(j));
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(readable(e));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = readable(v);
    return out;
  }
  return j;
}

std::string render_pretty(const Json& j) {
  if (!j.is_object()) return format_json(readable(j));
  std::string out;
  for (const auto& [k, v] : j.items()) {
    if (k == "matrix" && v.is_array()) {
      out += k + ":\n" + render_grid(v);
    } else {
      out += k + ": " + format_json(readable(v));
    }
  }
  return out;
}

void emit(const Json& result, const Options& o, std::ostream& out) {
  std::string text = o.format == "pretty" ? render_pretty(result) : format_json(result);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact bivariate polynomial interpolation: poised sets, H-bases, syzygies, maximal lines"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write the result to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

  auto with_nodes = [&](CLI::App* sub) {
    sub->add_option("nodes", o.input, "Node set JSON file ('-' for stdin)")->required();
    sub->add_option("--degree", o.degree, "Interpolation degree n (inferred from #Y when omitted)");
  };

  auto* poised = app.add_subcommand("poised", "Check that a node set is poised");
  with_nodes(poised);
  auto* lagrange = app.add_subcommand("lagrange", "Lagrange fundamental polynomials");
  with_nodes(lagrange);

  auto* hbasis = app.add_subcommand("hbasis", "H-basis of the vanishing ideal");
  with_nodes(hbasis);
  hbasis->add_option("--method", o.method, "br, error-monomials or factorizable")
      ->check(CLI::IsMember({"br", "error-monomials", "factorizable"}));
  hbasis->add_option("--extension", o.extension_file, "For br: the extended node set Y_{n+1}");
  hbasis->add_option("--previous", o.previous_file, "For factorizable: a poised subset of degree n-1");
  hbasis->add_option("--seed", o.seed, "For br without --extension: seed of the extension line");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a polynomial by an H-basis");
  reduce_cmd->add_option("hbasis", o.input, "H-basis JSON (or a node set)")->required();
  reduce_cmd->add_option("poly", o.input2, "Polynomial JSON")->required();
  reduce_cmd->add_option("--nodes", o.nodes_file, "Node set for the membership cross-check");
  reduce_cmd->add_option("--degree", o.degree, "Degree when the basis is given as a node set");

  auto* syzygy = app.add_subcommand("syzygy", "Linear syzygy matrix of an H-basis");
  syzygy->add_option("hbasis", o.input, "H-basis JSON (or a node set)")->required();
  syzygy->add_option("--degree", o.degree, "Degree when a node set is given");
  syzygy->add_option("--method", o.method, "H-basis method when a node set is given");
  syzygy->add_option("--seed", o.seed, "Seed for --method br");
  syzygy->add_flag("--minors", o.with_minors, "Also emit the maximal minors");

  auto* minors = app.add_subcommand("minors", "Maximal minors and H-basis reconstruction");
  minors->add_option("matrix", o.input, "Syzygy matrix JSON")->required();
  minors->add_option("--reference", o.reference_file, "H-basis to recover up to the scalar w");

  auto* maximal = app.add_subcommand("maximal-lines", "Maximal lines of a poised set");
  with_nodes(maximal);
  maximal->add_option("--method", o.method, "geometric, syzygy or both")
      ->check(CLI::IsMember({"geometric", "syzygy", "both"}));

  auto* witness = app.add_subcommand("witness", "Witness H-basis and syzygy matrix of a maximal line");
  with_nodes(witness);
  witness->add_option("--line", o.line, "The line as a0,a1,a2")->required();

  auto* lattice = app.add_subcommand("lattice", "Natural and generalized principal lattices");
  lattice->require_subcommand(1);
  auto* natural = lattice->add_subcommand("natural", "Pairwise intersections of n+2 lines");
  natural->add_option("--lines", o.input, "Lines JSON");
  natural->add_option("--extend", o.line, "Extension line K_{n+2} as a0,a1,a2");
  auto* gpl = lattice->add_subcommand("gpl", "Triple intersections of three pencils");
  gpl->add_option("--pencils", o.input, "Pencils JSON (classical lattice when omitted)");
  gpl->add_option("--omit", o.omit, "Pencil left out of the H-basis")->check(CLI::Range(0, 2));
  for (auto* sub : {natural, gpl}) {
    sub->add_option("--degree", o.degree, "Degree n");
    sub->add_option("--seed", o.seed, "Seed for --random");
    sub->add_flag("--random", o.random, "Generate a random lattice");
    sub->add_flag("--lagrange", o.with_lagrange, "Include the Lagrange polynomials");
    sub->add_flag("--hbasis", o.with_hbasis, "Include the product H-basis");
  }

  auto* br = app.add_subcommand("br", "Berzolari-Radon chain");
  br->add_option("chain", o.input, "Chain JSON");
  br->add_option("--degree", o.degree, "Degree of a random chain");
  br->add_option("--seed", o.seed, "Seed for --random");
  br->add_flag("--random", o.random, "Generate a random chain");
  br->add_flag("--lagrange", o.with_lagrange, "Include the Lagrange polynomials");

  auto* sweep = app.add_subcommand("gm-sweep", "Search seeded GC sets for one without a maximal line");
  sweep->add_option("--max-degree", o.max_degree, "Largest degree, at most 5")->check(CLI::Range(1, 5));
  sweep->add_option("--trials", o.trials, "Trials per degree");
  sweep->add_option("--seed", o.seed, "Seed");
  sweep->add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    out << format_json(error_json("usage", e.what()));
    return kMalformedInput;
  }

  try {
    Json result;
    if (*poised) result = cmd_poised(o);
    else if (*lagrange) result = cmd_lagrange(o);
    else if (*hbasis) result = cmd_hbasis(o);
    else if (*reduce_cmd) result = cmd_reduce(o);
    else if (*syzygy) result = cmd_syzygy(o);
    else if (*minors) result = cmd_minors(o);
    else if (*maximal) result = cmd_maximal_lines(o);
    else if (*witness) result = cmd_witness(o);
    else if (*natural) result = cmd_lattice_natural(o);
    else if (*gpl) result = cmd_lattice_gpl(o);
    else if (*br) result = cmd_br(o);
    else if (*sweep) result = cmd_sweep(o);
    emit(result, o, out);
    return kOk;
  } catch (const DomainError& e) {
    out << format_json(error_json("domain", e.what()));
    return kDomainError;
  } catch (const InputError& e) {
    out << format_json(error_json("input", e.what()));
    return kMalformedInput;
  } catch (const InternalError& e) {
    out << format_json(error_json("internal", e.what()));
    return kInternalError;
  }
}

}  // namespace bivar::cli
