#include "leibhom/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "leibhom/dgla.hpp"
#include "leibhom/homology.hpp"

namespace leibhom::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> parse_basis(const json& doc, const char* where) {
  const json& b = field(doc, "basis", where);
  if (!b.is_array()) throw ParseError(std::string(where) + ": \"basis\" must be an array");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : b) {
    if (!n.is_string()) throw ParseError(std::string(where) + ": basis names must be strings");
    const std::string s = n.get<std::string>();
    if (s.empty()) throw ParseError(std::string(where) + ": empty basis name");
    if (!seen.insert(s).second) throw ParseError(std::string(where) + ": duplicate basis name \"" + s + "\"");
    names.push_back(s);
  }
  return names;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
  return idx;
}

std::size_t lookup(const std::map<std::string, std::size_t>& idx, const json& name, const char* where) {
  if (!name.is_string()) throw ParseError(std::string(where) + ": names must be strings");
  auto it = idx.find(name.get<std::string>());
  if (it == idx.end()) throw ParseError(std::string(where) + ": unknown name \"" + name.get<std::string>() + "\"");
  return it->second;
}

Scalar parse_value(const json& v, const char* where) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw ParseError(std::string(where) + ": coefficients must be \"p/q\" strings or integers");
}

// Reads [{"left": a, "right": b, "value": {c: "p/q"}}] into t(a, b, c).
void read_entries(const json& list, const std::map<std::string, std::size_t>& left,
                  const std::map<std::string, std::size_t>& right, const std::map<std::string, std::size_t>& value,
                  Tensor3& t, const char* where) {
  if (!list.is_array()) throw ParseError(std::string(where) + ": expected an array of entries");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : list) {
    const std::size_t a = lookup(left, field(e, "left", where), where);
    const std::size_t b = lookup(right, field(e, "right", where), where);
    if (!seen.insert({a, b}).second) throw ParseError(std::string(where) + ": pair given twice");
    const json& val = field(e, "value", where);
    if (!val.is_object()) throw ParseError(std::string(where) + ": \"value\" must be an object");
    for (const auto& [name, coeff] : val.items()) t(a, b, lookup(value, json(name), where)) = parse_value(coeff, where);
  }
}

std::string triples(const ViolationReport& report, const std::vector<std::string>& a,
                    const std::vector<std::string>& b, const std::vector<std::string>& c) {
  std::ostringstream ss;
  std::size_t shown = 0;
  for (const auto& v : report) {
    if (shown++ == 10) {
      ss << " ...";
      break;
    }
    ss << (shown > 1 ? ", " : "") << "(" << a.at(v.i) << "," << b.at(v.j) << "," << c.at(v.k) << ")";
  }
  return ss.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Vector& v, const std::vector<std::string>& names) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out[names[i]] = to_string(v[i]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

ParsedAlgebra parse_algebra_text(std::string_view text) {
  const json doc = parse_json(text);
  const auto names = parse_basis(doc, "algebra");
  const auto idx = index_of(names);
  ParsedAlgebra out;
  const std::string conv = doc.contains("convention") ? field(doc, "convention", "algebra").get<std::string>() : "left";
  if (conv != "left" && conv != "right") throw ParseError("algebra: convention must be \"left\" or \"right\"");
  out.input_convention = conv == "left" ? Convention::left : Convention::right;

  LeibnizAlgebra g = make_algebra(names, out.input_convention);
  if (doc.contains("brackets")) read_entries(doc["brackets"], idx, idx, idx, g.structure, "algebra brackets");
  if (out.input_convention == Convention::right) {
    g = opposite(g);
    g.convention = Convention::left;
    out.notices.push_back("input uses the right convention; converted to the left convention via the opposite algebra");
  }
  const auto report = check_leibniz(g);
  if (!report.empty())
    throw AxiomError(std::string(out.input_convention == Convention::right ? "right Leibniz identity (opposite form)"
                                                                           : "left Leibniz identity") +
                     " fails at " + triples(report, names, names, names));
  out.algebra = std::move(g);
  return out;
}

ParsedAlgebra parse_algebra(const std::string& path) { return parse_algebra_text(read_file(path)); }

Representation parse_representation_text(std::string_view text, const ParsedAlgebra& pg) {
  const json doc = parse_json(text);
  const LeibnizAlgebra& g = pg.algebra;
  const auto mnames = parse_basis(doc, "representation");
  const auto gidx = index_of(g.basis_names), midx = index_of(mnames);
  const std::size_t n = g.dim(), d = mnames.size();
  Representation m{mnames, Tensor3(n, d, d), Tensor3(d, n, d)};
  if (doc.contains("left_action")) read_entries(doc["left_action"], gidx, midx, midx, m.left_action, "left_action");
  if (doc.contains("right_action"))
    read_entries(doc["right_action"], midx, gidx, midx, m.right_action, "right_action");
  if (pg.input_convention == Convention::right) m = opposite_representation(m);
  const auto report = check_representation(g, m);
  if (!report.empty()) {
    std::ostringstream ss;
    ss << "representation identities fail:";
    std::size_t shown = 0;
    for (const auto& v : report) {
      if (shown++ == 10) {
        ss << " ...";
        break;
      }
      ss << " #" << v.identity;
    }
    throw AxiomError(ss.str());
  }
  return m;
}

LieModule parse_lie_module_text(std::string_view text, const ParsedAlgebra& pg) {
  const json doc = parse_json(text);
  const LeibnizAlgebra& g = pg.algebra;
  const auto mnames = parse_basis(doc, "module");
  const auto gidx = index_of(g.basis_names), midx = index_of(mnames);
  const std::size_t n = g.dim(), d = mnames.size();
  Tensor3 a(n, d, d);
  if (doc.contains("action")) read_entries(doc["action"], gidx, midx, midx, a, "action");
  // A module of (g_Lie, [,]_right) becomes one of the opposite Lie algebra under x -> -x.
  if (pg.input_convention == Convention::right)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) a(i, p, q) = -a(i, p, q);

  const QuotientData q = lie_quotient(g);
  for (std::size_t z = 0; z < q.kernel.dim(); ++z) {
    const Vector zv = q.kernel.basis_vector(z);
    for (std::size_t p = 0; p < d; ++p) {
      Vector e(d);
      e[p] = 1;
      if (!is_zero(a.apply(zv, e))) throw IllDefinedAction("module: an element of g^ann acts nontrivially");
    }
  }
  const auto comp = q.kernel.complement_indices();
  LieModule m{mnames, Tensor3(comp.size(), d, d)};
  for (std::size_t k = 0; k < comp.size(); ++k)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t r = 0; r < d; ++r) m.action(k, p, r) = a(comp[k], p, r);
  const auto report = check_lie_module(q.quotient, m);
  if (!report.empty())
    throw AxiomError("module identity [[x,y],m] = x.(y.m) - y.(x.m) fails at " +
                     triples(report, q.quotient.basis_names, q.quotient.basis_names, mnames));
  return m;
}

json algebra_to_json(const LeibnizAlgebra& g) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vector v = g.bracket_basis(i, j);
      if (is_zero(std::span<const Scalar>(v))) continue;
      brackets.push_back({{"left", g.basis_names[i]}, {"right", g.basis_names[j]}, {"value", vector_json(v, g.basis_names)}});
    }
  return {{"basis", g.basis_names}, {"convention", to_string(g.convention)}, {"brackets", brackets}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

void emit_report(const Report& r, const std::optional<std::string>& path, bool quiet, std::ostream& out) {
  const std::string text = r.json.dump(2) + "\n";
  if (path) {
    if (*path == "-") {
      out << text;
    } else {
      std::ofstream f(*path, std::ios::binary);
      if (!f) throw ParseError("cannot write " + *path);
      f << text;
    }
  }
  if (!quiet) out << r.human;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Options {
  std::string command;
  std::string input;
  std::size_t max_degree = 3;
  std::string coefficients = "trivial";
  std::size_t generators = 2;
  std::size_t max_weight = 0;
  std::size_t weight = 0;
  std::optional<std::string> json_path;
  bool quiet = false;
  unsigned threads = 0;
};

struct Loaded {
  ParsedAlgebra g;
  Coefficients coeffs;
  std::string coeff_label = "trivial";
  std::string hash_input;
  std::vector<std::string> files;
};

Loaded load(const Options& o, bool want_coefficients) {
  Loaded l;
  const std::string raw = read_file(o.input);
  l.files.push_back(o.input);
  l.hash_input = raw;
  l.g = parse_algebra_text(raw);
  if (!want_coefficients) return l;
  const std::string& c = o.coefficients;
  if (c == "trivial") return l;
  const auto colon = c.find(':');
  if (colon == std::string::npos) throw ParseError("--coefficients must be trivial, lie:<file> or rep:<file>");
  const std::string kind = c.substr(0, colon), path = c.substr(colon + 1);
  const std::string text = read_file(path);
  l.files.push_back(path);
  l.hash_input += '\n';
  l.hash_input += text;
  if (kind == "lie") {
    l.coeffs = Coefficients::lie(parse_lie_module_text(text, l.g));
  } else if (kind == "rep") {
    l.coeffs = Coefficients::representation(parse_representation_text(text, l.g));
  } else {
    throw ParseError("--coefficients must be trivial, lie:<file> or rep:<file>");
  }
  l.coeff_label = c;
  return l;
}

json command_echo(const Options& o, const std::vector<std::string>& flags) {
  json f = json::object();
  for (const auto& name : flags) {
    if (name == "max-degree") f[name] = o.max_degree;
    if (name == "coefficients") f[name] = o.coefficients;
    if (name == "generators") f[name] = o.generators;
    if (name == "max-weight") f[name] = o.max_weight;
    if (name == "weight") f[name] = o.weight;
  }
  json c = {{"name", o.command}, {"flags", f}};
  c["input"] = o.input.empty() ? json(nullptr) : json(o.input);
  return c;
}

void attach_input(Report& r, const Loaded& l) {
  r.json["input"] = {{"sha256", sha256_hex(l.hash_input)}, {"files", l.files}, {"notices", l.g.notices}};
  r.json["algebra"] = algebra_to_json(l.g.algebra);
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string header(const Options& o, const Loaded* l) {
  std::ostringstream ss;
  ss << "leibhom " << o.command;
  if (!o.input.empty()) ss << "  " << o.input;
  if (l) {
    ss << "  (dim " << l->g.algebra.dim() << ", coefficients " << l->coeff_label << ")";
    for (const auto& n : l->g.notices) ss << "\nnote: " << n;
  }
  ss << "\n";
  return ss.str();
}

std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream ss;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) ss << std::left << std::setw(static_cast<int>(width[c]) + 2) << r[c];
    ss << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
  return ss.str();
}

std::string verdict_lines(const json& verdicts) {
  std::ostringstream ss;
  for (const auto& [k, v] : verdicts.items()) ss << "verdict " << k << ": " << v.get<std::string>() << "\n";
  return ss.str();
}

Report cmd_check(const Options& o) {
  const Loaded l = load(o, true);
  Report r;
  attach_input(r, l);
  const LeibnizAlgebra& g = l.g.algebra;
  const QuotientData q = lie_quotient(g);
  const std::string summary = "valid left Leibniz algebra, dim " + std::to_string(g.dim()) + ", g_ann " +
                              std::to_string(q.kernel.dim()) + ", g_Lie " + std::to_string(q.quotient.dim());
  r.json["tables"] = {{"summary", summary},
                      {"dim", g.dim()},
                      {"g_ann", q.kernel.dim()},
                      {"g_Lie", q.quotient.dim()},
                      {"coefficients", l.coeff_label}};
  r.json["verdicts"] = {{"leibniz_identity", "PASS"}};
  if (l.coeffs.kind == Coefficients::Kind::representation) r.json["verdicts"]["representation"] = "PASS";
  if (l.coeffs.kind == Coefficients::Kind::lie_module) r.json["verdicts"]["lie_module"] = "PASS";
  r.human = header(o, &l) + summary + "\n" + verdict_lines(r.json["verdicts"]);
  return r;
}

Report cmd_quotient(const Options& o) {
  const Loaded l = load(o, false);
  Report r;
  attach_input(r, l);
  const LeibnizAlgebra& g = l.g.algebra;
  const QuotientData q = lie_quotient(g);
  json ann = json::array();
  for (std::size_t k = 0; k < q.kernel.dim(); ++k) ann.push_back(vector_json(q.kernel.basis_vector(k), g.basis_names));
  LeibnizAlgebra gl = as_leibniz(q.quotient);
  r.json["tables"] = {{"kernel_ideal", ann}, {"lie_quotient", algebra_to_json(gl)}, {"projection", matrix_json(q.projection)}};
  r.json["verdicts"] = {{"quotient_is_lie", pass(check_lie(q.quotient).empty())}};
  std::ostringstream ss;
  ss << header(o, &l) << "g^ann basis (" << q.kernel.dim() << "):\n";
  for (const auto& v : ann) ss << "  " << v.dump() << "\n";
  ss << "g_Lie basis: ";
  for (const auto& n : q.quotient.basis_names) ss << n << " ";
  ss << "\n" << verdict_lines(r.json["verdicts"]);
  r.human = ss.str();
  if (r.json["verdicts"]["quotient_is_lie"] != "PASS") r.exit_code = kVerdictFailure;
  return r;
}

Report homology_report(const Options& o, const Loaded& l, const ChainComplex& c, const std::string& label) {
  Report r;
  attach_input(r, l);
  const auto b = betti(c);
  json rows = json::array();
  std::vector<std::vector<std::string>> human_rows;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const int deg = c.offset + static_cast<int>(k);
    rows.push_back({{"degree", deg}, {"chain_dim", c.dim(deg)}, {"dim", b[k]}});
    human_rows.push_back({std::to_string(deg), std::to_string(c.dim(deg)), std::to_string(b[k])});
  }
  r.json["tables"] = {{label, rows}};
  r.json["verdicts"] = {{"d_squared_zero", "PASS"}};
  r.human = header(o, &l) + table({"degree", "dim C", label}, human_rows) + verdict_lines(r.json["verdicts"]);
  return r;
}

Report cmd_complex(const Options& o) {
  const Loaded l = load(o, true);
  const auto& g = l.g.algebra;
  if (o.command == "homology") return homology_report(o, l, loday_chain(g, l.coeffs, o.max_degree), "HL_n");
  if (o.command == "cohomology") return homology_report(o, l, loday_cochain(g, l.coeffs, o.max_degree), "HL^n");
  if (o.command == "ce-homology") return homology_report(o, l, ce_chain(g, l.coeffs, o.max_degree), "H_n");
  return homology_report(o, l, ce_cochain(g, l.coeffs, o.max_degree), "H^n");
}

Report cmd_compare(const Options& o) {
  if (o.max_degree < 2) throw ParseError("compare needs --max-degree >= 2");
  const Loaded l = load(o, true);
  const CEProjection p = ce_projection(l.g.algebra, l.coeffs, o.max_degree);
  const ComparisonReport& c = p.report;
  Report r;
  attach_input(r, l);
  json rows = json::array(), maps = json::array();
  std::vector<std::vector<std::string>> human_rows;
  for (std::size_t n = 0; n <= o.max_degree; ++n) {
    rows.push_back({{"degree", n},
                    {"HL_n", c.loday_homology[n]},
                    {"H_n", c.ce_homology[n]},
                    {"rank HL_n->H_n", c.homology_ranks[n]},
                    {"H^n", c.ce_cohomology[n]},
                    {"HL^n", c.loday_cohomology[n]},
                    {"rank H^n->HL^n", c.cohomology_ranks[n]}});
    maps.push_back({{"degree", n},
                    {"homology", matrix_json(c.homology_maps[n])},
                    {"cohomology", matrix_json(c.cohomology_maps[n])}});
    human_rows.push_back({std::to_string(n), std::to_string(c.loday_homology[n]), std::to_string(c.ce_homology[n]),
                          std::to_string(c.homology_ranks[n]), std::to_string(c.ce_cohomology[n]),
                          std::to_string(c.loday_cohomology[n]), std::to_string(c.cohomology_ranks[n])});
  }
  r.json["tables"] = {{"comparison", rows}, {"induced_maps", maps}};
  r.json["verdicts"] = {{"chain_map", "PASS"},
                        {"iso_degree0", pass(c.iso_degree0)},
                        {"iso_degree1", pass(c.iso_degree1)},
                        {"surjective_HL2_to_H2", pass(c.surjective_h2)},
                        {"injective_H2_to_HL2", pass(c.injective_h2)}};
  r.human = header(o, &l) +
            table({"degree", "HL_n", "H_n", "rank", "H^n", "HL^n", "rank"}, human_rows) +
            verdict_lines(r.json["verdicts"]);
  if (!(c.iso_degree0 && c.iso_degree1 && c.surjective_h2 && c.injective_h2)) r.exit_code = kVerdictFailure;
  return r;
}

Report cmd_fg(const Options& o) {
  if (!o.input.empty()) {
    const Loaded l = load(o, false);
    return homology_report(o, l, fg_subcomplex(l.g.algebra, o.max_degree), "H_n(F)");
  }
  if (o.max_weight == 0) throw ParseError("fg needs an algebra file or --generators with --max-weight");
  const std::size_t w = o.weight ? o.weight : o.max_weight;
  if (o.generators < 1 || o.generators > 3) throw ParseError("--generators must be 1, 2 or 3");
  if (w > o.max_weight) throw ParseError("--weight exceeds --max-weight");
  for (std::size_t n = 1; n <= w; ++n)
    if (block_size(o.generators, n, w) > kConjectureBlockBudget) throw BudgetExceeded("weight block exceeds the budget");
  const FreeLeibnizTruncation F(o.generators, o.max_weight);
  const std::size_t n_max = std::min(o.max_degree, w);
  const ChainComplex c = fg_subcomplex(F, n_max, w);
  Report r;
  r.json["input"] = {{"sha256", sha256_hex(command_echo(o, {"generators", "max-weight", "weight", "max-degree"}).dump())},
                     {"files", json::array()},
                     {"notices", json::array()}};
  const auto b = betti(c);
  json rows = json::array();
  std::vector<std::vector<std::string>> human_rows;
  for (std::size_t k = 0; k < b.size(); ++k) {
    rows.push_back({{"degree", k + 1}, {"chain_dim", c.dims[k]}, {"dim", b[k]}});
    human_rows.push_back({std::to_string(k + 1), std::to_string(c.dims[k]), std::to_string(b[k])});
  }
  r.json["tables"] = {{"H_n(F)", rows}, {"weight", w}};
  r.json["verdicts"] = {{"d_squared_zero", "PASS"}};
  r.human = header(o, nullptr) + "free Leibniz algebra on " + std::to_string(o.generators) + " generators, weight " +
            std::to_string(w) + "\n" + table({"degree", "dim F", "H_n(F)"}, human_rows) +
            verdict_lines(r.json["verdicts"]);
  return r;
}

Report cmd_conjecture(const Options& o) {
  if (o.max_weight == 0) throw ParseError("free-conjecture needs --max-weight >= 1");
  if (o.generators < 1 || o.generators > 3) throw ParseError("--generators must be 1, 2 or 3");
  const ConjectureReport c = conjecture_check(o.generators, o.max_weight, o.threads);
  Report r;
  r.json["input"] = {{"sha256", sha256_hex(command_echo(o, {"generators", "max-weight"}).dump())},
                     {"files", json::array()},
                     {"notices", json::array()}};
  json rows = json::array();
  std::vector<std::vector<std::string>> human_rows;
  for (const auto& w : c.rows) {
    std::string higher;
    for (std::size_t n = 1; n < w.homology.size(); ++n) higher += (n > 1 ? "," : "") + std::to_string(w.homology[n]);
    rows.push_back({{"weight", w.weight},
                    {"H_n", w.homology},
                    {"H_1", w.homology.empty() ? 0 : w.homology[0]},
                    {"witt", w.witt},
                    {"largest_block", w.largest_block},
                    {"vanishing", w.vanishing},
                    {"h1_matches_witt", w.h1_matches}});
    human_rows.push_back({std::to_string(w.weight), std::to_string(w.homology.empty() ? 0 : w.homology[0]),
                          std::to_string(w.witt), higher.empty() ? "-" : higher, std::to_string(w.largest_block)});
  }
  r.json["tables"] = {{"weights", rows}, {"generators", c.generators}, {"max_weight", c.max_weight}};
  r.json["verdicts"] = {{"conjecture", c.verdict}};
  r.human = header(o, nullptr) + "free Leibniz algebra on " + std::to_string(c.generators) + " generators\n" +
            table({"weight", "H_1", "witt", "H_2..H_w", "block"}, human_rows) + verdict_lines(r.json["verdicts"]);
  if (c.verdict != "PASS") r.exit_code = kVerdictFailure;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Leibniz algebra homology and cohomology", "leibhom"};
  app.set_version_flag("--version", std::string("leibhom ") + LEIBHOM_VERSION + " (algebra format " +
                                        std::to_string(kFormatVersion) + ", report format " +
                                        std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);
  Options o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());

  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "write the JSON report to a file (- for stdout)");
    sub->add_flag("--quiet", o.quiet, "suppress the human-readable table");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto with_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("input", o.input, "algebra JSON file");
    if (required) opt->required();
  };
  auto with_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "highest degree reported")->check(CLI::Range(0, 12));
  };
  auto with_coefficients = [&](CLI::App* sub) {
    sub->add_option("--coefficients", o.coefficients, "trivial | lie:<file> | rep:<file>");
  };
  auto with_free = [&](CLI::App* sub, bool required) {
    auto* gen = sub->add_option("--generators", o.generators, "free generators (1-3)");
    auto* w = sub->add_option("--max-weight", o.max_weight, "truncation weight");
    if (required) {
      gen->required();
      w->required();
    }
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands = {
      {"check", "validate an algebra (and optional coefficients)"},
      {"quotient", "kernel ideal and maximal Lie quotient"},
      {"homology", "Leibniz homology"},
      {"cohomology", "Leibniz cohomology"},
      {"ce-homology", "Chevalley-Eilenberg homology via U(M(g))"},
      {"ce-cohomology", "Chevalley-Eilenberg cohomology via U(M(g))"},
      {"compare", "compare Leibniz and CE (co)homology in low degrees"},
      {"fg", "homology of the F(g) subcomplex"},
      {"free-conjecture", "vanishing of H_n(F(g)), n >= 2, for free g"},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string name = s.name;
    if (name == "free-conjecture") {
      with_free(sub, true);
    } else if (name == "fg") {
      with_input(sub, false);
      with_degree(sub);
      with_free(sub, false);
      sub->add_option("--weight", o.weight, "weight block (default: max weight)");
    } else {
      with_input(sub, true);
      if (name != "quotient") with_coefficients(sub);
      if (name != "check" && name != "quotient") with_degree(sub);
    }
    sub->callback([&o, name] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (o.command == "check") r = cmd_check(o);
    else if (o.command == "quotient") r = cmd_quotient(o);
    else if (o.command == "compare") r = cmd_compare(o);
    else if (o.command == "fg") r = cmd_fg(o);
    else if (o.command == "free-conjecture") r = cmd_conjecture(o);
    else r = cmd_complex(o);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AxiomError& e) {
    err << "axiom error: " << e.what() << "\n";
    return kInputError;
  } catch (const IllDefinedAction& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ShapeMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  const std::vector<std::string> flag_names = {"max-degree", "coefficients", "generators", "max-weight", "weight"};
  std::vector<std::string> used;
  if (o.command == "free-conjecture") used = {"generators", "max-weight"};
  else if (o.command == "fg") used = o.input.empty() ? std::vector<std::string>{"generators", "max-weight", "weight", "max-degree"}
                                                     : std::vector<std::string>{"max-degree"};
  else if (o.command == "check") used = {"coefficients"};
  else if (o.command != "quotient") used = {"max-degree", "coefficients"};
  r.json["command"] = command_echo(o, used);
  r.json["format_version"] = kFormatVersion;
  r.json["timing"] = {
      {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
      {"threads", o.threads}};
  try {
    emit_report(r, o.json_path, o.quiet, out);
  } catch (const ParseError& e) {
    err << "output error: " << e.what() << "\n";
    return kInputError;
  }
  return r.exit_code;
}

}  // namespace leibhom::cli
