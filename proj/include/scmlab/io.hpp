#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scmlab/graph.hpp"
#include "scmlab/graph6.hpp"
#include "scmlab/invariants.hpp"
#include "scmlab/monomial.hpp"
#include "scmlab/report.hpp"
#include "scmlab/simplicial_complex.hpp"

namespace scmlab {

using nlohmann::json;

constexpr int kReportSchemaVersion = 1;

// ---------------------------------------------------------------- parsing

/// "x1", "x3^2", "x1*x3^2", "1".  1-based variable names.
inline Monomial parse_monomial(const std::string& text, int nvars) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw input_error("monomial: empty string");
  if (s == "1") return Monomial(e);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x') throw input_error("monomial: expected 'x' in '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw input_error("monomial: missing variable index in '" + text + "'");
    int var = std::stoi(s.substr(start, pos - start));
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw input_error("monomial: missing exponent in '" + text + "'");
      exp = std::stoi(s.substr(start, pos - start));
    }
    if (var < 1 || var > nvars) throw input_error("monomial: variable x" + std::to_string(var) + " out of range");
    e[static_cast<std::size_t>(var - 1)] += exp;
    if (pos < s.size()) {
      if (s[pos] != '*') throw input_error("monomial: expected '*' in '" + text + "'");
      ++pos;
      if (pos == s.size()) throw input_error("monomial: trailing '*' in '" + text + "'");
    }
  }
  return Monomial(e);
}

/// Ideal text: one generator per line ("x1*x3"); blank lines and lines
/// starting with '#' ignored.  The variable count is the largest index
/// mentioned (or `nvars` if larger).
inline MonomialIdeal parse_ideal_text(const std::string& text, int nvars = 0) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  int maxvar = nvars;
  while (std::getline(in, line)) {
    std::string t;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(t);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] == 'x') {
        std::size_t j = i + 1, start = j;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j > start) maxvar = std::max(maxvar, std::stoi(t.substr(start, j - start)));
      }
  }
  if (maxvar == 0 && !lines.empty()) maxvar = 1;
  std::vector<Monomial> gens;
  for (const std::string& l : lines) gens.push_back(parse_monomial(l, maxvar));
  return MonomialIdeal(maxvar, std::move(gens));
}

/// { "n": 4, "gens": [[1,0,1,0],[0,1,0,1]] }
inline MonomialIdeal parse_ideal_json(const json& j) {
  if (!j.contains("n") || !j.contains("gens")) throw input_error("ideal json: need keys n, gens");
  int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    std::vector<int> e = g.get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n) throw input_error("ideal json: exponent vector length != n");
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// { "n": 5, "facets": [[0,2],[0,3]] } — 0-based vertices.
inline SimplicialComplex parse_complex_json(const json& j) {
  if (!j.contains("n") || !j.contains("facets"))
    throw input_error("complex json: need keys n, facets");
  int n = j.at("n").get<int>();
  std::vector<VertexSet> facets;
  for (const auto& f : j.at("facets")) {
    VertexSet s = 0;
    for (int v : f.get<std::vector<int>>()) {
      if (v < 0 || v >= n) throw input_error("complex json: vertex out of range");
      s |= bit(v);
    }
    facets.push_back(s);
  }
  return SimplicialComplex::from_facets(n, facets);
}

/// Edge-list text, 1-based: "1 2" per line; optional first line "n <count>".
inline Graph parse_graph_edges(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') continue;
    if (first == "n") {
      if (!(ls >> n)) throw input_error("edge list line " + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    int a = 0, b = 0;
    try {
      a = std::stoi(first);
    } catch (...) {
      throw input_error("edge list line " + std::to_string(lineno) + ": bad vertex label");
    }
    if (!(ls >> b)) throw input_error("edge list line " + std::to_string(lineno) + ": expected two labels");
    if (a < 1 || b < 1) throw input_error("edge list line " + std::to_string(lineno) + ": labels are 1-based");
    edges.push_back({a - 1, b - 1});
    n = std::max({n, a, b});
  }
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

/// { "n": 5, "edges": [[1,2],[1,4]] } — 1-based.
inline Graph parse_graph_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges")) throw input_error("graph json: need keys n, edges");
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    std::vector<int> p = e.get<std::vector<int>>();
    if (p.size() != 2) throw input_error("graph json: edge must have two endpoints");
    if (p[0] < 1 || p[1] < 1) throw input_error("graph json: labels are 1-based");
    g.add_edge(p[0] - 1, p[1] - 1);
  }
  return g;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------- serializing

inline json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, v] : t.entries) entries.push_back({ij.first, ij.second, v});
  return json{{"n", t.nvars},
              {"field", t.field.str()},
              {"reg", t.regularity()},
              {"pd", t.proj_dim()},
              {"depth", t.depth()},
              {"entries", entries}};
}

inline json graph_facts_to_json(const GraphFacts& f) {
  json j{{"connected", f.connected},
         {"chordal", f.chordal},
         {"bipartite", f.bipartite},
         {"c5_free", f.c5_free},
         {"vertex_decomposable", f.vertex_decomposable},
         {"well_covered", f.well_covered},
         {"very_well_covered", f.very_well_covered},
         {"matching_number", f.matching},
         {"induced_matching_number", f.induced_matching}};
  if (f.cameron_walker.has_value()) j["cameron_walker"] = *f.cameron_walker;
  json shed = json::array(), codom = json::array(), cycles = json::array();
  for (int v : f.shedding_vertices) shed.push_back(v + 1);
  for (int v : f.codominated_vertices) codom.push_back(v + 1);
  for (const FiveCycle& c : f.basic_cycles) {
    json cyc = json::array();
    for (int v : c) cyc.push_back(v + 1);
    cycles.push_back(cyc);
  }
  j["shedding_vertices"] = shed;
  j["codominated_vertices"] = codom;
  j["basic_five_cycles"] = cycles;
  return j;
}

inline GraphFacts graph_facts_from_json(const json& j) {
  GraphFacts f;
  f.connected = j.at("connected").get<bool>();
  f.chordal = j.at("chordal").get<bool>();
  f.bipartite = j.at("bipartite").get<bool>();
  f.c5_free = j.at("c5_free").get<bool>();
  f.vertex_decomposable = j.at("vertex_decomposable").get<bool>();
  f.well_covered = j.at("well_covered").get<bool>();
  f.very_well_covered = j.at("very_well_covered").get<bool>();
  f.matching = j.at("matching_number").get<int>();
  f.induced_matching = j.at("induced_matching_number").get<int>();
  if (j.contains("cameron_walker")) f.cameron_walker = j.at("cameron_walker").get<bool>();
  for (int v : j.at("shedding_vertices")) f.shedding_vertices.push_back(v - 1);
  for (int v : j.at("codominated_vertices")) f.codominated_vertices.push_back(v - 1);
  for (const auto& cyc : j.at("basic_five_cycles")) {
    FiveCycle c{};
    std::vector<int> vs = cyc.get<std::vector<int>>();
    if (vs.size() != 5) throw input_error("report json: malformed 5-cycle");
    for (int k = 0; k < 5; ++k) c[static_cast<std::size_t>(k)] = vs[static_cast<std::size_t>(k)] - 1;
    f.basic_cycles.push_back(c);
  }
  return f;
}

inline json report_to_json(const InvariantReport& r) {
  json primes = json::array();
  for (VertexSet p : r.ass_primes) {
    json vars = json::array();
    for (int v : vertices_of(p)) vars.push_back(v + 1);
    primes.push_back(vars);
  }
  json j{{"schema_version", kReportSchemaVersion},
         {"source", r.source},
         {"field", r.field.str()},
         {"n", r.nvars},
         {"generators", r.generators},
         {"dim", r.dim},
         {"depth", r.depth},
         {"pd", r.pd},
         {"reg", r.reg},
         {"is_cm", r.cm},
         {"is_scm", r.scm},
         {"is_unmixed", r.unmixed},
         {"associated_primes", primes}};
  if (r.graph.has_value()) j["graph"] = graph_facts_to_json(*r.graph);
  return j;
}

inline InvariantReport report_from_json(const json& j) {
  InvariantReport r;
  r.source = j.at("source").get<std::string>();
  r.field = parse_field(j.at("field").get<std::string>());
  r.nvars = j.at("n").get<int>();
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.dim = j.at("dim").get<int>();
  r.depth = j.at("depth").get<int>();
  r.pd = j.at("pd").get<int>();
  r.reg = j.at("reg").get<int>();
  r.cm = j.at("is_cm").get<bool>();
  r.scm = j.at("is_scm").get<bool>();
  r.unmixed = j.at("is_unmixed").get<bool>();
  for (const auto& prime : j.at("associated_primes")) {
    VertexSet p = 0;
    for (int v : prime.get<std::vector<int>>()) p |= bit(v - 1);
    r.ass_primes.push_back(p);
  }
  if (j.contains("graph")) r.graph = graph_facts_from_json(j.at("graph"));
  return r;
}

inline json verification_to_json(const VerificationReport& r) {
  json fails = json::array(), skips = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"object", f.object}, {"expected", f.expected}, {"got", f.got}});
  for (const auto& s : r.skipped)
    skips.push_back({{"object", s.object}, {"reason", s.reason}});
  return json{{"schema_version", kReportSchemaVersion},
              {"theorem", r.theorem},
              {"field", r.field.str()},
              {"corpus", r.corpus},
              {"seed", r.seed},
              {"instances_checked", r.instances_checked},
              {"failures", fails},
              {"skipped", skips},
              {"notes", r.notes},
              {"wall_time_seconds", r.wall_time_seconds},
              {"passed", r.passed()}};
}

inline std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "source: " << r.source << "\n";
  out << "field: " << r.field.str() << "\n";
  out << "R = K[x1..x" << r.nvars << "]\n";
  out << "I = (";
  for (std::size_t i = 0; i < r.generators.size(); ++i)
    out << (i ? ", " : "") << r.generators[i];
  out << ")\n";
  out << "dim(R/I) = " << r.dim << "  depth(R/I) = " << r.depth << "  pd(R/I) = " << r.pd
      << "  reg(R/I) = " << r.reg << "\n";
  out << "CM: " << (r.cm ? "yes" : "no") << "  SCM: " << (r.scm ? "yes" : "no")
      << "  unmixed: " << (r.unmixed ? "yes" : "no") << "\n";
  if (!r.ass_primes.empty()) {
    out << "Ass(I):";
    for (VertexSet p : r.ass_primes) {
      out << " (";
      auto vs = vertices_of(p);
      for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? "," : "") << "x" << vs[i] + 1;
      out << ")";
    }
    out << "\n";
  }
  if (r.graph.has_value()) {
    const GraphFacts& f = *r.graph;
    out << "graph: connected=" << f.connected << " chordal=" << f.chordal
        << " bipartite=" << f.bipartite << " c5_free=" << f.c5_free
        << " vertex_decomposable=" << f.vertex_decomposable;
    if (f.cameron_walker.has_value()) out << " cameron_walker=" << *f.cameron_walker;
    out << " well_covered=" << f.well_covered << " very_well_covered=" << f.very_well_covered
        << "\n";
    out << "matching = " << f.matching << "  a(G) = " << f.induced_matching << "\n";
    out << "shedding vertices:";
    for (int v : f.shedding_vertices) out << " x" << v + 1;
    out << "\ncodominated vertices:";
    for (int v : f.codominated_vertices) out << " x" << v + 1;
    out << "\nbasic 5-cycles:";
    for (const FiveCycle& c : f.basic_cycles) {
      out << " (";
      for (int k = 0; k < 5; ++k) out << (k ? "," : "") << "x" << c[static_cast<std::size_t>(k)] + 1;
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

inline std::string verification_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem " << r.theorem << " over " << r.field.str() << " [" << r.corpus << "]\n";
  out << "  checked: " << r.instances_checked << "  skipped: " << r.skipped.size()
      << "  failures: " << r.failures.size() << "  (" << r.wall_time_seconds << "s, seed "
      << r.seed << ")\n";
  for (const auto& f : r.failures)
    out << "  FAIL " << f.object << "\n    expected: " << f.expected
        << "\n    got:      " << f.got << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace scmlab
