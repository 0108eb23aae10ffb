// scmlab: command-line front end.
//   analyze    full invariant report for one graph or monomial ideal
//   verify     run one theorem arm over a corpus
//   betti      graded Betti table dump
//   examples   built-in fixture regression block
//   enumerate  stream small graphs in graph6 form
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scmlab/scmlab.hpp"

namespace {

using namespace scmlab;

std::string load_input(const std::string& arg) {
  std::ifstream f(arg, std::ios::binary);
  if (f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;  // inline spec
}

std::string trimmed(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string semicolons_to_lines(std::string s) {
  for (char& c : s)
    if (c == ';') c = '\n';
  return s;
}

struct ParsedInput {
  bool is_graph = false;
  Graph graph{0};
  MonomialIdeal ideal = MonomialIdeal::zero(0);
};

ParsedInput parse_input(const std::string& raw, const std::string& format) {
  ParsedInput out;
  std::string content = load_input(raw);
  if (format == "graph6") {
    out.is_graph = true;
    out.graph = from_graph6(trimmed(content));
  } else if (format == "edges") {
    out.is_graph = true;
    out.graph = parse_graph_edges(semicolons_to_lines(content));
  } else if (format == "ideal") {
    out.is_graph = false;
    out.ideal = parse_ideal_text(semicolons_to_lines(content));
  } else if (format == "json") {
    json j = json::parse(content);
    if (j.contains("edges")) {
      out.is_graph = true;
      out.graph = parse_graph_json(j);
    } else if (j.contains("gens")) {
      out.is_graph = false;
      out.ideal = parse_ideal_json(j);
    } else if (j.contains("facets")) {
      out.is_graph = false;
      out.ideal = stanley_reisner_ideal(parse_complex_json(j));
    } else {
      throw input_error("json input: expected one of the keys edges/gens/facets");
    }
  } else {
    throw input_error("unknown format: " + format);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scm-lab: exact sequentially-Cohen-Macaulay toolkit for monomial ideals and graphs"};
  app.require_subcommand(1);

  std::string input, format = "edges", field_str = "q", output = "text";
  std::string theorem_str, graph6_path, oracle = "hochster";
  int max_n = 6, workers = default_workers(), enum_n = 5;
  int random_count = 200, pair_target = 500, sample_max_n = 5;
  std::uint64_t seed = kDefaultSeed;
  bool connected = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for one input");
  analyze->add_option("input", input, "path or inline spec")->required();
  analyze->add_option("--format", format, "graph6|edges|json|ideal")->capture_default_str();
  analyze->add_option("--field", field_str, "q | 2 | p:<prime>")->capture_default_str();
  analyze->add_option("--output", output, "text|json")->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify one theorem over a corpus");
  verify_cmd->add_option("--theorem", theorem_str, "P0 P1 L0 T1 COR_T1 L1 C1 P2 L2 L3 L4 T2 "
                                                   "C2i..C2v EX1 EX2 EX3 EX_C5 EXAMPLES")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "internal enumeration bound")->capture_default_str();
  verify_cmd->add_flag("--connected", connected, "restrict to connected graphs");
  verify_cmd->add_option("--graph6", graph6_path, "take the corpus from a graph6 file");
  verify_cmd->add_option("--field", field_str, "q | 2 | p:<prime>")->capture_default_str();
  verify_cmd->add_option("--workers", workers, "worker threads")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "sampling seed (env SCMLAB_SEED overrides)")
      ->capture_default_str();
  verify_cmd->add_option("--random-count", random_count, "sampled random ideals / pairs")
      ->capture_default_str();
  verify_cmd->add_option("--pair-target", pair_target, "checked (I,u) pairs for P0")
      ->capture_default_str();
  verify_cmd->add_option("--sample-max-n", sample_max_n, "variable bound for sampled ideals")
      ->capture_default_str();
  verify_cmd->add_option("--output", output, "text|json")->capture_default_str();

  CLI::App* betti_cmd = app.add_subcommand("betti", "graded Betti table of R/I");
  betti_cmd->add_option("input", input, "path or inline spec")->required();
  betti_cmd->add_option("--format", format, "graph6|edges|json|ideal")->capture_default_str();
  betti_cmd->add_option("--field", field_str, "q | 2 | p:<prime>")->capture_default_str();
  betti_cmd->add_option("--oracle", oracle, "hochster|koszul")->capture_default_str();
  betti_cmd->add_option("--output", output, "text|json")->capture_default_str();

  CLI::App* examples_cmd = app.add_subcommand("examples", "built-in fixture regression block");
  examples_cmd->add_option("--field", field_str, "q | 2 | p:<prime>")->capture_default_str();
  examples_cmd->add_option("--output", output, "text|json")->capture_default_str();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "stream graphs in graph6 form");
  enum_cmd->add_option("--n", enum_n, "vertex count")->capture_default_str();
  enum_cmd->add_flag("--connected", connected, "connected classes only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    FieldSpec field = parse_field(field_str);

    if (analyze->parsed()) {
      ParsedInput in = parse_input(input, format);
      InvariantReport rep = in.is_graph ? analyze_graph(in.graph, field, input)
                                        : analyze_ideal(in.ideal, field, input);
      if (output == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
      else
        std::cout << report_to_text(rep);
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (const char* env = std::getenv("SCMLAB_SEED")) seed = std::stoull(env);
      CorpusSpec corpus;
      corpus.max_n = max_n;
      corpus.connected_only = connected;
      corpus.seed = seed;
      corpus.random_ideal_count = random_count;
      corpus.random_pair_target = pair_target;
      corpus.sample_max_n = sample_max_n;
      if (!graph6_path.empty()) {
        corpus.source = CorpusSpec::Source::GRAPH6_FILE;
        corpus.graph6_path = graph6_path;
      }
      VerificationReport rep = verify(parse_theorem(theorem_str), corpus, field, workers);
      if (output == "json")
        std::cout << verification_to_json(rep).dump(2) << "\n";
      else
        std::cout << verification_to_text(rep);
      return rep.passed() ? 0 : 1;
    }

    if (betti_cmd->parsed()) {
      ParsedInput in = parse_input(input, format);
      MonomialIdeal I = in.is_graph ? edge_ideal(in.graph) : in.ideal;
      BettiTable t = oracle == "koszul"
                         ? koszul::betti_koszul_oracle(I, field, std::max(6, I.nvars()))
                         : betti_table(I, field);
      if (output == "json") {
        std::cout << betti_to_json(t).dump(2) << "\n";
      } else {
        std::cout << "R/I over " << field.str() << ", I = " << I.str() << "\n"
                  << t.triangle() << "reg = " << t.regularity() << "  pd = " << t.proj_dim()
                  << "  depth = " << t.depth() << "\n";
      }
      return 0;
    }

    if (examples_cmd->parsed()) {
      VerificationReport rep = run_worked_examples(parse_field(field_str));
      if (output == "json")
        std::cout << verification_to_json(rep).dump(2) << "\n";
      else
        std::cout << verification_to_text(rep);
      return rep.passed() ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
      for (const Graph& g : enumerate_graphs(enum_n, connected))
        std::cout << to_graph6(g) << "\n";
      return 0;
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const limit_error& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
