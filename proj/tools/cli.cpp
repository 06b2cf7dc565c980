#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "korbit/closure.hpp"
#include "korbit/oracle.hpp"
#include "korbit/orbit_graph.hpp"
#include "korbit/weyl.hpp"

namespace korbit_cli {

using nlohmann::ordered_json;
using namespace korbit;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

// commands differ in how much exhaustive work they do per node
void check_size(const RealFormSpec& spec, int max_n, const char* what) {
  require(spec.valid(), std::string("--pq needs two positive integers for ") + what);
  std::ostringstream os;
  os << what << " is limited to p+q <= " << max_n;
  require(spec.n() <= max_n, os.str());
}

void check_format(const RunConfig& cfg, bool dot_allowed) {
  if (cfg.format == "text" || cfg.format == "json") return;
  require(cfg.format == "dot", "unknown format " + cfg.format);
  require(dot_allowed, "dot output is only available for weak-order and closure-order");
}

Clan checked_clan(const std::string& text, const RealFormSpec& spec) {
  const auto c = Clan::parse(text);
  require(c.has_value(), "cannot parse clan \"" + text + "\"");
  require(c->fits(spec), "clan \"" + text + "\" does not fit the signature");
  return *c;
}

Word checked_word(const std::string& text, const RealFormSpec& spec) {
  const auto w = parse_word(text);
  require(w.has_value(), "cannot parse word \"" + text + "\" (expected e.g. \"1,2,1\" or \"e\")");
  for (SimpleIndex i : *w)
    require(i >= 1 && i <= spec.n() - 1, "word letter out of range for this signature");
  return *w;
}

ordered_json signature_json(const RealFormSpec& spec) {
  return ordered_json{{"p", spec.p}, {"q", spec.q}};
}

ordered_json record_json(const OrbitRecord& rec) {
  return ordered_json{{"clan", rec.clan.to_string()},
                      {"dim", rec.dim},
                      {"codim", rec.codim},
                      {"open", rec.is_open},
                      {"closed", rec.is_closed}};
}

std::string status_word(const OrbitRecord& rec) {
  if (rec.is_open) return "open";
  if (rec.is_closed) return "closed";
  return "-";
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json word_json(const Word& word) {
  ordered_json arr = ordered_json::array();
  for (SimpleIndex i : word) arr.push_back(i);
  return arr;
}

// raising edges as (source, index, target), in node-major order
std::vector<std::tuple<int, SimpleIndex, int>> raising_edges(const WeakOrderGraph& graph) {
  std::vector<std::tuple<int, SimpleIndex, int>> edges;
  for (int k = 0; k < graph.size(); ++k)
    for (SimpleIndex i = 1; i <= graph.spec().n() - 1; ++i)
      if (graph.raised(k, i)) edges.emplace_back(k, i, graph.target(k, i));
  return edges;
}

std::string dot_node_lines(const WeakOrderGraph& graph) {
  std::ostringstream os;
  for (int k = 0; k < graph.size(); ++k) {
    const OrbitRecord& rec = graph.node(k);
    os << "  \"" << rec.clan.to_string() << "\" [label=\"" << rec.clan.to_string() << "\\ndim "
       << rec.dim << "\"];\n";
  }
  return os.str();
}

struct CheckRow {
  std::string name;
  long instances = 0;
  long failures = 0;
  bool pass() const { return failures == 0; }
};

// the full property suite behind `theorems`
std::vector<CheckRow> run_property_suite(const WeakOrderGraph& graph) {
  const RealFormSpec& spec = graph.spec();
  const int n = spec.n();
  const ClosurePoset poset = closure_order(graph);
  const auto layers = elements_by_length(n);
  std::vector<CheckRow> rows;

  {
    CheckRow r{"monoid-dichotomy"};
    for (int k = 0; k < graph.size(); ++k)
      for (SimpleIndex i = 1; i <= n - 1; ++i) {
        ++r.instances;
        const int t = graph.target(k, i);
        if (graph.raised(k, i)) {
          if (t == k || graph.node(t).dim != graph.node(k).dim + 1) ++r.failures;
        } else if (t != k) {
          ++r.failures;
        }
      }
    rows.push_back(r);
  }
  {
    CheckRow r{"ascent-existence"};
    for (int k = 0; k < graph.size(); ++k) {
      ++r.instances;
      if (ascent(graph, k).has_value() != !graph.node(k).is_open) ++r.failures;
    }
    rows.push_back(r);
  }
  {
    CheckRow r{"word-independence"};
    const int max_len = std::min<int>(4, static_cast<int>(layers.size()) - 1);
    for (int l = 0; l <= max_len; ++l)
      for (const WeylElement& w : layers[static_cast<size_t>(l)]) {
        const auto words = all_reduced_words(w);
        for (int k = 0; k < graph.size(); ++k) {
          ++r.instances;
          const int first = fold_word(graph, k, words.front());
          for (const Word& word : words)
            if (fold_word(graph, k, word) != first) {
              ++r.failures;
              break;
            }
        }
      }
    rows.push_back(r);
  }
  {
    CheckRow r{"minimal-expression"};
    for (const auto& layer : layers)
      for (const WeylElement& w : layer)
        for (int k = 0; k < graph.size(); ++k) {
          ++r.instances;
          const Word kept = minimal_expression(graph, k, w);
          const int folded = demazure_on_orbit(graph, k, w);
          const int diff = graph.node(folded).dim - graph.node(k).dim;
          const bool ok = bruhat_leq(from_word(n, kept), w) &&
                          static_cast<int>(kept.size()) == diff &&
                          fold_word(graph, k, kept) == folded && diff <= length(w) &&
                          ((diff == length(w)) == (static_cast<int>(kept.size()) == length(w)));
          if (!ok) ++r.failures;
        }
    rows.push_back(r);
  }
  {
    CheckRow r{"codim-one-containment"};
    for (int k = 0; k < graph.size(); ++k) {
      const int codim = graph.node(k).codim;
      for (int l = 0; l < codim && l < static_cast<int>(layers.size()); ++l)
        for (const WeylElement& w : layers[static_cast<size_t>(l)]) {
          ++r.instances;
          if (!covering_codim1_orbit(graph, poset, k, w).has_value()) ++r.failures;
        }
    }
    rows.push_back(r);
  }
  {
    CheckRow r{"complement-cover"};
    const CoverReport rep = complement_cover_check(graph, poset);
    r.instances = static_cast<long>(rep.covers.size());  // every non-open orbit
    for (const auto& [orbit, cover] : rep.covers) {
      (void)orbit;
      if (cover < 0) ++r.failures;
    }
    rows.push_back(r);
  }
  {
    CheckRow r{"closure-choice-independence"};
    for (int y = 0; y < graph.size(); ++y) {
      if (graph.node(y).is_closed) continue;
      const std::vector<int> baseline = poset.below(y);
      for (const auto& [s, x] : graph.raising_edges_into(y)) {
        ++r.instances;
        if (closure_downset_via(graph, poset, s, x) != baseline) ++r.failures;
      }
    }
    rows.push_back(r);
  }
  {
    CheckRow r{"closure-weak-compat"};
    for (const auto& [src, i, tgt] : raising_edges(graph)) {
      (void)i;
      ++r.instances;
      if (!poset.leq(src, tgt)) ++r.failures;
    }
    rows.push_back(r);
  }
  {
    CheckRow r{"closure-dim-grading"};
    for (int y = 0; y < graph.size(); ++y)
      for (int x : poset.below(y)) {
        if (x == y) continue;
        ++r.instances;
        if (graph.node(x).dim >= graph.node(y).dim) ++r.failures;
      }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

CommandResult cmd_orbits(const RunConfig& cfg) {
  check_size(cfg.spec, 8, "orbits");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  if (cfg.format == "json") {
    ordered_json j{{"command", "orbits"}, {"signature", signature_json(cfg.spec)}};
    ordered_json arr = ordered_json::array();
    for (const OrbitRecord& rec : graph.nodes()) arr.push_back(record_json(rec));
    j["orbits"] = std::move(arr);
    return {0, dump_json(j)};
  }
  size_t width = 4;
  for (const OrbitRecord& rec : graph.nodes())
    width = std::max(width, rec.clan.to_string().size());
  std::ostringstream os;
  os << "# orbits p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  os << std::left << std::setw(static_cast<int>(width) + 2) << "clan" << std::right
     << std::setw(4) << "dim" << std::setw(7) << "codim" << "  status\n";
  for (const OrbitRecord& rec : graph.nodes())
    os << std::left << std::setw(static_cast<int>(width) + 2) << rec.clan.to_string()
       << std::right << std::setw(4) << rec.dim << std::setw(7) << rec.codim << "  "
       << status_word(rec) << "\n";
  return {0, os.str()};
}

CommandResult cmd_weak_order(const RunConfig& cfg) {
  check_size(cfg.spec, 8, "weak-order");
  check_format(cfg, true);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const auto edges = raising_edges(graph);
  if (cfg.format == "json") {
    ordered_json j{{"command", "weak-order"}, {"signature", signature_json(cfg.spec)}};
    ordered_json nodes = ordered_json::array();
    for (const OrbitRecord& rec : graph.nodes()) nodes.push_back(record_json(rec));
    ordered_json earr = ordered_json::array();
    for (const auto& [src, i, tgt] : edges)
      earr.push_back(ordered_json{{"source", graph.node(src).clan.to_string()},
                                  {"index", i},
                                  {"target", graph.node(tgt).clan.to_string()}});
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(earr);
    return {0, dump_json(j)};
  }
  if (cfg.format == "dot") {
    std::ostringstream os;
    os << "digraph weak_order {\n  rankdir=BT;\n  node [shape=box];\n";
    os << dot_node_lines(graph);
    for (const auto& [src, i, tgt] : edges)
      os << "  \"" << graph.node(src).clan.to_string() << "\" -> \""
         << graph.node(tgt).clan.to_string() << "\" [label=\"" << i << "\"];\n";
    os << "}\n";
    return {0, os.str()};
  }
  std::ostringstream os;
  os << "# weak-order p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  os << "nodes: " << graph.size() << "\n";
  for (const OrbitRecord& rec : graph.nodes())
    os << rec.clan.to_string() << "  dim " << rec.dim << "\n";
  os << "edges: " << edges.size() << "\n";
  for (const auto& [src, i, tgt] : edges)
    os << graph.node(src).clan.to_string() << " -" << i << "-> "
       << graph.node(tgt).clan.to_string() << "\n";
  return {0, os.str()};
}

CommandResult cmd_closure_order(const RunConfig& cfg) {
  check_size(cfg.spec, 6, "closure-order");
  check_format(cfg, true);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const ClosurePoset poset = closure_order(graph);
  const auto covers = poset.hasse();
  if (cfg.format == "json") {
    ordered_json j{{"command", "closure-order"}, {"signature", signature_json(cfg.spec)}};
    ordered_json nodes = ordered_json::array();
    for (const OrbitRecord& rec : graph.nodes()) nodes.push_back(record_json(rec));
    ordered_json carr = ordered_json::array();
    for (const auto& [lo, hi] : covers)
      carr.push_back(ordered_json{{"lower", graph.node(lo).clan.to_string()},
                                  {"upper", graph.node(hi).clan.to_string()}});
    j["nodes"] = std::move(nodes);
    j["covers"] = std::move(carr);
    return {0, dump_json(j)};
  }
  if (cfg.format == "dot") {
    std::ostringstream os;
    os << "digraph closure_order {\n  rankdir=BT;\n  node [shape=box];\n";
    os << dot_node_lines(graph);
    for (const auto& [lo, hi] : covers)
      os << "  \"" << graph.node(lo).clan.to_string() << "\" -> \""
         << graph.node(hi).clan.to_string() << "\";\n";
    os << "}\n";
    return {0, os.str()};
  }
  std::ostringstream os;
  os << "# closure-order p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  os << "nodes: " << graph.size() << "\n";
  for (const OrbitRecord& rec : graph.nodes())
    os << rec.clan.to_string() << "  dim " << rec.dim << "\n";
  os << "covers: " << covers.size() << "\n";
  for (const auto& [lo, hi] : covers)
    os << graph.node(lo).clan.to_string() << " < " << graph.node(hi).clan.to_string() << "\n";
  return {0, os.str()};
}

CommandResult cmd_jset(const RunConfig& cfg, const std::string& clan_text) {
  check_size(cfg.spec, 8, "jset");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const Clan c = checked_clan(clan_text, cfg.spec);
  const int k = graph.index_of(c);
  const JSet js = j_set(graph, k);
  if (cfg.format == "json") {
    ordered_json j{{"command", "jset"},
                   {"signature", signature_json(cfg.spec)},
                   {"clan", c.to_string()},
                   {"codim", graph.node(k).codim}};
    ordered_json arr = ordered_json::array();
    for (int m : js.members) arr.push_back(graph.node(m).clan.to_string());
    j["members"] = std::move(arr);
    return {0, dump_json(j)};
  }
  std::ostringstream os;
  os << "# jset " << c.to_string() << " p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  os << "codim: " << graph.node(k).codim << "\n";
  os << "members: " << js.members.size() << "\n";
  for (int m : js.members) os << graph.node(m).clan.to_string() << "\n";
  return {0, os.str()};
}

CommandResult cmd_minexpr(const RunConfig& cfg, const std::string& clan_text,
                          const std::string& word_text) {
  check_size(cfg.spec, 8, "minexpr");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const Clan c = checked_clan(clan_text, cfg.spec);
  const Word word = checked_word(word_text, cfg.spec);
  const int k = graph.index_of(c);
  const WeylElement w = from_word(cfg.spec.n(), word);
  const Word kept = minimal_expression(graph, k, w);
  const int folded = demazure_on_orbit(graph, k, w);
  if (cfg.format == "json") {
    ordered_json j{{"command", "minexpr"},
                   {"signature", signature_json(cfg.spec)},
                   {"clan", c.to_string()},
                   {"word", word_json(word)},
                   {"minimal_word", word_json(kept)},
                   {"result", graph.node(folded).clan.to_string()},
                   {"start_dim", graph.node(k).dim},
                   {"result_dim", graph.node(folded).dim}};
    return {0, dump_json(j)};
  }
  std::ostringstream os;
  os << "# minexpr " << c.to_string() << " " << word_to_string(word) << " p=" << cfg.spec.p
     << " q=" << cfg.spec.q << "\n";
  os << "word: " << word_to_string(word) << "\n";
  os << "minimal_word: " << word_to_string(kept) << "\n";
  os << "result: " << graph.node(folded).clan.to_string() << "\n";
  os << "start_dim: " << graph.node(k).dim << "\n";
  os << "result_dim: " << graph.node(folded).dim << "\n";
  return {0, os.str()};
}

CommandResult cmd_demazure(const RunConfig& cfg, const std::string& clan_text,
                           const std::string& word_text) {
  check_size(cfg.spec, 8, "demazure");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const Clan c = checked_clan(clan_text, cfg.spec);
  const Word word = checked_word(word_text, cfg.spec);
  const int k = graph.index_of(c);
  const int folded = fold_word(graph, k, word);
  if (cfg.format == "json") {
    ordered_json j{{"command", "demazure"},
                   {"signature", signature_json(cfg.spec)},
                   {"clan", c.to_string()},
                   {"word", word_json(word)},
                   {"result", graph.node(folded).clan.to_string()},
                   {"result_dim", graph.node(folded).dim},
                   {"result_codim", graph.node(folded).codim}};
    return {0, dump_json(j)};
  }
  std::ostringstream os;
  os << "# demazure " << c.to_string() << " " << word_to_string(word) << " p=" << cfg.spec.p
     << " q=" << cfg.spec.q << "\n";
  os << "result: " << graph.node(folded).clan.to_string() << "\n";
  os << "result_dim: " << graph.node(folded).dim << "\n";
  os << "result_codim: " << graph.node(folded).codim << "\n";
  return {0, os.str()};
}

CommandResult cmd_theorems(const RunConfig& cfg) {
  check_size(cfg.spec, 5, "theorems");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const auto rows = run_property_suite(graph);
  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass(); });
  if (cfg.format == "json") {
    ordered_json j{{"command", "theorems"}, {"signature", signature_json(cfg.spec)}};
    ordered_json arr = ordered_json::array();
    for (const CheckRow& r : rows)
      arr.push_back(ordered_json{{"name", r.name},
                                 {"instances", r.instances},
                                 {"failures", r.failures},
                                 {"pass", r.pass()}});
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass;
    return {all_pass ? 0 : 2, dump_json(j)};
  }
  std::ostringstream os;
  os << "# theorems p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  for (const CheckRow& r : rows)
    os << std::left << std::setw(30) << r.name << std::right << " instances " << std::setw(7)
       << r.instances << "  failures " << std::setw(3) << r.failures << "  "
       << (r.pass() ? "pass" : "FAIL") << "\n";
  os << (all_pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
  return {all_pass ? 0 : 2, os.str()};
}

CommandResult cmd_counterexample(const RunConfig& cfg) {
  check_size(cfg.spec, 5, "counterexample");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  const auto witnesses = find_counterexamples(graph);
  if (cfg.format == "json") {
    ordered_json j{{"command", "counterexample"}, {"signature", signature_json(cfg.spec)}};
    ordered_json arr = ordered_json::array();
    for (const CounterexampleWitness& cw : witnesses)
      arr.push_back(ordered_json{{"clan", graph.node(cw.orbit).clan.to_string()},
                                 {"word", word_json(cw.word)},
                                 {"result", graph.node(cw.result).clan.to_string()},
                                 {"result_codim", cw.result_codim}});
    j["witnesses"] = std::move(arr);
    j["count"] = witnesses.size();
    const bool fail = cfg.spec.p == 2 && cfg.spec.q == 1 && witnesses.empty();
    return {fail ? 2 : 0, dump_json(j)};
  }
  std::ostringstream os;
  os << "# counterexample p=" << cfg.spec.p << " q=" << cfg.spec.q << "\n";
  for (const CounterexampleWitness& cw : witnesses)
    os << "witness: clan=" << graph.node(cw.orbit).clan.to_string()
       << " word=" << word_to_string(cw.word)
       << " result=" << graph.node(cw.result).clan.to_string()
       << " result_codim=" << cw.result_codim << "\n";
  os << "count: " << witnesses.size() << "\n";
  const bool fail = cfg.spec.p == 2 && cfg.spec.q == 1 && witnesses.empty();
  return {fail ? 2 : 0, os.str()};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  check_size(cfg.spec, 4, "verify");
  check_format(cfg, false);
  const WeakOrderGraph graph = WeakOrderGraph::build(cfg.spec);
  OraclePartition part;
  try {
    part = OraclePartition::build(cfg.spec, cfg.field);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const MatchReport match = match_with_clans(graph, part);
  std::string reps = "skipped";
  bool reps_ok = true;
  bool reps_apply = cfg.field != 2;
  if (match.ok && reps_apply) {
    reps_ok = representatives_consistent(graph, part, match);
    reps = reps_ok ? "consistent" : "inconsistent";
  }
  const bool ok = match.ok && reps_ok;
  if (cfg.format == "json") {
    ordered_json j{{"command", "verify"},
                   {"signature", signature_json(cfg.spec)},
                   {"field", cfg.field},
                   {"flag_count", part.flags().size()},
                   {"oracle_orbits", part.orbits().size()},
                   {"clans", graph.size()},
                   {"matched", match.ok},
                   {"representatives", reps},
                   {"mismatch", match.mismatch}};
    return {ok ? 0 : 2, dump_json(j)};
  }
  std::ostringstream os;
  os << "# verify p=" << cfg.spec.p << " q=" << cfg.spec.q << " field=" << cfg.field << "\n";
  os << "flags: " << part.flags().size() << "\n";
  os << "oracle orbits: " << part.orbits().size() << "\n";
  os << "clans: " << graph.size() << "\n";
  if (match.ok)
    os << "matched: " << graph.size() << " clans to " << part.orbits().size()
       << " oracle orbits\n";
  else
    os << "matched: NO (" << match.mismatch << ")\n";
  os << "representatives: " << reps << "\n";
  return {ok ? 0 : 2, os.str()};
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"orbit calculus on flag varieties: clan enumeration, monoid action,\n"
               "closure order, property suites, and a finite-field cross-check"};
  app.require_subcommand(1);

  std::string pq_text;
  std::string format = "text";
  int field = 3;
  std::string out_path;
  app.add_option("--pq", pq_text, "signature as P,Q (e.g. 2,1)")->required();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--field", field, "finite field size for verify")
      ->check(CLI::IsMember({2, 3, 5}));
  app.add_option("--out", out_path, "write output to this path instead of stdout");

  std::string clan_text;
  std::string word_text;
  auto* sub_orbits = app.add_subcommand("orbits", "list all orbits with dimensions");
  auto* sub_weak = app.add_subcommand("weak-order", "the labeled monoid action graph");
  auto* sub_closure = app.add_subcommand("closure-order", "closure containment, Hasse diagram");
  auto* sub_jset = app.add_subcommand("jset", "reachable codimension-one closures of a clan");
  sub_jset->add_option("clan", clan_text, "clan, e.g. ++- or 1+1")->required();
  auto* sub_minexpr = app.add_subcommand("minexpr", "minimal raising subword of a word");
  sub_minexpr->add_option("clan", clan_text, "clan, e.g. ++- or 1+1")->required();
  sub_minexpr->add_option("word", word_text, "simple indices, e.g. 1,2,1")->required();
  auto* sub_demazure = app.add_subcommand("demazure", "fold a word against a clan");
  sub_demazure->add_option("clan", clan_text, "clan, e.g. ++- or 1+1")->required();
  sub_demazure->add_option("word", word_text, "simple indices, e.g. 1,2,1")->required();
  auto* sub_theorems = app.add_subcommand("theorems", "run the exhaustive property suite");
  auto* sub_counter =
      app.add_subcommand("counterexample", "orbit/word pairs that miss codimension one");
  auto* sub_verify = app.add_subcommand("verify", "cross-check against the finite-field model");
  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    RunConfig cfg;
    {
      const size_t comma = pq_text.find(',');
      if (comma == std::string::npos) throw UsageError("--pq expects P,Q");
      try {
        size_t used = 0;
        cfg.spec.p = std::stoi(pq_text.substr(0, comma), &used);
        if (used != comma) throw UsageError("--pq expects P,Q");
        const std::string rest = pq_text.substr(comma + 1);
        cfg.spec.q = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--pq expects P,Q");
      } catch (const std::logic_error&) {
        throw UsageError("--pq expects two integers P,Q");
      }
      if (!cfg.spec.valid()) throw UsageError("--pq needs p >= 1 and q >= 1");
    }
    cfg.format = format;
    cfg.field = field;

    CommandResult result;
    if (sub_orbits->parsed())
      result = cmd_orbits(cfg);
    else if (sub_weak->parsed())
      result = cmd_weak_order(cfg);
    else if (sub_closure->parsed())
      result = cmd_closure_order(cfg);
    else if (sub_jset->parsed())
      result = cmd_jset(cfg, clan_text);
    else if (sub_minexpr->parsed())
      result = cmd_minexpr(cfg, clan_text, word_text);
    else if (sub_demazure->parsed())
      result = cmd_demazure(cfg, clan_text, word_text);
    else if (sub_theorems->parsed())
      result = cmd_theorems(cfg);
    else if (sub_counter->parsed())
      result = cmd_counterexample(cfg);
    else if (sub_verify->parsed())
      result = cmd_verify(cfg);
    else
      throw UsageError("no command given");

    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw UsageError("cannot open output path " + out_path);
      out << result.output;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace korbit_cli
