#include "korbit/closure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace korbit {

ClosurePoset::ClosurePoset(int size) : size_(size) {
  words_ = static_cast<size_t>((size + 63) / 64);
  down_.assign(words_ * static_cast<size_t>(size), 0);
  for (int k = 0; k < size; ++k) set(k, k);
}

bool ClosurePoset::leq(int x, int y) const {
  const uint64_t word = down_[static_cast<size_t>(y) * words_ + static_cast<size_t>(x) / 64];
  return (word >> (static_cast<unsigned>(x) % 64)) & 1u;
}

void ClosurePoset::set(int x, int y) {
  down_[static_cast<size_t>(y) * words_ + static_cast<size_t>(x) / 64] |=
      uint64_t{1} << (static_cast<unsigned>(x) % 64);
}

std::vector<int> ClosurePoset::below(int y) const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x)
    if (leq(x, y)) out.push_back(x);
  return out;
}

std::vector<std::pair<int, int>> ClosurePoset::hasse() const {
  std::vector<std::pair<int, int>> covers;
  for (int y = 0; y < size_; ++y) {
    for (int x = 0; x < size_; ++x) {
      if (x == y || !leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < size_ && covered; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) covered = false;
      }
      if (covered) covers.emplace_back(x, y);
    }
  }
  return covers;
}

namespace {

// union of the s-families over the down-set of x, as a bit row
void accumulate_family_union(const WeakOrderGraph& graph, const ClosurePoset& poset, SimpleIndex s,
                             int x, std::vector<char>& member) {
  for (int z : poset.below(x)) {
    const int dense = graph.target(z, s);
    for (int w : graph.family(dense, s)) member[static_cast<size_t>(w)] = 1;
  }
}

}  // namespace

ClosurePoset closure_order(const WeakOrderGraph& graph) {
  const int count = graph.size();
  ClosurePoset poset(count);
  std::vector<int> order(static_cast<size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return graph.node(a).dim < graph.node(b).dim; });
  for (int y : order) {
    if (graph.node(y).is_closed) continue;  // closure of a closed orbit is itself
    const auto edges = graph.raising_edges_into(y);
    if (edges.empty()) throw std::logic_error("closure_order: non-closed orbit with no raise into it");
    const auto [s, x] = edges.front();
    std::vector<char> member(static_cast<size_t>(count), 0);
    accumulate_family_union(graph, poset, s, x, member);
    if (!member[static_cast<size_t>(y)])
      throw std::logic_error("closure_order: node missing from its own closure");
    for (int z = 0; z < count; ++z)
      if (member[static_cast<size_t>(z)]) poset.set(z, y);
  }
  return poset;
}

std::vector<int> closure_downset_via(const WeakOrderGraph& graph, const ClosurePoset& poset,
                                     SimpleIndex s, int x) {
  std::vector<char> member(static_cast<size_t>(graph.size()), 0);
  accumulate_family_union(graph, poset, s, x, member);
  std::vector<int> out;
  for (int z = 0; z < graph.size(); ++z)
    if (member[static_cast<size_t>(z)]) out.push_back(z);
  return out;
}

bool closure_choice_independent(const WeakOrderGraph& graph, const ClosurePoset& poset) {
  for (int y = 0; y < graph.size(); ++y) {
    if (graph.node(y).is_closed) continue;
    for (const auto& [s, x] : graph.raising_edges_into(y)) {
      if (closure_downset_via(graph, poset, s, x) != poset.below(y)) return false;
    }
  }
  return true;
}

std::vector<int> reachable_by_raising(const WeakOrderGraph& graph, int k) {
  std::vector<char> seen(static_cast<size_t>(graph.size()), 0);
  std::deque<int> queue{k};
  seen[static_cast<size_t>(k)] = 1;
  while (!queue.empty()) {
    const int z = queue.front();
    queue.pop_front();
    for (SimpleIndex i = 1; i < graph.spec().n(); ++i) {
      if (!graph.raised(z, i)) continue;
      const int t = graph.target(z, i);
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  std::vector<int> out;
  for (int z = 0; z < graph.size(); ++z)
    if (seen[static_cast<size_t>(z)]) out.push_back(z);
  return out;
}

JSet j_set(const WeakOrderGraph& graph, int k) {
  JSet js;
  for (int z : reachable_by_raising(graph, k)) {
    if (graph.node(z).codim == 1) js.members.push_back(z);
  }
  return js;
}

int demazure_on_orbit(const WeakOrderGraph& graph, int k, const WeylElement& w) {
  if (w.rank() != graph.spec().n())
    throw std::invalid_argument("demazure_on_orbit: rank mismatch");
  return fold_word(graph, k, reduced_word(w));
}

int fold_word(const WeakOrderGraph& graph, int k, const Word& word) {
  int cur = k;
  for (SimpleIndex i : word) {
    if (i < 1 || i >= graph.spec().n())
      throw std::invalid_argument("fold_word: letter out of range");
    cur = graph.target(cur, i);
  }
  return cur;
}

Word minimal_expression(const WeakOrderGraph& graph, int k, const WeylElement& w) {
  if (w.rank() != graph.spec().n())
    throw std::invalid_argument("minimal_expression: rank mismatch");
  Word kept;
  int cur = k;
  for (SimpleIndex i : reduced_word(w)) {
    if (graph.raised(cur, i)) {
      kept.push_back(i);
      cur = graph.target(cur, i);
    }
  }
  return kept;
}

std::optional<SimpleIndex> ascent(const WeakOrderGraph& graph, int k) {
  for (SimpleIndex i = 1; i < graph.spec().n(); ++i) {
    if (graph.raised(k, i)) return i;
  }
  return std::nullopt;
}

std::optional<SimpleIndex> ascent(const Clan& c, const RealFormSpec& spec) {
  for (SimpleIndex i = 1; i < spec.n(); ++i) {
    if (monoid_step(c, i, spec).raised()) return i;
  }
  return std::nullopt;
}

int dense_coset_under_parabolic(const WeakOrderGraph& graph, int k,
                                const ParabolicSpec& parabolic) {
  const WeylElement longest = longest_element(parabolic.generators, graph.spec().n());
  return demazure_on_orbit(graph, k, longest);
}

std::optional<int> covering_codim1_orbit(const WeakOrderGraph& graph, const ClosurePoset& poset,
                                         int k, const WeylElement& w) {
  if (length(w) >= graph.node(k).codim)
    throw std::invalid_argument("covering_codim1_orbit: word length must be below the codimension");
  const int result = demazure_on_orbit(graph, k, w);
  for (int j : j_set(graph, k).members) {
    if (poset.leq(result, j)) return j;
  }
  return std::nullopt;
}

CoverReport complement_cover_check(const WeakOrderGraph& graph, const ClosurePoset& poset) {
  CoverReport report;
  report.ok = true;
  for (int z = 0; z < graph.size(); ++z) {
    if (graph.node(z).is_open) continue;
    int cover = -1;
    for (int j = 0; j < graph.size(); ++j) {
      if (graph.node(j).codim == 1 && poset.leq(z, j)) {
        cover = j;
        break;
      }
    }
    if (cover == -1) report.ok = false;
    report.covers.emplace_back(z, cover);
  }
  return report;
}

std::vector<CounterexampleWitness> find_counterexamples(const WeakOrderGraph& graph) {
  std::vector<CounterexampleWitness> witnesses;
  const auto layers = elements_by_length(graph.spec().n());
  for (int k = 0; k < graph.size(); ++k) {
    const int codim = graph.node(k).codim;
    if (codim < 2) continue;  // a length-0 word cannot drop below codimension 1
    const size_t len = static_cast<size_t>(codim - 1);
    if (len >= layers.size()) continue;
    for (const WeylElement& w : layers[len]) {
      const int result = demazure_on_orbit(graph, k, w);
      const int result_codim = graph.node(result).codim;
      if (result_codim >= 2)
        witnesses.push_back({k, w, reduced_word(w), result, result_codim});
    }
  }
  return witnesses;
}

std::vector<std::pair<int, int>> closure_gaps(const WeakOrderGraph& graph,
                                              const ClosurePoset& poset) {
  std::vector<std::pair<int, int>> gaps;
  for (int x = 0; x < graph.size(); ++x) {
    std::vector<char> reach(static_cast<size_t>(graph.size()), 0);
    for (int z : reachable_by_raising(graph, x)) reach[static_cast<size_t>(z)] = 1;
    for (int y = 0; y < graph.size(); ++y) {
      if (x != y && poset.leq(x, y) && !reach[static_cast<size_t>(y)]) gaps.emplace_back(x, y);
    }
  }
  return gaps;
}

}  // namespace korbit
