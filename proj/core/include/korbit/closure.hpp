#ifndef KORBIT_CLOSURE_HPP
#define KORBIT_CLOSURE_HPP

/*
  The closure calculus on top of the weak-order graph: folding Schubert
  cell closures onto orbit closures, minimal expressions, the closure
  containment order, reachable codimension-one closures, containment
  witnesses, and the scan for orbit/word pairs whose product fails to
  reach codimension one.

  The closure order is computed by a recursion in dimension order.
  For a non-closed orbit y pick any raising edge (s, x) into it; then

      closure(y) = closure(x) * P_s
                 = union over z <= x of the B-orbits in z * P_s,

  and the B-orbits of the single K-P_s double coset through z are
  exactly the monoid preimages of its dense orbit. The recursion result
  is independent of the chosen (s, x); tests verify that exhaustively,
  along with weak-order containment, dimension grading, and the
  finite-field lower bounds.
*/

#include <optional>
#include <vector>

#include "korbit/orbit_graph.hpp"
#include "korbit/weyl.hpp"

namespace korbit {

// containment order among orbit closures: leq(x,y) iff orbit x lies in
// the closure of orbit y; node indices refer to a WeakOrderGraph
class ClosurePoset {
 public:
  explicit ClosurePoset(int size);

  int size() const { return size_; }
  bool leq(int x, int y) const;
  void set(int x, int y);  // record x <= y

  std::vector<int> below(int y) const;  // ascending node indices

  // covering relations (x, y): x < y with nothing strictly between
  std::vector<std::pair<int, int>> hasse() const;

  friend bool operator==(const ClosurePoset&, const ClosurePoset&) = default;

 private:
  int size_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> down_;  // row y = bitset of {x : x <= y}
};

ClosurePoset closure_order(const WeakOrderGraph& graph);

// Down-set of target(x, s) recomputed from already-settled rows of the
// poset through the raising edge (s, x); exposed so tests can replay
// the recursion over every admissible choice.
std::vector<int> closure_downset_via(const WeakOrderGraph& graph, const ClosurePoset& poset,
                                     SimpleIndex s, int x);

// replays every raising edge into every non-closed node and compares
bool closure_choice_independent(const WeakOrderGraph& graph, const ClosurePoset& poset);

// nodes reachable from k by raising edges, k included; ascending
std::vector<int> reachable_by_raising(const WeakOrderGraph& graph, int k);

// reachable codimension-one orbits; k itself qualifies when codim 1
struct JSet {
  std::vector<int> members;  // ascending node indices
};
JSet j_set(const WeakOrderGraph& graph, int k);

// Dense orbit of closure(k) * (BwB)^cl: fold the monoid action along a
// reduced word of w. Independent of the reduced word choice.
int demazure_on_orbit(const WeakOrderGraph& graph, int k, const WeylElement& w);

// same product for an explicit letter sequence
int fold_word(const WeakOrderGraph& graph, int k, const Word& word);

// The letters of reduced_word(w) whose step raises, scanned left to
// right from orbit k. The kept subword multiplies to a w' <= w with
// length(w') = dim difference and the same folded result.
Word minimal_expression(const WeakOrderGraph& graph, int k, const WeylElement& w);

// smallest raising index, or nullopt exactly on the open orbit
std::optional<SimpleIndex> ascent(const WeakOrderGraph& graph, int k);
std::optional<SimpleIndex> ascent(const Clan& c, const RealFormSpec& spec);

// standard parabolic P containing B, named by its simple generators
struct ParabolicSpec {
  std::vector<SimpleIndex> generators;
};

// dense B-orbit of closure(k) * P: fold the longest element of the
// parabolic; the result is fixed by every generator of P
int dense_coset_under_parabolic(const WeakOrderGraph& graph, int k, const ParabolicSpec& parabolic);

// For length(w) < codim(k): some reachable codimension-one closure
// contains the folded product. Returns a witnessing node, or nullopt if
// containment fails (which the containment theorem rules out).
// Throws std::invalid_argument when length(w) >= codim(k).
std::optional<int> covering_codim1_orbit(const WeakOrderGraph& graph, const ClosurePoset& poset,
                                         int k, const WeylElement& w);

// every non-open orbit paired with a codimension-one orbit whose
// closure contains it
struct CoverReport {
  bool ok = false;
  std::vector<std::pair<int, int>> covers;  // (orbit, covering codim-1 orbit)
};
CoverReport complement_cover_check(const WeakOrderGraph& graph, const ClosurePoset& poset);

// an orbit and a word of length codim-1 whose folded product still has
// codimension >= 2
struct CounterexampleWitness {
  int orbit = -1;
  WeylElement w;
  Word word;  // the reduced word used for the fold
  int result = -1;
  int result_codim = 0;
};
std::vector<CounterexampleWitness> find_counterexamples(const WeakOrderGraph& graph);

// closure-order pairs x < y such that no word folds x onto y; the
// closure order is strictly finer than raising reachability wherever
// this is non-empty
std::vector<std::pair<int, int>> closure_gaps(const WeakOrderGraph& graph,
                                              const ClosurePoset& poset);

}  // namespace korbit

#endif
