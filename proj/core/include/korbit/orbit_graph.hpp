#ifndef KORBIT_ORBIT_GRAPH_HPP
#define KORBIT_ORBIT_GRAPH_HPP

/*
  Orbit records and the weak-order monoid action on clans.

  monoid_step realizes S -> dense orbit of S*P_alpha on the clan side:
  the outcome is either Fixed or Raised with dimension exactly one
  higher. The dimension formula and the step rule below are validated
  against the finite-field model in the test and acceptance suites; the
  finite-field side is authoritative whenever the two disagree.
*/

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "korbit/clan.hpp"
#include "korbit/weyl.hpp"

namespace korbit {

struct OrbitRecord {
  Clan clan;
  int dim = 0;
  int codim = 0;
  bool is_open = false;
  bool is_closed = false;
};

// One weak-order step: Fixed, or Raised onto a clan of dimension + 1.
struct MonoidOutcome {
  std::optional<Clan> raised_target;

  bool raised() const { return raised_target.has_value(); }
  static MonoidOutcome fixed() { return {}; }
  static MonoidOutcome raised_to(Clan c) { return {std::move(c)}; }
};

// all canonical clans for (p,q), sorted lexicographically
std::vector<Clan> enumerate_clans(const RealFormSpec& spec);

// Complex dimension of the orbit in the flag variety:
// base_dim + sum over pairs (a<b) of (b - a - #{pairs (c<d) : c<a<d<b}).
// Rejects clans that do not fit the signature.
int clan_dimension(const Clan& c, const RealFormSpec& spec);

OrbitRecord make_orbit_record(const Clan& c, const RealFormSpec& spec);

// One monoid step at simple index i (acting on positions i, i+1):
//  - opposite signs collapse to a fresh pair (always a raise),
//  - otherwise swap the two symbols and keep the swap only if it
//    raises the dimension by exactly one.
MonoidOutcome monoid_step(const Clan& c, SimpleIndex i, const RealFormSpec& spec);

Clan open_clan(const RealFormSpec& spec);
std::vector<Clan> closed_clans(const RealFormSpec& spec);

// The full labeled monoid-action graph: one edge per (orbit, index).
class WeakOrderGraph {
 public:
  static WeakOrderGraph build(const RealFormSpec& spec);

  const RealFormSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const OrbitRecord& node(int k) const { return nodes_[static_cast<size_t>(k)]; }
  const std::vector<OrbitRecord>& nodes() const { return nodes_; }

  int index_of(const Clan& c) const;  // -1 if absent

  // dense target of node k under s_i; k itself when the step is fixed
  int target(int k, SimpleIndex i) const;
  bool raised(int k, SimpleIndex i) const;

  // nodes z with target(z, i) == t, t's own fixed loop included
  const std::vector<int>& family(int t, SimpleIndex i) const;

  int open_index() const { return open_; }
  const std::vector<int>& closed_indices() const { return closed_; }

  // raised edges into k, as (index, source) pairs
  std::vector<std::pair<SimpleIndex, int>> raising_edges_into(int k) const;

 private:
  RealFormSpec spec_;
  std::vector<OrbitRecord> nodes_;
  std::map<Clan, int> index_;
  std::vector<std::vector<int>> target_;         // [node][i-1]
  std::vector<std::vector<char>> raised_;        // [node][i-1]
  std::vector<std::vector<std::vector<int>>> family_;  // [i-1][node]
  int open_ = -1;
  std::vector<int> closed_;
};

}  // namespace korbit

#endif
