#ifndef KORBIT_ORACLE_HPP
#define KORBIT_ORACLE_HPP

/*
  Brute-force cross-check over a finite field: partition all full flags
  in F_q^(p+q) into orbits of the block-diagonal subgroup
  GL_p x GL_q, measure orbit dimensions through stabilizer Lie algebras,
  and replay the simple-reflection monoid action set-theoretically.
  Everything here is independent of the symbol-sequence formulas and is
  the authority whenever the two sides are compared.
*/

#include <optional>
#include <string>
#include <vector>

#include "korbit/clan.hpp"
#include "korbit/flag_fq.hpp"
#include "korbit/orbit_graph.hpp"
#include "korbit/weyl.hpp"

namespace korbit {

struct OracleOrbit {
  int id = -1;
  std::vector<int> members;  // flag indices, ascending
  int representative = -1;   // smallest member
  int dim = -1;              // p^2 + q^2 minus stabilizer dimension
};

class OraclePartition {
 public:
  // refuses p+q > 4; enumerates every flag and closes under generators
  static OraclePartition build(const RealFormSpec& spec, int q);

  const RealFormSpec& spec() const { return spec_; }
  int modulus() const { return q_; }
  const std::vector<FlagOverFq>& flags() const { return flags_; }
  const std::vector<OracleOrbit>& orbits() const { return orbits_; }
  int orbit_of(int flag_index) const { return orbit_of_[static_cast<size_t>(flag_index)]; }
  int index_of(const FlagOverFq& f) const;  // -1 when absent

 private:
  RealFormSpec spec_{};
  int q_ = 0;
  std::vector<FlagOverFq> flags_;
  std::vector<int> orbit_of_;
  std::vector<OracleOrbit> orbits_;
};

// dimension of {X in gl_p x gl_q : X F_i <= F_i for all i}
int stabilizer_dim(const FlagOverFq& f, const RealFormSpec& spec);
int orbit_dim(const FlagOverFq& f, const RealFormSpec& spec);

struct OracleStepOutcome {
  int dense_orbit = -1;            // unique orbit of maximal dimension in the product
  bool dense_unique = false;       // false flags a dichotomy violation
  std::vector<int> product_orbits; // every orbit meeting the product set, ascending
};

// vary the level-i subspace over all of its q+1 replacements for every
// member flag; the product set is a union of orbits
OracleStepOutcome oracle_monoid_step(const OraclePartition& part, int orbit, SimpleIndex i);

// fold a whole word set-theoretically and report the orbits covered
std::vector<int> oracle_word_product_orbits(const OraclePartition& part, int orbit,
                                            const Word& word);

// explicit flag realizing a symbol sequence; needs odd q when pairs occur
FlagOverFq clan_representative_flag(const Clan& c, const RealFormSpec& spec, int q);

struct MatchReport {
  bool ok = false;
  std::vector<int> clan_to_orbit;  // graph node -> oracle orbit id
  std::string mismatch;            // first disagreement when !ok
};

// label-preserving isomorphism between the symbol-sequence action graph
// and the oracle action graph, grown from the closed orbits
MatchReport match_with_clans(const WeakOrderGraph& graph, const OraclePartition& part);

// do the explicit representative flags land in the matched orbits?
bool representatives_consistent(const WeakOrderGraph& graph, const OraclePartition& part,
                                const MatchReport& match);

}  // namespace korbit

#endif
