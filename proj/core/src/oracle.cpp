#include "korbit/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace korbit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent[static_cast<size_t>(b)] = a;
  }
};

// transvections and one dilation per diagonal block: a generating set
// of GL_p(F_q) x GL_q(F_q)
std::vector<MatFq> block_generators(const RealFormSpec& spec, int q) {
  const int n = spec.n();
  std::vector<MatFq> gens;
  const int root = primitive_root(q);
  const int starts[2] = {0, spec.p};
  const int sizes[2] = {spec.p, spec.q};
  for (int b = 0; b < 2; ++b) {
    const int lo = starts[b];
    const int k = sizes[b];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        MatFq g = MatFq::identity(n, q);
        g.set(lo + i, lo + j, 1);
        gens.push_back(std::move(g));
      }
    if (k > 0 && root != 1) {
      MatFq g = MatFq::identity(n, q);
      g.set(lo, lo, root);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

MatFq lower_step(const FlagOverFq& f, SimpleIndex i) {
  if (i >= 2) return f.step(i - 1);
  return MatFq(0, f.n(), f.modulus());
}

MatFq upper_step(const FlagOverFq& f, SimpleIndex i) {
  if (i <= f.n() - 2) return f.step(i + 1);
  return MatFq::identity(f.n(), f.modulus());
}

// all flags obtained from f by replacing the level-i subspace
std::vector<FlagOverFq> level_replacements(const FlagOverFq& f, SimpleIndex i) {
  const int n = f.n();
  std::vector<FlagOverFq> out;
  for (MatFq& m : intermediate_subspaces(lower_step(f, i), upper_step(f, i))) {
    std::vector<MatFq> steps;
    steps.reserve(static_cast<size_t>(n - 1));
    for (int level = 1; level < n; ++level)
      steps.push_back(level == i ? std::move(m) : f.step(level));
    out.emplace_back(n, f.modulus(), std::move(steps));
  }
  return out;
}

// orbits meeting the set {replacement flags of every member of `mask`}
std::vector<char> sweep_level(const OraclePartition& part, const std::vector<char>& mask,
                              SimpleIndex i) {
  std::vector<char> next(mask.size(), 0);
  for (int idx = 0; idx < static_cast<int>(mask.size()); ++idx) {
    if (!mask[static_cast<size_t>(idx)]) continue;
    for (const FlagOverFq& g : level_replacements(part.flags()[static_cast<size_t>(idx)], i)) {
      const int j = part.index_of(g);
      if (j < 0) throw std::logic_error("sweep_level: replacement flag not enumerated");
      next[static_cast<size_t>(j)] = 1;
    }
  }
  return next;
}

std::vector<int> orbits_in_mask(const OraclePartition& part, const std::vector<char>& mask) {
  std::vector<char> seen(part.orbits().size(), 0);
  for (int idx = 0; idx < static_cast<int>(mask.size()); ++idx)
    if (mask[static_cast<size_t>(idx)]) seen[static_cast<size_t>(part.orbit_of(idx))] = 1;
  std::vector<int> out;
  for (int o = 0; o < static_cast<int>(seen.size()); ++o)
    if (seen[static_cast<size_t>(o)]) out.push_back(o);
  return out;
}

std::vector<char> orbit_mask(const OraclePartition& part, int orbit) {
  std::vector<char> mask(part.flags().size(), 0);
  for (int idx : part.orbits()[static_cast<size_t>(orbit)].members)
    mask[static_cast<size_t>(idx)] = 1;
  return mask;
}

}  // namespace

OraclePartition OraclePartition::build(const RealFormSpec& spec, int q) {
  if (!spec.valid()) throw std::invalid_argument("OraclePartition: bad signature");
  if (spec.n() > 4) throw std::invalid_argument("OraclePartition: p+q above brute-force range");
  if (q != 2 && q != 3 && q != 5)
    throw std::invalid_argument("OraclePartition: unsupported field");

  OraclePartition part;
  part.spec_ = spec;
  part.q_ = q;
  part.flags_ = enumerate_flags(spec.n(), q);

  const int count = static_cast<int>(part.flags_.size());
  std::map<std::string, int> by_key;
  for (int i = 0; i < count; ++i) by_key.emplace(part.flags_[static_cast<size_t>(i)].key(), i);

  UnionFind uf(count);
  for (const MatFq& g : block_generators(spec, q))
    for (int i = 0; i < count; ++i) {
      const FlagOverFq image = apply_matrix(g, part.flags_[static_cast<size_t>(i)]);
      const auto it = by_key.find(image.key());
      if (it == by_key.end()) throw std::logic_error("OraclePartition: image flag not enumerated");
      uf.unite(i, it->second);
    }

  std::map<int, int> root_to_id;
  for (int i = 0; i < count; ++i) {
    const int r = uf.find(i);
    if (!root_to_id.count(r)) {
      const int id = static_cast<int>(part.orbits_.size());
      root_to_id[r] = id;
      OracleOrbit orbit;
      orbit.id = id;
      orbit.representative = i;  // first member in flag order
      part.orbits_.push_back(std::move(orbit));
    }
  }
  part.orbit_of_.assign(static_cast<size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    const int id = root_to_id.at(uf.find(i));
    part.orbit_of_[static_cast<size_t>(i)] = id;
    part.orbits_[static_cast<size_t>(id)].members.push_back(i);
  }
  for (OracleOrbit& orbit : part.orbits_)
    orbit.dim = orbit_dim(part.flags_[static_cast<size_t>(orbit.representative)], spec);
  return part;
}

int OraclePartition::index_of(const FlagOverFq& f) const {
  const std::string k = f.key();
  const auto it =
      std::lower_bound(flags_.begin(), flags_.end(), k,
                       [](const FlagOverFq& a, const std::string& b) { return a.key() < b; });
  if (it == flags_.end() || it->key() != k) return -1;
  return static_cast<int>(it - flags_.begin());
}

int stabilizer_dim(const FlagOverFq& f, const RealFormSpec& spec) {
  if (f.n() != spec.n()) throw std::invalid_argument("stabilizer_dim: rank mismatch");
  const int n = spec.n();
  const int q = f.modulus();

  // unknowns: entries of the two diagonal blocks, row-major
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < spec.p; ++r)
    for (int c = 0; c < spec.p; ++c) cells.emplace_back(r, c);
  for (int r = spec.p; r < n; ++r)
    for (int c = spec.p; c < n; ++c) cells.emplace_back(r, c);
  const int unknowns = static_cast<int>(cells.size());

  // X F_i <= F_i  <=>  a . (X b) = 0 for every basis row b of F_i and
  // every annihilator row a of F_i
  std::vector<std::vector<int>> eqs;
  for (int level = 1; level < n; ++level) {
    const MatFq& basis = f.step(level);
    const MatFq ann = basis.nullspace_basis();
    for (int rb = 0; rb < basis.rows(); ++rb)
      for (int ra = 0; ra < ann.rows(); ++ra) {
        std::vector<int> eq(static_cast<size_t>(unknowns), 0);
        for (int u = 0; u < unknowns; ++u) {
          const auto [row, col] = cells[static_cast<size_t>(u)];
          eq[static_cast<size_t>(u)] = ann.at(ra, row) * basis.at(rb, col) % q;
        }
        eqs.push_back(std::move(eq));
      }
  }

  MatFq system(static_cast<int>(eqs.size()), unknowns, q);
  for (int r = 0; r < static_cast<int>(eqs.size()); ++r)
    for (int c = 0; c < unknowns; ++c) system.set(r, c, eqs[static_cast<size_t>(r)][static_cast<size_t>(c)]);
  return unknowns - system.rank();
}

int orbit_dim(const FlagOverFq& f, const RealFormSpec& spec) {
  return spec.p * spec.p + spec.q * spec.q - stabilizer_dim(f, spec);
}

OracleStepOutcome oracle_monoid_step(const OraclePartition& part, int orbit, SimpleIndex i) {
  if (i < 1 || i > part.spec().n() - 1)
    throw std::invalid_argument("oracle_monoid_step: index out of range");
  const std::vector<char> mask = sweep_level(part, orbit_mask(part, orbit), i);
  OracleStepOutcome out;
  out.product_orbits = orbits_in_mask(part, mask);
  int best = -1;
  int ties = 0;
  for (int o : out.product_orbits) {
    const int d = part.orbits()[static_cast<size_t>(o)].dim;
    if (best < 0 || d > part.orbits()[static_cast<size_t>(best)].dim) {
      best = o;
      ties = 1;
    } else if (d == part.orbits()[static_cast<size_t>(best)].dim) {
      ++ties;
    }
  }
  out.dense_orbit = best;
  out.dense_unique = (ties == 1);
  return out;
}

std::vector<int> oracle_word_product_orbits(const OraclePartition& part, int orbit,
                                            const Word& word) {
  std::vector<char> mask = orbit_mask(part, orbit);
  for (SimpleIndex i : word) mask = sweep_level(part, mask, i);
  return orbits_in_mask(part, mask);
}

FlagOverFq clan_representative_flag(const Clan& c, const RealFormSpec& spec, int q) {
  if (!c.fits(spec)) throw std::invalid_argument("clan_representative_flag: signature mismatch");
  if (!c.pairs().empty() && q == 2)
    throw std::invalid_argument("clan_representative_flag: pairs need an odd field");
  const int n = spec.n();
  std::vector<std::vector<int>> vecs(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  int plus_used = 0;
  int minus_used = 0;
  std::vector<char> done(static_cast<size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    if (done[static_cast<size_t>(pos - 1)]) continue;
    const int s = c.symbol(pos);
    std::vector<int>& row = vecs[static_cast<size_t>(pos - 1)];
    if (s == Clan::kPlus) {
      row[static_cast<size_t>(plus_used++)] = 1;
    } else if (s == Clan::kMinus) {
      row[static_cast<size_t>(spec.p + minus_used++)] = 1;
    } else {
      int partner = -1;
      for (int k = pos + 1; k <= n; ++k)
        if (c.symbol(k) == s) partner = k;
      const int u = plus_used++;
      const int v = spec.p + minus_used++;
      row[static_cast<size_t>(u)] = 1;
      row[static_cast<size_t>(v)] = 1;
      vecs[static_cast<size_t>(partner - 1)][static_cast<size_t>(u)] = 1;
      vecs[static_cast<size_t>(partner - 1)][static_cast<size_t>(v)] = q - 1;
      done[static_cast<size_t>(partner - 1)] = 1;
    }
  }
  std::vector<MatFq> steps;
  for (int level = 1; level < n; ++level) {
    MatFq m(level, n, q);
    for (int r = 0; r < level; ++r)
      for (int j = 0; j < n; ++j) m.set(r, j, vecs[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    steps.push_back(std::move(m));
  }
  return FlagOverFq(n, q, std::move(steps));
}

namespace {

// dim(F_level  intersect  V_+) for the orbit representative
std::vector<int> plus_signature(const OraclePartition& part, int orbit) {
  const RealFormSpec& spec = part.spec();
  const int n = spec.n();
  MatFq vplus(spec.p, n, part.modulus());
  for (int r = 0; r < spec.p; ++r) vplus.set(r, r, 1);
  const FlagOverFq& f =
      part.flags()[static_cast<size_t>(part.orbits()[static_cast<size_t>(orbit)].representative)];
  std::vector<int> sig;
  for (int level = 1; level < n; ++level) {
    const int joint = vstack(f.step(level), vplus).rank();
    sig.push_back(level + spec.p - joint);
  }
  return sig;
}

std::string describe_edge(const WeakOrderGraph& graph, int node, SimpleIndex i) {
  std::ostringstream os;
  os << "node " << graph.node(node).clan.to_string() << " index " << i;
  return os.str();
}

}  // namespace

MatchReport match_with_clans(const WeakOrderGraph& graph, const OraclePartition& part) {
  MatchReport report;
  report.clan_to_orbit.assign(static_cast<size_t>(graph.size()), -1);
  const RealFormSpec& spec = graph.spec();
  if (!(spec.p == part.spec().p && spec.q == part.spec().q)) {
    report.mismatch = "signature mismatch between graph and partition";
    return report;
  }
  if (graph.size() != static_cast<int>(part.orbits().size())) {
    std::ostringstream os;
    os << "orbit count: " << graph.size() << " symbol sequences vs " << part.orbits().size()
       << " oracle orbits";
    report.mismatch = os.str();
    return report;
  }

  // seed with closed orbits, identified on the oracle side by the
  // dimension profile of the intersection with V_+
  std::vector<int> orbit_to_clan(part.orbits().size(), -1);
  std::queue<int> pending;
  for (const OracleOrbit& orbit : part.orbits()) {
    if (orbit.dim != spec.base_dim()) continue;
    const std::vector<int> sig = plus_signature(part, orbit.id);
    int found = -1;
    for (int k : graph.closed_indices()) {
      const std::vector<int> counts = graph.node(k).clan.plus_prefix_counts();
      bool same = true;
      for (int level = 1; level < spec.n(); ++level)
        if (counts[static_cast<size_t>(level - 1)] != sig[static_cast<size_t>(level - 1)]) {
          same = false;
          break;
        }
      if (same) {
        found = k;
        break;
      }
    }
    if (found < 0) {
      report.mismatch = "minimal oracle orbit matches no sign sequence";
      return report;
    }
    if (report.clan_to_orbit[static_cast<size_t>(found)] != -1) {
      report.mismatch = "two minimal oracle orbits share a sign sequence";
      return report;
    }
    report.clan_to_orbit[static_cast<size_t>(found)] = orbit.id;
    orbit_to_clan[static_cast<size_t>(orbit.id)] = found;
    pending.push(found);
  }
  if (pending.size() != graph.closed_indices().size()) {
    report.mismatch = "closed orbit counts differ";
    return report;
  }

  // grow the bijection along raising edges, checking every edge label
  while (!pending.empty()) {
    const int node = pending.front();
    pending.pop();
    const int orbit = report.clan_to_orbit[static_cast<size_t>(node)];
    for (SimpleIndex i = 1; i <= spec.n() - 1; ++i) {
      const OracleStepOutcome outcome = oracle_monoid_step(part, orbit, i);
      if (!outcome.dense_unique) {
        report.mismatch = "no unique dense orbit at " + describe_edge(graph, node, i);
        return report;
      }
      const bool oracle_raised = outcome.dense_orbit != orbit;
      if (oracle_raised != graph.raised(node, i)) {
        report.mismatch = "raised/fixed disagreement at " + describe_edge(graph, node, i);
        return report;
      }
      if (!oracle_raised) continue;
      const int target = graph.target(node, i);
      const int mapped = report.clan_to_orbit[static_cast<size_t>(target)];
      if (mapped == -1) {
        if (orbit_to_clan[static_cast<size_t>(outcome.dense_orbit)] != -1) {
          report.mismatch = "two targets claim one oracle orbit at " + describe_edge(graph, node, i);
          return report;
        }
        report.clan_to_orbit[static_cast<size_t>(target)] = outcome.dense_orbit;
        orbit_to_clan[static_cast<size_t>(outcome.dense_orbit)] = target;
        pending.push(target);
      } else if (mapped != outcome.dense_orbit) {
        report.mismatch = "target disagreement at " + describe_edge(graph, node, i);
        return report;
      }
    }
  }

  for (int k = 0; k < graph.size(); ++k) {
    if (report.clan_to_orbit[static_cast<size_t>(k)] == -1) {
      report.mismatch = "unreached node " + graph.node(k).clan.to_string();
      return report;
    }
    const int dim = part.orbits()[static_cast<size_t>(report.clan_to_orbit[static_cast<size_t>(k)])].dim;
    if (dim != graph.node(k).dim) {
      std::ostringstream os;
      os << "dimension disagreement at " << graph.node(k).clan.to_string() << ": formula "
         << graph.node(k).dim << " vs oracle " << dim;
      report.mismatch = os.str();
      return report;
    }
  }

  // the product set of orbit x P_i must decompose into exactly the
  // preimage family of its dense orbit
  for (int k = 0; k < graph.size(); ++k)
    for (SimpleIndex i = 1; i <= spec.n() - 1; ++i) {
      const OracleStepOutcome outcome =
          oracle_monoid_step(part, report.clan_to_orbit[static_cast<size_t>(k)], i);
      std::vector<int> expected;
      for (int z : graph.family(graph.target(k, i), i))
        expected.push_back(report.clan_to_orbit[static_cast<size_t>(z)]);
      std::sort(expected.begin(), expected.end());
      if (expected != outcome.product_orbits) {
        report.mismatch = "coset decomposition disagreement at " + describe_edge(graph, k, i);
        return report;
      }
    }

  report.ok = true;
  return report;
}

bool representatives_consistent(const WeakOrderGraph& graph, const OraclePartition& part,
                                const MatchReport& match) {
  if (!match.ok) return false;
  for (int k = 0; k < graph.size(); ++k) {
    const FlagOverFq rep =
        clan_representative_flag(graph.node(k).clan, graph.spec(), part.modulus());
    const int idx = part.index_of(rep);
    if (idx < 0) return false;
    if (part.orbit_of(idx) != match.clan_to_orbit[static_cast<size_t>(k)]) return false;
  }
  return true;
}

}  // namespace korbit
