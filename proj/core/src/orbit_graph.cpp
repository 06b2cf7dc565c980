#include "korbit/orbit_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace korbit {

namespace {

void enumerate_rec(const RealFormSpec& spec, std::vector<int>& partial, int plus_left,
                   int minus_left, std::vector<int>& open_pair_ids, int next_pair_id,
                   std::vector<Clan>& out) {
  const int n = spec.n();
  if (static_cast<int>(partial.size()) == n) {
    if (plus_left == 0 && minus_left == 0 && open_pair_ids.empty()) out.emplace_back(partial);
    return;
  }
  const int remaining = n - static_cast<int>(partial.size());
  // close an open pair: canonical order closes any of them
  for (size_t k = 0; k < open_pair_ids.size(); ++k) {
    int id = open_pair_ids[k];
    open_pair_ids.erase(open_pair_ids.begin() + static_cast<long>(k));
    partial.push_back(id);
    enumerate_rec(spec, partial, plus_left, minus_left, open_pair_ids, next_pair_id, out);
    partial.pop_back();
    open_pair_ids.insert(open_pair_ids.begin() + static_cast<long>(k), id);
  }
  // unfilled positions must still be able to close all open pairs
  if (static_cast<int>(open_pair_ids.size()) >= remaining) return;
  if (plus_left > 0) {
    partial.push_back(Clan::kPlus);
    --plus_left;
    enumerate_rec(spec, partial, plus_left, minus_left, open_pair_ids, next_pair_id, out);
    ++plus_left;
    partial.pop_back();
  }
  if (minus_left > 0) {
    partial.push_back(Clan::kMinus);
    --minus_left;
    enumerate_rec(spec, partial, plus_left, minus_left, open_pair_ids, next_pair_id, out);
    ++minus_left;
    partial.pop_back();
  }
  // open a new pair; consumes one + and one - from the budgets
  if (plus_left > 0 && minus_left > 0) {
    partial.push_back(next_pair_id);
    open_pair_ids.push_back(next_pair_id);
    enumerate_rec(spec, partial, plus_left - 1, minus_left - 1, open_pair_ids, next_pair_id + 1,
                  out);
    open_pair_ids.pop_back();
    partial.pop_back();
  }
}

}  // namespace

std::vector<Clan> enumerate_clans(const RealFormSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("enumerate_clans: invalid signature");
  std::vector<Clan> out;
  std::vector<int> partial;
  std::vector<int> open_pairs;
  // budgets: #plus + #pairs = p and #minus + #pairs = q
  enumerate_rec(spec, partial, spec.p, spec.q, open_pairs, 1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int clan_dimension(const Clan& c, const RealFormSpec& spec) {
  if (!c.fits(spec)) throw std::invalid_argument("clan_dimension: clan does not fit signature");
  const auto pairs = c.pairs();
  int total = spec.base_dim();
  for (const auto& [a, b] : pairs) {
    int straddling = 0;
    for (const auto& [cc, dd] : pairs) {
      if (cc < a && a < dd && dd < b) ++straddling;
    }
    total += b - a - straddling;
  }
  return total;
}

OrbitRecord make_orbit_record(const Clan& c, const RealFormSpec& spec) {
  OrbitRecord rec{c, 0, 0, false, false};
  rec.dim = clan_dimension(c, spec);
  rec.codim = spec.flag_dim() - rec.dim;
  rec.is_open = rec.codim == 0;
  rec.is_closed = !c.has_pairs();
  return rec;
}

MonoidOutcome monoid_step(const Clan& c, SimpleIndex i, const RealFormSpec& spec) {
  if (!c.fits(spec)) throw std::invalid_argument("monoid_step: clan does not fit signature");
  if (i < 1 || i >= spec.n()) throw std::invalid_argument("monoid_step: index out of range");
  const int a = c.symbol(i);
  const int b = c.symbol(i + 1);
  const bool opposite_signs = (a == Clan::kPlus && b == Clan::kMinus) ||
                              (a == Clan::kMinus && b == Clan::kPlus);
  std::vector<int> symbols;
  symbols.reserve(static_cast<size_t>(c.size()));
  for (int pos = 1; pos <= c.size(); ++pos) symbols.push_back(c.symbol(pos));
  if (opposite_signs) {
    // a fresh pair; id choice is washed out by canonicalization
    int fresh = 1;
    for (int s : symbols) fresh = std::max(fresh, s + 1);
    symbols[static_cast<size_t>(i - 1)] = fresh;
    symbols[static_cast<size_t>(i)] = fresh;
    return MonoidOutcome::raised_to(Clan(std::move(symbols)));
  }
  std::swap(symbols[static_cast<size_t>(i - 1)], symbols[static_cast<size_t>(i)]);
  Clan swapped(std::move(symbols));
  if (clan_dimension(swapped, spec) == clan_dimension(c, spec) + 1)
    return MonoidOutcome::raised_to(std::move(swapped));
  return MonoidOutcome::fixed();
}

Clan open_clan(const RealFormSpec& spec) {
  const int target = spec.flag_dim();
  for (const Clan& c : enumerate_clans(spec)) {
    if (clan_dimension(c, spec) == target) return c;
  }
  throw std::logic_error("open_clan: no clan of full dimension");  // unreachable
}

std::vector<Clan> closed_clans(const RealFormSpec& spec) {
  std::vector<Clan> out;
  for (const Clan& c : enumerate_clans(spec)) {
    if (!c.has_pairs()) out.push_back(c);
  }
  return out;
}

WeakOrderGraph WeakOrderGraph::build(const RealFormSpec& spec) {
  WeakOrderGraph g;
  g.spec_ = spec;
  const std::vector<Clan> clans = enumerate_clans(spec);
  g.nodes_.reserve(clans.size());
  for (const Clan& c : clans) {
    g.index_.emplace(c, static_cast<int>(g.nodes_.size()));
    g.nodes_.push_back(make_orbit_record(c, spec));
  }
  const int n = spec.n();
  const int count = g.size();
  g.target_.assign(static_cast<size_t>(count), std::vector<int>(static_cast<size_t>(n - 1)));
  g.raised_.assign(static_cast<size_t>(count), std::vector<char>(static_cast<size_t>(n - 1)));
  for (int k = 0; k < count; ++k) {
    for (SimpleIndex i = 1; i < n; ++i) {
      MonoidOutcome out = monoid_step(g.nodes_[static_cast<size_t>(k)].clan, i, spec);
      int t = k;
      if (out.raised()) {
        auto it = g.index_.find(*out.raised_target);
        if (it == g.index_.end()) throw std::logic_error("WeakOrderGraph: target not enumerated");
        t = it->second;
        if (g.nodes_[static_cast<size_t>(t)].dim != g.nodes_[static_cast<size_t>(k)].dim + 1)
          throw std::logic_error("WeakOrderGraph: raise does not add one dimension");
      }
      g.target_[static_cast<size_t>(k)][static_cast<size_t>(i - 1)] = t;
      g.raised_[static_cast<size_t>(k)][static_cast<size_t>(i - 1)] = out.raised() ? 1 : 0;
    }
  }
  g.family_.assign(static_cast<size_t>(n - 1), {});
  for (SimpleIndex i = 1; i < n; ++i) {
    auto& families = g.family_[static_cast<size_t>(i - 1)];
    families.assign(static_cast<size_t>(count), {});
    for (int k = 0; k < count; ++k)
      families[static_cast<size_t>(g.target(k, i))].push_back(k);
  }
  for (int k = 0; k < count; ++k) {
    if (g.nodes_[static_cast<size_t>(k)].is_open) {
      if (g.open_ != -1) throw std::logic_error("WeakOrderGraph: open orbit not unique");
      g.open_ = k;
    }
    if (g.nodes_[static_cast<size_t>(k)].is_closed) g.closed_.push_back(k);
  }
  if (g.open_ == -1) throw std::logic_error("WeakOrderGraph: no open orbit");
  return g;
}

int WeakOrderGraph::index_of(const Clan& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int WeakOrderGraph::target(int k, SimpleIndex i) const {
  return target_[static_cast<size_t>(k)][static_cast<size_t>(i - 1)];
}

bool WeakOrderGraph::raised(int k, SimpleIndex i) const {
  return raised_[static_cast<size_t>(k)][static_cast<size_t>(i - 1)] != 0;
}

const std::vector<int>& WeakOrderGraph::family(int t, SimpleIndex i) const {
  return family_[static_cast<size_t>(i - 1)][static_cast<size_t>(t)];
}

std::vector<std::pair<SimpleIndex, int>> WeakOrderGraph::raising_edges_into(int k) const {
  std::vector<std::pair<SimpleIndex, int>> edges;
  for (SimpleIndex i = 1; i < spec_.n(); ++i) {
    for (int source : family(k, i)) {
      if (source != k && raised(source, i)) edges.emplace_back(i, source);
    }
  }
  return edges;
}

}  // namespace korbit
