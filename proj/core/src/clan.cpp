#include "korbit/clan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace korbit {

namespace {

// pair id characters, in canonical order
const std::string kPairAlphabet = "123456789abcdefghijklmnopqrstuvwxyz";

// symbol rank used for ordering: '+' before '-' before pair ids
int symbol_rank(int sym) {
  if (sym == Clan::kPlus) return 0;
  if (sym == Clan::kMinus) return 1;
  return 1 + sym;
}

}  // namespace

Clan::Clan(std::vector<int> symbols) : sym_(std::move(symbols)) {
  if (sym_.empty()) throw std::invalid_argument("Clan: empty symbol sequence");
  std::map<int, int> occurrences;
  for (int s : sym_) {
    if (s == kPlus || s == kMinus) continue;
    if (s < 1) throw std::invalid_argument("Clan: bad symbol code");
    ++occurrences[s];
  }
  for (const auto& [id, count] : occurrences) {
    if (count != 2) throw std::invalid_argument("Clan: pair id must occur exactly twice");
  }
  canonicalize();
}

void Clan::canonicalize() {
  std::map<int, int> rename;
  int next = 1;
  for (int& s : sym_) {
    if (s <= 0) continue;
    auto it = rename.find(s);
    if (it == rename.end()) it = rename.emplace(s, next++).first;
    s = it->second;
  }
}

std::optional<Clan> Clan::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> symbols;
  std::map<char, int> ids;
  int next = 1;
  for (char c : text) {
    if (c == '+') {
      symbols.push_back(kPlus);
    } else if (c == '-') {
      symbols.push_back(kMinus);
    } else if (kPairAlphabet.find(c) != std::string::npos) {
      auto it = ids.find(c);
      if (it == ids.end()) it = ids.emplace(c, next++).first;
      symbols.push_back(it->second);
    } else {
      return std::nullopt;
    }
  }
  std::map<int, int> occurrences;
  for (int s : symbols)
    if (s > 0) ++occurrences[s];
  for (const auto& [id, count] : occurrences)
    if (count != 2) return std::nullopt;
  return Clan(std::move(symbols));
}

int Clan::plus_count() const {
  return static_cast<int>(std::count(sym_.begin(), sym_.end(), kPlus));
}

int Clan::minus_count() const {
  return static_cast<int>(std::count(sym_.begin(), sym_.end(), kMinus));
}

int Clan::pair_count() const {
  int ends = 0;
  for (int s : sym_)
    if (s > 0) ++ends;
  return ends / 2;
}

std::vector<std::pair<int, int>> Clan::pairs() const {
  std::map<int, std::pair<int, int>> by_id;
  for (int pos = 1; pos <= size(); ++pos) {
    int s = symbol(pos);
    if (s <= 0) continue;
    auto it = by_id.find(s);
    if (it == by_id.end())
      by_id.emplace(s, std::make_pair(pos, 0));
    else
      it->second.second = pos;
  }
  std::vector<std::pair<int, int>> out;
  out.reserve(by_id.size());
  for (const auto& [id, positions] : by_id) out.push_back(positions);
  return out;
}

std::vector<int> Clan::plus_prefix_counts() const {
  std::vector<int> counts;
  counts.reserve(sym_.size());
  int running = 0;
  for (int s : sym_) {
    if (s == kPlus) ++running;
    counts.push_back(running);
  }
  return counts;
}

bool Clan::fits(const RealFormSpec& spec) const {
  return spec.valid() && size() == spec.n() && plus_count() + pair_count() == spec.p &&
         minus_count() + pair_count() == spec.q;
}

std::string Clan::to_string() const {
  std::string out;
  out.reserve(sym_.size());
  for (int s : sym_) {
    if (s == kPlus)
      out.push_back('+');
    else if (s == kMinus)
      out.push_back('-');
    else if (s <= static_cast<int>(kPairAlphabet.size()))
      out.push_back(kPairAlphabet[static_cast<size_t>(s - 1)]);
    else
      out.push_back('?');
  }
  return out;
}

std::strong_ordering operator<=>(const Clan& a, const Clan& b) {
  const size_t len = std::min(a.sym_.size(), b.sym_.size());
  for (size_t k = 0; k < len; ++k) {
    int ra = symbol_rank(a.sym_[k]);
    int rb = symbol_rank(b.sym_[k]);
    if (ra != rb) return ra <=> rb;
  }
  return a.sym_.size() <=> b.sym_.size();
}

}  // namespace korbit
