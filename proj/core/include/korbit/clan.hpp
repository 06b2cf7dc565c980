#ifndef KORBIT_CLAN_HPP
#define KORBIT_CLAN_HPP

/*
  Clans: finite symbol strings parametrizing the GL(p) x GL(q) orbits on
  the full flag variety of GL(p+q).

  A clan on n = p+q positions is a sequence of '+', '-' and pair symbols
  where each pair symbol occurs exactly twice, subject to
      #plus + #pairs = p   and   #minus + #pairs = q.
  Pair ids are normalized so first occurrences appear in increasing id
  order; that canonical form is the unique representation and all
  equality is canonical-form equality.

  Text format: '+' and '-' for signs, a digit or letter per pair id,
  e.g. "++-", "1+1", "1212". Parser and printer round-trip.
*/

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace korbit {

// Signature (p,q) of U(p,q); fixes G = GL(p+q), K = GL(p) x GL(q) block
// diagonal, and the upper-triangular reference Borel.
struct RealFormSpec {
  int p = 0;
  int q = 0;

  bool valid() const { return p >= 1 && q >= 1; }
  int n() const { return p + q; }
  // dimension of a closed orbit: a product of the two factor flag varieties
  int base_dim() const { return (p * (p - 1) + q * (q - 1)) / 2; }
  int flag_dim() const { return n() * (n() - 1) / 2; }

  friend bool operator==(const RealFormSpec&, const RealFormSpec&) = default;
};

class Clan {
 public:
  static constexpr int kPlus = 0;
  static constexpr int kMinus = -1;
  // pair ids are 1,2,3,... in canonical first-occurrence order

  // symbols are canonicalized on construction
  explicit Clan(std::vector<int> symbols);

  static std::optional<Clan> parse(const std::string& text);

  int size() const { return static_cast<int>(sym_.size()); }
  int symbol(int pos) const { return sym_[static_cast<size_t>(pos - 1)]; }  // 1-based
  bool is_sign(int pos) const { return symbol(pos) <= 0; }
  bool is_pair(int pos) const { return symbol(pos) > 0; }

  int plus_count() const;
  int minus_count() const;
  int pair_count() const;
  bool has_pairs() const { return pair_count() > 0; }

  // position pairs (first, second), 1-based, ordered by pair id
  std::vector<std::pair<int, int>> pairs() const;

  // counts of '+' among the first i symbols, i = 1..n (pairs excluded)
  std::vector<int> plus_prefix_counts() const;

  // true iff the symbol counts fit the signature (p,q)
  bool fits(const RealFormSpec& spec) const;

  std::string to_string() const;

  friend bool operator==(const Clan& a, const Clan& b) = default;
  // lexicographic with '+' < '-' < pair ids, matching text order
  friend std::strong_ordering operator<=>(const Clan& a, const Clan& b);

 private:
  void canonicalize();
  std::vector<int> sym_;
};

}  // namespace korbit

#endif
