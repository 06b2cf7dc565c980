#ifndef KORBIT_WEYL_HPP
#define KORBIT_WEYL_HPP

/*
  Symmetric group S_n as the Weyl group of type A_{n-1}.

  Elements are kept in one-line notation. Simple generators s_i
  (i = 1..n-1) are adjacent transpositions; right multiplication by s_i
  swaps positions i and i+1 of the one-line word. Everything here is a
  pure function over immutable values.
*/

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace korbit {

// 1-based index of a simple generator; valid range is 1..rank-1.
using SimpleIndex = int;

// A word in the simple generators, applied left to right.
using Word = std::vector<SimpleIndex>;

class WeylElement {
 public:
  // one_line[k] is the image of k+1; must be a bijection on {1..n}.
  explicit WeylElement(std::vector<int> one_line);

  static WeylElement identity(int rank);
  static WeylElement simple_transposition(int rank, SimpleIndex i);

  int rank() const { return static_cast<int>(perm_.size()); }
  // image of k under the permutation, 1 <= k <= rank
  int image(int k) const { return perm_[static_cast<size_t>(k - 1)]; }
  const std::vector<int>& one_line() const { return perm_; }

  bool is_identity() const;

  // group product: (u*v)(k) = u(v(k))
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  WeylElement inverse() const;

  // w * s_i, i.e. swap of positions i, i+1 in one-line notation
  WeylElement right_multiply(SimpleIndex i) const;
  // true iff l(w s_i) < l(w), i.e. w(i) > w(i+1)
  bool has_right_descent(SimpleIndex i) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) = default;
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) = default;

  // "3,2,1" style, for diagnostics and stable orderings
  std::string to_string() const;

 private:
  std::vector<int> perm_;
};

// number of inversions; equals the dimension difference of the Bruhat cell
int length(const WeylElement& w);

// Deterministic reduced word: repeatedly strip the smallest right descent.
// The result multiplies to w and has exactly length(w) letters.
Word reduced_word(const WeylElement& w);

// Every reduced word of w, in a deterministic order (letters chosen
// ascending at each recursion step). Intended for small ranks only.
std::vector<Word> all_reduced_words(const WeylElement& w);

// product of a word of simple generators, left to right
WeylElement from_word(int rank, const Word& word);

// a word is reduced iff its letter count equals the length of its product
bool is_reduced(int rank, const Word& word);

// Bruhat order via the subword property: u <= w iff one (hence any)
// reduced word of w has a reduced subword multiplying to u.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// 0-Hecke product: fold a reduced word of v onto u, keeping only the
// letters that increase length. Independent of the chosen reduced word.
WeylElement demazure_product(const WeylElement& u, const WeylElement& v);

// Longest element of the standard parabolic subgroup generated by
// {s_j : j in J}. J empty gives the identity.
WeylElement longest_element(const std::vector<SimpleIndex>& J, int rank);

// layers[l] = all elements of length l, each layer sorted; BFS over
// right multiplication with dedup by permutation
std::vector<std::vector<WeylElement>> elements_by_length(int rank);

// all n! elements in lexicographic one-line order
std::vector<WeylElement> all_elements(int rank);

std::string word_to_string(const Word& word);             // "1,2,1"; "e" if empty
std::optional<Word> parse_word(const std::string& text);  // inverse of the above

}  // namespace korbit

#endif
