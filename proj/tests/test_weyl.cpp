#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "korbit/weyl.hpp"

using namespace korbit;

namespace {

// independent inversion counter, quadratic on purpose
int brute_inversions(const WeylElement& w) {
  int count = 0;
  for (int a = 1; a <= w.rank(); ++a)
    for (int b = a + 1; b <= w.rank(); ++b)
      if (w.image(a) > w.image(b)) ++count;
  return count;
}

// every word over {1..rank-1} of the given length
std::vector<Word> all_words(int rank, int len) {
  std::vector<Word> out{{}};
  for (int step = 0; step < len; ++step) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (SimpleIndex i = 1; i < rank; ++i) {
        Word e = w;
        e.push_back(i);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

// u <= w in Bruhat order, checked by scanning every subword mask of one
// reduced word of w for a reduced subword multiplying to u
bool bruhat_leq_by_masks(const WeylElement& u, const WeylElement& w) {
  const Word base = reduced_word(w);
  const size_t n = base.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Word sub;
    for (size_t k = 0; k < n; ++k)
      if (mask & (uint64_t{1} << k)) sub.push_back(base[k]);
    if (is_reduced(u.rank(), sub) && from_word(u.rank(), sub) == u) return true;
  }
  return false;
}

WeylElement longest_of(int rank) {
  std::vector<int> rev(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) rev[static_cast<size_t>(k)] = rank - k;
  return WeylElement(std::move(rev));
}

}  // namespace

TEST_CASE("length equals inversion count") {
  for (int rank : {2, 3, 4, 5})
    for (const WeylElement& w : all_elements(rank)) CHECK(length(w) == brute_inversions(w));
}

TEST_CASE("reduced words multiply back and have exact length") {
  for (int rank : {3, 4, 5}) {
    for (const WeylElement& w : all_elements(rank)) {
      const Word word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == length(w));
      CHECK(from_word(rank, word) == w);
      CHECK(is_reduced(rank, word));
    }
  }
}

TEST_CASE("all_reduced_words matches brute enumeration") {
  for (int rank : {3, 4}) {
    for (const WeylElement& w : all_elements(rank)) {
      const int len = length(w);
      if (len > 4) continue;  // keep the brute sweep cheap
      std::set<Word> brute;
      for (const Word& word : all_words(rank, len))
        if (from_word(rank, word) == w) brute.insert(word);
      const auto listed = all_reduced_words(w);
      CHECK(std::set<Word>(listed.begin(), listed.end()) == brute);
      CHECK(listed.size() == brute.size());  // no duplicates either
    }
  }
  // the classic: both reduced words of the longest element of S_3
  const auto words = all_reduced_words(longest_of(3));
  CHECK(std::set<Word>(words.begin(), words.end()) == std::set<Word>{{1, 2, 1}, {2, 1, 2}});
}

TEST_CASE("bruhat order agrees with subword-mask oracle") {
  for (int rank : {3, 4}) {
    const auto all = all_elements(rank);
    for (const WeylElement& u : all)
      for (const WeylElement& w : all) CHECK(bruhat_leq(u, w) == bruhat_leq_by_masks(u, w));
  }
}

TEST_CASE("bruhat order poset axioms") {
  for (int rank : {3, 4}) {
    const auto all = all_elements(rank);
    const WeylElement e = WeylElement::identity(rank);
    const WeylElement w0 = longest_of(rank);
    for (const WeylElement& u : all) {
      CHECK(bruhat_leq(u, u));
      CHECK(bruhat_leq(e, u));
      CHECK(bruhat_leq(u, w0));
      for (const WeylElement& w : all) {
        if (bruhat_leq(u, w) && bruhat_leq(w, u)) CHECK(u == w);
        if (bruhat_leq(u, w) && u != w) CHECK(length(u) < length(w));
      }
    }
  }
}

TEST_CASE("demazure product properties") {
  const int rank = 3;
  const auto all = all_elements(rank);
  const WeylElement e = WeylElement::identity(rank);
  const WeylElement w0 = longest_of(rank);
  for (const WeylElement& u : all) {
    CHECK(demazure_product(u, e) == u);
    CHECK(demazure_product(e, u) == u);
    CHECK(demazure_product(u, w0) == w0);
    CHECK(demazure_product(w0, u) == w0);
    for (const WeylElement& v : all) {
      const WeylElement uv = demazure_product(u, v);
      CHECK(length(uv) >= std::max(length(u), length(v)));
      if (length(u * v) == length(u) + length(v)) CHECK(uv == u * v);
      for (const WeylElement& w : all)
        CHECK(demazure_product(demazure_product(u, v), w) ==
              demazure_product(u, demazure_product(v, w)));
    }
  }
  for (SimpleIndex i = 1; i < rank; ++i) {
    const WeylElement s = WeylElement::simple_transposition(rank, i);
    CHECK(demazure_product(s, s) == s);  // idempotent generators, unlike the group
  }
}

TEST_CASE("demazure product is reduced-word independent") {
  const int rank = 4;
  for (const WeylElement& u : all_elements(rank)) {
    if (length(u) > 3) continue;
    for (const WeylElement& v : all_elements(rank)) {
      if (length(v) > 3) continue;
      const WeylElement expected = demazure_product(u, v);
      for (const Word& word : all_reduced_words(v)) {
        WeylElement acc = u;
        for (SimpleIndex i : word) {
          const WeylElement next = acc.right_multiply(i);
          if (length(next) > length(acc)) acc = next;
        }
        CHECK(acc == expected);
      }
    }
  }
}

TEST_CASE("longest parabolic element vs brute subgroup closure") {
  const int rank = 4;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<SimpleIndex> J;
    for (SimpleIndex i = 1; i < rank; ++i)
      if (mask & (1 << (i - 1))) J.push_back(i);
    // close {s_j : j in J} under multiplication
    std::set<WeylElement> subgroup{WeylElement::identity(rank)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const WeylElement& w : std::vector<WeylElement>(subgroup.begin(), subgroup.end()))
        for (SimpleIndex j : J)
          if (subgroup.insert(w.right_multiply(j)).second) grew = true;
    }
    const WeylElement expected =
        *std::max_element(subgroup.begin(), subgroup.end(),
                          [](const WeylElement& a, const WeylElement& b) {
                            return length(a) < length(b);
                          });
    const WeylElement got = longest_element(J, rank);
    CHECK(got == expected);
    // descent set of the parabolic longest element is exactly J
    for (SimpleIndex i = 1; i < rank; ++i)
      CHECK(got.has_right_descent(i) == (std::find(J.begin(), J.end(), i) != J.end()));
  }
  CHECK(longest_element({1, 2, 3}, 4) == longest_of(4));
  CHECK(longest_element({}, 4) == WeylElement::identity(4));
}

TEST_CASE("elements_by_length layer sizes") {
  const auto s3 = elements_by_length(3);
  REQUIRE(s3.size() == 4);
  CHECK(s3[0].size() == 1);
  CHECK(s3[1].size() == 2);
  CHECK(s3[2].size() == 2);
  CHECK(s3[3].size() == 1);

  const auto s4 = elements_by_length(4);
  const std::vector<size_t> expected{1, 3, 5, 6, 5, 3, 1};
  REQUIRE(s4.size() == expected.size());
  for (size_t l = 0; l < expected.size(); ++l) CHECK(s4[l].size() == expected[l]);

  // cross-check against a histogram of all elements
  std::map<int, int> histogram;
  for (const WeylElement& w : all_elements(4)) ++histogram[length(w)];
  for (size_t l = 0; l < s4.size(); ++l) {
    CHECK(histogram[static_cast<int>(l)] == static_cast<int>(s4[l].size()));
    for (const WeylElement& w : s4[l]) CHECK(length(w) == static_cast<int>(l));
  }
}

TEST_CASE("word text round trips") {
  CHECK(word_to_string({}) == "e");
  CHECK(word_to_string({1, 2, 1}) == "1,2,1");
  CHECK(parse_word("e") == Word{});
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("3") == Word{3});
  for (const std::string bad : {"", ",1", "1,", "1,,2", "a", "0", "1a", "1, 2"})
    CHECK_FALSE(parse_word(bad).has_value());
}

TEST_CASE("one-line constructor validates") {
  CHECK_THROWS_AS(WeylElement({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WeylElement({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WeylElement({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(WeylElement({}), std::invalid_argument);
  CHECK(WeylElement({2, 1, 3}).image(1) == 2);
}
