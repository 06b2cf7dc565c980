#include "korbit/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace korbit {

WeylElement::WeylElement(std::vector<int> one_line) : perm_(std::move(one_line)) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0) throw std::invalid_argument("WeylElement: empty one-line word");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : perm_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("WeylElement: not a bijection on {1..n}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

WeylElement WeylElement::identity(int rank) {
  std::vector<int> p(static_cast<size_t>(rank));
  std::iota(p.begin(), p.end(), 1);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_transposition(int rank, SimpleIndex i) {
  return identity(rank).right_multiply(i);
}

bool WeylElement::is_identity() const {
  for (int k = 1; k <= rank(); ++k)
    if (image(k) != k) return false;
  return true;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("WeylElement product: rank mismatch");
  std::vector<int> p(static_cast<size_t>(u.rank()));
  for (int k = 1; k <= u.rank(); ++k) p[static_cast<size_t>(k - 1)] = u.image(v.image(k));
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (int k = 1; k <= rank(); ++k) p[static_cast<size_t>(image(k) - 1)] = k;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::right_multiply(SimpleIndex i) const {
  if (i < 1 || i >= rank()) throw std::invalid_argument("simple index out of range");
  std::vector<int> p = perm_;
  std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
  return WeylElement(std::move(p));
}

bool WeylElement::has_right_descent(SimpleIndex i) const {
  if (i < 1 || i >= rank()) throw std::invalid_argument("simple index out of range");
  return image(i) > image(i + 1);
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  for (int k = 1; k <= rank(); ++k) {
    if (k > 1) os << ',';
    os << image(k);
  }
  return os.str();
}

int length(const WeylElement& w) {
  int inv = 0;
  for (int a = 1; a <= w.rank(); ++a)
    for (int b = a + 1; b <= w.rank(); ++b)
      if (w.image(a) > w.image(b)) ++inv;
  return inv;
}

Word reduced_word(const WeylElement& w) {
  // Peeling the smallest right descent off w produces the word letters
  // from the right end inward.
  Word reversed;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    for (SimpleIndex i = 1; i < cur.rank(); ++i) {
      if (cur.has_right_descent(i)) {
        reversed.push_back(i);
        cur = cur.right_multiply(i);
        break;
      }
    }
  }
  return Word(reversed.rbegin(), reversed.rend());
}

namespace {

void collect_reduced_words(const WeylElement& w, Word& suffix, std::vector<Word>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (SimpleIndex i = 1; i < w.rank(); ++i) {
    if (w.has_right_descent(i)) {
      suffix.push_back(i);
      WeylElement next = w.right_multiply(i);
      collect_reduced_words(next, suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const WeylElement& w) {
  std::vector<Word> out;
  Word suffix;
  collect_reduced_words(w, suffix, out);
  return out;
}

WeylElement from_word(int rank, const Word& word) {
  WeylElement w = WeylElement::identity(rank);
  for (SimpleIndex i : word) w = w.right_multiply(i);
  return w;
}

bool is_reduced(int rank, const Word& word) {
  return static_cast<int>(word.size()) == length(from_word(rank, word));
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  // Grow the set of elements with a reduced subword inside one fixed
  // reduced word of w; by the subword property this is exactly [e, w].
  const Word rw = reduced_word(w);
  std::set<WeylElement> below;
  below.insert(WeylElement::identity(w.rank()));
  for (SimpleIndex s : rw) {
    std::set<WeylElement> grown = below;
    for (const WeylElement& v : below) {
      if (!v.has_right_descent(s)) grown.insert(v.right_multiply(s));
    }
    below.swap(grown);
  }
  return below.count(u) > 0;
}

WeylElement demazure_product(const WeylElement& u, const WeylElement& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("demazure_product: rank mismatch");
  WeylElement result = u;
  for (SimpleIndex s : reduced_word(v)) {
    if (!result.has_right_descent(s)) result = result.right_multiply(s);
  }
  return result;
}

WeylElement longest_element(const std::vector<SimpleIndex>& J, int rank) {
  for (SimpleIndex j : J) {
    if (j < 1 || j >= rank) throw std::invalid_argument("longest_element: index out of range");
  }
  std::vector<SimpleIndex> sorted = J;
  std::sort(sorted.begin(), sorted.end());
  WeylElement w = WeylElement::identity(rank);
  bool raised = true;
  while (raised) {
    raised = false;
    for (SimpleIndex j : sorted) {
      if (!w.has_right_descent(j)) {
        w = w.right_multiply(j);
        raised = true;
        break;
      }
    }
  }
  return w;
}

std::vector<std::vector<WeylElement>> elements_by_length(int rank) {
  std::vector<std::vector<WeylElement>> layers;
  std::set<WeylElement> seen;
  std::vector<WeylElement> layer{WeylElement::identity(rank)};
  seen.insert(layer.front());
  while (!layer.empty()) {
    layers.push_back(layer);
    std::set<WeylElement> next;
    for (const WeylElement& w : layer) {
      for (SimpleIndex i = 1; i < rank; ++i) {
        if (!w.has_right_descent(i)) {
          WeylElement ws = w.right_multiply(i);
          if (seen.insert(ws).second) next.insert(ws);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return layers;
}

std::vector<WeylElement> all_elements(int rank) {
  std::vector<int> p(static_cast<size_t>(rank));
  std::iota(p.begin(), p.end(), 1);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k > 0) os << ',';
    os << word[k];
  }
  return os.str();
}

std::optional<Word> parse_word(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "e") return Word{};
  Word out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    if (next == pos) return std::nullopt;
    int value = 0;
    for (size_t k = pos; k < next; ++k) {
      if (text[k] < '0' || text[k] > '9') return std::nullopt;
      value = value * 10 + (text[k] - '0');
    }
    if (value < 1) return std::nullopt;
    out.push_back(value);
    pos = next + 1;
  }
  if (!text.empty() && text.back() == ',') return std::nullopt;
  return out;
}

}  // namespace korbit
