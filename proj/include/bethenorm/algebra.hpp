#ifndef BETHENORM_ALGEBRA_HPP
#define BETHENORM_ALGEBRA_HPP

// Type A root data, the word calculus on Verma modules of sl(n+1), the
// vector representation and the Shapovalov form.
//
// A Word (i1, ..., im) stands for f_{i1} ... f_{im} v, so the last letter
// acts first. Words are a spanning set of the Verma module, not a basis:
// for three or more distinct letters the orderings of a fixed content are
// linearly dependent. Zero tests therefore go through the Gram matrix.

#include <bethenorm/linalg.hpp>
#include <bethenorm/rational.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bethenorm {

/// Pairings (lambda, alpha_i), i = 1..rank.
class Weight {
 public:
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("weight must have rank >= 1");
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  /// 1-based, matching the root labels.
  const Rational& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Rational>& coords() const { return coords_; }

  /// The sl(n) weight with pairings (lambda_2, ..., lambda_n).
  Weight drop_first() const {
    if (rank() < 2) throw InputError("cannot drop the first coordinate of a rank 1 weight");
    return Weight({coords_.begin() + 1, coords_.end()});
  }

  /// Pairings (lambda_1, ..., lambda_k).
  Weight truncate(int k) const {
    if (k < 1 || k > rank()) throw InputError("truncation rank out of range");
    return Weight({coords_.begin(), coords_.begin() + k});
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + bethenorm::to_string(coords_[i]);
    return s + ")";
  }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> coords_;
};

struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  /// Sorted letters; two words have the same weight iff their contents agree.
  std::vector<int> content() const {
    std::vector<int> c = letters;
    std::sort(c.begin(), c.end());
    return c;
  }

  Word without(std::size_t pos) const {
    Word w = *this;
    w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
    return w;
  }

  /// f_i applied to this word.
  Word prepend(int i) const {
    Word w;
    w.letters.reserve(letters.size() + 1);
    w.letters.push_back(i);
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    return w;
  }

  std::string to_string() const {
    std::string s = "f(";
    for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
    return s + ")";
  }

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// (alpha_i, alpha_j) for type A_n.
inline int cartan(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw InputError("root index out of range");
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

inline void check_word(const Word& w, int n) {
  for (int l : w.letters)
    if (l < 1 || l > n) throw InputError("word letter " + std::to_string(l) + " out of range 1.." + std::to_string(n));
}

/// Pairings (lambda - sum of the word's roots, alpha_i), i = 1..n.
inline std::vector<Rational> weight_of_word(const Weight& lambda, const Word& w) {
  const int n = lambda.rank();
  check_word(w, n);
  std::vector<Rational> out = lambda.coords();
  for (int l : w.letters)
    for (int i = 1; i <= n; ++i) out[i - 1] -= cartan(i, l, n);
  return out;
}

class VermaVector {
 public:
  explicit VermaVector(Weight w) : weight_(std::move(w)) {}

  static VermaVector word(Weight w, Word word, const Rational& coeff = Rational(1)) {
    VermaVector v(std::move(w));
    v.add(std::move(word), coeff);
    return v;
  }

  const Weight& weight() const { return weight_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(Word w, const Rational& c) {
    if (c == 0) return;
    check_word(w, weight_.rank());
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  VermaVector& operator+=(const VermaVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }

  VermaVector scaled(const Rational& s) const {
    VermaVector out(weight_);
    if (s == 0) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * s);
    return out;
  }

  /// Common content of all words; nullopt for the zero vector.
  std::optional<std::vector<int>> content() const {
    if (terms_.empty()) return std::nullopt;
    std::vector<int> c = terms_.begin()->first.content();
    for (const auto& [w, coeff] : terms_)
      if (w.content() != c) throw InputError("VermaVector is not homogeneous");
    return c;
  }

 private:
  Weight weight_;
  std::map<Word, Rational> terms_;
};

/// e_i applied to the single word w: sum over occurrences of i, each
/// contributing (weight of the suffix to its right, alpha_i) times the word
/// with that letter removed.
inline void accumulate_e_on_word(const Weight& lambda, int i, const Word& w, const Rational& coeff, VermaVector& out) {
  const int n = lambda.rank();
  Rational pairing = lambda[i];
  for (std::size_t p = w.size(); p-- > 0;) {
    if (w.letters[p] == i) out.add(w.without(p), coeff * pairing);
    pairing -= cartan(i, w.letters[p], n);
  }
}

inline VermaVector apply_e(int i, const VermaVector& x) {
  const Weight& lambda = x.weight();
  if (i < 1 || i > lambda.rank()) throw InputError("root index out of range");
  VermaVector out(lambda);
  for (const auto& [w, c] : x.terms()) accumulate_e_on_word(lambda, i, w, c, out);
  return out;
}

inline VermaVector apply_f(int i, const VermaVector& x) {
  if (i < 1 || i > x.weight().rank()) throw InputError("root index out of range");
  VermaVector out(x.weight());
  for (const auto& [w, c] : x.terms()) out.add(w.prepend(i), c);
  return out;
}

/// Shapovalov form on one Verma module with memoized word pairings.
/// B(f_i a', b) = B(a', e_i b), B(v, v) = 1. Not thread-safe; use one
/// instance per thread.
class ShapovalovForm {
 public:
  explicit ShapovalovForm(Weight lambda) : lambda_(std::move(lambda)) {}

  const Weight& weight() const { return lambda_; }

  Rational pair(const Word& a, const Word& b) {
    if (a.size() != b.size()) return Rational(0);
    if (a.empty()) return Rational(1);
    if (a.content() != b.content()) return Rational(0);
    std::string key = encode(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int i = a.letters.front();
    const Word rest(std::vector<int>(a.letters.begin() + 1, a.letters.end()));
    VermaVector eb(lambda_);
    accumulate_e_on_word(lambda_, i, b, Rational(1), eb);
    Rational acc(0);
    for (const auto& [w, c] : eb.terms()) acc += c * pair(rest, w);
    memo_.emplace(std::move(key), acc);
    return acc;
  }

  Rational pair(const VermaVector& x, const VermaVector& y) {
    if (!(x.weight() == lambda_) || !(y.weight() == lambda_))
      throw InputError("Shapovalov pairing of vectors from different Verma modules");
    Rational acc(0);
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) {
        Rational p = pair(a, b);
        if (p != 0) acc += ca * cb * p;
      }
    return acc;
  }

  /// B(x, w) for a single word w.
  Rational pair(const VermaVector& x, const Word& w) {
    Rational acc(0);
    for (const auto& [a, ca] : x.terms()) {
      Rational p = pair(a, w);
      if (p != 0) acc += ca * p;
    }
    return acc;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  static std::string encode(const Word& a, const Word& b) {
    std::string s;
    s.reserve(a.size() + b.size() + 1);
    for (int l : a.letters) s.push_back(static_cast<char>(l));
    s.push_back('|');
    for (int l : b.letters) s.push_back(static_cast<char>(l));
    return s;
  }

  Weight lambda_;
  std::unordered_map<std::string, Rational> memo_;
};

inline Rational shapovalov_pair(const VermaVector& x, const VermaVector& y) {
  if (!(x.weight() == y.weight())) throw InputError("Shapovalov pairing of vectors from different Verma modules");
  ShapovalovForm form(x.weight());
  return form.pair(x, y);
}

inline void check_multiplicity_free(const std::vector<int>& content, int n) {
  std::vector<int> c = content;
  std::sort(c.begin(), c.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > n) throw InputError("root index out of range in weight-space content");
    if (i > 0 && c[i] == c[i - 1])
      throw InputError("weight spaces with a repeated simple root are not supported (root " + std::to_string(c[i]) +
                       ")");
  }
}

/// Distinct orderings of the content, lexicographic.
inline std::vector<Word> spanning_words(std::vector<int> content) {
  std::sort(content.begin(), content.end());
  std::vector<Word> out;
  do {
    out.emplace_back(content);
  } while (std::next_permutation(content.begin(), content.end()));
  return out;
}

/// Dimension of the Verma weight space lambda - sum_{i in S} alpha_i for
/// multiplicity-free S: each maximal run of consecutive roots of length r
/// splits into consecutive positive roots in 2^(r-1) ways.
inline std::size_t verma_weight_multiplicity(std::vector<int> content) {
  std::sort(content.begin(), content.end());
  std::size_t dim = 1;
  for (std::size_t i = 1; i < content.size(); ++i)
    if (content[i] == content[i - 1] + 1) dim *= 2;
  return dim;
}

inline RationalMatrix gram_matrix(ShapovalovForm& form, const std::vector<Word>& words) {
  RationalMatrix g(words.size(), words.size(), Rational(0));
  for (std::size_t r = 0; r < words.size(); ++r)
    for (std::size_t c = 0; c < words.size(); ++c) g(r, c) = form.pair(words[r], words[c]);
  return g;
}

/// Gram matrix of all distinct orderings of S in lexicographic order.
inline RationalMatrix gram_matrix(const Weight& lambda, const std::vector<int>& content) {
  check_multiplicity_free(content, lambda.rank());
  ShapovalovForm form(lambda);
  return gram_matrix(form, spanning_words(content));
}

/// A weight space lambda - sum_{i in S} alpha_i together with a basis of
/// words, verified nondegenerate.
struct WeightSpace {
  std::vector<int> content;
  std::vector<Word> words;       // all spanning words, lexicographic
  std::vector<Word> basis;       // first independent subset of `words`
  RationalMatrix basis_gram;     // Gram matrix of `basis`
  std::size_t dimension = 0;     // Kostant multiplicity
};

/// Throws DegenerateError if the form is degenerate on the weight space.
inline WeightSpace make_weight_space(ShapovalovForm& form, std::vector<int> content) {
  check_multiplicity_free(content, form.weight().rank());
  std::sort(content.begin(), content.end());
  WeightSpace ws;
  ws.content = content;
  ws.words = spanning_words(content);
  ws.dimension = verma_weight_multiplicity(content);
  const RationalMatrix g = gram_matrix(form, ws.words);
  const std::vector<std::size_t> pivots = pivot_columns(g);
  if (pivots.size() != ws.dimension) {
    std::string s;
    for (int c : content) s += (s.empty() ? "" : ",") + std::to_string(c);
    throw DegenerateError("degenerate weight: Shapovalov form of rank " + std::to_string(pivots.size()) +
                          " on a weight space of dimension " + std::to_string(ws.dimension) + " (content {" + s +
                          "}, lambda=" + form.weight().to_string() + ")");
  }
  for (std::size_t p : pivots) ws.basis.push_back(ws.words[p]);
  ws.basis_gram = gram_matrix(form, ws.basis);
  return ws;
}

/// Zero test by pairing against every spanning word of x's weight space.
/// Throws DegenerateError when that weight space has a singular Gram matrix.
inline bool is_zero(ShapovalovForm& form, const VermaVector& x) {
  const auto content = x.content();
  if (!content) return true;
  const WeightSpace ws = make_weight_space(form, *content);
  for (const Word& w : ws.words)
    if (form.pair(x, w) != 0) return false;
  return true;
}

inline bool is_zero(const VermaVector& x) {
  ShapovalovForm form(x.weight());
  return is_zero(form, x);
}

/// w_m = f_m ... f_1 v_0 in the vector representation, 0 <= m <= rank.
class LinRepIndex {
 public:
  LinRepIndex(int m, int rank) : m_(m) {
    if (m < 0 || m > rank) throw InputError("vector-representation index out of range");
  }
  int value() const { return m_; }
  friend auto operator<=>(const LinRepIndex&, const LinRepIndex&) = default;

 private:
  int m_;
};

enum class Generator { e, f };

/// f_i w_m = w_{m+1} iff i = m+1; e_i w_m = w_{m-1} iff i = m; zero otherwise.
inline std::optional<std::pair<LinRepIndex, Rational>> linrep_action(Generator g, int i, LinRepIndex m, int rank) {
  if (i < 1 || i > rank) throw InputError("root index out of range");
  if (g == Generator::f) {
    if (i == m.value() + 1) return std::pair{LinRepIndex(m.value() + 1, rank), Rational(1)};
    return std::nullopt;
  }
  if (i == m.value()) return std::pair{LinRepIndex(m.value() - 1, rank), Rational(1)};
  return std::nullopt;
}

/// Element of V_lambda (x) V_omega as a combination of (word, w_m).
class TensorVector {
 public:
  explicit TensorVector(Weight w) : weight_(std::move(w)) {}

  const Weight& weight() const { return weight_; }
  const std::map<std::pair<Word, int>, Rational>& terms() const { return terms_; }

  void add(Word w, LinRepIndex m, const Rational& c) {
    if (c == 0) return;
    check_word(w, weight_.rank());
    auto key = std::pair{std::move(w), m.value()};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const VermaVector& x, LinRepIndex m) {
    for (const auto& [w, c] : x.terms()) add(w, m, c);
  }

  /// The V_lambda vector multiplying w_m.
  VermaVector component(int m) const {
    VermaVector out(weight_);
    for (const auto& [key, c] : terms_)
      if (key.second == m) out.add(key.first, c);
    return out;
  }

  Rational coefficient(const Word& w, int m) const {
    auto it = terms_.find({w, m});
    return it == terms_.end() ? Rational(0) : it->second;
  }

 private:
  Weight weight_;
  std::map<std::pair<Word, int>, Rational> terms_;
};

/// e_i (x (x) w_m) = e_i x (x) w_m + x (x) e_i w_m.
inline TensorVector apply_e(int i, const TensorVector& t) {
  const int n = t.weight().rank();
  TensorVector out(t.weight());
  for (int m = 0; m <= n; ++m) {
    const VermaVector x = t.component(m);
    if (x.empty()) continue;
    out.add(apply_e(i, x), LinRepIndex(m, n));
    if (auto act = linrep_action(Generator::e, i, LinRepIndex(m, n), n)) out.add(x.scaled(act->second), act->first);
  }
  return out;
}

/// Tensor product form; the w_m are orthonormal.
inline Rational shapovalov_pair(ShapovalovForm& form, const TensorVector& x, const TensorVector& y) {
  const int n = x.weight().rank();
  Rational acc(0);
  for (int m = 0; m <= n; ++m) acc += form.pair(x.component(m), y.component(m));
  return acc;
}

}  // namespace bethenorm

#endif  // BETHENORM_ALGEBRA_HPP
