#include <bethenorm/algebra.hpp>
#include <bethenorm/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bethenorm;

namespace {

Weight W(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Weight(v);
}

// Pairing computed by peeling f's off the right argument instead of the
// left: B(x, f_j b') = B(e_j x, b'), B(x, v) = coefficient of v in x.
Rational right_peel(const VermaVector& x, const Word& b) {
  if (b.empty()) {
    auto it = x.terms().find(Word{});
    return it == x.terms().end() ? Rational(0) : it->second;
  }
  const Word rest(std::vector<int>(b.letters.begin() + 1, b.letters.end()));
  return right_peel(apply_e(b.letters.front(), x), rest);
}

Word random_word(std::mt19937_64& rng, int n, std::size_t len) {
  std::vector<int> l;
  for (std::size_t i = 0; i < len; ++i) l.push_back(1 + static_cast<int>(rng() % n));
  return Word(l);
}

Weight random_weight(std::mt19937_64& rng, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(make_rational(static_cast<long>(rng() % 13) - 3, 1 + static_cast<long>(rng() % 3)));
  return Weight(v);
}

}  // namespace

TEST(Cartan, TypeAEntries) {
  EXPECT_EQ(cartan(1, 1, 3), 2);
  EXPECT_EQ(cartan(1, 2, 3), -1);
  EXPECT_EQ(cartan(2, 1, 3), -1);
  EXPECT_EQ(cartan(1, 3, 3), 0);
  EXPECT_THROW(cartan(0, 1, 3), InputError);
  EXPECT_THROW(cartan(1, 4, 3), InputError);
}

TEST(WeightOfWord, Examples) {
  EXPECT_EQ(weight_of_word(W({5}), Word{}), (std::vector<Rational>{Rational(5)}));
  EXPECT_EQ(weight_of_word(W({1, 1}), Word{2}), (std::vector<Rational>{Rational(2), Rational(-1)}));
  EXPECT_EQ(weight_of_word(W({1, 1}), Word{1, 2}), (std::vector<Rational>{Rational(0), Rational(0)}));
  EXPECT_THROW(weight_of_word(W({1, 1}), Word{3}), InputError);
}

TEST(ApplyE, Examples) {
  const Rational l1 = make_rational(7, 3), l2 = make_rational(-5, 2);
  const Weight one({l1});
  const VermaVector e1f1 = apply_e(1, VermaVector::word(one, Word{1}));
  ASSERT_EQ(e1f1.terms().size(), 1u);
  EXPECT_EQ(e1f1.terms().at(Word{}), l1);

  const Weight two({l1, l2});
  EXPECT_TRUE(apply_e(2, VermaVector::word(two, Word{1})).empty());
  const VermaVector e1f2f1 = apply_e(1, VermaVector::word(two, Word{2, 1}));
  ASSERT_EQ(e1f2f1.terms().size(), 1u);
  EXPECT_EQ(e1f2f1.terms().at(Word{2}), l1);
  EXPECT_TRUE(apply_e(1, VermaVector(two)).empty());
  // e_1 f_1 f_1 v = (2 l1 - 2) f_1 v
  EXPECT_EQ(apply_e(1, VermaVector::word(one, Word{1, 1})).terms().at(Word{1}), 2 * l1 - 2);
}

TEST(ApplyE, CommutatorRelation) {
  // e_i f_j u - f_j e_i u = delta_ij (wt(u), alpha_i) u
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Weight lam = random_weight(rng, n);
    const Word u = random_word(rng, n, rng() % 4);
    const int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
    const VermaVector x = VermaVector::word(lam, u);
    VermaVector lhs = apply_e(i, apply_f(j, x));
    lhs += apply_f(j, apply_e(i, x)).scaled(Rational(-1));
    if (i == j) {
      lhs += x.scaled(-weight_of_word(lam, u)[i - 1]);
    }
    EXPECT_TRUE(lhs.empty()) << lam.to_string() << " " << u.to_string() << " i=" << i << " j=" << j;
  }
}

TEST(Shapovalov, Examples) {
  const Rational l1 = make_rational(3, 2), l2 = make_rational(5);
  const Weight lam({l1, l2});
  ShapovalovForm form(lam);
  EXPECT_EQ(form.pair(Word{}, Word{}), Rational(1));
  EXPECT_EQ(form.pair(Word{1}, Word{1}), l1);
  EXPECT_EQ(form.pair(Word{1, 2}, Word{2, 1}), l1 * l2);
  EXPECT_EQ(form.pair(Word{1}, Word{2}), Rational(0));
  EXPECT_EQ(form.pair(Word{2, 1}, Word{2, 1}), l1 * (l2 + 1));
  EXPECT_EQ(form.pair(Word{1, 2}, Word{1, 2}), l2 * (l1 + 1));
  EXPECT_EQ(shapovalov_pair(VermaVector::word(lam, Word{1}, Rational(2)), VermaVector::word(lam, Word{1}, Rational(3))),
            6 * l1);
}

TEST(Shapovalov, SymmetryAndContravarianceOnRandomWords) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Weight lam = random_weight(rng, n);
    ShapovalovForm form(lam);
    const std::size_t len = rng() % 5;
    Word a = random_word(rng, n, len);
    // same content, shuffled, so the pairing is usually nonzero
    Word b = a;
    std::shuffle(b.letters.begin(), b.letters.end(), rng);
    EXPECT_EQ(form.pair(a, b), form.pair(b, a));
    EXPECT_EQ(form.pair(a, b), right_peel(VermaVector::word(lam, a), b));
    if (!a.empty()) {
      const int i = a.letters.front();
      const Word rest(std::vector<int>(a.letters.begin() + 1, a.letters.end()));
      // B(f_i rest, b) = B(rest, e_i b)
      EXPECT_EQ(form.pair(a, b), form.pair(apply_e(i, VermaVector::word(lam, b)), VermaVector::word(lam, rest)));
    }
  }
}

TEST(Shapovalov, WeightOrthogonality) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    ShapovalovForm form(random_weight(rng, n));
    const std::size_t len = 1 + rng() % 3;
    const Word a = random_word(rng, n, len), b = random_word(rng, n, len);
    if (a.content() != b.content()) {
      EXPECT_EQ(form.pair(a, b), Rational(0));
    }
  }
  ShapovalovForm form(W({1, 2}));
  EXPECT_EQ(form.pair(Word{1, 2}, Word{1}), Rational(0));
}

TEST(Gram, Examples) {
  const Rational l1 = make_rational(9, 4);
  const RationalMatrix g1 = gram_matrix(Weight({l1}), {1});
  ASSERT_EQ(g1.rows(), 1u);
  EXPECT_EQ(g1(0, 0), l1);

  const RationalMatrix g = gram_matrix(W({1, 1}), {1, 2});
  ASSERT_EQ(g.rows(), 2u);
  EXPECT_EQ(g(0, 0), Rational(2));
  EXPECT_EQ(g(0, 1), Rational(1));
  EXPECT_EQ(g(1, 0), Rational(1));
  EXPECT_EQ(g(1, 1), Rational(2));

  const RationalMatrix g0 = gram_matrix(W({3, 4}), {});
  ASSERT_EQ(g0.rows(), 1u);
  EXPECT_EQ(g0(0, 0), Rational(1));
}

TEST(Gram, SpanningWordsAreLexicographic) {
  const auto words = spanning_words({3, 1, 2});
  ASSERT_EQ(words.size(), 6u);
  EXPECT_EQ(words.front(), (Word{1, 2, 3}));
  EXPECT_EQ(words[1], (Word{1, 3, 2}));
  EXPECT_EQ(words.back(), (Word{3, 2, 1}));
  EXPECT_EQ(verma_weight_multiplicity({1, 2, 3}), 4u);
  EXPECT_EQ(verma_weight_multiplicity({1, 3}), 1u);
  EXPECT_EQ(verma_weight_multiplicity({1, 2, 4, 5}), 4u);
}

TEST(Gram, SymmetricAndNondegenerateForSmallPositiveIntegers) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.emplace_back(1 + static_cast<long>(rng() % 10));
    const Weight lam(v);
    // every contiguous interval and one gapped set
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo; hi <= n; ++hi) {
        std::vector<int> s;
        for (int k = lo; k <= hi; ++k) s.push_back(k);
        ShapovalovForm form(lam);
        const RationalMatrix g = gram_matrix(form, spanning_words(s));
        EXPECT_TRUE(g.is_symmetric());
        const WeightSpace ws = make_weight_space(form, s);
        EXPECT_EQ(ws.basis.size(), ws.dimension);
        EXPECT_NE(determinant(ws.basis_gram), 0) << lam.to_string();
      }
    if (n >= 3) {
      ShapovalovForm form(lam);
      EXPECT_NO_THROW(make_weight_space(form, {1, 3}));
    }
  }
}

TEST(Gram, DegenerateWeightIsReported) {
  ShapovalovForm form(W({0, 1}));
  EXPECT_THROW(make_weight_space(form, {1}), DegenerateError);
  EXPECT_THROW(is_zero(VermaVector::word(W({0, 1}), Word{1})), DegenerateError);
}

TEST(Gram, RepeatedRootsRejected) {
  ShapovalovForm form(W({1, 1}));
  EXPECT_THROW(make_weight_space(form, {1, 1}), InputError);
  EXPECT_THROW(make_weight_space(form, {3}), InputError);
}

TEST(IsZero, Examples) {
  const Weight lam = W({2, 3, 4});
  EXPECT_TRUE(is_zero(VermaVector(lam)));
  EXPECT_FALSE(is_zero(VermaVector::word(lam, Word{1})));
  // the Serre-type relation f_1 f_3 = f_3 f_1 makes this combination zero
  VermaVector x = VermaVector::word(lam, Word{1, 3});
  x.add(Word{3, 1}, Rational(-1));
  EXPECT_FALSE(x.empty());
  EXPECT_TRUE(is_zero(x));
}

TEST(LinRep, Examples) {
  const auto a = linrep_action(Generator::f, 1, LinRepIndex(0, 3), 3);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->first.value(), 1);
  EXPECT_EQ(a->second, Rational(1));
  const auto b = linrep_action(Generator::e, 2, LinRepIndex(2, 3), 3);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first.value(), 1);
  EXPECT_FALSE(linrep_action(Generator::f, 2, LinRepIndex(0, 3), 3));
  EXPECT_THROW(LinRepIndex(4, 3), InputError);
}

TEST(LinRep, LadderRelations) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) {
      for (int i = 1; i <= n; ++i) {
        const auto up = linrep_action(Generator::f, i, LinRepIndex(m, n), n);
        if (i == m + 1) {
          ASSERT_TRUE(up);
          const auto back = linrep_action(Generator::e, i, up->first, n);
          ASSERT_TRUE(back);
          EXPECT_EQ(back->first.value(), m);
          EXPECT_EQ(back->second * up->second, Rational(1));
        } else {
          EXPECT_FALSE(up);
        }
      }
      if (m == n) {
        for (int i = 1; i <= n; ++i) EXPECT_FALSE(linrep_action(Generator::f, i, LinRepIndex(m, n), n));
      }
    }
}

TEST(Tensor, ApplyEActsOnBothFactors) {
  const Weight lam = W({2, 1});
  TensorVector t(lam);
  t.add(Word{1}, LinRepIndex(1, 2), Rational(3));
  // e_1 (f_1 v (x) w_1) = 2 v (x) w_1 + f_1 v (x) w_0
  const TensorVector e = apply_e(1, t);
  EXPECT_EQ(e.coefficient(Word{}, 1), Rational(6));
  EXPECT_EQ(e.coefficient(Word{1}, 0), Rational(3));
  EXPECT_EQ(e.terms().size(), 2u);
  ShapovalovForm form(lam);
  EXPECT_EQ(shapovalov_pair(form, t, t), Rational(9 * 2));
}
