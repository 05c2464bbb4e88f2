#include "monocurve/semigroup.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

using namespace monocurve;
using monocurve::testing::params_7_1_3;
using monocurve::testing::params_8_3_2;
using monocurve::testing::sweep;

namespace {

// Recursive memoized membership, independent of the library's table-based search.
class MemoMembership {
 public:
  explicit MemoMembership(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {}
  bool contains(std::int64_t x) {
    if (x == 0) return true;
    if (x < 0) return false;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (auto g : gens_) {
      if (contains(x - g)) {
        found = true;
        break;
      }
    }
    memo_[x] = found;
    return found;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::map<std::int64_t, bool> memo_;
};

struct Triple {
  std::int64_t first, second, third;
  bool operator==(const Triple&) const = default;
};

// Smallest m with m*m_p = n*m0 + m_i, n >= 1, 0 <= i < p, scanning every candidate.
Triple brute_mp(const CurveParams& c) {
  const int p = c.p();
  for (std::int64_t m = 1;; ++m) {
    for (std::int64_t n = 1; n * c.m0() <= m * c.generator(p); ++n) {
      for (int i = 0; i < p; ++i) {
        if (m * c.generator(p) == n * c.m0() + c.generator(i)) return {m, n, i};
      }
    }
  }
}

// Smallest n with n*m0 = m*m_p + m_i, m >= 1, 0 < i <= p.
Triple brute_m0(const CurveParams& c) {
  const int p = c.p();
  for (std::int64_t n = 1;; ++n) {
    for (std::int64_t m = 1; m * c.generator(p) <= n * c.m0(); ++m) {
      for (int i = 1; i <= p; ++i) {
        if (n * c.m0() == m * c.generator(p) + c.generator(i)) return {n, m, i};
      }
    }
  }
}

}  // namespace

TEST(MakeParams, SevenOneThree) {
  const auto c = params_7_1_3();
  EXPECT_EQ(c.p(), 3);
  EXPECT_EQ(c.a(), 2);
  EXPECT_EQ(c.b(), 1);
  EXPECT_EQ(std::vector<std::int64_t>(c.generators().begin(), c.generators().end()),
            (std::vector<std::int64_t>{7, 8, 9, 10}));
}

TEST(MakeParams, EightThreeTwo) {
  const auto c = params_8_3_2();
  EXPECT_EQ(c.a(), 3);
  EXPECT_EQ(c.b(), 2);
  EXPECT_EQ(std::vector<std::int64_t>(c.generators().begin(), c.generators().end()),
            (std::vector<std::int64_t>{8, 11, 14}));
}

TEST(MakeParams, RejectsCommonFactor) {
  EXPECT_THROW(make_params(6, 2, 3), GcdError);
  try {
    make_params(6, 2, 3);
  } catch (const GcdError& e) {
    EXPECT_NE(std::string(e.what()).find("gcd(m0,d) must be 1"), std::string::npos);
  }
}

TEST(MakeParams, RejectsSmallM0) {
  EXPECT_THROW(make_params(3, 1, 3), HypothesisError);  // a = 0
  EXPECT_THROW(make_params(2, 1, 3), HypothesisError);
  EXPECT_THROW(make_params(7, 1, 1), HypothesisError);
  EXPECT_THROW(make_params(7, 0, 3), HypothesisError);
  EXPECT_THROW(make_params(0, 1, 3), HypothesisError);
}

TEST(MakeParams, BEqualsPAllowed) {
  const auto c = make_params(6, 1, 3);
  EXPECT_EQ(c.a(), 1);
  EXPECT_EQ(c.b(), 3);
}

TEST(MakeParams, SweepInvariants) {
  for (const auto& c : sweep(6, 3, 5)) {
    SCOPED_TRACE(c.to_string());
    EXPECT_GE(c.a(), 1);
    EXPECT_GE(c.b(), 1);
    EXPECT_LE(c.b(), c.p());
    EXPECT_EQ(c.m0(), c.a() * c.p() + c.b());
    EXPECT_EQ(std::gcd(c.m0(), c.d()), 1);
    for (int i = 1; i <= c.p(); ++i) EXPECT_LT(c.generator(i - 1), c.generator(i));
    // Minimality, rechecked with the memoized oracle.
    for (int i = 0; i <= c.p(); ++i) {
      std::vector<std::int64_t> others;
      for (int k = 0; k <= c.p(); ++k) {
        if (k != i) others.push_back(c.generator(k));
      }
      EXPECT_FALSE(MemoMembership(others).contains(c.generator(i))) << "m_" << i;
    }
  }
}

TEST(SemigroupContains, Examples) {
  const auto c = params_7_1_3();
  const auto zero = semigroup_contains(c, 0);
  EXPECT_TRUE(zero.member);
  EXPECT_EQ(zero.witness, std::vector<std::int64_t>(4, 0));
  EXPECT_FALSE(semigroup_contains(c, 11).member);
  const auto seventeen = semigroup_contains(c, 17);
  ASSERT_TRUE(seventeen.member);
  std::int64_t total = 0;
  for (int i = 0; i <= 3; ++i) total += seventeen.witness[i] * c.generator(i);
  EXPECT_EQ(total, 17);
}

TEST(SemigroupContains, AgreesWithMemoizedSearch) {
  for (const auto& c : sweep(4, 2, 3)) {
    SCOPED_TRACE(c.to_string());
    MemoMembership oracle({c.generators().begin(), c.generators().end()});
    const std::int64_t mp = c.generator(c.p());
    for (std::int64_t x = 0; x <= 2 * mp * mp; ++x) {
      const auto got = semigroup_contains(c, x);
      ASSERT_EQ(got.member, oracle.contains(x)) << "x=" << x;
      if (got.member) {
        std::int64_t total = 0;
        for (int i = 0; i <= c.p(); ++i) {
          ASSERT_GE(got.witness[i], 0);
          total += got.witness[i] * c.generator(i);
        }
        ASSERT_EQ(total, x);
      }
    }
  }
}

TEST(MinMultipleOfMp, Examples) {
  EXPECT_EQ(min_multiple_of_mp(params_7_1_3()), (MultipleRelation{3, 3, 2}));
  EXPECT_EQ(min_multiple_of_mp(params_8_3_2()), (MultipleRelation{4, 6, 0}));
}

TEST(MinMultipleOfMp, MatchesClosedFormAndBruteForce) {
  for (const auto& c : sweep(6, 3, 5)) {
    SCOPED_TRACE(c.to_string());
    const auto got = min_multiple_of_mp(c);
    EXPECT_EQ(got, (MultipleRelation{c.a() + 1, c.a() + c.d(), c.p() - c.b()}));
    const Triple brute = brute_mp(c);
    EXPECT_EQ((Triple{got.m, got.n, got.i}), brute);
  }
}

// The smallest n*m0 = m*m_p + m_i has n = a+d+1, one more than the closed form (a+d, a, b)
// suggests: (a+d)*m0 = a*m_p + m0 + b*d, which is a*m_p + m_b only when m0 = 0.
TEST(MinMultipleOfM0, Examples) {
  EXPECT_EQ(min_multiple_of_m0(params_7_1_3()), (MultipleRelation{2, 4, 1}));  // 4*7 = 2*10 + 8
  EXPECT_EQ(min_multiple_of_m0(params_8_3_2()), (MultipleRelation{3, 7, 2}));  // 7*8 = 3*14 + 14
}

TEST(MinMultipleOfM0, MatchesBruteForce) {
  for (const auto& c : sweep(6, 3, 5)) {
    SCOPED_TRACE(c.to_string());
    const auto got = min_multiple_of_m0(c);
    const Triple brute = brute_m0(c);
    EXPECT_EQ((Triple{got.n, got.m, got.i}), brute);
    EXPECT_EQ(got, (MultipleRelation{c.a(), c.a() + c.d() + 1, c.b()}));
    EXPECT_EQ(got.n * c.m0(), got.m * c.generator(c.p()) + c.generator(got.i));
  }
}

TEST(MinMultipleOfM0, NoSolutionBelowAPlusD) {
  for (const auto& c : sweep(5, 3, 4)) {
    SCOPED_TRACE(c.to_string());
    for (std::int64_t n = 1; n < c.a() + c.d(); ++n) {
      for (std::int64_t m = 1; m * c.generator(c.p()) <= n * c.m0(); ++m) {
        for (int i = 1; i <= c.p(); ++i) {
          EXPECT_NE(n * c.m0(), m * c.generator(c.p()) + c.generator(i));
        }
      }
    }
  }
}

TEST(Weight, Examples) {
  const auto c = params_7_1_3();
  EXPECT_EQ(weight(c, Monomial::of(3, {{1, 1}, {2, 1}})), 17);
  EXPECT_EQ(weight(c, Monomial::one(3)), 0);
  EXPECT_EQ(weight(c, Monomial::of(3, {{3, 1}, {0, 1}})), 17);
}

TEST(Weight, Additive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Monomial::Exponent> e(0, 5);
  for (const auto& c : sweep(5, 2, 3)) {
    for (int trial = 0; trial < 50; ++trial) {
      Monomial f(c.p()), g(c.p());
      for (int k = 0; k <= c.p(); ++k) {
        f.set_exponent(k, e(rng));
        g.set_exponent(k, e(rng));
      }
      ASSERT_EQ(weight(c, f * g), weight(c, f) + weight(c, g));
    }
  }
}

TEST(Weight, GeneratorIdentities) {
  for (const auto& c : sweep(6, 3, 5)) {
    SCOPED_TRACE(c.to_string());
    const int p = c.p();
    for (int i = 0; i <= p; ++i) {
      for (int j = i + 1; j <= p; ++j) EXPECT_NE(c.generator(i), c.generator(j));
    }
    for (int i = 1; i < p; ++i) {
      for (int j = 1; j < p; ++j) {
        if (i + j < p) {
          EXPECT_EQ(c.generator(i) + c.generator(j), c.generator(0) + c.generator(i + j));
        } else {
          EXPECT_EQ(c.generator(i) + c.generator(j), c.generator(p) + c.generator(i + j - p));
        }
      }
    }
  }
}
