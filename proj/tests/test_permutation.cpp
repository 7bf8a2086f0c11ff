#include <map>
#include <set>

#include <gtest/gtest.h>

#include "descpoly/error.hpp"
#include "descpoly/permutation.hpp"
#include "test_support.hpp"

using namespace descpoly;

namespace {

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

// All subsets of [1, n-1].
std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  int m = std::max(n - 1, 0);
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST(Permutation, ConstructionAndParsing) {
  Permutation p = Permutation::parse("3142");
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p, (Permutation{3, 1, 4, 2}));
  EXPECT_EQ(Permutation::parse("3,1,4,2"), p);
  EXPECT_EQ(p.to_string(), "3142");
  EXPECT_EQ(Permutation::identity(11).to_string(), "1,2,3,4,5,6,7,8,9,10,11");
  EXPECT_TRUE(Permutation::identity(0).is_identity());
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
  EXPECT_THROW(Permutation::parse("3,x"), Error);
}

TEST(Descents, Examples) {
  EXPECT_EQ(descent_set(Permutation::parse("138425976")), (std::vector<int>{3, 4, 7, 8}));
  EXPECT_TRUE(descent_set(Permutation::parse("123")).empty());
  Permutation p = Permutation::parse("3142");
  EXPECT_EQ(des(p), 2u);
  EXPECT_EQ(descent_set(p), (std::vector<int>{1, 3}));
}

TEST(Descents, MatchOracleOnS6) {
  oracle::for_each_perm(6, [](const oracle::Word& w) {
    Permutation p{std::vector<int>(w)};
    EXPECT_EQ(descent_set(p), oracle::descent_positions(w));
    EXPECT_EQ(static_cast<int>(des(p)), oracle::descents(w));
    EXPECT_EQ(maxdrop(p), oracle::max_drop(w));
  });
}

TEST(Maxdrop, Examples) {
  EXPECT_EQ(maxdrop(Permutation::identity(5)), 0);
  EXPECT_EQ(maxdrop(Permutation::parse("312")), 1);
  EXPECT_EQ(maxdrop(Permutation::parse("321")), 2);
  EXPECT_EQ(maxdrop(Permutation{}), 0);
}

TEST(Bsort, Examples) {
  EXPECT_EQ(bsort_pass(Permutation::parse("321")), Permutation::parse("213"));
  EXPECT_EQ(bsort_pass(Permutation::identity(4)), Permutation::identity(4));
  EXPECT_EQ(bsort_pass(Permutation::parse("21")), Permutation::parse("12"));
}

TEST(Ssort, Examples) {
  EXPECT_EQ(ssort(Permutation::parse("231")), Permutation::parse("213"));
  EXPECT_EQ(ssort(Permutation::identity(4)), Permutation::identity(4));
  // L is empty and ssort(21) = 12, so 321 stack-sorts in one pass.
  EXPECT_EQ(ssort(Permutation::parse("321")), Permutation::parse("123"));
  EXPECT_EQ(ssort(Permutation::parse("21")), Permutation::parse("12"));
  EXPECT_EQ(ssort(Permutation::parse("2341")), Permutation::parse("2314"));
}

TEST(Sorting, PassesMatchOracleOnS7) {
  oracle::for_each_perm(7, [](const oracle::Word& w) {
    Permutation p{std::vector<int>(w)};
    EXPECT_EQ(vec(bsort_pass(p).values()), oracle::bsort(w));
    EXPECT_EQ(vec(ssort(p).values()), oracle::ssort(w));
  });
}

TEST(Bsc, Examples) {
  EXPECT_EQ(bsc(Permutation::identity(6)), 0u);
  EXPECT_EQ(bsc(Permutation::parse("321")), 2u);
}

TEST(Bsc, EqualsMaxdropAndBsortDropsIt) {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_perm(n, [](const oracle::Word& w) {
      Permutation p{std::vector<int>(w)};
      EXPECT_EQ(static_cast<int>(bsc(p)), oracle::max_drop(w));
      if (!p.is_identity()) EXPECT_LE(maxdrop(bsort_pass(p)), maxdrop(p) - 1);
    });
  }
}

TEST(Bsc, StackSortNeedsNoMorePassesThanBubbleSort) {
  oracle::for_each_perm(7, [](const oracle::Word& w) {
    Permutation p{std::vector<int>(w)};
    Permutation s = p;
    for (std::size_t m = 0; m < bsc(p); ++m) s = ssort(s);
    EXPECT_TRUE(s.is_identity()) << p;
  });
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(std::vector<int>{1, 9, 4, 5, 2}), Permutation::parse("15342"));
  EXPECT_EQ(standardize(std::vector<int>{1, 2, 3}), Permutation::parse("123"));
  EXPECT_EQ(standardize(std::vector<int>{1, 3, 8, 4, 2, 5}), Permutation::parse("136425"));
  EXPECT_THROW(standardize(std::vector<int>{4, 2, 4}), Error);
}

TEST(Unstandardize, Examples) {
  EXPECT_EQ(unstandardize(Permutation::parse("15342"), std::vector<int>{1, 2, 4, 5, 9}),
            (std::vector<int>{1, 9, 4, 5, 2}));
  Permutation p = Permutation::parse("2413");
  EXPECT_EQ(unstandardize(p, std::vector<int>{1, 2, 3, 4}), vec(p.values()));
  EXPECT_EQ(unstandardize(Permutation::parse("3142"), std::vector<int>{1, 2, 3, 5}),
            (std::vector<int>{3, 1, 5, 2}));
  EXPECT_THROW(unstandardize(p, std::vector<int>{1, 2, 3}), Error);
}

TEST(Standardize, RoundTripPreservesDescentSet) {
  std::vector<int> ground{2, 5, 6, 11, 17};
  oracle::for_each_perm(5, [&](const oracle::Word& w) {
    Permutation p{std::vector<int>(w)};
    auto word = unstandardize(p, ground);
    EXPECT_EQ(standardize(word), p);
    EXPECT_EQ(descent_set(word), descent_set(p));
  });
}

TEST(TailLength, Examples) {
  EXPECT_EQ(tail_length(DescentSetSpec(9, {3, 7, 8})), 2u);
  EXPECT_EQ(tail_length(DescentSetSpec(5, {})), 0u);
  EXPECT_EQ(tail_length(DescentSetSpec(4, {1, 2, 3})), 3u);
  EXPECT_THROW(DescentSetSpec(4, {4}), Error);
  EXPECT_THROW(DescentSetSpec(4, {0}), Error);
}

TEST(BijectionF, WorkedExample) {
  SplitResult r = bijection_f(Permutation::parse("138425976"), DescentSetSpec(9, {3, 7, 8}));
  EXPECT_EQ(r.sigma, Permutation::parse("136425"));
  EXPECT_EQ(r.tail, (std::vector<int>{6, 7, 9}));
}

TEST(BijectionF, EmptySpecSplitsOffLastValue) {
  Permutation p = Permutation::parse("2413");
  SplitResult r = bijection_f(p, DescentSetSpec(4, {}));
  EXPECT_EQ(r.sigma, Permutation::parse("231"));
  EXPECT_EQ(r.tail, (std::vector<int>{3}));
}

TEST(BijectionF, RejectsSpecOutsideDescents) {
  EXPECT_THROW(bijection_f(Permutation::parse("123"), DescentSetSpec(3, {1})), Error);
}

TEST(BijectionG, Examples) {
  EXPECT_EQ(bijection_g(Permutation::parse("3142"), std::vector<int>{4, 6, 7}),
            Permutation::parse("3152764"));
  EXPECT_EQ(bijection_g(Permutation::parse("1"), std::vector<int>{2}), Permutation::parse("12"));
  EXPECT_THROW(bijection_g(Permutation::parse("1"), std::vector<int>{}), Error);
  EXPECT_THROW(bijection_g(Permutation::parse("1"), std::vector<int>{3}), Error);
  EXPECT_THROW(bijection_g(Permutation::parse("12"), std::vector<int>{3, 3}), Error);
}

TEST(Bijections, MutualInversesOnA6) {
  const int n = 6;
  for (int k = 0; k < n; ++k) {
    for (const auto& s : subsets(n)) {
      DescentSetSpec spec(n, s);
      const std::size_t i = tail_length(spec);
      oracle::for_each_perm(n, [&](const oracle::Word& w) {
        if (oracle::max_drop(w) > k || !contains_all(oracle::descent_positions(w), s)) return;
        Permutation p{std::vector<int>(w)};
        SplitResult r = bijection_f(p, spec);
        EXPECT_EQ(r.tail.size(), i + 1);
        EXPECT_EQ(bijection_g(r.sigma, r.tail), p);
        // sigma lies in A_{n-i-1,k}(S restricted to [1, n-i-2]).
        EXPECT_LE(maxdrop(r.sigma), k);
        auto ds = descent_set(r.sigma);
        for (int pos : s)
          if (pos <= n - static_cast<int>(i) - 2) EXPECT_TRUE(std::binary_search(ds.begin(), ds.end(), pos));
      });
    }
  }
}

TEST(Enumerator, Examples) {
  EXPECT_EQ(enumerate_bnk(4, 2).size(), 18u);
  auto b30 = enumerate_bnk(3, 0);
  ASSERT_EQ(b30.size(), 1u);
  EXPECT_TRUE(b30[0].is_identity());
  std::vector<Permutation> expected{Permutation::parse("123"), Permutation::parse("132"),
                                    Permutation::parse("213"), Permutation::parse("312")};
  EXPECT_EQ(enumerate_bnk(3, 1), expected);
  EXPECT_EQ(enumerate_bnk(0, 0).size(), 1u);
}

TEST(Enumerator, EqualsFilterOfSnInLexOrder) {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<oracle::Word> expected;
      oracle::for_each_perm(n, [&](const oracle::Word& w) {
        if (oracle::max_drop(w) <= k) expected.push_back(w);
      });
      BnkEnumerator e(n, k);
      std::vector<int> buf;
      std::size_t idx = 0;
      while (e.next(buf)) {
        ASSERT_LT(idx, expected.size());
        EXPECT_EQ(buf, expected[idx]) << "n=" << n << " k=" << k;
        ++idx;
      }
      EXPECT_EQ(idx, expected.size());
      EXPECT_EQ(bnk_cardinality(n, k), static_cast<long long>(expected.size()));
    }
  }
}

TEST(Cardinality, ClosedForm) {
  EXPECT_EQ(bnk_cardinality(4, 2), 18);
  EXPECT_EQ(bnk_cardinality(3, 5), 6);
  EXPECT_EQ(bnk_cardinality(20, 3), Integer(6) * boost::multiprecision::pow(Integer(4), 17));
}

TEST(CountAnk, Examples) {
  EXPECT_EQ(count_ank(3, 1, DescentSetSpec(3, {})), 4);
  EXPECT_EQ(count_ank(3, 1, DescentSetSpec(3, {}), CountStrategy::BruteForce), 4);
}

TEST(CountAnk, RecurrenceMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& s : subsets(n)) {
        long long brute = 0;
        oracle::for_each_perm(n, [&](const oracle::Word& w) {
          brute += oracle::max_drop(w) <= k && contains_all(oracle::descent_positions(w), s);
        });
        DescentSetSpec spec(n, s);
        EXPECT_EQ(count_ank(n, k, spec, CountStrategy::Recurrence), brute) << n << " " << k;
        EXPECT_EQ(count_ank(n, k, spec, CountStrategy::BruteForce), brute);
      }
    }
  }
}
