#include <gtest/gtest.h>

#include <map>
#include <set>

#include "colortree/combinatorics.hpp"
#include "colortree/errors.hpp"
#include "colortree/recursive_counts.hpp"
#include "colortree/tree.hpp"

using namespace colortree;

namespace {

ColorProfile P(std::vector<unsigned> v) { return ColorProfile(std::move(v)); }

// Upper 0.999 quantile of chi-square with 15 degrees of freedom
// (scipy.stats.chi2.ppf(0.999, 15) = 37.6973).
constexpr double kChiSquare15At001 = 37.6973;

}  // namespace

TEST(RecursiveCount, Examples) {
    EXPECT_EQ(recursive_count(P({0, 0})), 1);
    EXPECT_EQ(recursive_count(P({1, 1})), 3);
    EXPECT_EQ(recursive_count(P({2, 1})), 6);
    EXPECT_EQ(recursive_count(P({1, 1, 1})), 16);
}

TEST(RecursiveCount, TripleAgreement) {
    for (unsigned d = 2; d <= 4; ++d) {
        const unsigned max_total = d == 4 ? 4 : 6;
        ProfileCountTable table(d);
        for (const auto& [p, brute] : count_by_profile_bruteforce(d, max_total)) {
            EXPECT_EQ(table.count(p), brute) << p.to_string();
            EXPECT_EQ(table.count(p), closed_form_count(p)) << p.to_string();
        }
    }
}

TEST(RecursiveCount, MatchesClosedFormUpToTheDefaultCaps) {
    ProfileCountTable d2(2);
    for (unsigned p1 = 0; p1 <= 30; p1 += 3) EXPECT_EQ(d2.count(P({p1, 30 - p1})), closed_form_count(P({p1, 30 - p1})));
    ProfileCountTable d3(3);
    EXPECT_EQ(d3.count(P({5, 5, 5})), closed_form_count(P({5, 5, 5})));
    EXPECT_EQ(d3.count(P({15, 0, 0})), 1);
}

TEST(RecursiveCount, CapsAndShape) {
    ProfileCountTable d2(2);
    EXPECT_THROW(d2.count(P({16, 15})), BudgetExceeded);
    EXPECT_THROW(d2.count(P({1, 1, 1})), DomainError);
    Limits wide;
    wide.profile_total_cap = 40;
    EXPECT_EQ(ProfileCountTable(2, wide).count(P({20, 20})), closed_form_count(P({20, 20})));
    EXPECT_THROW(ProfileCountTable(9), DomainError);
}

TEST(Unrank, SingletonProfile) {
    ProfileCountTable t(2);
    EXPECT_EQ(encode(t.unrank(P({1, 0}), 0)), "(1:())");
    EXPECT_EQ(encode(t.unrank(P({0, 0}), 0)), "()");
}

TEST(Unrank, DocumentedOrderForOneLineOfEachColor) {
    ProfileCountTable t(2);
    // color sets {1}, {2}, {1,2} by bitmask
    EXPECT_EQ(encode(t.unrank(P({1, 1}), 0)), "(1:(2:()))");
    EXPECT_EQ(encode(t.unrank(P({1, 1}), 1)), "(2:(1:()))");
    EXPECT_EQ(encode(t.unrank(P({1, 1}), 2)), "(1:(),2:())");
    EXPECT_THROW(t.unrank(P({1, 1}), 3), IndexOutOfRange);
    EXPECT_THROW(t.unrank(P({1, 1}), -1), IndexOutOfRange);
}

TEST(Unrank, SplitsAreLexicographic) {
    ProfileCountTable t(2);
    // profile (2,0): only color set {1}; the color-1 subtree has profile (1,0)
    EXPECT_EQ(encode(t.unrank(P({2, 0}), 0)), "(1:(1:()))");
    // (2,1) with color set {1,2}: remaining (1,0) split as q1=(0,0),q2=(1,0) before q1=(1,0),q2=(0,0)
    std::vector<std::string> both;
    for (int i = 0; i < 6; ++i) {
        const ColoredTree tree = t.unrank(P({2, 1}), i);
        if (tree.children().size() == 2) both.push_back(encode(tree));
    }
    EXPECT_EQ(both, (std::vector<std::string>{"(1:(),2:(1:()))", "(1:(1:()),2:())"}));
}

TEST(Unrank, BijectiveOntoTheProfileClass) {
    for (unsigned d = 2; d <= 3; ++d) {
        ProfileCountTable t(d);
        std::map<ColorProfile, std::set<std::string>> brute;
        for_each_tree(d, 5, [&](const ColoredTree& tree) { brute[tree.profile(d)].insert(encode(tree)); });
        for (const auto& p : profiles_up_to(d, 5)) {
            const BigInt n = t.count(p);
            std::set<std::string> seen;
            for (BigInt i = 0; i < n; ++i) {
                const ColoredTree tree = t.unrank(p, i);
                ASSERT_TRUE(validate(tree, d));
                ASSERT_EQ(tree.profile(d), p);
                seen.insert(encode(tree));
            }
            EXPECT_EQ(BigInt(static_cast<unsigned long>(seen.size())), n) << p.to_string();
            EXPECT_EQ(seen, brute[p]) << p.to_string();
        }
    }
}

TEST(UniformBelow, ReferenceGeneratorSequence) {
    // Fixed by the C++ standard: the 10000th output of a default-seeded mt19937_64.
    std::mt19937_64 engine;
    engine.discard(9999);
    EXPECT_EQ(engine(), 9981545732273789042ull);
}

TEST(UniformBelow, RangeAndTrivialBound) {
    std::mt19937_64 engine(1);
    std::mt19937_64 untouched(1);
    EXPECT_EQ(uniform_below(1, engine), 0);
    EXPECT_EQ(engine, untouched);
    EXPECT_THROW(uniform_below(0, engine), DomainError);

    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 90);  // about 2^142.6, three words
    bool saw_high = false;
    for (int i = 0; i < 2000; ++i) {
        const BigInt v = uniform_below(big, engine);
        ASSERT_GE(v, 0);
        ASSERT_LT(v, big);
        if (v > big / 2) saw_high = true;
    }
    EXPECT_TRUE(saw_high);
}

TEST(UniformBelow, SmallBoundIsUniform) {
    // 16 cells, so 15 degrees of freedom.
    std::mt19937_64 engine(99);
    std::vector<int> hits(16, 0);
    const int draws = 32000;
    for (int i = 0; i < draws; ++i) ++hits[uniform_below(16, engine).get_ui()];
    double chi = 0.0;
    const double expected = draws / 16.0;
    for (int h : hits) chi += (h - expected) * (h - expected) / expected;
    EXPECT_LT(chi, kChiSquare15At001);
}

TEST(Sample, SingletonSupport) {
    const auto trees = sample_uniform(SampleRequest{P({1, 0}), 5, 123});
    ASSERT_EQ(trees.size(), 5u);
    for (const auto& t : trees) EXPECT_EQ(encode(t), "(1:())");
}

TEST(Sample, EachSampleHasTheRequestedProfile) {
    const ColorProfile p = P({3, 1, 2});
    for (const auto& t : sample_uniform(SampleRequest{p, 200, 5})) {
        EXPECT_TRUE(validate(t, 3));
        EXPECT_EQ(t.profile(3), p);
    }
}

TEST(Sample, ChiSquareUniformityOnSixteenTrees) {
    const ColorProfile p = P({1, 1, 1});
    std::map<std::string, int> freq;
    for_each_tree(3, 3, [&](const ColoredTree& t) {
        if (t.profile(3) == p) freq[encode(t)] = 0;
    });
    ASSERT_EQ(freq.size(), 16u);

    const auto trees = sample_uniform(SampleRequest{p, 16000, 2024});
    for (const auto& t : trees) ++freq.at(encode(t));
    double chi = 0.0;
    for (const auto& [tree, observed] : freq) chi += (observed - 1000.0) * (observed - 1000.0) / 1000.0;
    EXPECT_LT(chi, kChiSquare15At001);
}

TEST(Sample, SeedDeterminesOutput) {
    const SampleRequest request{P({2, 2, 1}), 50, 42};
    EXPECT_EQ(sample_uniform(request), sample_uniform(request));
    const SampleRequest other{P({2, 2, 1}), 50, 43};
    EXPECT_NE(sample_uniform(request), sample_uniform(other));
}

TEST(Sample, SharedTableGivesTheSameStream) {
    ProfileCountTable table(3);
    const SampleRequest request{P({1, 1, 1}), 20, 7};
    const auto first = sample_uniform(request, table);
    EXPECT_EQ(sample_uniform(request, table), first);
    EXPECT_EQ(sample_uniform(request), first);
}

TEST(Sample, RejectsZeroCount) { EXPECT_THROW(sample_uniform(SampleRequest{P({1, 0}), 0, 0}), DomainError); }
