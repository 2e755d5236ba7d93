#include <random>

#include <gtest/gtest.h>

#include "radsq/errors.hpp"
#include "radsq/ext_combinatorics.hpp"
#include "support.hpp"

using namespace radsq;
using radsq::testing::Adj;

namespace {

const Quiver kA2({{0, 1}, {0, 0}});
const Quiver kKronecker({{0, 2}, {0, 0}});

std::size_t first_nonzero_from(const ExtProfile& p, std::size_t from) {
    for (std::size_t i = from; i < p.dims.size(); ++i)
        if (p.dims[i] != 0)
            return i;
    return p.dims.size();
}

} // namespace

TEST(Syzygy, Examples) {
    Quiver d32 = delta_quiver(3, 2);
    EXPECT_EQ(syzygy_vector(d32, unit_vector(3, 0)), (SimpleVector{0, 1, 0}));
    EXPECT_EQ(syzygy_vector(d32, unit_vector(3, 2)), (SimpleVector{2, 0, 0}));
    EXPECT_EQ(syzygy_vector(kA2, unit_vector(2, 1)), (SimpleVector{0, 0}));
}

TEST(Ext1, Examples) {
    Quiver d32 = delta_quiver(3, 2);
    EXPECT_EQ(ext1_simple_vs_proj_dim(d32, 2, 2), 3u);
    for (Vertex i = 0; i < 3; ++i)
        EXPECT_EQ(ext1_simple_vs_proj_dim(d32, 0, i), 0u);
    EXPECT_EQ(ext1_simple_vs_proj_dim(kKronecker, 0, 0), 3u);
    EXPECT_EQ(ext1_simple_vs_proj_dim(kKronecker, 0, 1), 2u);
    EXPECT_EQ(ext1_simple_vs_lambda_dim(d32, 2), 3u);
    EXPECT_EQ(ext1_simple_vs_lambda_dim(d32, 0), 0u);
    EXPECT_EQ(ext1_simple_vs_lambda_dim(kA2, 0), 1u);
}

TEST(Hom, Examples) {
    EXPECT_EQ(hom_simple_lambda_dim(kA2, 1), 2u);
    EXPECT_EQ(hom_simple_lambda_dim(delta_quiver(3, 2), 0), 2u);
    EXPECT_EQ(hom_simple_lambda_dim(Quiver(Adj{{0}}), 0), 1u);
}

TEST(Profile, Examples) {
    ExtProfile p = ext_profile(delta_quiver(3, 2), 0, 4);
    ASSERT_EQ(p.dims.size(), 5u);
    EXPECT_EQ(p.dims[1], 0u);
    EXPECT_EQ(p.dims[2], 0u);
    EXPECT_GT(p.dims[3], 0u);
    for (Vertex j = 0; j < 2; ++j) {
        ExtProfile s = ext_profile(delta_quiver(2, 1), j, 5);
        for (std::size_t i = 1; i <= 5; ++i)
            EXPECT_EQ(s.dims[i], 0u);
    }
    ExtProfile a = ext_profile(kA2, 1, 3);
    for (std::size_t i = 1; i <= 3; ++i)
        EXPECT_EQ(a.dims[i], 0u);
}

TEST(Nakayama, Examples) {
    EXPECT_EQ(nakayama_bound(kA2, 1), 0u);
    EXPECT_EQ(nakayama_bound(kA2, 0), 1u);
    EXPECT_EQ(nakayama_bound(delta_quiver(2, 1), 0), 0u);
    // Hom(S(0), Lambda) != 0 on Delta(3,4); the least positive degree is n.
    Quiver d32 = delta_quiver(3, 2);
    EXPECT_EQ(nakayama_bound(d32, 0), 0u);
    EXPECT_EQ(first_nonzero_from(ext_profile(d32, 0, 3), 1), 3u);
}

TEST(Nakayama, LeastPositiveDegreeIsNOnDelta) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned m = 2; m <= 3; ++m)
            EXPECT_EQ(first_nonzero_from(ext_profile(delta_quiver(n, m), 0, n + 1), 1), n);
}

TEST(SyzygyChain, Examples) {
    ChainReport r = theorem1_chain(delta_quiver(4, 2), 0, 3);
    EXPECT_EQ(r.chain, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.pairwise_distinct);

    ChainReport s = theorem1_chain(delta_quiver(3, 2), 0, 2);
    EXPECT_EQ(s.chain, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_TRUE(s.ok());
    EXPECT_TRUE(s.cover_injective[0]);
    EXPECT_TRUE(s.cover_injective[1]);

    EXPECT_FALSE(theorem1_applicable(delta_quiver(3, 2), 0, 3));
    EXPECT_THROW(theorem1_chain(delta_quiver(3, 2), 0, 3), UsageError);
}

TEST(SelfInjectiveEquivalence, Examples) {
    Theorem2Record a = theorem2_classify(delta_quiver(2, 1));
    EXPECT_TRUE(a.self_injective_not_simple);
    EXPECT_TRUE(a.exists_simple_vanishing_to_n);
    EXPECT_TRUE(a.witness.has_value());

    Theorem2Record b = theorem2_classify(delta_quiver(3, 2));
    EXPECT_FALSE(b.self_injective_not_simple);
    EXPECT_FALSE(b.exists_simple_vanishing_to_n);
    EXPECT_FALSE(b.witness.has_value());

    Theorem2Record c = theorem2_classify(Quiver(Adj{{0}}));
    EXPECT_FALSE(c.self_injective_not_simple);
    EXPECT_FALSE(c.exists_simple_vanishing_to_n);
}

TEST(DeltaVanishingSimple, Examples) {
    Theorem3bRecord a = theorem3b_check(delta_quiver(3, 2));
    EXPECT_TRUE(a.is_delta);
    EXPECT_EQ(a.unique_vertex, Vertex{0});
    EXPECT_GT(a.ext_n, 0u);
    EXPECT_EQ(theorem3b_check(delta_quiver(5, 3)).unique_vertex, Vertex{0});
    Theorem3bRecord c = theorem3b_check(delta_quiver(1, 2));
    EXPECT_EQ(c.unique_vertex, Vertex{0});
    EXPECT_EQ(c.ext_n, 3u);
}

TEST(Properties, TheoremsHoldOnExhaustiveSmallCorpus) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t cells = n * n, total = 1;
        for (std::size_t c = 0; c < cells; ++c)
            total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
            std::size_t rest = code;
            for (std::size_t c = 0; c < cells; ++c, rest /= 3)
                adj[c / n][c % n] = static_cast<unsigned>(rest % 3);
            Quiver q(adj);
            if (!is_connected(q))
                continue;
            EXPECT_TRUE(lemma2_violations(q).empty()) << format_quiver(q);
            EXPECT_TRUE(lemma4_violations(q).empty()) << format_quiver(q);
            EXPECT_NO_THROW(theorem2_classify(q)) << format_quiver(q);
            for (Vertex j = 0; j < n; ++j) {
                EXPECT_LE(nakayama_bound(q, j), n);
                for (std::size_t dd = 1; dd <= n; ++dd) {
                    if (!theorem1_applicable(q, j, dd))
                        continue;
                    // Vanishing Ext^{1..d} makes each chain vertex have a unique successor.
                    Vertex v = j;
                    for (std::size_t i = 0; i < dd; ++i) {
                        auto next = unique_successor(q, v);
                        ASSERT_TRUE(next.has_value()) << format_quiver(q) << " j=" << j;
                        EXPECT_EQ(next->second, 1u);
                        v = next->first;
                    }
                }
                if (!is_self_injective(q))
                    for (std::size_t dd = 0; dd <= n; ++dd)
                        if (theorem1_applicable(q, j, dd))
                            EXPECT_TRUE(theorem1_chain(q, j, dd).ok());
            }
        }
    }
}

TEST(Properties, SelfInjectiveProfilesVanish) {
    for (std::size_t n = 1; n <= 6; ++n) {
        Quiver q = delta_quiver(n, 1);
        for (Vertex j = 0; j < n; ++j) {
            ExtProfile p = ext_profile(q, j, n + 1);
            for (std::size_t i = 1; i <= n + 1; ++i)
                EXPECT_EQ(p.dims[i], 0u);
        }
    }
}
