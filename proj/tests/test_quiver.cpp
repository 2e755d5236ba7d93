#include <random>

#include <gtest/gtest.h>

#include "radsq/errors.hpp"
#include "radsq/quiver.hpp"
#include "support.hpp"

using namespace radsq;
using radsq::testing::Adj;
using radsq::testing::all_permutations;
using radsq::testing::relabel;

namespace {

ParseError::Kind parse_error_kind(const std::string& text) {
    try {
        parse_quiver(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ParseError::Kind::MalformedHeader;
}

// Delta shape by brute force: some relabeling equals delta_quiver(n, m).
std::optional<unsigned> brute_delta_m(const Quiver& q) {
    const std::size_t n = q.size();
    for (const auto& perm : all_permutations(n)) {
        Quiver r = relabel(q, perm);
        for (unsigned m = 1; m <= 4; ++m)
            if (r == delta_quiver(n, m))
                return m;
    }
    return std::nullopt;
}

} // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse_quiver("2\n0 1\n0 0"), Quiver(Adj{{0, 1}, {0, 0}}));
    EXPECT_EQ(parse_quiver("1\n2"), Quiver(Adj{{2}}));
    EXPECT_EQ(parse_quiver("# comment\n\n2\n0 1\n\n1 0\n"), Quiver(Adj{{0, 1}, {1, 0}}));
}

TEST(Parse, NegativeEntryNamesRow) {
    try {
        parse_quiver("2\n0 -1\n0 0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseError::Kind::NegativeEntry);
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(Parse, ErrorKinds) {
    EXPECT_EQ(parse_error_kind(""), ParseError::Kind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("0\n"), ParseError::Kind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("x\n"), ParseError::Kind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("2\n0 a\n0 0"), ParseError::Kind::NonNumeric);
    EXPECT_EQ(parse_error_kind("2\n0 1 1\n0 0"), ParseError::Kind::RowLength);
    EXPECT_EQ(parse_error_kind("2\n0 1\n"), ParseError::Kind::RowCount);
    EXPECT_EQ(parse_error_kind("2\n0 1\n0 0\n1 1\n"), ParseError::Kind::RowCount);
}

TEST(Parse, FormatRoundTrip) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Quiver q = radsq::testing::random_connected_quiver(rng, 1 + rng() % 4, 3);
        EXPECT_EQ(parse_quiver(format_quiver(q)), q);
    }
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_connected(Quiver(Adj{{0, 1}, {0, 0}})));
    EXPECT_FALSE(is_connected(Quiver(Adj{{0, 0}, {0, 0}})));
    EXPECT_FALSE(is_connected(Quiver(Adj{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 3; ++m)
            EXPECT_TRUE(is_connected(delta_quiver(n, m)));
}

TEST(SinksSources, Examples) {
    Quiver a2({{0, 1}, {0, 0}});
    EXPECT_EQ(sinks(a2), std::vector<Vertex>{1});
    EXPECT_EQ(sources(a2), std::vector<Vertex>{0});
    EXPECT_TRUE(sinks(delta_quiver(3, 2)).empty());
}

TEST(Opposite, Examples) {
    EXPECT_EQ(opposite(Quiver(Adj{{0, 1}, {0, 0}})), Quiver(Adj{{0, 0}, {1, 0}}));
    EXPECT_EQ(opposite(delta_quiver(3, 2)), Quiver(Adj{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}}));
    Quiver sym({{1, 2}, {2, 0}});
    EXPECT_EQ(opposite(sym), sym);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = radsq::testing::random_connected_quiver(rng, 3, 2);
        EXPECT_EQ(opposite(opposite(q)), q);
    }
}

TEST(Delta, Generator) {
    EXPECT_EQ(delta_quiver(3, 2), Quiver(Adj{{0, 1, 0}, {0, 0, 1}, {2, 0, 0}}));
    EXPECT_EQ(delta_quiver(1, 2), Quiver(Adj{{2}}));
    EXPECT_EQ(delta_quiver(4, 1), Quiver(Adj{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}));
    EXPECT_EQ(delta_quiver(3, 2).arrow_count(), 4u);
}

TEST(Delta, DetectionUnderAllRelabelings) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            Quiver base = delta_quiver(n, m);
            for (const auto& perm : all_permutations(n)) {
                Quiver q = relabel(base, perm);
                auto shape = detect_delta_shape(q);
                ASSERT_TRUE(shape.has_value());
                EXPECT_EQ(shape->n, n);
                EXPECT_EQ(shape->m, m);
                EXPECT_EQ(shape->t, m * m);
                EXPECT_EQ(relabel(base, shape->cycle), q);
                if (m > 1)
                    EXPECT_EQ(shape->cycle, perm);
            }
        }
    }
}

TEST(Delta, DetectionMatchesBruteForceOnCorpus) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t cells = n * n;
        std::size_t total = 1;
        for (std::size_t c = 0; c < cells; ++c)
            total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
            std::size_t rest = code;
            for (std::size_t c = 0; c < cells; ++c, rest /= 3)
                adj[c / n][c % n] = static_cast<unsigned>(rest % 3);
            Quiver q(adj);
            auto shape = detect_delta_shape(q);
            auto m = brute_delta_m(q);
            ASSERT_EQ(shape.has_value(), m.has_value()) << format_quiver(q);
            if (shape)
                EXPECT_EQ(shape->m, *m);
        }
    }
}

TEST(Delta, NotDeltaExamples) {
    EXPECT_FALSE(detect_delta_shape(Quiver(Adj{{0, 1}, {0, 0}})).has_value());
    // Relabeling 0 <-> 1 turns this into delta_quiver(2, 2).
    auto shape = detect_delta_shape(Quiver(Adj{{0, 2}, {1, 0}}));
    ASSERT_TRUE(shape.has_value());
    EXPECT_EQ(shape->m, 2u);
    EXPECT_EQ(shape->cycle, (std::vector<Vertex>{1, 0}));
}

TEST(SelfInjective, Examples) {
    EXPECT_TRUE(is_self_injective(Quiver(Adj{{0, 1}, {1, 0}})));
    EXPECT_TRUE(is_self_injective(Quiver(Adj{{1}})));
    // The simple ring k is handled by is_simple_ring, not by the Delta(n,1) test.
    EXPECT_FALSE(is_self_injective(Quiver(Adj{{0}})));
    EXPECT_FALSE(is_self_injective(delta_quiver(3, 2)));
    EXPECT_FALSE(is_self_injective(Quiver(Adj{{0, 1}, {0, 0}})));
}

TEST(SimpleRing, Examples) {
    EXPECT_TRUE(is_simple_ring(Quiver(Adj{{0}})));
    EXPECT_FALSE(is_simple_ring(Quiver(Adj{{1}})));
    EXPECT_FALSE(is_simple_ring(Quiver(Adj{{0, 1}, {0, 0}})));
}

TEST(ProjInjective, Examples) {
    Quiver d32 = delta_quiver(3, 2);
    EXPECT_TRUE(proj_is_injective(d32, 0));
    EXPECT_TRUE(proj_is_injective(d32, 1));
    EXPECT_FALSE(proj_is_injective(d32, 2));
    EXPECT_FALSE(proj_is_injective(Quiver(Adj{{0, 1}, {0, 0}}), 1));
    EXPECT_TRUE(proj_is_injective(Quiver(Adj{{0, 1}, {0, 0}}), 0));
}

TEST(ArrowValue, Examples) {
    Quiver d32 = delta_quiver(3, 2);
    EXPECT_EQ(arrow_value(d32, 2, 0), std::make_pair(2u, 2u));
    EXPECT_EQ(arrow_value(d32, 0, 1), std::make_pair(1u, 1u));
    EXPECT_EQ(arrow_value(Quiver(Adj{{0, 1}, {0, 0}}), 0, 1), std::make_pair(1u, 1u));
}

TEST(ArrowValue, PermutationInvariant) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        Quiver q = radsq::testing::random_connected_quiver(rng, 3, 2);
        for (const auto& perm : all_permutations(3)) {
            Quiver r = relabel(q, perm);
            EXPECT_EQ(is_self_injective(r), is_self_injective(q));
            EXPECT_EQ(detect_delta_shape(r).has_value(), detect_delta_shape(q).has_value());
            for (Vertex i = 0; i < 3; ++i) {
                EXPECT_EQ(proj_is_injective(r, perm[i]), proj_is_injective(q, i));
                for (Vertex j = 0; j < 3; ++j)
                    if (q.arrows(i, j) > 0)
                        EXPECT_EQ(arrow_value(r, perm[i], perm[j]), arrow_value(q, i, j));
            }
        }
    }
}
