#include <gtest/gtest.h>

#include <permnet/forest.hpp>
#include <permnet/poset.hpp>

#include "oracles.hpp"

using namespace permnet;

namespace {

Signature sig(const char* s) { return parse_signature(s); }

std::set<oracle::Pair> pairs_of(const Network& net) {
    std::set<oracle::Pair> s;
    for (const Edge& e : net.edges) s.insert({e.src, e.dst});
    return s;
}

}  // namespace

TEST(Poset, ElementsMatchSubsetOracle) {
    for (int len = 2; len <= 7; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            std::set<std::set<oracle::Pair>> mine;
            for (int x = 0; x < P.size(); ++x) mine.insert(pairs_of(P.network(x)));
            auto ref = oracle::networks_for(e);
            EXPECT_EQ(mine, std::set<std::set<oracle::Pair>>(ref.begin(), ref.end())) << format_signature(e);
            EXPECT_EQ(whitney_direct(P), oracle::rank_counts(ref));
        }
}

TEST(Poset, FourPointShape) {
    Poset P = build_poset(sig("++--"));
    EXPECT_EQ(P.size(), 14);
    EXPECT_EQ(whitney_direct(P), (std::vector<long long>{1, 4, 5, 3, 1}));
    EXPECT_EQ(P.network(P.top()), validate(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    EXPECT_EQ(P.rank_of_label({2, 3}), 1);
    EXPECT_EQ(P.rank_of_label({1, 4}), 4);
}

TEST(Poset, CoversAddOneEdge) {
    Poset P = build_poset(sig("+-++--"));
    for (int x = 0; x < P.size(); ++x)
        for (int y : P.up[x]) {
            EXPECT_EQ(P.rank[y], P.rank[x] + 1);
            EXPECT_TRUE(P.leq(x, y));
        }
}

TEST(Poset, FullLabelOrder) {
    Poset P = build_poset(sig("+-++--"));
    EXPECT_EQ(P.edges, (std::vector<Edge>{{1, 2}, {4, 5}, {3, 5}, {1, 5}, {4, 6}, {3, 6}, {1, 6}}));
}

// The subposet of ++-- below {(2,3),(1,3),(2,4)}.
int crossing_top(const Poset& P) { return *P.find(P.mask_of(validate(4, {{2, 3}, {1, 3}, {2, 4}}))); }

TEST(Poset, CrossingSubposetCoverLabels) {
    Poset P = build_poset(sig("++--"));
    int top = crossing_top(P);
    std::vector<int> labels;
    for (int y : P.up[P.bottom()])
        if (P.leq(y, top)) labels.push_back(P.label_bit(P.bottom(), y) + 1);
    std::sort(labels.begin(), labels.end());
    EXPECT_EQ(labels, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(P.edges[0], (Edge{2, 3}));
    EXPECT_EQ(P.edges[1], (Edge{1, 3}));
    EXPECT_EQ(P.edges[2], (Edge{2, 4}));
    EXPECT_EQ(interval(P, P.bottom(), top).size(), 7u);
}

TEST(Poset, LatticeUniversalPropertiesByScan) {
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x)
                for (int y = 0; y < P.size(); ++y) {
                    int m = meet(P, x, y), j = join(P, x, y);
                    // Greatest lower bound and least upper bound by scanning every element.
                    int glb = -1, lub = -1;
                    for (int z = 0; z < P.size(); ++z) {
                        if (P.leq(z, x) && P.leq(z, y) && (glb < 0 || P.leq(glb, z))) glb = z;
                    }
                    for (int z = P.size() - 1; z >= 0; --z) {
                        if (P.leq(x, z) && P.leq(y, z) && (lub < 0 || P.leq(z, lub))) lub = z;
                    }
                    for (int z = 0; z < P.size(); ++z) {
                        if (P.leq(z, x) && P.leq(z, y)) EXPECT_TRUE(P.leq(z, glb));
                        if (P.leq(x, z) && P.leq(y, z)) EXPECT_TRUE(P.leq(lub, z));
                    }
                    EXPECT_EQ(m, glb);
                    EXPECT_EQ(j, lub);
                    EXPECT_EQ(join(P, x, meet(P, x, y)), x);
                    EXPECT_EQ(meet(P, x, join(P, x, y)), x);
                }
        }
}

TEST(Poset, SinglePassJoinAgrees) {
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x)
                for (int y = 0; y < P.size(); ++y) {
                    Mask u = P.elements[x] | P.elements[y];
                    EXPECT_EQ(join_mask(P, u, false), join_mask(P, u, true));
                }
        }
}

TEST(Poset, WhitneyGolden) {
    EXPECT_EQ(whitney_direct(sig("++---")), (std::vector<long long>{1, 6, 12, 13, 9, 4, 1}));
    EXPECT_EQ(whitney_recurrence(sig("++---")), (std::vector<long long>{1, 6, 12, 13, 9, 4, 1}));
    EXPECT_EQ(format_poly(whitney_direct(sig("++---"))), "1 + 6q + 12q^2 + 13q^3 + 9q^4 + 4q^5 + q^6");
    EXPECT_EQ(whitney_recurrence(sig("+")), (std::vector<long long>{1}));
    EXPECT_EQ(whitney_recurrence(sig("+0-")), (std::vector<long long>{1, 1}));
}

TEST(Poset, WhitneyAgreesThreeWays) {
    for (int len = 2; len <= 8; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            auto w = whitney_direct(e);
            EXPECT_EQ(w, whitney_recurrence(e)) << format_signature(e);
            EXPECT_EQ(w, forest_gen_fn(e)) << format_signature(e);
            auto [even, odd] = even_odd_balance(w);
            EXPECT_EQ(even, odd) << format_signature(e);
        }
}

TEST(Poset, CapsAndMalformedSignatures) {
    EXPECT_THROW(build_poset(sig("+++++-----")), Error);
    EXPECT_NO_THROW(build_poset(sig("+++++-----"), 10));
    EXPECT_THROW(build_poset(Signature{-1, 1}), Error);
}

TEST(Poset, MobiusCrossingSubposet) {
    Poset P = build_poset(sig("++--"));
    int top = crossing_top(P);
    auto mu = mobius_from(P, P.bottom());
    EXPECT_EQ(mu[top], 0);
    for (int y : interval(P, P.bottom(), top))
        if (y != top) EXPECT_EQ(mu[y], P.rank[y] % 2 ? -1 : 1);
    EXPECT_EQ(crossing_edges(P, P.bottom(), top), Mask{1});
    EXPECT_EQ(mobius_closed(P, P.bottom(), top), 0);
    EXPECT_EQ(count_monotone_chains(P, P.bottom(), top, false), 0);
    EXPECT_EQ(chain_labels(P, lex_first_chain(P, P.bottom(), top)), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(snelling_check(P, P.bottom(), top), 4);
}

TEST(Poset, ShellabilityAndMobiusOnAllIntervals) {
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x) {
                auto mu = mobius_from(P, x);
                for (int y = x; y < P.size(); ++y) {
                    if (!P.leq(x, y)) continue;
                    EXPECT_EQ(count_monotone_chains(P, x, y, true), 1);
                    auto lab = chain_labels(P, lex_first_chain(P, x, y));
                    EXPECT_TRUE(std::is_sorted(lab.begin(), lab.end()));
                    long long sign = (P.rank[y] - P.rank[x]) % 2 ? -1 : 1;
                    EXPECT_EQ(sign * mu[y], count_monotone_chains(P, x, y, false));
                    EXPECT_EQ(mobius_closed(P, x, y), mu[y]);
                    EXPECT_LE(std::abs(mu[y]), 1);
                    EXPECT_TRUE(snelling_check(P, x, y).has_value());
                }
            }
        }
}

TEST(Poset, BooleanWhenCrossingFree) {
    int seen = 0;
    for (int len = 2; len <= 8; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            BooleanCheck b = boolean_interval_check(P);
            if (!b.crossing_free) continue;
            ++seen;
            EXPECT_TRUE(b.boolean) << format_signature(e);
        }
    EXPECT_GT(seen, 0);
    EXPECT_TRUE(boolean_interval_check(build_poset(sig("+-+-"))).crossing_free);
    EXPECT_FALSE(boolean_interval_check(build_poset(sig("++--"))).crossing_free);
}

TEST(Poset, HasseDotIsStable) {
    Poset P = build_poset(sig("++--"));
    std::string dot = hasse_dot(P);
    EXPECT_EQ(dot, hasse_dot(build_poset(sig("++--"))));
    std::size_t nodes = 0;
    for (std::size_t at = 0; (at = dot.find("[label=\"{", at)) != std::string::npos; ++at) ++nodes;
    EXPECT_EQ(nodes, 14u);
    EXPECT_NE(dot.find("n0 [label=\"{}\"]"), std::string::npos);
}
