#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include <permnet/diagram.hpp>
#include <permnet/forest.hpp>
#include <permnet/network.hpp>
#include <permnet/perm.hpp>
#include <permnet/poset.hpp>

#include "oracles.hpp"

using namespace permnet;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Edge> sorted_edges(std::initializer_list<std::pair<int, int>> l) {
    std::vector<Edge> e;
    for (auto [a, b] : l) e.push_back({a, b});
    std::sort(e.begin(), e.end());
    return e;
}

Outcome cardinality() {
    Outcome o;
    std::ostringstream d;
    for (int n = 1; n <= 7; ++n) {
        auto nets = enumerate_networks(n);
        d << n << ":" << nets.size() << " ";
        if (static_cast<long long>(nets.size()) != factorial(n)) o.fail("n=" + std::to_string(n) + " gives " + std::to_string(nets.size()));
    }
    if (o.ok) o.detail = d.str();
    return o;
}

Outcome round_trips() {
    Outcome o;
    long long count = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Perm& p : all_perms(n)) {
            if (sigma(sigma_prime(p)) != p) o.fail("sigma(sigma'(" + format_perm(p) + ")) differs");
            ++count;
        }
        for (const Network& net : enumerate_networks(n)) {
            if (sigma_prime(sigma(net)) != net) o.fail("sigma'(sigma(" + format_network(net) + ")) differs");
            ++count;
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " round-trips";
    return o;
}

Outcome sigma_golden() {
    Outcome o;
    Network net = validate(4, {{2, 3}, {1, 3}, {2, 4}, {1, 4}});
    if (sigma(net) != parse_perm("3412")) o.fail("sigma gives " + format_perm(sigma(net)));
    if (sigma_prime(parse_perm("3412")) != net) o.fail("sigma' gives " + format_network(sigma_prime(parse_perm("3412"))));
    if (o.ok) o.detail = format_network(net) + " <-> 3412";
    return o;
}

Outcome polyomino_golden() {
    Outcome o;
    std::vector<std::tuple<int, int, int>> spans{{1, 1, 4}, {2, 2, 5}, {3, 2, 7}, {4, 3, 4}, {5, 3, 3}};
    std::vector<Cell> cells;
    for (auto [r, a, b] : spans)
        for (int c = a; c <= b; ++c) cells.push_back({r, c});
    Polyomino P = make_polyomino(cells);
    auto want = sorted_edges({{2, 10}, {3, 10}, {8, 10}, {9, 10}, {2, 7}, {3, 7}, {4, 7}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    auto got = polyomino_edges(P);
    if (got != want) o.fail("edge set differs");
    Perm a = alpha(P);
    if (a != parse_perm("5,1,7,10,2,6,4,3,8,9")) o.fail("alpha is " + format_perm(a));
    if (sigma_prime(inverse(a)).edges != want) o.fail("network of the inverse differs");
    if (o.ok) o.detail = std::to_string(got.size()) + " edges, alpha = " + format_perm(a);
    return o;
}

Outcome rothe() {
    Outcome o;
    long long count = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Perm& p : all_perms(n)) {
            if (rothe_edges(p) != sigma_prime(inverse(p)).edges) o.fail("differs at " + format_perm(p));
            ++count;
        }
    auto golden = rothe_edges(parse_perm("2714635"));
    if (golden != sorted_edges({{1, 2}, {1, 7}, {3, 7}, {5, 6}, {5, 7}})) o.fail("golden 2714635 differs");
    if (o.ok) o.detail = std::to_string(count) + " permutations";
    return o;
}

Outcome dyck_golden() {
    Outcome o;
    std::vector<std::pair<int, int>> xy{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {5, 3}, {6, 3}, {7, 3}};
    std::vector<Cell> ribbon;
    for (auto [x, y] : xy) ribbon.push_back({10 - y, x + 1});
    std::multiset<int> sizes;
    for (const DyckTile& t : max_dyck_tiling(ribbon)) sizes.insert(t.size);
    std::string s;
    for (int v : sizes) s += std::to_string(v) + " ";
    if (sizes != std::multiset<int>{0, 0, 0, 1, 2}) o.fail("sizes " + s);
    if (o.ok) o.detail = "sizes " + s;
    return o;
}

Outcome whitney() {
    Outcome o;
    int count = 0;
    for (int len = 2; len <= 8; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            auto w = whitney_direct(e);
            if (w != whitney_recurrence(e) || w != forest_gen_fn(e)) o.fail("disagree at " + format_signature(e));
            ++count;
        }
    auto g = whitney_direct(parse_signature("++---"));
    if (g != std::vector<long long>{1, 6, 12, 13, 9, 4, 1}) o.fail("golden ++--- is " + format_poly(g));
    if (o.ok) o.detail = std::to_string(count) + " signatures; W(++---) = " + format_poly(g);
    return o;
}

Outcome balance() {
    Outcome o;
    int count = 0;
    for (int len = 2; len <= 8; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            auto [even, odd] = even_odd_balance(whitney_direct(e));
            if (even != odd) o.fail(format_signature(e) + ": " + std::to_string(even) + " vs " + std::to_string(odd));
            ++count;
        }
    if (o.ok) o.detail = std::to_string(count) + " signatures";
    return o;
}

Outcome forests() {
    Outcome o;
    long long count = 0;
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Perm pi = boundary_perm(shape_of(e));
            for (const Forest& f : enumerate_forests(e)) {
                Network n = network_from_forest(f);
                if (kappa(f) != inverse(sigma(n))) o.fail("kappa at " + format_network(n));
                Perm mu = compose(kappa_tilde(f), inverse(pi));
                if (nu(f) != inverse(mu)) o.fail("nu at " + format_network(n));
                if (oracle::swap_distance(pi, nu(f)) != static_cast<int>(f.pointed.size())) o.fail("length at " + format_network(n));
                ++count;
            }
        }
    Signature e6 = parse_signature("++-+--");
    Forest three_point = validate_forest(parse_signature("+++---"), {{2, 1}, {3, 2}, {1, 3}});
    Forest five_point = validate_forest(e6, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}});
    Forest four_point = validate_forest(e6, {{1, 1}, {2, 2}, {1, 3}, {3, 1}});
    Perm pi = boundary_perm(shape_of(e6));
    if (kappa(three_point) != parse_perm("542163")) o.fail("three-point forest gives " + format_perm(kappa(three_point)));
    if (nu(five_point) != parse_perm("231465")) o.fail("nu golden " + format_perm(nu(five_point)));
    if (kappa_tilde(five_point) != parse_perm("635142")) o.fail("kappa~ golden " + format_perm(kappa_tilde(five_point)));
    if (compose(kappa_tilde(five_point), inverse(pi)) != parse_perm("312465")) o.fail("mu golden");
    if (swap_length(pi, nu(four_point)) != 4) o.fail("length golden");
    if (o.ok) o.detail = std::to_string(count) + " forests";
    return o;
}

Outcome lattice() {
    Outcome o;
    long long pairs = 0;
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x)
                for (int y = 0; y < P.size(); ++y) {
                    int m = meet(P, x, y), j = join(P, x, y);
                    bool ok = P.leq(m, x) && P.leq(m, y) && P.leq(x, j) && P.leq(y, j);
                    for (int z = 0; z < P.size() && ok; ++z) {
                        if (P.leq(z, x) && P.leq(z, y) && !P.leq(z, m)) ok = false;
                        if (P.leq(x, z) && P.leq(y, z) && !P.leq(j, z)) ok = false;
                    }
                    ok = ok && join(P, x, m) == x && meet(P, x, j) == x;
                    if (!ok) o.fail(format_signature(e) + " at " + format_edge_set(P, x) + ", " + format_edge_set(P, y));
                    ++pairs;
                }
        }
    if (o.ok) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome el_mobius() {
    Outcome o;
    long long intervals = 0;
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x) {
                auto mu = mobius_from(P, x);
                for (int y = x; y < P.size(); ++y) {
                    if (!P.leq(x, y)) continue;
                    std::string at = format_signature(e) + " [" + format_edge_set(P, x) + ", " + format_edge_set(P, y) + "]";
                    if (count_monotone_chains(P, x, y, true) != 1) o.fail("rising chains at " + at);
                    auto lab = chain_labels(P, lex_first_chain(P, x, y));
                    if (!std::is_sorted(lab.begin(), lab.end())) o.fail("first chain not rising at " + at);
                    long long sign = (P.rank[y] - P.rank[x]) % 2 ? -1 : 1;
                    if (sign * mu[y] != count_monotone_chains(P, x, y, false)) o.fail("decreasing count at " + at);
                    if (mobius_closed(P, x, y) != mu[y] || mu[y] < -1 || mu[y] > 1) o.fail("closed form at " + at);
                    ++intervals;
                }
            }
        }
    Poset P = build_poset(parse_signature("++--"));
    int top = *P.find(P.mask_of(validate(4, {{2, 3}, {1, 3}, {2, 4}})));
    auto mu = mobius_from(P, P.bottom());
    if (mu[top] != 0) o.fail("subposet top value " + std::to_string(mu[top]));
    for (int y : interval(P, P.bottom(), top))
        if (y != top && mu[y] != (P.rank[y] % 2 ? -1 : 1)) o.fail("subposet value at " + format_edge_set(P, y));
    if (o.ok) o.detail = std::to_string(intervals) + " intervals";
    return o;
}

Outcome snelling() {
    Outcome o;
    long long chains = 0;
    for (int len = 2; len <= 6; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            for (int x = 0; x < P.size(); ++x)
                for (int y = x; y < P.size(); ++y) {
                    if (!P.leq(x, y)) continue;
                    auto c = snelling_check(P, x, y);
                    if (!c) o.fail(format_signature(e) + " [" + format_edge_set(P, x) + ", " + format_edge_set(P, y) + "]");
                    else chains += *c;
                }
        }
    if (o.ok) o.detail = std::to_string(chains) + " maximal chains";
    return o;
}

Outcome boolean_case() {
    Outcome o;
    int checked = 0;
    for (int len = 2; len <= 8; ++len)
        for (const Signature& e : endpoint_signatures(len)) {
            Poset P = build_poset(e);
            BooleanCheck b = boolean_interval_check(P);
            if (!b.crossing_free) continue;
            if (!b.boolean) o.fail(format_signature(e));
            ++checked;
        }
    if (checked == 0) o.fail("no crossing-free signature found");
    if (o.ok) o.detail = std::to_string(checked) + " crossing-free signatures";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"network count is n! for n <= 7", cardinality},
        {"sigma and sigma' are mutually inverse for n <= 7", round_trips},
        {"worked sigma example", sigma_golden},
        {"ribbon edges of a ten-point polyomino", polyomino_golden},
        {"Rothe edges for n <= 6", rothe},
        {"maximal Dyck tiling sizes", dyck_golden},
        {"Whitney numbers agree three ways, length <= 8", whitney},
        {"even and odd rank totals balance, length <= 8", balance},
        {"forest maps, length <= 6", forests},
        {"meet and join are lattice operations, length <= 6", lattice},
        {"rising chains and Mobius values, length <= 6", el_mobius},
        {"maximal chains permute label ranks, length <= 6", snelling},
        {"crossing-free maximal networks give Boolean lattices, length <= 8", boolean_case},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu  %s  (%s; %.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
        failures += !o.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
