#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "network.hpp"
#include "perm.hpp"

namespace permnet {

using Mask = std::uint64_t;

inline Signature strip_zeros(const Signature& eps) {
    Signature out;
    for (int v : eps)
        if (v != 0) out.push_back(v);
    return out;
}

// Edges of the maximal network, in label order.
inline std::vector<Edge> max_edges(const Signature& eps) {
    std::vector<Edge> e;
    for (int i = 1; i <= static_cast<int>(eps.size()); ++i)
        for (int j = i + 1; j <= static_cast<int>(eps.size()); ++j)
            if (eps[i - 1] == 1 && eps[j - 1] == -1) e.push_back({i, j});
    return label_sorted(e);
}

struct Poset {
    Signature eps;
    std::vector<Edge> edges;         // bit k of a mask is edges[k]
    std::vector<Mask> elements;      // sorted by (rank, label-ordered edge list)
    std::vector<int> rank;
    std::vector<std::vector<int>> up;    // covers x < y
    std::vector<std::vector<int>> down;  // covers y > x
    std::unordered_map<Mask, int> index;

    int size() const { return static_cast<int>(elements.size()); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    bool leq(int x, int y) const { return (elements[x] & ~elements[y]) == 0; }
    std::optional<int> find(Mask m) const {
        auto it = index.find(m);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    int rank_of_label(const Edge& e) const {
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == e) return static_cast<int>(k) + 1;
        throw Error(Errc::incompatible_signature, "edge " + format_edge(e) + " is not in the maximal network");
    }
    // EL label of a cover, as a bit index.
    int label_bit(int x, int y) const { return std::countr_zero(elements[y] & ~elements[x]); }
    Network network(int x) const {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (elements[x] >> k & 1) e.push_back(edges[k]);
        std::sort(e.begin(), e.end());
        return Network{static_cast<int>(eps.size()), e};
    }
    Mask mask_of(const Network& net) const {
        Mask m = 0;
        for (const Edge& e : net.edges) m |= Mask{1} << (rank_of_label(e) - 1);
        return m;
    }
};

// Crossing pairs (a, b) of the maximal network together with their completion bit.
struct Crossing {
    int a, b, completion;
};

inline std::vector<Crossing> crossings(const std::vector<Edge>& edges) {
    std::vector<Crossing> out;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = 0; b < edges.size(); ++b) {
            const Edge &x = edges[a], &y = edges[b];
            if (x.src < y.src && y.src < x.dst && x.dst < y.dst) {
                Edge c{y.src, x.dst};
                for (std::size_t k = 0; k < edges.size(); ++k)
                    if (edges[k] == c) out.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(k)});
            }
        }
    return out;
}

inline void check_cap(const Signature& eps, int cap) {
    int len = static_cast<int>(strip_zeros(eps).size());
    if (len > cap) throw Error(Errc::cap_exceeded, "signature length " + std::to_string(len) + " exceeds the cap " + std::to_string(cap));
}

inline Poset build_poset(const Signature& eps, int cap = 8) {
    if (!is_valid_signature(eps)) throw Error(Errc::malformed_signature, "the first nonzero entry of a signature must be +");
    check_cap(eps, cap);
    Poset P;
    P.eps = eps;
    P.edges = max_edges(eps);
    auto cross = crossings(P.edges);
    std::vector<std::vector<Crossing>> involving(P.edges.size());
    for (const Crossing& c : cross) {
        involving[c.a].push_back(c);
        involving[c.b].push_back(c);
    }
    // Completions precede both crossing edges in label order, so a prefix decides them.
    std::vector<Mask> found;
    auto rec = [&](auto&& self, std::size_t k, Mask m) -> void {
        if (k == P.edges.size()) {
            found.push_back(m);
            return;
        }
        self(self, k + 1, m);
        for (const Crossing& c : involving[k]) {
            int other = c.a == static_cast<int>(k) ? c.b : c.a;
            if ((m >> other & 1) && !(m >> c.completion & 1)) return;
        }
        self(self, k + 1, m | Mask{1} << k);
    };
    rec(rec, 0, 0);
    auto key = [&](Mask m) {
        std::vector<int> bits;
        for (std::size_t k = 0; k < P.edges.size(); ++k)
            if (m >> k & 1) bits.push_back(static_cast<int>(k));
        return std::make_pair(static_cast<int>(bits.size()), bits);
    };
    std::sort(found.begin(), found.end(), [&](Mask a, Mask b) { return key(a) < key(b); });
    P.elements = std::move(found);
    for (int i = 0; i < P.size(); ++i) {
        P.index[P.elements[i]] = i;
        P.rank.push_back(std::popcount(P.elements[i]));
    }
    P.up.resize(P.size());
    P.down.resize(P.size());
    for (int i = 0; i < P.size(); ++i)
        for (std::size_t k = 0; k < P.edges.size(); ++k)
            if (!(P.elements[i] >> k & 1))
                if (auto j = P.find(P.elements[i] | Mask{1} << k)) {
                    P.up[i].push_back(*j);
                    P.down[*j].push_back(i);
                }
    return P;
}

inline int meet(const Poset& P, int x, int y) {
    auto m = P.find(P.elements[x] & P.elements[y]);
    if (!m) throw Error(Errc::not_comparable, "intersection is not a network");
    return *m;
}

// Union plus completion edges; `fixed_point` repeats the completion until nothing changes.
inline Mask join_mask(const Poset& P, Mask m, bool fixed_point = true) {
    static thread_local std::map<std::vector<Edge>, std::vector<Crossing>> cache;
    auto it = cache.find(P.edges);
    if (it == cache.end()) it = cache.emplace(P.edges, crossings(P.edges)).first;
    while (true) {
        Mask next = m;
        for (const Crossing& c : it->second)
            if ((m >> c.a & 1) && (m >> c.b & 1)) next |= Mask{1} << c.completion;
        if (next == m || !fixed_point) return next;
        m = next;
    }
}

inline int join(const Poset& P, int x, int y) {
    auto j = P.find(join_mask(P, P.elements[x] | P.elements[y]));
    if (!j) throw Error(Errc::not_comparable, "completed union is not a network");
    return *j;
}

inline std::vector<long long> whitney_direct(const Poset& P) {
    std::vector<long long> c(P.rank.back() + 1, 0);
    for (int r : P.rank) ++c[r];
    return c;
}

inline std::vector<long long> whitney_direct(const Signature& eps, int cap = 8) { return whitney_direct(build_poset(eps, cap)); }

inline std::vector<long long> poly_add(std::vector<long long> a, const std::vector<long long>& b, int shift = 0) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    return a;
}

// W(eps) = sum over T in [1, j-1] of q^|T| W(eps(T)), j the first sink.
inline std::vector<long long> whitney_recurrence(const Signature& eps_in) {
    Signature eps = strip_zeros(eps_in);
    std::size_t lead = 0;
    while (lead < eps.size() && eps[lead] == -1) ++lead;
    eps.erase(eps.begin(), eps.begin() + lead);
    auto first_sink = std::find(eps.begin(), eps.end(), -1);
    if (first_sink == eps.end()) return {1};
    int j = static_cast<int>(first_sink - eps.begin()) + 1;
    Signature tail(first_sink + 1, eps.end());
    std::vector<long long> total;
    for (unsigned t = 0; t < (1u << (j - 1)); ++t) {
        int size = std::popcount(t), d = 0;
        if (t) {
            int lo = std::countr_zero(t) + 1;
            for (int k = lo + 1; k <= j - 1; ++k) d += !(t >> (k - 1) & 1);
        }
        Signature next(j - 1 - d, 1);
        next.insert(next.end(), tail.begin(), tail.end());
        total = poly_add(total, whitney_recurrence(next), size);
    }
    return total;
}

inline std::pair<long long, long long> even_odd_balance(const std::vector<long long>& w) {
    long long even = 0, odd = 0;
    for (std::size_t r = 0; r < w.size(); ++r) (r % 2 ? odd : even) += w[r];
    return {even, odd};
}

inline std::string format_poly(const std::vector<long long>& c) {
    std::string s;
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (!c[r]) continue;
        if (!s.empty()) s += " + ";
        if (r == 0 || c[r] != 1) s += std::to_string(c[r]);
        if (r >= 1) s += "q";
        if (r >= 2) s += "^" + std::to_string(r);
    }
    return s.empty() ? "0" : s;
}

// Elements of [x, y], in the poset order (so by rank).
inline std::vector<int> interval(const Poset& P, int x, int y) {
    if (!P.leq(x, y)) throw Error(Errc::not_comparable, "x is not below y");
    std::vector<int> out;
    for (int z = x; z <= y; ++z)
        if (P.leq(x, z) && P.leq(z, y)) out.push_back(z);
    return out;
}

// Number of maximal chains of [x, y] whose label sequence is increasing (rising = true) or
// decreasing in label order.
inline long long count_monotone_chains(const Poset& P, int x, int y, bool rising) {
    std::map<std::pair<int, int>, long long> memo;
    auto rec = [&](auto&& self, int z, int last) -> long long {
        if (z == y) return 1;
        auto key = std::make_pair(z, last);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long total = 0;
        for (int w : P.up[z]) {
            if (!P.leq(w, y)) continue;
            int b = P.label_bit(z, w);
            if (last < 0 || (rising ? b > last : b < last)) total += self(self, w, b);
        }
        return memo[key] = total;
    };
    return rec(rec, x, -1);
}

inline long long count_maximal_chains(const Poset& P, int x, int y) {
    std::map<int, long long> memo;
    auto rec = [&](auto&& self, int z) -> long long {
        if (z == y) return 1;
        if (auto it = memo.find(z); it != memo.end()) return it->second;
        long long total = 0;
        for (int w : P.up[z])
            if (P.leq(w, y)) total += self(self, w);
        return memo[z] = total;
    };
    return rec(rec, x);
}

// Greedy chain taking the smallest label at every step; it is the lexicographically first
// maximal chain.
inline std::vector<int> lex_first_chain(const Poset& P, int x, int y) {
    std::vector<int> chain{x};
    while (chain.back() != y) {
        int z = chain.back(), best = -1, best_bit = 0;
        for (int w : P.up[z])
            if (P.leq(w, y)) {
                int b = P.label_bit(z, w);
                if (best < 0 || b < best_bit) best = w, best_bit = b;
            }
        chain.push_back(best);
    }
    return chain;
}

inline std::vector<int> chain_labels(const Poset& P, const std::vector<int>& chain) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back(P.label_bit(chain[i], chain[i + 1]) + 1);
    return out;
}

// mu(x, z) for every z >= x.
inline std::vector<long long> mobius_from(const Poset& P, int x) {
    std::vector<long long> mu(P.size(), 0);
    std::vector<int> above;
    for (int z = x; z < P.size(); ++z)
        if (P.leq(x, z)) above.push_back(z);
    mu[x] = 1;
    for (std::size_t k = 1; k < above.size(); ++k) {
        int z = above[k];
        long long s = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (P.leq(above[i], z)) s += mu[above[i]];
        mu[z] = -s;
    }
    return mu;
}

inline long long mobius_recursive(const Poset& P, int x, int y) {
    if (!P.leq(x, y)) throw Error(Errc::not_comparable, "x is not below y");
    return mobius_from(P, x)[y];
}

// Crossing edges of y over x: completions (j,k) missing from x for crossing pairs of y.
inline Mask crossing_edges(const Poset& P, int x, int y) {
    Mask out = 0, my = P.elements[y], mx = P.elements[x];
    for (const Crossing& c : crossings(P.edges))
        if ((my >> c.a & 1) && (my >> c.b & 1) && !(mx >> c.completion & 1)) out |= Mask{1} << c.completion;
    return out;
}

inline long long mobius_closed(const Poset& P, int x, int y) {
    if (!P.leq(x, y)) throw Error(Errc::not_comparable, "x is not below y");
    if (crossing_edges(P, x, y)) return 0;
    return (P.rank[y] - P.rank[x]) % 2 ? -1 : 1;
}

// Every maximal chain of [x, y] read as label ranks within y \ x must be a permutation.
// Returns the number of chains checked, or nullopt on the first failure.
inline std::optional<long long> snelling_check(const Poset& P, int x, int y) {
    Mask diff = P.elements[y] & ~P.elements[x];
    std::vector<int> rank_in(P.edges.size(), 0);
    int r = 0;
    for (std::size_t k = 0; k < P.edges.size(); ++k)
        if (diff >> k & 1) rank_in[k] = ++r;
    long long chains = 0;
    bool ok = true;
    std::vector<int> seq;
    auto rec = [&](auto&& self, int z) -> void {
        if (!ok) return;
        if (z == y) {
            std::vector<int> s = seq;
            std::sort(s.begin(), s.end());
            for (int i = 0; i < r; ++i) ok = ok && s.size() == static_cast<std::size_t>(r) && s[i] == i + 1;
            ++chains;
            return;
        }
        for (int w : P.up[z])
            if (P.leq(w, y)) {
                seq.push_back(rank_in[P.label_bit(z, w)]);
                self(self, w);
                seq.pop_back();
            }
    };
    rec(rec, x);
    if (!ok) return std::nullopt;
    return chains;
}

inline bool crossing_free(const std::vector<Edge>& edges) {
    for (const Edge& a : edges)
        for (const Edge& b : edges)
            if (crosses(a, b)) return false;
    return true;
}

struct BooleanCheck {
    bool crossing_free = false;
    bool boolean = false;  // meaningful when crossing_free
};

inline BooleanCheck boolean_interval_check(const Poset& P) {
    BooleanCheck b;
    b.crossing_free = crossing_free(P.edges);
    int atoms = static_cast<int>(P.up[P.bottom()].size());
    long long mu = mobius_recursive(P, P.bottom(), P.top());
    b.boolean = P.size() == (1LL << atoms) && mu == (P.rank[P.top()] % 2 ? -1 : 1);
    return b;
}

inline std::string format_edge_set(const Poset& P, int x) {
    std::string s = "{";
    bool first = true;
    for (std::size_t k = 0; k < P.edges.size(); ++k)
        if (P.elements[x] >> k & 1) {
            if (!first) s += ',';
            s += format_edge(P.edges[k]);
            first = false;
        }
    return s + "}";
}

inline std::string hasse_dot(const Poset& P) {
    std::string s = "digraph poset {\n  rankdir=BT;\n";
    for (int x = 0; x < P.size(); ++x)
        s += "  n" + std::to_string(x) + " [label=\"" + format_edge_set(P, x) + "\"];\n";
    for (int x = 0; x < P.size(); ++x)
        for (int y : P.up[x])
            s += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + " [label=\"" +
                 std::to_string(P.label_bit(x, y) + 1) + "\"];\n";
    return s + "}\n";
}

// All signatures over {+1,-1} of length len whose first entry is + and last is -.
inline std::vector<Signature> endpoint_signatures(int len) {
    std::vector<Signature> out;
    if (len < 2) return out;
    for (unsigned m = 0; m < (1u << (len - 2)); ++m) {
        Signature e{1};
        for (int k = 0; k < len - 2; ++k) e.push_back(m >> k & 1 ? 1 : -1);
        e.push_back(-1);
        out.push_back(e);
    }
    return out;
}

}  // namespace permnet
