#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace permnet {

struct Edge {
    int src = 0;
    int dst = 0;

    int size() const { return dst - src; }
    auto operator<=>(const Edge&) const = default;
};

// (i,j) < (k,l) iff j < l, or j = l and i > k.
inline bool label_less(const Edge& a, const Edge& b) {
    return a.dst != b.dst ? a.dst < b.dst : a.src > b.src;
}

// (i,k) and (j,l) cross when i < j < k < l (either argument order).
inline bool crosses(const Edge& a, const Edge& b) {
    auto one = [](const Edge& x, const Edge& y) { return x.src < y.src && y.src < x.dst && x.dst < y.dst; };
    return one(a, b) || one(b, a);
}

struct Network {
    int n = 0;
    std::vector<Edge> edges;  // sorted by (src, dst)

    bool has(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }
    bool operator==(const Network&) const = default;
};

struct NetworkViolation {
    Errc code;
    std::string message;
    std::optional<std::pair<Edge, Edge>> witness;
};

inline std::string format_edge(const Edge& e) {
    return "(" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")";
}

inline std::optional<NetworkViolation> check_network(int n, std::vector<Edge> edges) {
    if (n < 1) return NetworkViolation{Errc::endpoint_out_of_range, "n must be positive", std::nullopt};
    for (const Edge& e : edges) {
        if (e.src < 1 || e.dst < 1 || e.src > n || e.dst > n)
            return NetworkViolation{Errc::endpoint_out_of_range, "endpoint out of range in " + format_edge(e), std::nullopt};
        if (e.src >= e.dst)
            return NetworkViolation{Errc::src_not_less_than_dst, "source not left of sink in " + format_edge(e), std::nullopt};
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        return NetworkViolation{Errc::duplicate_edge, "duplicate edge " + format_edge(*it), std::nullopt};
    for (const Edge& a : edges)
        for (const Edge& b : edges)
            if (a.dst == b.src)
                return NetworkViolation{Errc::source_sink_overlap,
                                        "point " + std::to_string(a.dst) + " is both a sink and a source",
                                        std::make_pair(a, b)};
    for (const Edge& a : edges)
        for (const Edge& b : edges)
            if (a.src < b.src && b.src < a.dst && a.dst < b.dst &&
                !std::binary_search(edges.begin(), edges.end(), Edge{b.src, a.dst}))
                return NetworkViolation{Errc::missing_b1_edge,
                                        "edges " + format_edge(a) + " and " + format_edge(b) + " cross without " +
                                            format_edge({b.src, a.dst}),
                                        std::make_pair(a, b)};
    return std::nullopt;
}

class InvalidNetwork : public Error {
public:
    explicit InvalidNetwork(NetworkViolation v) : Error(v.code, v.message), violation_(std::move(v)) {}
    const NetworkViolation& violation() const { return violation_; }

private:
    NetworkViolation violation_;
};

inline Network validate(int n, std::vector<Edge> edges) {
    if (auto v = check_network(n, edges)) throw InvalidNetwork(*v);
    std::sort(edges.begin(), edges.end());
    return Network{n, std::move(edges)};
}

// Repeatedly take the remaining edge of minimal size, left-most first.
inline std::vector<Edge> edge_order(const Network& net) {
    std::vector<Edge> order = net.edges;
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.src < b.src;
    });
    return order;
}

inline Perm sigma(const Network& net) {
    Perm p = identity(net.n);
    for (const Edge& e : edge_order(net)) std::swap(p[e.src - 1], p[e.dst - 1]);
    return p;
}

inline Network sigma_prime(const Perm& p) {
    require_perm(p);
    Perm w = p;
    std::vector<Edge> edges;
    int n = static_cast<int>(w.size());
    while (n > 0) {
        if (w[n - 1] == n) {  // n is fixed: drop it
            --n;
            continue;
        }
        int j = 0;  // leftmost entry larger than w[n-1]
        while (w[j] < w[n - 1]) ++j;
        edges.push_back({j + 1, n});
        std::swap(w[j], w[n - 1]);
    }
    std::sort(edges.begin(), edges.end());
    return Network{static_cast<int>(p.size()), std::move(edges)};
}

// Entries +1 (source or neutral), -1 (sink or neutral), 0 (neutral).
using Signature = std::vector<int>;

inline bool is_valid_signature(const Signature& eps) {
    for (int v : eps) {
        if (v < -1 || v > 1) return false;
    }
    for (int v : eps) {
        if (v == 1) return true;
        if (v == -1) return false;
    }
    return true;
}

// Accepts "++--", "+ + - -", "1,1,-1,-1"; "0" marks a neutral point.
inline Signature parse_signature(const std::string& text) {
    Signature eps;
    bool csv = text.find(',') != std::string::npos || text.find('1') != std::string::npos;
    if (csv) {
        std::string cur;
        auto flush = [&] {
            std::string t;
            for (char c : cur)
                if (c != ' ') t += c;
            if (t == "1" || t == "+1") eps.push_back(1);
            else if (t == "-1") eps.push_back(-1);
            else if (t == "0") eps.push_back(0);
            else throw Error(Errc::malformed_signature, "bad signature entry '" + t + "'");
            cur.clear();
        };
        for (char c : text) {
            if (c == ',') flush();
            else cur += c;
        }
        flush();
    } else {
        for (char c : text) {
            if (c == '+') eps.push_back(1);
            else if (c == '-') eps.push_back(-1);
            else if (c == '0') eps.push_back(0);
            else if (c != ' ' && c != '\t') throw Error(Errc::malformed_signature, "bad signature character");
        }
    }
    if (eps.empty()) throw Error(Errc::malformed_signature, "empty signature");
    if (!is_valid_signature(eps))
        throw Error(Errc::malformed_signature, "the first nonzero entry of a signature must be +");
    return eps;
}

inline std::string format_signature(const Signature& eps) {
    std::string s;
    for (int v : eps) s += v > 0 ? '+' : v < 0 ? '-' : '0';
    return s;
}

inline Signature signature_of(const Network& net) {
    Signature eps(net.n, 0);
    for (const Edge& e : net.edges) {
        eps[e.src - 1] = 1;
        eps[e.dst - 1] = -1;
    }
    return eps;
}

// Membership in N(n; eps): sources at +1, sinks at -1; any point may stay neutral.
inline bool compatible(const Network& net, const Signature& eps) {
    if (static_cast<int>(eps.size()) != net.n) return false;
    for (const Edge& e : net.edges)
        if (eps[e.src - 1] != 1 || eps[e.dst - 1] != -1) return false;
    return true;
}

inline std::vector<Network> enumerate_networks(int n, const std::optional<Signature>& filter = std::nullopt,
                                               int cap = 8) {
    if (n > cap) throw Error(Errc::cap_exceeded, "n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
    if (filter && static_cast<int>(filter->size()) != n)
        throw Error(Errc::incompatible_signature, "signature length differs from n");
    std::vector<Network> out;
    for (const Perm& p : all_perms(n)) {
        Network net = sigma_prime(p);
        if (!filter || compatible(net, *filter)) out.push_back(std::move(net));
    }
    return out;
}

inline std::vector<Edge> label_sorted(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), label_less);
    return edges;
}

inline std::string format_network(const Network& net) {
    std::string s = "n=" + std::to_string(net.n) + "; edges=";
    bool first = true;
    for (const Edge& e : label_sorted(net.edges)) {
        if (!first) s += ',';
        s += format_edge(e);
        first = false;
    }
    return s;
}

// One row per edge above the point line, largest label on top.
inline std::string render_network(const Network& net) {
    int width = static_cast<int>(std::to_string(net.n).size()) + 2;
    auto col = [&](int p) { return (p - 1) * width + width - 1; };
    std::string out;
    auto edges = label_sorted(net.edges);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        std::string line(col(it->dst) + 1, ' ');
        for (int c = col(it->src); c <= col(it->dst); ++c) line[c] = '-';
        line[col(it->src)] = line[col(it->dst)] = '+';
        out += line + "\n";
    }
    std::string points;
    for (int p = 1; p <= net.n; ++p) {
        std::string t = std::to_string(p);
        points += std::string(width - t.size(), ' ') + t;
    }
    return out + points + "\n";
}

// Parses the canonical text form "n=4; edges=(2,3),(1,3)".
inline Network parse_network(const std::string& text) {
    auto npos = text.find("n=");
    auto epos = text.find("edges=");
    if (npos == std::string::npos || epos == std::string::npos)
        throw Error(Errc::parse, "expected 'n=<int>; edges=(i,j),...'");
    int n = 0;
    try {
        n = std::stoi(text.substr(npos + 2));
    } catch (const std::exception&) {
        throw Error(Errc::parse, "bad point count");
    }
    std::vector<Edge> edges;
    std::string rest = text.substr(epos + 6);
    std::size_t i = 0;
    while (i < rest.size()) {
        char c = rest[i];
        if (c == ' ' || c == ',' || c == '\n' || c == '\r' || c == '\t') {
            ++i;
            continue;
        }
        if (c != '(') throw Error(Errc::parse, "expected '(' in edge list");
        auto close = rest.find(')', i);
        if (close == std::string::npos) throw Error(Errc::parse, "unterminated edge");
        std::string body = rest.substr(i + 1, close - i - 1);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw Error(Errc::parse, "edge needs two endpoints");
        try {
            edges.push_back({std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))});
        } catch (const std::exception&) {
            throw Error(Errc::parse, "bad edge '(" + body + ")'");
        }
        i = close + 1;
    }
    return validate(n, std::move(edges));
}

}  // namespace permnet
