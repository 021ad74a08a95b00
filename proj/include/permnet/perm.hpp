#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace permnet {

// One-line notation, values 1..n; p[i-1] is the image of i.
using Perm = std::vector<int>;

inline Perm identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i) + 1) return false;
    return true;
}

inline bool is_valid_perm(const Perm& p) {
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline void require_perm(const Perm& p) {
    if (!is_valid_perm(p)) throw Error(Errc::invalid_permutation, "not a permutation of 1..n");
}

inline Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

// (u o v)(i) = v(u(i)): apply u first, then v.
inline Perm compose(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw Error(Errc::degree_mismatch, "compose: degree mismatch");
    Perm w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = v[u[i] - 1];
    return w;
}

inline int inversion_count(const Perm& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

// Accepts "3412", "5,1,7,10,2" or whitespace-separated values.
inline Perm parse_perm(const std::string& text) {
    auto sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s = text.substr(b, e - b);
    if (s.empty()) throw Error(Errc::parse, "empty permutation");
    bool separated = std::any_of(s.begin(), s.end(), sep);
    Perm p;
    std::string cur;
    for (char c : s) {
        if (separated && sep(c)) {
            if (!cur.empty()) p.push_back(std::stoi(cur));
            else if (c == ',') throw Error(Errc::parse, "empty entry in permutation '" + text + "'");
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (separated) cur += c;
            else p.push_back(c - '0');
        } else {
            throw Error(Errc::parse, "bad character in permutation '" + text + "'");
        }
    }
    if (separated) {
        if (cur.empty()) throw Error(Errc::parse, "trailing separator in permutation '" + text + "'");
        p.push_back(std::stoi(cur));
    }
    require_perm(p);
    return p;
}

inline std::string format_perm(const Perm& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

// Digits without separators when every entry is a single digit.
inline std::string format_perm_compact(const Perm& p) {
    if (p.size() > 9) return format_perm(p);
    std::string s;
    for (int v : p) s += static_cast<char>('0' + v);
    return s;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Exchange the entries at positions i<j whenever p[i] > p[j].
inline std::vector<Perm> swap_covers(const Perm& p) {
    std::vector<Perm> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) {
                Perm q = p;
                std::swap(q[i], q[j]);
                out.push_back(std::move(q));
            }
    std::sort(out.begin(), out.end());
    return out;
}

struct SwapPoset {
    Perm base;
    std::vector<std::vector<Perm>> levels;
    std::map<Perm, int> level_of;

    std::optional<int> length_to(const Perm& q) const {
        auto it = level_of.find(q);
        if (it == level_of.end()) return std::nullopt;
        return it->second;
    }
};

inline SwapPoset swap_poset(const Perm& base) {
    require_perm(base);
    SwapPoset sp;
    sp.base = base;
    sp.levels.push_back({base});
    sp.level_of[base] = 0;
    while (true) {
        std::vector<Perm> next;
        for (const Perm& x : sp.levels.back())
            for (Perm& y : swap_covers(x))
                if (sp.level_of.emplace(y, static_cast<int>(sp.levels.size())).second)
                    next.push_back(std::move(y));
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        sp.levels.push_back(std::move(next));
    }
    return sp;
}

inline std::optional<int> swap_length(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw Error(Errc::degree_mismatch, "swap_length: degree mismatch");
    return swap_poset(p).length_to(q);
}

}  // namespace permnet
