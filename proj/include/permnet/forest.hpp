#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "network.hpp"
#include "perm.hpp"

namespace permnet {

// French Young shape of a signature. Row i (from the bottom) belongs to the i-th largest sink,
// column j to the j-th smallest source; cell (i,j) exists iff that source precedes that sink.
struct YoungShape {
    Signature eps;
    std::vector<int> sources;  // increasing
    std::vector<int> sinks;    // decreasing, sinks[i-1] is the sink of row i
    std::vector<int> rows;     // rows[i-1] = length of row i

    int n() const { return static_cast<int>(eps.size()); }
    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : rows.front(); }
    bool contains(const Cell& c) const {
        return c.row >= 1 && c.row <= height() && c.col >= 1 && c.col <= rows[c.row - 1];
    }
    Edge label(const Cell& c) const { return {sources[c.col - 1], sinks[c.row - 1]}; }
};

inline YoungShape shape_of(const Signature& eps) {
    if (!is_valid_signature(eps)) throw Error(Errc::malformed_signature, "the first nonzero entry of a signature must be +");
    YoungShape s;
    s.eps = eps;
    for (int k = 1; k <= static_cast<int>(eps.size()); ++k) {
        if (eps[k - 1] == 1) s.sources.push_back(k);
        if (eps[k - 1] == -1) s.sinks.push_back(k);
    }
    std::reverse(s.sinks.begin(), s.sinks.end());
    for (int q : s.sinks) {
        int len = static_cast<int>(std::count_if(s.sources.begin(), s.sources.end(), [q](int p) { return p < q; }));
        if (len > 0) s.rows.push_back(len);
    }
    s.sinks.resize(s.rows.size());
    return s;
}

// Pointed cells use French coordinates: row 1 is the bottom row.
struct Forest {
    YoungShape shape;
    std::set<Cell> pointed;

    bool operator==(const Forest& o) const { return shape.eps == o.shape.eps && pointed == o.pointed; }
};

struct F1Violation {
    Cell cell, below, left;
};

inline std::optional<F1Violation> f1_violation(const std::set<Cell>& pointed) {
    for (const Cell& c : pointed) {
        std::optional<Cell> below, left;
        for (int i = 1; i < c.row && !below; ++i)
            if (pointed.count({i, c.col})) below = Cell{i, c.col};
        for (int j = 1; j < c.col && !left; ++j)
            if (pointed.count({c.row, j})) left = Cell{c.row, j};
        if (below && left) return F1Violation{c, *below, *left};
    }
    return std::nullopt;
}

inline std::string format_cell(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline Forest validate_forest(const Signature& eps, const std::set<Cell>& pointed) {
    Forest f{shape_of(eps), pointed};
    for (const Cell& c : pointed)
        if (!f.shape.contains(c)) throw Error(Errc::f1_violation, "cell " + format_cell(c) + " lies outside the shape");
    if (auto v = f1_violation(pointed))
        throw Error(Errc::f1_violation, "cell " + format_cell(v->cell) + " has pointed cells both below " +
                                            format_cell(v->below) + " and left " + format_cell(v->left));
    return f;
}

inline std::set<Cell> crossing_cells(const Forest& f) {
    std::set<Cell> out;
    for (int i = 1; i <= f.shape.height(); ++i)
        for (int j = 1; j <= f.shape.rows[i - 1]; ++j) {
            if (f.pointed.count({i, j})) continue;
            bool below = false, left = false;
            for (int k = 1; k < i; ++k) below = below || f.pointed.count({k, j});
            for (int k = 1; k < j; ++k) left = left || f.pointed.count({i, k});
            if (below && left) out.insert({i, j});
        }
    return out;
}

inline Network network_from_forest(const Forest& f) {
    std::vector<Edge> edges;
    for (const Cell& c : f.pointed) edges.push_back(f.shape.label(c));
    for (const Cell& c : crossing_cells(f)) edges.push_back(f.shape.label(c));
    return validate(f.shape.n(), std::move(edges));
}

inline Forest forest_from_network(const Network& net, const Signature& eps) {
    if (!compatible(net, eps)) throw Error(Errc::incompatible_signature, "network is not compatible with " + format_signature(eps));
    YoungShape s = shape_of(eps);
    std::set<Cell> cells;
    for (int i = 1; i <= s.height(); ++i)
        for (int j = 1; j <= s.rows[i - 1]; ++j)
            if (net.has(s.label({i, j}))) cells.insert({i, j});
    // An edge cell dominated from below and from the left is a crossing, not a point.
    std::set<Cell> pointed;
    for (const Cell& c : cells) {
        bool below = false, left = false;
        for (int k = 1; k < c.row; ++k) below = below || cells.count({k, c.col});
        for (int k = 1; k < c.col; ++k) left = left || cells.count({c.row, k});
        if (!(below && left)) pointed.insert(c);
    }
    return validate_forest(eps, pointed);
}

// Line simulation: each point emits a vertical and a horizontal line; a point met by a line
// continues that line in the other direction. At an empty cell where two lines meet they are
// reconnected (reconnect = true) or cross straight through.
inline Perm line_word(const Forest& f, bool reconnect) {
    const YoungShape& s = f.shape;
    struct Line {
        Cell node;
        bool vertical;
    };
    std::vector<std::optional<Line>> up(s.width() + 1);
    std::map<int, std::optional<Line>> out_right;
    for (int i = 1; i <= s.height(); ++i) {
        std::optional<Line> right;
        for (int j = 1; j <= s.rows[i - 1]; ++j) {
            Cell c{i, j};
            std::optional<Line>& below = up[j];
            if (f.pointed.count(c)) {
                if (below) {
                    right = below;
                    below = Line{c, true};
                } else if (right) {
                    below = right;
                    right = Line{c, false};
                } else {
                    below = Line{c, true};
                    right = Line{c, false};
                }
            } else if (below && right && reconnect) {
                std::swap(below, right);
            }
        }
        out_right[i] = right;
    }
    auto end_label = [&](const std::optional<Line>& l) { return l->vertical ? s.label(l->node).dst : s.label(l->node).src; };
    std::vector<int> word, support;
    for (int i = s.height(); i >= 1; --i) {
        int from = i < s.height() ? s.rows[i] + 1 : 1;
        for (int j = from; j <= s.rows[i - 1]; ++j)
            if (up[j]) {
                word.push_back(end_label(up[j]));
                support.push_back(s.sources[j - 1]);
            }
        if (out_right[i]) {
            word.push_back(end_label(out_right[i]));
            support.push_back(s.sinks[i - 1]);
        }
    }
    std::sort(support.begin(), support.end());
    Perm p = identity(s.n());
    for (std::size_t k = 0; k < word.size(); ++k) p[support[k] - 1] = word[k];
    return p;
}

inline Perm kappa(const Forest& f) { return line_word(f, true); }
inline Perm kappa_tilde(const Forest& f) { return line_word(f, false); }

inline bool is_leaf(const std::set<Cell>& pointed, const Cell& c) {
    for (const Cell& d : pointed)
        if ((d.col == c.col && d.row > c.row) || (d.row == c.row && d.col > c.col)) return false;
    return true;
}

// West labels top to bottom, then south labels left to right; points outside every row and
// column stay fixed.
inline Perm boundary_reading(const YoungShape& s, const std::vector<int>& west, const std::vector<int>& south) {
    std::vector<int> word;
    for (int i = s.height(); i >= 1; --i) word.push_back(west[i - 1]);
    word.insert(word.end(), south.begin(), south.end());
    std::vector<int> support = word;
    std::sort(support.begin(), support.end());
    Perm p = identity(s.n());
    for (std::size_t k = 0; k < word.size(); ++k) p[support[k] - 1] = word[k];
    return p;
}

// Leaf deletion with a caller-chosen leaf at every step.
inline Perm nu_with(const Forest& f, const std::function<Cell(const std::vector<Cell>&)>& choose) {
    std::vector<int> west(f.shape.sinks.begin(), f.shape.sinks.end());
    std::vector<int> south(f.shape.sources.begin(), f.shape.sources.end());
    std::set<Cell> pts = f.pointed;
    while (!pts.empty()) {
        std::vector<Cell> leaves;
        for (const Cell& c : pts)
            if (is_leaf(pts, c)) leaves.push_back(c);
        Cell c = choose(leaves);
        std::swap(west[c.row - 1], south[c.col - 1]);
        pts.erase(c);
    }
    return boundary_reading(f.shape, west, south);
}

inline Perm nu(const Forest& f) {
    return nu_with(f, [](const std::vector<Cell>& leaves) { return leaves.front(); });
}

// Results over every leaf deletion order.
inline std::set<Perm> nu_all_orders(const Forest& f) {
    std::set<Perm> out;
    std::function<void(const std::set<Cell>&, std::vector<int>&, std::vector<int>&)> rec =
        [&](const std::set<Cell>& pts, std::vector<int>& west, std::vector<int>& south) {
            if (pts.empty()) {
                out.insert(boundary_reading(f.shape, west, south));
                return;
            }
            for (const Cell& c : pts)
                if (is_leaf(pts, c)) {
                    std::set<Cell> rest = pts;
                    rest.erase(c);
                    std::swap(west[c.row - 1], south[c.col - 1]);
                    rec(rest, west, south);
                    std::swap(west[c.row - 1], south[c.col - 1]);
                }
        };
    std::vector<int> west(f.shape.sinks.begin(), f.shape.sinks.end());
    std::vector<int> south(f.shape.sources.begin(), f.shape.sources.end());
    rec(f.pointed, west, south);
    return out;
}

// Boundary word of the empty forest, which is also the permutation of the maximal network.
inline Perm boundary_perm(const YoungShape& s) { return nu(Forest{s, {}}); }

inline std::vector<Forest> enumerate_forests(const Signature& eps, int cap = 8) {
    if (static_cast<int>(eps.size()) > cap)
        throw Error(Errc::cap_exceeded, "signature length " + std::to_string(eps.size()) + " exceeds the cap " + std::to_string(cap));
    YoungShape s = shape_of(eps);
    std::vector<Cell> cells;
    for (int i = 1; i <= s.height(); ++i)
        for (int j = 1; j <= s.rows[i - 1]; ++j) cells.push_back({i, j});
    std::vector<Forest> out;
    std::set<Cell> cur;
    std::vector<int> col_has(s.width() + 1, 0);
    std::function<void(std::size_t, bool)> rec = [&](std::size_t k, bool row_has) {
        if (k == cells.size()) {
            out.push_back({s, cur});
            return;
        }
        Cell c = cells[k];
        if (c.col == 1) row_has = false;
        rec(k + 1, row_has);
        if (col_has[c.col] && row_has) return;
        cur.insert(c);
        ++col_has[c.col];
        rec(k + 1, true);
        --col_has[c.col];
        cur.erase(c);
    };
    rec(0, false);
    return out;
}

// Coefficients of the sum over forests of q^(points + crossings).
inline std::vector<long long> forest_gen_fn(const Signature& eps, int cap = 8) {
    std::vector<long long> coeffs{0};
    for (const Forest& f : enumerate_forests(eps, cap)) {
        std::size_t d = f.pointed.size() + crossing_cells(f).size();
        if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
        ++coeffs[d];
    }
    return coeffs;
}

inline std::string render_forest(const Forest& f) {
    std::set<Cell> cross = crossing_cells(f);
    std::string out;
    for (int i = f.shape.height(); i >= 1; --i) {
        for (int j = 1; j <= f.shape.rows[i - 1]; ++j) {
            Cell c{i, j};
            out += f.pointed.count(c) ? "•" : cross.count(c) ? "□" : ".";
            if (j < f.shape.rows[i - 1]) out += ' ';
        }
        out += '\n';
    }
    return out;
}

}  // namespace permnet
