#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "network.hpp"
#include "perm.hpp"

namespace permnet {

// Rows grow downward from 1 at the top, columns grow rightward from 1.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

struct Polyomino {
    std::vector<Cell> cells;  // sorted, duplicate-free
    int components = 1;

    bool has(const Cell& c) const { return std::binary_search(cells.begin(), cells.end(), c); }
    bool empty() const { return cells.empty(); }
};

inline int count_components(const std::vector<Cell>& cells) {
    std::set<Cell> left(cells.begin(), cells.end());
    int comps = 0;
    while (!left.empty()) {
        ++comps;
        std::vector<Cell> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}})
                if (auto it = left.find(d); it != left.end()) {
                    left.erase(it);
                    stack.push_back(d);
                }
        }
    }
    return comps;
}

inline Polyomino make_polyomino(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    Polyomino p{std::move(cells), 0};
    p.components = count_components(p.cells);
    return p;
}

// Translate so that the top row and left column are both 1.
inline Polyomino normalized(const Polyomino& p) {
    if (p.empty()) return p;
    int r0 = p.cells.front().row, c0 = p.cells.front().col;
    for (const Cell& c : p.cells) {
        r0 = std::min(r0, c.row);
        c0 = std::min(c0, c.col);
    }
    std::vector<Cell> out;
    for (const Cell& c : p.cells) out.push_back({c.row - r0 + 1, c.col - c0 + 1});
    Polyomino q = make_polyomino(std::move(out));
    q.components = p.components;
    return q;
}

// Column profile of a polyomino whose columns are contiguous.
struct Profile {
    int rows = 0;
    int cols = 0;
    std::vector<int> top, bot;      // per column, 1-based (index 0 unused)
    std::vector<int> left, right;   // per row
};

// Which of the class conditions fails, if any.
inline std::optional<std::string> class_violation(const Polyomino& p) {
    if (p.empty()) return "empty polyomino";
    Polyomino q = normalized(p);
    std::map<int, std::vector<int>> by_col;
    for (const Cell& c : q.cells) by_col[c.col].push_back(c.row);
    int cols = by_col.rbegin()->first;
    if (static_cast<int>(by_col.size()) != cols || q.components != 1) return "not edge-connected";
    std::vector<int> top(cols + 1), bot(cols + 1);
    for (auto& [c, rs] : by_col) {
        std::sort(rs.begin(), rs.end());
        if (rs.back() - rs.front() + 1 != static_cast<int>(rs.size()))
            return "column " + std::to_string(c) + " has a gap (hole or overhang)";
        top[c] = rs.front();
        bot[c] = rs.back();
    }
    for (int c = 2; c <= cols; ++c)
        if (top[c] < top[c - 1]) return "north edge heights are not weakly decreasing at column " + std::to_string(c);
    int c = 2;
    while (c <= cols && bot[c] >= bot[c - 1]) ++c;
    for (; c <= cols; ++c)
        if (bot[c] > bot[c - 1]) return "south edge heights are not unimodal at column " + std::to_string(c);
    return std::nullopt;
}

inline bool in_class_p(const Polyomino& p) { return !class_violation(p); }

inline Profile profile_of(const Polyomino& p) {
    if (auto v = class_violation(p)) throw Error(Errc::invalid_polyomino, *v);
    Polyomino q = normalized(p);
    Profile pr;
    for (const Cell& c : q.cells) {
        pr.rows = std::max(pr.rows, c.row);
        pr.cols = std::max(pr.cols, c.col);
    }
    pr.top.assign(pr.cols + 1, 1 << 29);
    pr.bot.assign(pr.cols + 1, 0);
    pr.left.assign(pr.rows + 1, 1 << 29);
    pr.right.assign(pr.rows + 1, 0);
    for (const Cell& c : q.cells) {
        pr.top[c.col] = std::min(pr.top[c.col], c.row);
        pr.bot[c.col] = std::max(pr.bot[c.col], c.row);
        pr.left[c.row] = std::min(pr.left[c.row], c.col);
        pr.right[c.row] = std::max(pr.right[c.row], c.col);
    }
    return pr;
}

// I(r_i) for rows numbered from the bottom: (l(i)+1, 1, ..., l_L(i)).
inline std::vector<std::vector<int>> row_sequences(const Polyomino& p) {
    Profile pr = profile_of(p);
    std::vector<std::vector<int>> seqs;
    for (int r = pr.rows; r >= 1; --r) {
        int len = pr.right[r] - pr.left[r] + 1;
        int ll = r == pr.rows ? len : std::max(0, std::min(pr.left[r + 1], pr.right[r] + 1) - pr.left[r]);
        std::vector<int> s{len + 1};
        for (int k = 1; k <= ll; ++k) s.push_back(k);
        seqs.push_back(std::move(s));
    }
    return seqs;
}

// The intermediate permutations pi^(1), ..., pi^(m) of the row recursion.
inline std::vector<Perm> alpha_chain(const Polyomino& p) {
    auto seqs = row_sequences(p);
    std::vector<Perm> chain{seqs[0]};
    for (std::size_t i = 1; i < seqs.size(); ++i) {
        const auto& ir = seqs[i];
        std::set<int> used(ir.begin(), ir.end());
        auto kth_free = [&](int k) {
            int v = 0;
            while (k > 0) {
                ++v;
                if (!used.count(v)) --k;
            }
            return v;
        };
        Perm next = ir;
        for (int v : chain.back()) next.push_back(kth_free(v));
        int n = *std::max_element(next.begin(), next.end());
        std::set<int> present(next.begin(), next.end());
        for (int v = 1; v <= n; ++v)
            if (!present.count(v)) next.push_back(v);
        chain.push_back(std::move(next));
    }
    return chain;
}

inline Perm alpha(const Polyomino& p) { return alpha_chain(p).back(); }

// Extents of an arbitrary cell set; entries are 0 for empty rows and columns.
inline Profile extents(const Polyomino& p) {
    Profile pr;
    for (const Cell& c : p.cells) {
        pr.rows = std::max(pr.rows, c.row);
        pr.cols = std::max(pr.cols, c.col);
    }
    pr.top.assign(pr.cols + 2, 0);
    pr.bot.assign(pr.cols + 2, 0);
    pr.left.assign(pr.rows + 2, 0);
    pr.right.assign(pr.rows + 2, 0);
    for (const Cell& c : p.cells) {
        if (!pr.top[c.col] || c.row < pr.top[c.col]) pr.top[c.col] = c.row;
        pr.bot[c.col] = std::max(pr.bot[c.col], c.row);
        if (!pr.left[c.row] || c.col < pr.left[c.row]) pr.left[c.row] = c.col;
        pr.right[c.row] = std::max(pr.right[c.row], c.col);
    }
    return pr;
}

// Labels live in grid squares outside the cells: the east label of a row sits just right
// of its last cell, the south label of a column just below its lowest cell.
struct LabeledPolyomino {
    Polyomino base;
    std::map<Cell, int> labels;

    int label_at(const Cell& sq) const {
        auto it = labels.find(sq);
        return it == labels.end() ? 0 : it->second;
    }
    int east_label(int row) const {
        Profile pr = extents(base);
        return pr.right[row] ? label_at({row, pr.right[row] + 1}) : 0;
    }
    int label_under(int col) const {
        Profile pr = extents(base);
        return pr.bot[col] ? label_at({pr.bot[col] + 1, col}) : 0;
    }
    int n() const {
        int m = 0;
        for (const auto& [sq, v] : labels) m = std::max(m, v);
        return m;
    }
};

// Labels are attached to edges by following which entry of the row recursion each edge
// contributes: the east edge of the new row, the columns sticking out on its left, and the
// columns sticking out on its right beyond the one that sits above the previous east label.
inline LabeledPolyomino label_polyomino(const Polyomino& p) {
    LabeledPolyomino lp;
    lp.base = normalized(p);
    Profile pr = profile_of(lp.base);
    struct Slot {
        bool east;
        int index;
    };
    std::vector<Slot> slots;
    std::vector<int> vals;
    int bottom = pr.rows;
    slots.push_back({true, bottom});
    vals.push_back(pr.right[bottom] - pr.left[bottom] + 2);
    for (int c = pr.left[bottom]; c <= pr.right[bottom]; ++c) {
        slots.push_back({false, c});
        vals.push_back(c - pr.left[bottom] + 1);
    }
    for (int r = bottom - 1; r >= 1; --r) {
        int below = r + 1, len = pr.right[r] - pr.left[r] + 1;
        int ll = std::clamp(pr.left[below] - pr.left[r], 0, len);
        std::vector<Slot> ns{{true, r}};
        std::vector<int> nv{len + 1};
        for (int k = 1; k <= ll; ++k) {
            ns.push_back({false, pr.left[r] + k - 1});
            nv.push_back(k);
        }
        std::set<int> used(nv.begin(), nv.end());
        for (std::size_t i = 0; i < slots.size(); ++i) {
            int k = vals[i], v = 0;
            while (k > 0)
                if (!used.count(++v)) --k;
            ns.push_back(slots[i]);
            nv.push_back(v);
        }
        int n = *std::max_element(nv.begin(), nv.end());
        std::set<int> present(nv.begin(), nv.end());
        std::vector<int> missing;
        for (int v = 1; v <= n; ++v)
            if (!present.count(v)) missing.push_back(v);
        int free_cols = std::max(0, pr.right[r] - pr.right[below] - 1);
        if (static_cast<int>(missing.size()) > free_cols) throw Error(Errc::invalid_polyomino, "label count mismatch");
#ifndef MISSING_LEFT
        int next_col = pr.right[r] - static_cast<int>(missing.size()) + 1;
#else
        int next_col = pr.right[below] + 2;
#endif
        for (int v : missing) {
            ns.push_back({false, next_col++});
            nv.push_back(v);
        }
        slots = std::move(ns);
        vals = std::move(nv);
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Cell sq = slots[i].east ? Cell{slots[i].index, pr.right[slots[i].index] + 1}
                                : Cell{pr.bot[slots[i].index] + 1, slots[i].index};
        if (!lp.labels.emplace(sq, vals[i]).second) throw Error(Errc::invalid_polyomino, "two labels share a square");
    }
    return lp;
}

struct DyckTile {
    std::size_t first = 0;  // index into the ribbon path
    std::size_t last = 0;
    int size = 0;
};

enum class Step { up, right };

inline std::vector<Step> path_steps(const std::vector<Cell>& path) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Cell &a = path[i], &b = path[i + 1];
        if (a.row == b.row && b.col > a.col) steps.push_back(Step::right);
        else if (a.col == b.col && b.row < a.row) steps.push_back(Step::up);
        else throw Error(Errc::invalid_polyomino, "ribbon path moves neither up nor right");
    }
    return steps;
}

// Greedy from the first cell: each tile is the longest prefix whose steps form a Dyck path.
inline std::vector<DyckTile> max_dyck_tiling(const std::vector<Step>& steps) {
    std::vector<DyckTile> tiles;
    std::size_t cells = steps.size() + 1, i = 0;
    while (i < cells) {
        std::size_t best = i;
        int h = 0;
        for (std::size_t k = i; k < steps.size(); ++k) {
            h += steps[k] == Step::up ? 1 : -1;
            if (h < 0) break;
            if (h == 0) best = k + 1;
        }
        tiles.push_back({i, best, static_cast<int>(best - i) / 2});
        i = best + 1;
    }
    return tiles;
}

inline std::vector<DyckTile> max_dyck_tiling(const std::vector<Cell>& path) {
    return max_dyck_tiling(path_steps(path));
}

struct RibbonStep {
    int n = 0;
    Cell c_r, c_l;
    std::vector<Cell> ribbon;  // from c_l to c_r
    std::vector<DyckTile> tiles;
    std::vector<int> tile_labels;
    std::vector<int> l_down;
    std::vector<Edge> edges;
    LabeledPolyomino next;
};

// Boundary walk from c_l, moving right when possible and up otherwise, until c_r.
inline std::vector<Cell> extract_ribbon(const LabeledPolyomino& lp, Cell* c_r_out = nullptr, Cell* c_l_out = nullptr) {
    if (lp.base.empty()) throw Error(Errc::invalid_polyomino, "empty polyomino");
    Profile pr = extents(lp.base);
    int rmax = 0;
    for (int r = 1; r <= pr.rows; ++r)
        if (pr.right[r] && (!rmax || lp.east_label(r) > lp.east_label(rmax))) rmax = r;
    Cell c_r{rmax, pr.right[rmax]};
    int cl = 0;
    for (int c = 1; c <= pr.cols; ++c)
        if (pr.bot[c] && (!cl || pr.bot[c] > pr.bot[cl])) cl = c;
    Cell c_l{pr.bot[cl], cl};
    std::vector<Cell> path{c_l};
    Cell cur = c_l;
    while (cur != c_r) {
        if (cur.row < c_r.row) throw Error(Errc::ambiguous, "boundary walk passed above the maximal east label");
        if (lp.base.has({cur.row, cur.col + 1})) cur = {cur.row, cur.col + 1};
        else if (lp.base.has({cur.row - 1, cur.col})) cur = {cur.row - 1, cur.col};
        else throw Error(Errc::ambiguous, "boundary walk cannot reach the maximal east label");
        path.push_back(cur);
    }
    if (c_r_out) *c_r_out = c_r;
    if (c_l_out) *c_l_out = c_l;
    return path;
}

// Squares that carry a label in the standard labeling of q, in q's own coordinates. Empty
// when q has no standard labeling.
inline std::optional<std::set<Cell>> label_squares(const Polyomino& q) {
    if (q.empty() || !in_class_p(q)) return std::nullopt;
    int r0 = q.cells.front().row, c0 = q.cells.front().col;
    for (const Cell& c : q.cells) {
        r0 = std::min(r0, c.row);
        c0 = std::min(c0, c.col);
    }
    std::set<Cell> out;
    for (const auto& [sq, v] : label_polyomino(q).labels) out.insert({sq.row + r0 - 1, sq.col + c0 - 1});
    return out;
}

// After the cells move, each label rises in its column until it reaches a free label square
// of the new polyomino. A label blocked by a cell above, or by a taken square, steps one unit
// right. Labels strictly below the row of c_r rise at least one row, higher labels claim
// first, and a label that runs into a cell or off the top disappears. Without a standard
// labeling, any square below a cell or right of a row's last cell counts as a label square.
inline std::map<Cell, int> transport_labels(const std::map<Cell, int>& old, int drop, int cr_row, const Polyomino& q) {
    auto slots = label_squares(q);
    auto is_slot = [&](const Cell& c) {
        return slots ? slots->count(c) > 0 : q.has({c.row - 1, c.col}) || q.has({c.row, c.col - 1});
    };
    std::map<Cell, int> out;
    for (const auto& [sq, v] : old) {
        if (v == drop) continue;
        Cell at{sq.row > cr_row ? sq.row - 1 : sq.row, sq.col};
        while (at.row >= 1 && !q.has(at)) {
            bool slot = is_slot(at);
            if (slot && out.emplace(at, v).second) break;
            if (slot || q.has({at.row - 1, at.col})) ++at.col;
            else --at.row;
        }
    }
    if (slots && out.size() != slots->size()) throw Error(Errc::ambiguous, "reduced polyomino has unlabeled edges");
    return out;
}

inline RibbonStep polyomino_edge_step(const LabeledPolyomino& lp) {
    RibbonStep st;
    st.ribbon = extract_ribbon(lp, &st.c_r, &st.c_l);
    st.n = lp.east_label(st.c_r.row);
    st.tiles = max_dyck_tiling(st.ribbon);
    for (const DyckTile& t : st.tiles) {
        int l = lp.label_under(st.ribbon[t.first].col);
        if (!l) throw Error(Errc::ambiguous, "a Dyck tile has no south label");
        st.tile_labels.push_back(l);
    }
    Profile pr = extents(lp.base);
    std::set<Cell> drop(st.ribbon.begin(), st.ribbon.end());
    for (int c = 1; c < st.c_l.col; ++c)
        if (pr.bot[c] >= st.c_r.row) {
            int l = lp.label_under(c);
            if (!l) throw Error(Errc::ambiguous, "a column left of c_l has no south label");
            st.l_down.push_back(l);
            drop.insert({pr.bot[c], c});
        }
    std::set<int> sources(st.tile_labels.begin(), st.tile_labels.end());
    sources.insert(st.l_down.begin(), st.l_down.end());
    for (int s : sources) st.edges.push_back({s, st.n});
    std::vector<Cell> rest;
    for (const Cell& c : lp.base.cells)
        if (!drop.count(c)) rest.push_back(c.row >= st.c_r.row ? Cell{c.row, c.col + 1} : c);
    st.next.base = make_polyomino(std::move(rest));
    st.next.labels = transport_labels(lp.labels, st.n, st.c_r.row, st.next.base);
    return st;
}

inline std::vector<RibbonStep> polyomino_chain(const Polyomino& p) {
    std::vector<RibbonStep> chain;
    LabeledPolyomino cur = label_polyomino(p);
    while (!cur.base.empty()) {
        chain.push_back(polyomino_edge_step(cur));
        cur = chain.back().next;
    }
    return chain;
}

inline std::vector<Edge> polyomino_edges(const Polyomino& p) {
    std::set<Edge> all;
    for (const RibbonStep& st : polyomino_chain(p)) all.insert(st.edges.begin(), st.edges.end());
    return {all.begin(), all.end()};
}

// All members of the class with at most max_cells cells, normalized.
inline std::vector<Polyomino> enumerate_class_p(int max_cells) {
    std::vector<Polyomino> out;
    std::vector<int> top, bot;
    // Columns are appended left to right; `rising` is set once the bottoms have started to climb.
    auto rec = [&](auto&& self, int used, bool rising) -> void {
        int k = static_cast<int>(top.size());
        if (k > 0) {
            std::vector<Cell> cells;
            for (int c = 0; c < k; ++c)
                for (int r = top[c]; r <= bot[c]; ++r) cells.push_back({r, c + 1});
            out.push_back(make_polyomino(std::move(cells)));
        }
        int t_lo = k ? top[k - 1] : 1, t_hi = k ? bot[k - 1] : 1;
        for (int t = t_lo; t <= t_hi; ++t)
            for (int h = 1; used + h <= max_cells; ++h) {
                int b = t + h - 1;
                bool now_rising = rising;
                if (k) {
                    if (b < bot[k - 1]) now_rising = true;
                    else if (b > bot[k - 1] && rising) continue;
                }
                top.push_back(t);
                bot.push_back(b);
                self(self, used + h, now_rising);
                top.pop_back();
                bot.pop_back();
            }
    };
    rec(rec, 0, false);
    std::sort(out.begin(), out.end(), [](const Polyomino& a, const Polyomino& b) {
        return a.cells.size() != b.cells.size() ? a.cells.size() < b.cells.size() : a.cells < b.cells;
    });
    return out;
}

// ---- Rothe diagrams ----

inline std::vector<Cell> rothe_cells(const Perm& p) {
    require_perm(p);
    Perm inv = inverse(p);
    int n = static_cast<int>(p.size());
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (p[i - 1] > j && inv[j - 1] > i) cells.push_back({i, j});
    return cells;
}

// Inverse of rothe_cells: row i of D(p) has as many cells as later entries smaller than p(i).
inline Perm perm_from_rothe(const std::vector<Cell>& cells, int n) {
    std::vector<int> code(n, 0);
    for (const Cell& c : cells) {
        if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
            throw Error(Errc::invalid_polyomino, "cell outside the n x n grid");
        ++code[c.row - 1];
    }
    std::vector<int> left = identity(n);
    Perm p;
    for (int i = 0; i < n; ++i) {
        if (code[i] >= static_cast<int>(left.size())) throw Error(Errc::invalid_polyomino, "not a Rothe diagram");
        p.push_back(left[code[i]]);
        left.erase(left.begin() + code[i]);
    }
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    if (rothe_cells(p) != sorted) throw Error(Errc::invalid_polyomino, "not a Rothe diagram");
    return p;
}

// Glued diagram: empty rows and columns removed, keeping the original indices.
struct RotheDiagram {
    Perm perm;
    std::vector<Cell> original;  // cells of D(perm)
    Polyomino glued;             // compressed coordinates
    std::vector<int> row_index;  // compressed row -> original row (index 0 unused)
    std::vector<int> col_index;  // compressed column -> original column
};

inline RotheDiagram rothe_diagram(const Perm& p) {
    RotheDiagram d;
    d.perm = p;
    d.original = rothe_cells(p);
    std::set<int> rows, cols;
    for (const Cell& c : d.original) {
        rows.insert(c.row);
        cols.insert(c.col);
    }
    d.row_index.assign(1, 0);
    d.col_index.assign(1, 0);
    d.row_index.insert(d.row_index.end(), rows.begin(), rows.end());
    d.col_index.insert(d.col_index.end(), cols.begin(), cols.end());
    std::map<int, int> rmap, cmap;
    for (std::size_t i = 1; i < d.row_index.size(); ++i) rmap[d.row_index[i]] = static_cast<int>(i);
    for (std::size_t i = 1; i < d.col_index.size(); ++i) cmap[d.col_index[i]] = static_cast<int>(i);
    std::vector<Cell> glued;
    for (const Cell& c : d.original) glued.push_back({rmap[c.row], cmap[c.col]});
    d.glued = make_polyomino(std::move(glued));
    return d;
}

// Largest point that is moved; 0 for the identity.
inline int last_moved(const Perm& p) {
    for (int i = static_cast<int>(p.size()); i >= 1; --i)
        if (p[i - 1] != i) return i;
    return 0;
}

struct RotheStep {
    int n = 0;
    int l_min = 0;
    std::vector<int> tile_labels;
    std::vector<int> l_down;
    std::vector<Edge> edges;
    Perm next;
};

inline RotheStep rothe_step(const Perm& p) {
    require_perm(p);
    RotheStep st;
    st.n = last_moved(p);
    if (st.n == 0) throw Error(Errc::invalid_permutation, "rothe_step needs a non-identity permutation");
    int n = st.n;
    int pos_n = static_cast<int>(std::find(p.begin(), p.end(), n) - p.begin()) + 1;
    // Positions after pos_n that are right-to-left minima within [pos_n+1, n].
    std::vector<char> rl_min(n + 2, 0);
    int running = n + 1;
    for (int i = n; i > pos_n; --i)
        if (p[i - 1] < running) {
            running = p[i - 1];
            rl_min[i] = 1;
        }
    int istar = n;
    while (rl_min[istar]) --istar;
    st.l_min = p[istar];
    for (int i = istar + 1; i <= n; ++i) st.tile_labels.push_back(p[i - 1]);
    int q = istar + 1, cur = st.l_min;
    st.l_down.push_back(cur);
    for (int i = q - 1; i > pos_n; --i)
        if (p[i - 1] < cur) {
            cur = p[i - 1];
            st.l_down.push_back(cur);
        }
    std::set<int> sources(st.tile_labels.begin(), st.tile_labels.end());
    sources.insert(st.l_down.begin(), st.l_down.end());
    for (int s : sources) st.edges.push_back({s, n});
    std::set<int> iset = sources;
    iset.insert(n);
    std::vector<int> positions;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        if (iset.count(p[i - 1])) positions.push_back(i);
    st.next = p;
    auto it = iset.begin();
    for (int pos : positions) st.next[pos - 1] = *it++;
    return st;
}

inline std::vector<RotheStep> rothe_chain(const Perm& p) {
    std::vector<RotheStep> chain;
    Perm cur = p;
    while (!is_identity(cur)) {
        chain.push_back(rothe_step(cur));
        cur = chain.back().next;
    }
    return chain;
}

inline std::vector<Edge> rothe_edges(const Perm& p) {
    std::set<Edge> all;
    for (const RotheStep& st : rothe_chain(p)) all.insert(st.edges.begin(), st.edges.end());
    return {all.begin(), all.end()};
}

// Geometric ribbon on the glued diagram: move right to the nearest cell in the row,
// otherwise up to the nearest cell in the column.
struct RotheRibbon {
    std::vector<Cell> ribbon;  // glued coordinates, from c_l to c_r
    std::vector<DyckTile> tiles;
    std::vector<int> tile_labels;  // original column of each tile's first cell
};

inline RotheRibbon rothe_ribbon(const RotheDiagram& d) {
    int n = last_moved(d.perm);
    if (n == 0) throw Error(Errc::invalid_permutation, "identity has an empty diagram");
    int pos_n = static_cast<int>(std::find(d.perm.begin(), d.perm.end(), n) - d.perm.begin()) + 1;
    const auto& cells = d.glued.cells;
    int rr = static_cast<int>(std::find(d.row_index.begin(), d.row_index.end(), pos_n) - d.row_index.begin());
    Cell c_r{0, 0}, c_l = cells.back();
    for (const Cell& c : cells) {
        if (c.row == rr) c_r = std::max(c_r, c);
        if (c.row > c_l.row || (c.row == c_l.row && c.col < c_l.col)) c_l = c;
    }
    RotheRibbon rb;
    rb.ribbon.push_back(c_l);
    Cell cur = c_l;
    while (cur != c_r) {
        std::optional<Cell> nxt;
        for (const Cell& c : cells)
            if (c.row == cur.row && c.col > cur.col && (!nxt || c.col < nxt->col)) nxt = c;
        if (!nxt)
            for (const Cell& c : cells)
                if (c.col == cur.col && c.row < cur.row && (!nxt || c.row > nxt->row)) nxt = c;
        if (!nxt || nxt->row < c_r.row) throw Error(Errc::ambiguous, "ribbon walk cannot reach the cell left of n");
        cur = *nxt;
        rb.ribbon.push_back(cur);
    }
    rb.tiles = max_dyck_tiling(rb.ribbon);
    for (const DyckTile& t : rb.tiles) rb.tile_labels.push_back(d.col_index[rb.ribbon[t.first].col]);
    return rb;
}

// ---- rendering ----

inline std::string render_grid(int rows, int cols, const std::set<Cell>& cells, const std::map<Cell, int>& labels) {
    int width = 2;
    for (const auto& [c, v] : labels) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()) + 1);
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        std::string line;
        for (int c = 1; c <= cols; ++c) {
            std::string f;
            if (cells.count({r, c})) f = std::string(width - 1, ' ') + "#";
            else if (auto it = labels.find({r, c}); it != labels.end()) f = std::to_string(it->second);
            line += std::string(width - static_cast<int>(f.size()), ' ') + f;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

inline std::string render_polyomino(const LabeledPolyomino& lp) {
    int rows = 0, cols = 0;
    for (const Cell& c : lp.base.cells) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    for (const auto& [c, v] : lp.labels) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    return render_grid(rows, cols, {lp.base.cells.begin(), lp.base.cells.end()}, lp.labels);
}

inline std::map<Cell, int> drawn_labels(const RotheDiagram& d) {
    int n = static_cast<int>(d.perm.size());
    Perm inv = inverse(d.perm);
    std::map<int, int> rmap, cmap;
    for (std::size_t i = 1; i < d.row_index.size(); ++i) rmap[d.row_index[i]] = static_cast<int>(i);
    for (std::size_t i = 1; i < d.col_index.size(); ++i) cmap[d.col_index[i]] = static_cast<int>(i);
    std::map<Cell, int> labels;
    for (int v = 1; v <= n; ++v) {
        int row = inv[v - 1];
        bool has_row = rmap.count(row), has_col = cmap.count(v);
        if (!has_row && !has_col) continue;
        Cell at;
        if (has_row && has_col) {
            at = {rmap[row], cmap[v]};
        } else if (has_col) {
            int bottom = 0;
            for (const Cell& c : d.glued.cells)
                if (c.col == cmap[v]) bottom = std::max(bottom, c.row);
            at = {bottom + 1, cmap[v]};
        } else {
            int right = 0;
            for (const Cell& c : d.glued.cells)
                if (c.row == rmap[row]) right = std::max(right, c.col);
            at = {rmap[row], right + 1};
        }
        labels[at] = v;
    }
    return labels;
}

inline std::string render_rothe(const RotheDiagram& d) {
    auto labels = drawn_labels(d);
    int rows = 0, cols = 0;
    for (const Cell& c : d.glued.cells) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    for (const auto& [c, v] : labels) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    return render_grid(rows, cols, {d.glued.cells.begin(), d.glued.cells.end()}, labels);
}

// One "cell row col" line per cell, then one "label row col value" line per label.
inline std::string coordinate_dump(const std::vector<Cell>& cells, const std::map<Cell, int>& labels) {
    std::string out;
    for (const Cell& c : cells) out += "cell " + std::to_string(c.row) + " " + std::to_string(c.col) + "\n";
    for (const auto& [c, v] : labels)
        out += "label " + std::to_string(c.row) + " " + std::to_string(c.col) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace permnet
