#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <permnet/diagram.hpp>
#include <permnet/forest.hpp>
#include <permnet/network.hpp>
#include <permnet/perm.hpp>
#include <permnet/poset.hpp>

using namespace permnet;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, invalid_input = 3 };

constexpr int ceiling_n = 9;
constexpr int ceiling_eps = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int max_n = 8;
    int max_eps = 8;
};

Caps read_config(const std::string& path) {
    Caps caps;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\""));
            s.erase(s.find_last_not_of(" \t\r\"") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        int v = 0;
        try {
            v = std::stoi(value);
        } catch (const std::exception&) {
            throw UsageError("config value for " + key + " is not an integer");
        }
        if (key == "max_n") caps.max_n = v;
        else if (key == "max_eps") caps.max_eps = v;
        else throw UsageError("unknown config key " + key);
    }
    if (caps.max_n > ceiling_n) throw UsageError("max_n may not exceed " + std::to_string(ceiling_n));
    if (caps.max_eps > ceiling_eps) throw UsageError("max_eps may not exceed " + std::to_string(ceiling_eps));
    return caps;
}

std::string read_value(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::parse, std::string("bad JSON: ") + e.what());
    }
}

bool looks_like_json(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(Errc::parse, std::string("field '") + key + "' has the wrong type");
    }
}

std::vector<Cell> cells_of(const json& j, const char* key) {
    std::vector<Cell> cells;
    for (const auto& rc : field<std::vector<std::vector<int>>>(j, key)) {
        if (rc.size() != 2) throw Error(Errc::parse, "cells are [row, col] pairs");
        cells.push_back({rc[0], rc[1]});
    }
    return cells;
}

json cells_json(const std::vector<Cell>& cells) {
    json a = json::array();
    for (const Cell& c : cells) a.push_back({c.row, c.col});
    return a;
}

// A polyomino value is either a Rothe diagram of a permutation or a member of the class.
struct PolyValue {
    std::optional<Perm> rothe_perm;
    Polyomino shape;
};

struct Value {
    std::string kind;
    Perm perm;
    Network net;
    PolyValue poly;
    std::optional<Forest> forest;
};

Perm perm_from_text(const std::string& text) {
    if (looks_like_json(text)) {
        json j = parse_json(text);
        Perm p;
        try {
            p = j.is_array() ? j.get<Perm>() : field<Perm>(j, "perm");
        } catch (const json::exception&) {
            throw Error(Errc::parse, "permutation JSON must be an integer array");
        }
        require_perm(p);
        return p;
    }
    return parse_perm(text);
}

Network network_from_text(const std::string& text) {
    if (!looks_like_json(text)) return parse_network(text);
    json j = parse_json(text);
    std::vector<Edge> edges;
    for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
        if (e.size() != 2) throw Error(Errc::parse, "edges are [src, dst] pairs");
        edges.push_back({e[0], e[1]});
    }
    return validate(field<int>(j, "n"), std::move(edges));
}

PolyValue poly_from_text(const std::string& text) {
    json j = parse_json(text);
    std::vector<Cell> cells = cells_of(j, "cells");
    PolyValue v;
    bool rothe = j.contains("n") || (j.contains("kind") && j["kind"] == "rothe");
    if (rothe) {
        v.rothe_perm = perm_from_rothe(cells, field<int>(j, "n"));
        v.shape = make_polyomino(cells);
        return v;
    }
    v.shape = make_polyomino(cells);
    if (auto why = class_violation(v.shape)) throw Error(Errc::invalid_polyomino, *why);
    return v;
}

Forest forest_from_text(const std::string& text) {
    json j = parse_json(text);
    Signature eps = parse_signature(field<std::string>(j, "epsilon"));
    std::set<Cell> pointed;
    for (const Cell& c : cells_of(j, "pointed")) pointed.insert(c);
    return validate_forest(eps, pointed);
}

// Every source is loaded into the network hub; perm and forest also keep their own value.
Value load(const std::string& kind, const std::string& text) {
    Value v;
    v.kind = kind;
    if (kind == "perm") {
        v.perm = perm_from_text(text);
        v.net = sigma_prime(v.perm);
    } else if (kind == "network") {
        v.net = network_from_text(text);
        v.perm = sigma(v.net);
    } else if (kind == "polyomino") {
        v.poly = poly_from_text(text);
        if (v.poly.rothe_perm) {
            Perm p = *v.poly.rothe_perm;
            v.net = Network{static_cast<int>(p.size()), rothe_edges(p)};
        } else {
            int n = static_cast<int>(alpha(v.poly.shape).size());
            v.net = validate(n, polyomino_edges(v.poly.shape));
        }
        v.perm = sigma(v.net);
    } else if (kind == "forest") {
        v.forest = forest_from_text(text);
        v.net = network_from_forest(*v.forest);
        v.perm = sigma(v.net);
    } else {
        throw UsageError("unknown representation '" + kind + "'");
    }
    return v;
}

json network_json(const Network& net) {
    json e = json::array();
    for (const Edge& x : label_sorted(net.edges)) e.push_back({x.src, x.dst});
    return {{"n", net.n}, {"edges", e}};
}

json forest_json(const Forest& f) {
    std::string eps;
    for (int x : f.shape.eps) {
        if (!eps.empty()) eps += ' ';
        eps += x > 0 ? '+' : x < 0 ? '-' : '0';
    }
    return {{"epsilon", eps}, {"pointed", cells_json({f.pointed.begin(), f.pointed.end()})}};
}

// Polyominoes and forests carry the permutation pi whose network is sigma'(pi^-1).
Perm perm_for(const Value& v) {
    if (v.kind == "perm") return v.perm;
    if (v.kind == "network") return sigma(v.net);
    return inverse(sigma(v.net));
}

Forest forest_for(const Value& v, const std::optional<Signature>& eps) {
    if (v.forest && !eps) return *v.forest;
    Network net = v.kind == "perm" ? sigma_prime(inverse(v.perm)) : v.net;
    return forest_from_network(net, eps ? *eps : signature_of(net));
}

std::string emit(const Value& v, const std::string& to, const std::string& format, const std::optional<Signature>& eps) {
    bool as_json = format == "json";
    if (format != "text" && format != "json") throw UsageError("convert supports --format text or json");
    if (to == "perm") {
        Perm p = perm_for(v);
        return as_json ? json(p).dump() + "\n" : format_perm(p) + "\n";
    }
    if (to == "network") {
        return as_json ? network_json(v.net).dump() + "\n" : format_network(v.net) + "\n";
    }
    if (to == "polyomino") {
        if (v.kind == "polyomino" && !v.poly.rothe_perm) {
            if (as_json) return json{{"cells", cells_json(v.poly.shape.cells)}}.dump() + "\n";
            return render_polyomino(label_polyomino(v.poly.shape));
        }
        Perm p = v.kind == "perm" ? v.perm : inverse(sigma(v.net));
        RotheDiagram d = rothe_diagram(p);
        if (as_json)
            return json{{"kind", "rothe"}, {"n", static_cast<int>(p.size())}, {"cells", cells_json(d.original)}}.dump() + "\n";
        return render_rothe(d);
    }
    if (to == "forest") return forest_json(forest_for(v, eps)).dump() + "\n";
    throw UsageError("unknown representation '" + to + "'");
}

std::optional<Signature> opt_eps(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_signature(text);
}

Signature poset_eps(const std::string& text, int cap) {
    Signature eps = parse_signature(text);
    Signature stripped = strip_zeros(eps);
    if (stripped.size() != eps.size()) std::cerr << "note: zeros removed from the signature\n";
    check_cap(stripped, cap);
    return stripped;
}

struct SuiteResult {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = "first counterexample: " + why;
        ok = false;
    }
};

using SigList = std::vector<Signature>;

SigList signatures_up_to(int len) {
    SigList out;
    for (int l = 2; l <= len; ++l)
        for (const Signature& e : endpoint_signatures(l)) out.push_back(e);
    return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

SuiteResult suite_bijection(int n, const Caps& caps) {
    SuiteResult r;
    long long good = 0;
    auto perms = all_perms(n);
    for (const Perm& p : perms) {
        if (sigma(sigma_prime(p)) == p) ++good;
        else r.fail(format_perm(p));
    }
    auto nets = enumerate_networks(n, std::nullopt, caps.max_n);
    for (const Network& net : nets)
        if (sigma_prime(sigma(net)) != net) r.fail(format_network(net));
    if (static_cast<long long>(nets.size()) != factorial(n)) r.fail(std::to_string(nets.size()) + " networks");
    if (r.ok) r.detail = std::to_string(good) + "/" + std::to_string(perms.size()) + " round-trips, " + std::to_string(nets.size()) + " networks";
    return r;
}

SuiteResult suite_polyomino(int cells) {
    SuiteResult r;
    int count = 0;
    for (const Polyomino& p : enumerate_class_p(cells)) {
        if (polyomino_edges(p) != sigma_prime(inverse(alpha(p))).edges) r.fail(coordinate_dump(p.cells, {}));
        ++count;
    }
    if (r.ok) r.detail = std::to_string(count) + " polyominoes with at most " + std::to_string(cells) + " cells";
    return r;
}

SuiteResult suite_rothe(int n) {
    SuiteResult r;
    int count = 0;
    for (const Perm& p : all_perms(n)) {
        if (rothe_edges(p) != sigma_prime(inverse(p)).edges) r.fail(format_perm(p));
        if (!is_identity(p)) {
            auto geo = rothe_ribbon(rothe_diagram(p)).tile_labels;
            auto word = rothe_step(p).tile_labels;
            std::sort(geo.begin(), geo.end());
            std::sort(word.begin(), word.end());
            if (geo != word) r.fail(format_perm(p) + " (ribbon tiles)");
        }
        ++count;
    }
    if (r.ok) r.detail = std::to_string(count) + " permutations";
    return r;
}

SuiteResult suite_forest(const SigList& sigs) {
    SuiteResult r;
    long long count = 0;
    for (const Signature& e : sigs) {
        Perm pi = boundary_perm(shape_of(e));
        for (const Forest& f : enumerate_forests(e, ceiling_eps)) {
            Network n = network_from_forest(f);
            std::string at = format_signature(e) + " " + format_network(n);
            if (forest_from_network(n, e) != f) r.fail(at + " (round-trip)");
            if (kappa(f) != inverse(sigma(n))) r.fail(at + " (kappa)");
            if (nu(f) != inverse(compose(kappa_tilde(f), inverse(pi)))) r.fail(at + " (nu)");
            if (swap_length(pi, nu(f)) != static_cast<int>(f.pointed.size())) r.fail(at + " (length)");
            ++count;
        }
    }
    if (r.ok) r.detail = std::to_string(count) + " forests";
    return r;
}

SuiteResult suite_lattice(const SigList& sigs) {
    SuiteResult r;
    long long pairs = 0;
    for (const Signature& e : sigs) {
        Poset P = build_poset(e, ceiling_eps);
        for (int x = 0; x < P.size(); ++x)
            for (int y = 0; y < P.size(); ++y) {
                int m = meet(P, x, y), j = join(P, x, y);
                bool good = P.leq(m, x) && P.leq(m, y) && P.leq(x, j) && P.leq(y, j);
                for (int z = 0; z < P.size() && good; ++z) {
                    if (P.leq(z, x) && P.leq(z, y) && !P.leq(z, m)) good = false;
                    if (P.leq(x, z) && P.leq(y, z) && !P.leq(j, z)) good = false;
                }
                good = good && join(P, x, m) == x && meet(P, x, j) == x;
                if (!good) r.fail(format_signature(e) + " " + format_edge_set(P, x) + " " + format_edge_set(P, y));
                ++pairs;
            }
    }
    if (r.ok) r.detail = std::to_string(pairs) + " pairs";
    return r;
}

SuiteResult suite_whitney(const SigList& sigs) {
    SuiteResult r;
    std::vector<long long> last;
    for (const Signature& e : sigs) {
        auto w = whitney_direct(e, ceiling_eps);
        if (w != whitney_recurrence(e)) r.fail(format_signature(e) + " (recurrence)");
        if (w != forest_gen_fn(e, ceiling_eps)) r.fail(format_signature(e) + " (forests)");
        auto [even, odd] = even_odd_balance(w);
        if (even != odd) r.fail(format_signature(e) + " (balance)");
        last = w;
    }
    if (r.ok) {
        r.detail = std::to_string(sigs.size()) + " signatures";
        if (sigs.size() == 1) r.detail += "; W = " + format_poly(last);
    }
    return r;
}

SuiteResult suite_mobius(const SigList& sigs) {
    SuiteResult r;
    long long intervals = 0;
    for (const Signature& e : sigs) {
        Poset P = build_poset(e, ceiling_eps);
        for (int x = 0; x < P.size(); ++x) {
            auto mu = mobius_from(P, x);
            for (int y = x; y < P.size(); ++y) {
                if (!P.leq(x, y)) continue;
                std::string at = format_signature(e) + " [" + format_edge_set(P, x) + ", " + format_edge_set(P, y) + "]";
                long long sign = (P.rank[y] - P.rank[x]) % 2 ? -1 : 1;
                if (mobius_closed(P, x, y) != mu[y] || mu[y] < -1 || mu[y] > 1) r.fail(at + " (closed form)");
                if (sign * mu[y] != count_monotone_chains(P, x, y, false)) r.fail(at + " (decreasing chains)");
                ++intervals;
            }
        }
        BooleanCheck b = boolean_interval_check(P);
        if (b.crossing_free && !b.boolean) r.fail(format_signature(e) + " (Boolean case)");
    }
    if (r.ok) r.detail = "closed = recursive on " + std::to_string(intervals) + " intervals";
    return r;
}

SuiteResult suite_el(const SigList& sigs) {
    SuiteResult r;
    long long intervals = 0, chains = 0;
    for (const Signature& e : sigs) {
        Poset P = build_poset(e, ceiling_eps);
        for (int x = 0; x < P.size(); ++x)
            for (int y = x; y < P.size(); ++y) {
                if (!P.leq(x, y)) continue;
                std::string at = format_signature(e) + " [" + format_edge_set(P, x) + ", " + format_edge_set(P, y) + "]";
                if (count_monotone_chains(P, x, y, true) != 1) r.fail(at + " (rising chains)");
                auto lab = chain_labels(P, lex_first_chain(P, x, y));
                if (!std::is_sorted(lab.begin(), lab.end())) r.fail(at + " (first chain)");
                auto c = snelling_check(P, x, y);
                if (!c) r.fail(at + " (label ranks)");
                else chains += *c;
                ++intervals;
            }
    }
    if (r.ok) r.detail = std::to_string(intervals) + " intervals, " + std::to_string(chains) + " maximal chains";
    return r;
}

int run_verify(const std::string& suite, std::optional<int> n_opt, const std::string& eps_text, const Caps& caps) {
    static const std::vector<std::string> names{"bijection", "polyomino", "rothe", "forest", "lattice", "whitney", "mobius", "el"};
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
    if (n_opt && *n_opt > caps.max_n && suite != "polyomino") throw Error(Errc::cap_exceeded, "--n exceeds max_n");
    int n = n_opt.value_or(6);
    SigList sigs;
    std::string scope;
    if (!eps_text.empty()) {
        sigs.push_back(poset_eps(eps_text, caps.max_eps));
        scope = format_signature(sigs.back());
    } else {
        int len = n_opt ? std::min(*n_opt, caps.max_eps) : 6;
        sigs = signatures_up_to(len);
        scope = "length <= " + std::to_string(len);
    }
    int failures = 0;
    auto report = [&](const std::string& name, const std::string& where, const SuiteResult& r) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << name << " " << where << " (" << r.detail << ")\n";
        failures += !r.ok;
    };
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    std::string nscope = "n=" + std::to_string(n);
    if (want("bijection")) report("bijection", nscope, suite_bijection(n, caps));
    if (want("polyomino")) {
        int cells = n_opt.value_or(8);
        if (cells > 12) throw Error(Errc::cap_exceeded, "polyomino suite supports at most 12 cells");
        report("polyomino", "cells<=" + std::to_string(cells), suite_polyomino(cells));
    }
    if (want("rothe")) report("rothe", nscope, suite_rothe(n));
    if (want("forest")) report("forest", scope, suite_forest(sigs));
    if (want("lattice")) report("lattice", scope, suite_lattice(sigs));
    if (want("whitney")) report("whitney", scope, suite_whitney(sigs));
    if (want("mobius")) report("mobius", scope, suite_mobius(sigs));
    if (want("el")) report("el", scope, suite_el(sigs));
    return failures ? verify_failed : ok;
}

std::string render_value(const Value& v) {
    if (v.kind == "perm") return render_rothe(rothe_diagram(v.perm));
    if (v.kind == "network") return render_network(v.net);
    if (v.kind == "forest") return render_forest(*v.forest);
    if (v.poly.rothe_perm) return render_rothe(rothe_diagram(*v.poly.rothe_perm));
    return render_polyomino(label_polyomino(v.poly.shape));
}

std::string render_poset_text(const Poset& P) {
    std::ostringstream out;
    for (int x = 0; x < P.size(); ++x) {
        out << x << " rank " << P.rank[x] << " " << format_edge_set(P, x) << " ->";
        for (int y : P.up[x]) out << " " << y << ":" << P.label_bit(x, y) + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutations, networks, polyominoes, forests and their lattices"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value file with max_n and max_eps");

    std::string from, to, value, format = "text", eps_text, suite, poset_text, via;
    std::optional<int> n_opt;
    const std::vector<std::string> kinds{"perm", "network", "polyomino", "forest"};

    auto* convert = app.add_subcommand("convert", "convert between representations");
    convert->add_option("--from", from)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--to", to)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--eps", eps_text, "signature for a forest target");
    convert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    convert->add_option("value", value, "input value, or '-' for stdin");

    auto* enumerate = app.add_subcommand("enumerate", "list networks or forests");
    enumerate->add_option("--n", n_opt);
    enumerate->add_option("--eps", eps_text);
    enumerate->add_option("--to", to, "network (default) or forest")->check(CLI::IsMember({"network", "forest"}));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "exhaustive checks");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--n", n_opt);
    verify->add_option("--eps", eps_text);

    auto* whitney = app.add_subcommand("whitney", "rank generating function");
    whitney->add_option("--eps", eps_text)->required();
    whitney->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    whitney->add_option("--via", via, "direct, recurrence or forest")->check(CLI::IsMember({"direct", "recurrence", "forest"}));

    auto* mobius = app.add_subcommand("mobius", "Mobius function from the bottom element");
    mobius->add_option("--eps", eps_text)->required();
    mobius->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* render = app.add_subcommand("render", "draw an object");
    render->add_option("--poset", poset_text, "signature whose poset to draw");
    render->add_option("--from", from)->check(CLI::IsMember(kinds));
    render->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
    render->add_option("value", value);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        Caps caps = config_path.empty() ? Caps{} : read_config(config_path);
        if (convert->parsed()) {
            Value v = load(from, read_value(value));
            std::cout << emit(v, to, format, opt_eps(eps_text));
            return ok;
        }
        if (enumerate->parsed()) {
            std::optional<Signature> eps = opt_eps(eps_text);
            int n = eps ? static_cast<int>(eps->size()) : n_opt.value_or(0);
            if (n < 1) throw UsageError("enumerate needs --n or --eps");
            if (n_opt && eps && *n_opt != n) throw UsageError("--n differs from the signature length");
            if (to == "forest") {
                if (!eps) throw UsageError("forest enumeration needs --eps");
                for (const Forest& f : enumerate_forests(*eps, caps.max_eps)) std::cout << forest_json(f).dump() << "\n";
                return ok;
            }
            for (const Network& net : enumerate_networks(n, eps, caps.max_n))
                std::cout << (format == "json" ? network_json(net).dump() : format_network(net)) << "\n";
            return ok;
        }
        if (verify->parsed()) return run_verify(suite, n_opt, eps_text, caps);
        if (whitney->parsed()) {
            Signature eps = poset_eps(eps_text, caps.max_eps);
            std::vector<long long> w = via == "recurrence" ? whitney_recurrence(eps)
                                       : via == "forest"   ? forest_gen_fn(eps, caps.max_eps)
                                                           : whitney_direct(eps, caps.max_eps);
            if (format == "json") std::cout << json{{"epsilon", format_signature(eps)}, {"coefficients", w}}.dump() << "\n";
            else std::cout << "W(" << format_signature(eps) << ") = " << format_poly(w) << "\n";
            return ok;
        }
        if (mobius->parsed()) {
            Signature eps = poset_eps(eps_text, caps.max_eps);
            Poset P = build_poset(eps, caps.max_eps);
            auto mu = mobius_from(P, P.bottom());
            if (format == "json") {
                json rows = json::array();
                for (int y = 0; y < P.size(); ++y)
                    rows.push_back({{"element", format_edge_set(P, y)}, {"rank", P.rank[y]}, {"mu", mu[y]},
                                    {"closed", mobius_closed(P, P.bottom(), y)}});
                std::cout << json{{"epsilon", format_signature(eps)}, {"values", rows}}.dump() << "\n";
            } else {
                for (int y = 0; y < P.size(); ++y)
                    std::cout << "mu(0, " << format_edge_set(P, y) << ") = " << mu[y] << "\n";
            }
            return ok;
        }
        if (render->parsed()) {
            if (!poset_text.empty()) {
                Poset P = build_poset(poset_eps(poset_text, caps.max_eps), caps.max_eps);
                std::cout << (format == "dot" ? hasse_dot(P) : render_poset_text(P));
                return ok;
            }
            if (from.empty()) throw UsageError("render needs --poset or --from");
            if (format == "dot") throw UsageError("dot output is available for posets only");
            std::cout << render_value(load(from, read_value(value)));
            return ok;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::cap_exceeded ? usage : invalid_input;
    }
    return usage;
}
