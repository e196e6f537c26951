// kgh: generators, exact solvers and checkers for general Kneser hypergraphs.
//
// Exit codes: 0 success (mathematical "fail" verdicts included), 2 usage or
// parse error, 3 resource guard, 4 internal inconsistency.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgh/kgh.hpp"

namespace {

using nlohmann::json;
using namespace kgh;

constexpr const char* kGuardEnv = "KGH_GUARDS";

struct Common {
    std::string format = "json";
    std::uint64_t seed = 1;
    bool timing = false;
    std::optional<int> max_n, max_alt_n, max_removal_n;
    std::optional<std::size_t> max_kg_vertices, max_kg_edges;
    std::optional<std::uint64_t> node_budget;
};

struct GuardSetup {
    Guards guards;
    std::string source = "defaults";
};

// KGH_GUARDS holds comma-separated key=value pairs, e.g. "max_n=20,node_budget=1000000".
GuardSetup resolve_guards(const Common& c) {
    GuardSetup g;
    if (const char* env = std::getenv(kGuardEnv); env && *env) {
        std::stringstream in(env);
        for (std::string item; std::getline(in, item, ',');) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InputError(std::string(kGuardEnv) + ": expected key=value, got '" + item + "'");
            const std::string key = item.substr(0, eq);
            unsigned long long v = 0;
            try {
                std::size_t used = 0;
                v = std::stoull(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1)
                    throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw InputError(std::string(kGuardEnv) + ": bad value in '" + item + "'");
            }
            if (v == 0)
                throw InputError(std::string(kGuardEnv) + ": guards must be positive");
            if (key == "max_n")
                g.guards.max_n = static_cast<int>(v);
            else if (key == "max_alt_n")
                g.guards.max_alt_n = static_cast<int>(v);
            else if (key == "max_removal_n")
                g.guards.max_removal_n = static_cast<int>(v);
            else if (key == "max_independent_sets")
                g.guards.max_independent_sets = v;
            else if (key == "max_kneser_vertices")
                g.guards.max_kneser_vertices = v;
            else if (key == "max_kneser_edges")
                g.guards.max_kneser_edges = v;
            else if (key == "node_budget")
                g.guards.node_budget = v;
            else
                throw InputError(std::string(kGuardEnv) + ": unknown guard '" + key + "'");
        }
        g.source = kGuardEnv;
    }
    bool flagged = false;
    auto apply = [&flagged](auto& field, const auto& opt) {
        if (opt) {
            if (*opt <= 0)
                throw InputError("guards must be positive");
            field = *opt;
            flagged = true;
        }
    };
    apply(g.guards.max_n, c.max_n);
    apply(g.guards.max_alt_n, c.max_alt_n);
    apply(g.guards.max_removal_n, c.max_removal_n);
    apply(g.guards.max_kneser_vertices, c.max_kg_vertices);
    apply(g.guards.max_kneser_edges, c.max_kg_edges);
    apply(g.guards.node_budget, c.node_budget);
    if (flagged)
        g.source = g.source == "defaults" ? "flags" : g.source + "+flags";
    return g;
}

json guards_json(const GuardSetup& g) {
    return {{"max_n", g.guards.max_n},
            {"max_alt_n", g.guards.max_alt_n},
            {"max_removal_n", g.guards.max_removal_n},
            {"max_independent_sets", g.guards.max_independent_sets},
            {"max_kneser_vertices", g.guards.max_kneser_vertices},
            {"max_kneser_edges", g.guards.max_kneser_edges},
            {"node_budget", g.guards.node_budget},
            {"source", g.source},
            {"env_variable", kGuardEnv}};
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

/// "1,2,1" or the constant shorthand "k^n"; empty means all ones.
SVector parse_svector(const std::string& text, int n) {
    if (text.empty())
        return SVector::ones(n);
    if (const auto caret = text.find('^'); caret != std::string::npos) {
        auto value = parse_int_list(text.substr(0, caret), "s-vector");
        auto count = parse_int_list(text.substr(caret + 1), "s-vector");
        if (value.size() != 1 || count.size() != 1)
            throw InputError("s-vector shorthand must look like k^n");
        if (count[0] != n)
            throw InputError("s-vector has " + std::to_string(count[0]) + " entries, hypergraph has " +
                             std::to_string(n) + " vertices");
        return SVector::constant(n, value[0]);
    }
    SVector s(parse_int_list(text, "s-vector"));
    if (static_cast<int>(s.size()) != n)
        throw InputError("s-vector has " + std::to_string(s.size()) + " entries, hypergraph has " +
                         std::to_string(n) + " vertices");
    return s;
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse_int_list(text, what);
        if (v.size() != 1)
            throw InputError(what + ": expected a number or lo..hi");
        return {v[0], v[0]};
    }
    auto lo = parse_int_list(text.substr(0, dots), what);
    auto hi = parse_int_list(text.substr(dots + 2), what);
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
        throw InputError(what + ": bad range '" + text + "'");
    return {lo[0], hi[0]};
}

/// "n=4..9,k=2..3,r=2..3[,a=0..3]"
std::map<std::string, Range> parse_grid(const std::string& text) {
    std::map<std::string, Range> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("grid entries look like name=lo..hi, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        if (key != "n" && key != "k" && key != "r" && key != "a")
            throw InputError("unknown grid coordinate '" + key + "'");
        out[key] = parse_range(item.substr(eq + 1), "grid " + key);
    }
    for (const char* key : {"n", "k", "r"})
        if (!out.count(key))
            throw InputError(std::string("grid needs a range for ") + key);
    return out;
}

json sets_json(const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (VertexSet s : sets)
        arr.push_back(s.to_vector());
    return arr;
}

json defect_json(const DefectReport& d) {
    return {{"value", d.value},
            {"method", to_string(d.method)},
            {"r", d.r},
            {"s", d.s.entries()},
            {"equitable", d.equitable},
            {"witness",
             {{"parts", sets_json(d.witness.parts)},
              {"score", d.witness.score()},
              {"s_disjoint", d.witness.s_disjoint},
              {"equitable", d.witness.equitable}}},
            {"nodes", d.nodes}};
}

json alt_json(const AltResult& a) {
    return {{"value", a.value}, {"witness", a.witness.entries()}, {"sigma", a.sigma}, {"nodes", a.nodes}};
}

json chromatic_json(const ChromaticResult& c) {
    json j = {{"status", to_string(c.status)}, {"upper", c.upper}, {"nodes", c.nodes}};
    if (c.status == SolveStatus::exact) {
        j["value"] = c.value;
        j["witness"] = c.witness.assignment();
    } else {
        j["lower_bound"] = c.value;
    }
    return j;
}

/// Loaded input plus what goes in the report's "input" block.
struct Input {
    Hypergraph h;
    json info;
};

Input load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    auto parsed = io::read_any(in);
    Input out{parsed.graph, json::object()};
    out.info = {{"path", path},
                {"hash", io::input_hash(parsed.graph)},
                {"n", parsed.graph.n()},
                {"edges", parsed.graph.edge_count()},
                {"duplicate_edges_dropped", parsed.duplicate_edges}};
    return out;
}

class Reporter {
public:
    Reporter(const Common& c, std::string command) : common_(c), command_(std::move(command)) {
        guards_ = resolve_guards(c);
        start_ = std::chrono::steady_clock::now();
    }

    const Guards& guards() const { return guards_.guards; }
    const Common& common() const { return common_; }

    json envelope(const json& input, const json& params, const std::string& status) const {
        json j = {{"schema", 1},
                  {"tool", "kgh"},
                  {"version", kVersion},
                  {"command", command_},
                  {"input", input},
                  {"params", params},
                  {"guards", guards_json(guards_)},
                  {"seed", common_.seed},
                  {"status", status}};
        if (common_.timing)
            j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return j;
    }

    void emit(const json& input, const json& params, const json& result, const std::string& status = "ok") const {
        json j = envelope(input, params, status);
        j["result"] = result;
        if (common_.format == "json") {
            std::cout << j.dump(2) << '\n';
            return;
        }
        std::cout << command_ << ": " << status << '\n';
        for (auto it = result.begin(); it != result.end(); ++it)
            std::cout << "  " << it.key() << ": " << it.value().dump() << '\n';
    }

private:
    Common common_;
    std::string command_;
    GuardSetup guards_;
    std::chrono::steady_clock::time_point start_;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

std::string sidecar_path(const std::string& path) {
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return path.substr(0, dot) + ".json";
    return path + ".json";
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    int n = 0, k = 0, r = 2, s = 2, m = 0;
    std::string A, sizes, graph, out;
    bool relaxed = false;
};

void run_gen(const std::string& family, const GenArgs& a, const Reporter& rep) {
    Hypergraph h;
    json params = {{"family", family}};
    json input = json::object();
    if (family == "hnka") {
        VertexSet A(parse_int_list(a.A, "A"));
        h = hnka(HnkaParams(a.n, a.k, a.r, A, a.relaxed));
        params.update({{"n", a.n}, {"k", a.k}, {"r", a.r}, {"A", A.to_vector()}, {"relaxed", a.relaxed}});
    } else if (family == "kneser-nk") {
        h = complete_uniform(a.n, a.k);
        params.update({{"n", a.n}, {"k", a.k}});
    } else if (family == "multipartite") {
        auto sizes = parse_int_list(a.sizes, "sizes");
        h = complete_multipartite(sizes);
        params["sizes"] = sizes;
    } else if (family == "gbar") {
        auto g = load_input(a.graph);
        h = gbar(g.h, a.r);
        input = g.info;
        params["r"] = a.r;
    } else if (family == "s-stable") {
        h = s_stable_hypergraph(a.n, a.k, a.s);
        params.update({{"n", a.n}, {"k", a.k}, {"s", a.s}});
    } else if (family == "augmented") {
        auto g = load_input(a.graph);
        h = augment_with_universal(g.h, a.m);
        input = g.info;
        params["m"] = a.m;
    } else {
        throw InputError("unknown family '" + family + "'");
    }
    json result = {{"n", h.n()}, {"edges", h.edge_count()}, {"hash", io::input_hash(h)}};
    const std::string text = io::to_hg_string(h);
    if (a.out.empty()) {
        std::cout << text;
        return;
    }
    write_file(a.out, text);
    result["file"] = a.out;
    json side = rep.envelope(input, params, "ok");
    side["result"] = result;
    write_file(sidecar_path(a.out), side.dump(2) + "\n");
    rep.emit(input, params, result);
}

// ---- compute --------------------------------------------------------------

struct ComputeArgs {
    std::string input;
    int r = 2;
    std::string s;
    std::string sigma;
    int limit = 62;
    bool as_kneser = false;
    bool map = false;
    bool full_edges = false;
    int C = 1;
    std::string out;
};

void run_compute(const std::string& metric, const ComputeArgs& a, const Reporter& rep) {
    auto in = load_input(a.input);
    const Hypergraph& h = in.h;
    const Guards& g = rep.guards();
    json params = {{"metric", metric}, {"r", a.r}};

    if (metric == "cd" || metric == "ecd") {
        SVector s = parse_svector(a.s, h.n());
        params["s"] = s.entries();
        auto d = metric == "cd" ? cd(h, a.r, s, g) : ecd(h, a.r, s, g);
        rep.emit(in.info, params, defect_json(d));
    } else if (metric == "alt") {
        if (a.sigma.empty()) {
            rep.emit(in.info, params, alt_json(alt_r(h, a.r, g)));
        } else {
            Ordering sigma = parse_int_list(a.sigma, "sigma");
            params["sigma"] = sigma;
            rep.emit(in.info, params, alt_json(alt_sigma(h, a.r, sigma, g)));
        }
    } else if (metric == "chi") {
        params.update({{"limit", a.limit}, {"as_kneser", a.as_kneser}});
        json result;
        if (a.as_kneser) {
            SVector s = parse_svector(a.s, h.n());
            params["s"] = s.entries();
            auto kg = build_kneser_s(h, a.r, s, KneserGuards::from(g));
            result = chromatic_json(chromatic_number(kg.coloring_instance(), a.limit, g.node_budget));
            result["kneser_vertices"] = kg.vertex_count();
            result["kneser_edges"] = kg.edge_count();
        } else {
            params.erase("r");
            result = chromatic_json(chromatic_number(h, a.limit, g.node_budget));
        }
        rep.emit(in.info, params, result);
    } else if (metric == "bounds") {
        SVector s = parse_svector(a.s, h.n());
        params["s"] = s.entries();
        auto b = bound_values(h, a.r, s, g);
        json result = {{"cd", defect_json(b.cd)},
                       {"ecd", defect_json(b.ecd)},
                       {"cd_bound", b.cd_bound},
                       {"ecd_bound", b.ecd_bound},
                       {"mu", b.mu},
                       {"defect_bounds_applicable", b.defect_bounds_applicable},
                       {"max_bound", b.max_bound}};
        if (b.alt) {
            result["alt"] = alt_json(*b.alt);
            result["alt_bound"] = *b.alt_bound;
        } else {
            result["alt"] = nullptr;
            result["alt_bound"] = nullptr;
            result["alt_skipped"] = s.all_ones() ? "n above alternation guard" : "s is not all ones";
        }
        rep.emit(in.info, params, result);
    } else if (metric == "kneser") {
        SVector s = parse_svector(a.s, h.n());
        params["s"] = s.entries();
        auto kg = build_kneser_s(h, a.r, s, KneserGuards::from(g));
        json result = {{"vertex_count", kg.vertex_count()}, {"edge_count", kg.edge_count()}};
        if (a.map)
            result["map"] = io::kneser_map(kg);
        if (!a.out.empty()) {
            write_file(a.out, io::to_kneser_string(kg));
            result["file"] = a.out;
        } else if (rep.common().format == "text") {
            std::cout << io::to_kneser_string(kg);
            return;
        } else {
            json edges = json::array();
            for (const auto& e : kg.edges()) {
                std::vector<int> one_based;
                for (int i : e)
                    one_based.push_back(i + 1);
                edges.push_back(one_based);
            }
            result["edges"] = edges;
        }
        rep.emit(in.info, params, result);
    } else if (metric == "kriz") {
        params.update({{"C", a.C}, {"full_edges", a.full_edges}});
        auto t = kriz_T(h, a.C, a.r, g);
        const Hypergraph& shown = a.full_edges ? t.full : t.minimal;
        rep.emit(in.info, params,
                 {{"n", shown.n()},
                  {"edge_count", shown.edge_count()},
                  {"edges", sets_json(shown.edges())},
                  {"full_edge_count", t.full.edge_count()},
                  {"minimal_edge_count", t.minimal.edge_count()}});
    } else {
        throw InputError("unknown metric '" + metric + "'");
    }
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string input;
    int p = 2, r = 2, r1 = 2, r2 = 2;
    std::string s;
    std::string colors = "random:10";
    std::optional<int> C;
    bool reduction = false;
    std::string grid;
    std::optional<int> n, k;
    std::string A;
    std::size_t max_points_vertices = 200;
};

json colorful_check_json(const ColorfulCheck& c) {
    json j = {{"passed", c.passed()},
              {"well_formed", c.well_formed},
              {"total_matches", c.total_matches},
              {"transversals_are_edges", c.transversals_are_edges},
              {"equitable", c.equitable},
              {"rainbow", c.rainbow},
              {"transversals_exhaustive", c.transversals_exhaustive}};
    if (!c.bad_transversal.empty())
        j["bad_transversal"] = c.bad_transversal;
    if (c.color_collision) {
        auto [part, v1, v2] = *c.color_collision;
        j["color_collision"] = {part, v1, v2};
    }
    if (!c.detail.empty())
        j["detail"] = c.detail;
    return j;
}

int run_check(const std::string& check, const CheckArgs& a, const Reporter& rep) {
    const Guards& g = rep.guards();
    if (check == "colorful") {
        auto in = load_input(a.input);
        SVector s = parse_svector(a.s, in.h.n());
        if (a.colors.rfind("random:", 0) != 0)
            throw InputError("--colors must look like random:N");
        const int samples = parse_int_list(a.colors.substr(7), "--colors").at(0);
        if (samples < 1)
            throw InputError("--colors needs at least one sample");
        json params = {{"p", a.p}, {"s", s.entries()}, {"colors", a.colors}};
        auto kg = build_kneser_s(in.h, a.p, s, KneserGuards::from(g));
        auto inst = kg.coloring_instance();
        std::mt19937_64 rng(rep.common().seed);
        json witnesses = json::array();
        int passed = 0;
        for (int i = 0; i < samples; ++i) {
            Coloring c = random_proper_coloring(inst, rng);
            auto w = find_colorful(in.h, a.p, s, c, g);
            auto v = verify_colorful(w, g);
            passed += v.passed() ? 1 : 0;
            json parts = json::array();
            for (const auto& part : w.parts) {
                std::vector<int> one_based;
                for (int x : part)
                    one_based.push_back(x + 1);
                parts.push_back(one_based);
            }
            witnesses.push_back({{"palette", c.palette_size()},
                                 {"coloring", c.assignment()},
                                 {"parts", parts},
                                 {"total", w.total()},
                                 {"target", w.target},
                                 {"vacuous", w.vacuous},
                                 {"check", colorful_check_json(v)}});
        }
        const bool all = passed == samples;
        rep.emit(in.info, params,
                 {{"samples", samples}, {"passed", passed}, {"kneser_vertices", kg.vertex_count()},
                  {"witnesses", witnesses}},
                 all ? "ok" : "inconsistent");
        return all ? 0 : 4;
    }
    if (check == "lemma1") {
        auto in = load_input(a.input);
        SVector s = parse_svector(a.s, in.h.n());
        json params = {{"r1", a.r1}, {"r2", a.r2}, {"s", s.entries()}, {"reduction", a.reduction}};
        std::vector<int> Cs = a.C ? std::vector<int>{*a.C} : std::vector<int>{1, 2, 3};
        params["C"] = Cs;
        json reports = json::array();
        int violations = 0;
        for (int C : Cs) {
            auto r = check_lemma1(in.h, a.r1, a.r2, s, C, g);
            violations += r.holds ? 0 : 1;
            reports.push_back({{"C", C},
                               {"lhs", r.lhs},
                               {"rhs", r.rhs},
                               {"holds", r.holds},
                               {"ecd_of_T", r.ecd_of_T},
                               {"T_edges", r.T_edges},
                               {"T_minimal_edges", r.T_minimal_edges}});
        }
        json result = {{"reports", reports}, {"violations", violations}};
        if (a.reduction) {
            auto kg = build_kneser_s(in.h, a.r1 * a.r2, s, KneserGuards::from(g));
            auto c = greedy_coloring(kg.coloring_instance());
            auto red = check_reduction_coloring(in.h, a.r1, a.r2, s, c, g);
            result["reduction"] = {{"C", c.palette_size()},
                                   {"T_edges", sets_json(red.T.full.edges())},
                                   {"derived", red.derived.assignment()},
                                   {"proper", red.proper}};
        }
        // A violated inequality on valid input would be a bug.
        rep.emit(in.info, params, result, violations ? "inconsistent" : "ok");
        return violations ? 4 : 0;
    }
    if (check == "gbar-identity") {
        auto in = load_input(a.input);
        json params = {{"r", a.r}};
        auto alpha = independence_number(in.h);
        auto id = verify_gbar_identity(in.h, a.r, g);
        rep.emit(in.info, params,
                 {{"ecd", id.ecd},
                  {"alpha", id.alpha},
                  {"alpha_witness", alpha.witness.to_vector()},
                  {"r_times_vc", id.r_times_vc},
                  {"holds", id.holds}},
                 "ok");
        return 0;
    }
    if (check == "formulas") {
        auto grid = parse_grid(a.grid.empty() ? "n=4..9,k=2..3,r=2..3" : a.grid);
        json params = {{"grid", a.grid.empty() ? "n=4..9,k=2..3,r=2..3" : a.grid}};
        json points = json::array();
        int mismatches = 0, total = 0;
        for (int n = grid["n"].lo; n <= grid["n"].hi; ++n)
            for (int k = grid["k"].lo; k <= grid["k"].hi; ++k)
                for (int r = grid["r"].lo; r <= grid["r"].hi; ++r) {
                    if (k < 1 || r < 2 || n < r * k)
                        continue;
                    Range ar = grid.count("a") ? grid["a"] : Range{0, n - k};
                    for (int av = std::max(ar.lo, 0); av <= std::min(ar.hi, n - 1); ++av) {
                        auto p = HnkaParams::prefix(n, k, r, av);
                        auto h = hnka(p);
                        const int cd_v = cd(h, r, g).value, ecd_v = ecd(h, r, g).value;
                        const long long cd_f = cd_hnka_closed(p), ecd_f = ecd_hnka_closed(p);
                        const bool ok = cd_v == cd_f && ecd_v == ecd_f;
                        mismatches += ok ? 0 : 1;
                        ++total;
                        points.push_back({{"n", n}, {"k", k}, {"r", r}, {"a", av},
                                          {"cd", cd_v}, {"cd_closed", cd_f},
                                          {"ecd", ecd_v}, {"ecd_closed", ecd_f},
                                          {"verdict", ok ? "matches" : "mismatch"}});
                    }
                }
        rep.emit(json::object(), params,
                 {{"points", points}, {"total", total}, {"mismatches", mismatches},
                  {"verdict", mismatches ? "mismatch" : "all-match"}});
        return 0;
    }
    if (check == "conjecture") {
        ConjectureGrid cg;
        json params;
        if (!a.grid.empty()) {
            auto grid = parse_grid(a.grid);
            cg.n = {grid["n"].lo, grid["n"].hi};
            cg.k = {grid["k"].lo, grid["k"].hi};
            cg.r = {grid["r"].lo, grid["r"].hi};
            if (grid.count("a"))
                cg.a = IntRange{grid["a"].lo, grid["a"].hi};
            params["grid"] = a.grid;
        } else {
            if (!a.n || !a.k)
                throw InputError("conjecture needs --grid or --n and --k");
            cg.n = {*a.n, *a.n};
            cg.k = {*a.k, *a.k};
            cg.r = {a.r, a.r};
            if (!a.A.empty()) {
                auto ar = parse_range(a.A, "--A");
                cg.a = IntRange{ar.lo, ar.hi};
            } else {
                cg.a = IntRange{2 * *a.k - 1, a.r * *a.k - 1};
            }
            params = {{"n", *a.n}, {"k", *a.k}, {"r", a.r}, {"A", cg.a ? json{cg.a->lo, cg.a->hi} : json()}};
        }
        cg.max_kg_vertices = a.max_points_vertices;
        cg.node_budget = g.node_budget;
        params["max_point_vertices"] = cg.max_kg_vertices;
        auto pts = explore_conjecture(cg);
        int matches = 0, counter = 0, skipped = 0;
        json lines = json::array();
        for (const auto& pt : pts) {
            json j = {{"n", pt.n}, {"k", pt.k}, {"r", pt.r}, {"a", pt.a},
                      {"verdict", to_string(pt.verdict)}, {"conjectured", pt.conjectured},
                      {"kneser_vertices", pt.kg_vertices}, {"nodes", pt.nodes}};
            if (pt.chi)
                j["chi"] = *pt.chi;
            if (!pt.reason.empty())
                j["reason"] = pt.reason;
            if (pt.verdict == Verdict::counterexample)
                j["instance"] = io::to_json(hnka(HnkaParams::prefix(pt.n, pt.k, pt.r, pt.a)));
            matches += pt.verdict == Verdict::matches;
            counter += pt.verdict == Verdict::counterexample;
            skipped += pt.verdict == Verdict::skipped;
            lines.push_back(j);
        }
        json summary = {{"points", pts.size()}, {"matches", matches}, {"counterexamples", counter},
                        {"skipped", skipped}};
        if (rep.common().format == "json") {
            // One grid point per line, then the report envelope on the last line.
            for (const auto& j : lines)
                std::cout << j.dump() << '\n';
            json env = rep.envelope(json::object(), params, "ok");
            env["result"] = summary;
            std::cout << env.dump() << '\n';
        } else {
            std::cout << "   n   k   r  |A|  conj   chi  verdict\n";
            for (const auto& pt : pts) {
                char row[96];
                std::snprintf(row, sizeof row, "%4d%4d%4d%5d%6lld%6s  %s\n", pt.n, pt.k, pt.r, pt.a,
                              pt.conjectured, pt.chi ? std::to_string(*pt.chi).c_str() : "-",
                              to_string(pt.verdict));
                std::cout << row;
            }
            std::cout << "matches " << matches << ", counterexamples " << counter << ", skipped "
                      << skipped << '\n';
        }
        return 0;
    }
    throw InputError("unknown check '" + check + "'");
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app->add_option("--seed", c.seed, "Seed for randomized sampling");
    app->add_flag("--timing", c.timing, "Include wall-clock time (breaks byte-identical output)");
    app->add_option("--max-n", c.max_n, "Guard: ground vertex count for exact kernels");
    app->add_option("--max-alt-n", c.max_alt_n, "Guard: vertex count for alt^r");
    app->add_option("--max-removal-n", c.max_removal_n, "Guard: vertex count for 2^n enumerations");
    app->add_option("--max-kg-vertices", c.max_kg_vertices, "Guard: Kneser vertex count");
    app->add_option("--max-kg-edges", c.max_kg_edges, "Guard: Kneser edge count");
    app->add_option("--node-budget", c.node_budget, "Guard: search node budget");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on general Kneser hypergraphs"};
    app.require_subcommand(1);
    Common common;
    add_common(&app, common);
    app.fallthrough();

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a hypergraph from a named family");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("--out", gen.out, "Output .hg path (a .json sidecar is written next to it)");
    std::string family;
    const std::pair<const char*, const char*> families[] = {
        {"hnka", "H(n,k,A): k-subsets of [n] not contained in A"},
        {"kneser-nk", "All k-subsets of [n]"},
        {"multipartite", "Complete multipartite graph"},
        {"gbar", "r disjoint copies of a graph, joined completely"},
        {"s-stable", "s-stable k-subsets of [n]"},
        {"augmented", "A graph with m universal vertices added"},
    };
    for (const auto& [name, about] : families) {
        auto* f = gen_cmd->add_subcommand(name, about);
        f->callback([&family, name] { family = name; });
        if (std::string(name) == "hnka" || std::string(name) == "kneser-nk" || std::string(name) == "s-stable") {
            f->add_option("--n", gen.n)->required();
            f->add_option("--k", gen.k)->required();
        }
        if (std::string(name) == "hnka") {
            f->add_option("--r", gen.r, "Checked against n >= rk");
            f->add_option("--A", gen.A, "Comma list of vertices in A");
            f->add_flag("--relaxed", gen.relaxed, "Allow n < rk (cross-checks only)");
        }
        if (std::string(name) == "multipartite")
            f->add_option("--sizes", gen.sizes, "Comma list of part sizes")->required();
        if (std::string(name) == "gbar" || std::string(name) == "augmented")
            f->add_option("--graph", gen.graph, "Input graph file")->required();
        if (std::string(name) == "gbar")
            f->add_option("--r", gen.r)->required();
        if (std::string(name) == "s-stable")
            f->add_option("--s", gen.s)->required();
        if (std::string(name) == "augmented")
            f->add_option("--m", gen.m, "Number of universal vertices")->required();
        f->add_option("--out", gen.out, "Output .hg path (a .json sidecar is written next to it)");
    }

    ComputeArgs comp;
    auto* comp_cmd = app.add_subcommand("compute", "Compute a parameter of an input hypergraph");
    comp_cmd->require_subcommand(1);
    std::string metric;
    const std::pair<const char*, const char*> metrics[] = {
        {"cd", "s-disjoint r-colorability defect"},
        {"ecd", "Equitable s-disjoint r-colorability defect"},
        {"alt", "r-alternation number"},
        {"chi", "Exact chromatic number"},
        {"bounds", "Lower bounds on chi(KG^r_s) from cd, ecd and alt"},
        {"kneser", "Build KG^r_s"},
        {"kriz", "The reduction hypergraph T_{H,C,r}"},
    };
    for (const auto& [name, about] : metrics) {
        auto* m = comp_cmd->add_subcommand(name, about);
        m->callback([&metric, name] { metric = name; });
        m->add_option("input", comp.input, "Hypergraph file (.hg or JSON)")->required();
        m->add_option("--r", comp.r);
        const std::string nm = name;
        if (nm != "alt" && nm != "kriz")
            m->add_option("--s", comp.s, "s-vector: comma list or k^n");
        if (nm == "alt")
            m->add_option("--sigma", comp.sigma, "Fixed ordering (comma list); default minimizes over all");
        if (nm == "chi") {
            m->add_option("--limit", comp.limit, "Largest palette tried");
            m->add_flag("--as-kneser", comp.as_kneser, "Color KG^r_s of the input instead");
        }
        if (nm == "kneser") {
            m->add_flag("--map", comp.map, "Include the vertex to ground-edge table");
            m->add_option("--out", comp.out, "Write the K-format file here");
        }
        if (nm == "kriz") {
            m->add_option("--C", comp.C)->required();
            m->add_flag("--full-edges", comp.full_edges, "List every edge, not only minimal ones");
        }
    }

    CheckArgs chk;
    auto* chk_cmd = app.add_subcommand("check", "Run a consistency check");
    chk_cmd->require_subcommand(1);
    std::string check;
    const std::pair<const char*, const char*> checks[] = {
        {"colorful", "Colorful witnesses in sampled proper colorings of KG^p_s"},
        {"lemma1", "ecd^{r'r''}_s(H) <= r''(r'-1)C + ecd^{r''}_s(T)"},
        {"gbar-identity", "ecd^r(Gbar) = r(|V(G)| - alpha(G))"},
        {"formulas", "H(n,k,A) closed forms against enumeration"},
        {"conjecture", "chi(KG^r(H(n,k,A))) against its conjectured value"},
    };
    for (const auto& [name, about] : checks) {
        auto* c = chk_cmd->add_subcommand(name, about);
        c->callback([&check, name] { check = name; });
        const std::string nm = name;
        if (nm == "colorful" || nm == "lemma1" || nm == "gbar-identity")
            c->add_option("input", chk.input, "Hypergraph file (.hg or JSON)")->required();
        if (nm == "colorful") {
            c->add_option("--p", chk.p, "Prime number of parts");
            c->add_option("--s", chk.s);
            c->add_option("--colors", chk.colors, "random:N proper colorings");
        }
        if (nm == "lemma1") {
            c->add_option("--r1", chk.r1, "r'");
            c->add_option("--r2", chk.r2, "r''");
            c->add_option("--s", chk.s);
            c->add_option("--C", chk.C, "Default: 1, 2 and 3");
            c->add_flag("--reduction", chk.reduction, "Also derive and verify the reduction coloring");
        }
        if (nm == "gbar-identity" || nm == "conjecture")
            c->add_option("--r", chk.r);
        if (nm == "formulas" || nm == "conjecture")
            c->add_option("--grid", chk.grid, "e.g. n=4..9,k=2..3,r=2..3[,a=0..3]");
        if (nm == "conjecture") {
            c->add_option("--n", chk.n);
            c->add_option("--k", chk.k);
            c->add_option("--A", chk.A, "|A| or a range lo..hi");
            c->add_option("--max-point-vertices", chk.max_points_vertices,
                          "Skip points whose Kneser graph has more vertices");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    try {
        if (gen_cmd->parsed()) {
            command = "gen " + family;
            Reporter rep(common, command);
            run_gen(family, gen, rep);
            return 0;
        }
        if (comp_cmd->parsed()) {
            command = "compute " + metric;
            Reporter rep(common, command);
            run_compute(metric, comp, rep);
            return 0;
        }
        command = "check " + check;
        Reporter rep(common, command);
        return run_check(check, chk, rep);
    } catch (const ResourceError& e) {
        std::cerr << "kgh: guard: " << e.what() << '\n';
        if (common.format == "json")
            std::cout << json{{"schema", 1}, {"tool", "kgh"}, {"version", kVersion}, {"command", command},
                              {"status", "guard"}, {"error", e.what()}}
                             .dump(2)
                      << '\n';
        return 3;
    } catch (const InternalInconsistency& e) {
        std::cerr << "kgh: internal inconsistency: " << e.what() << '\n';
        return 4;
    } catch (const InputError& e) {
        std::cerr << "kgh: " << e.what() << '\n';
        return 2;
    } catch (const UncolorableError& e) {
        std::cerr << "kgh: " << e.what() << '\n';
        return 2;
    }
}
