#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kgh/errors.hpp"
#include "kgh/hypergraph.hpp"

namespace kgh {

/// Flat coloring problem: vertices 0..vertex_count-1, each edge a sorted list of
/// distinct vertices. Multiset edges are reduced to their support before landing here.
struct ColoringInstance {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;

    static ColoringInstance from(const Hypergraph& h) {
        ColoringInstance inst;
        inst.vertex_count = h.n();
        inst.edges.reserve(h.edge_count());
        for (VertexSet e : h.edges()) {
            std::vector<int> members;
            for (int v : e)
                members.push_back(v - 1);
            inst.edges.push_back(std::move(members));
        }
        return inst;
    }

    bool has_singleton_edge() const {
        return std::any_of(edges.begin(), edges.end(),
                           [](const auto& e) { return e.size() <= 1; });
    }
};

inline bool is_proper(const ColoringInstance& inst, const Coloring& c) {
    if (c.size() != static_cast<std::size_t>(inst.vertex_count))
        throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, expected " +
                         std::to_string(inst.vertex_count));
    for (const auto& e : inst.edges) {
        const int first = c[static_cast<std::size_t>(e.front())];
        if (std::all_of(e.begin(), e.end(),
                        [&](int v) { return c[static_cast<std::size_t>(v)] == first; }))
            return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::vector<int>> incidence(const ColoringInstance& inst) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(inst.vertex_count));
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        for (int v : inst.edges[e]) {
            if (v < 0 || v >= inst.vertex_count)
                throw InputError("edge mentions vertex " + std::to_string(v) + " out of range");
            inc[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
        }
    return inc;
}

/// Relabels colors by first appearance in vertex order.
inline std::vector<int> normalize_colors(const std::vector<int>& colors) {
    std::vector<int> map(colors.size() + 1, 0);
    std::vector<int> out(colors.size());
    int next = 0;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        int& m = map[static_cast<std::size_t>(colors[v])];
        if (m == 0)
            m = ++next;
        out[v] = m;
    }
    return out;
}

/// Backtracking k-colorability search with forward checking.
///
/// Per edge the search tracks how many members are still uncolored and whether
/// the colored ones share a single color (`mono`: 0 none colored, c > 0 all c,
/// -1 mixed). An edge with one uncolored member and mono = c forbids c for that
/// member. Branching picks the uncolored vertex with the most forbidden colors,
/// then the most still-monochromatic incident edges, then the smallest index.
class KColorSearch {
public:
    KColorSearch(const ColoringInstance& inst, int k, std::uint64_t node_budget)
        : inst_(inst), k_(k), budget_(node_budget), inc_(incidence(inst)),
          color_(static_cast<std::size_t>(inst.vertex_count), 0),
          uncolored_(inst.edges.size()), mono_(inst.edges.size(), 0),
          forbid_count_(static_cast<std::size_t>(inst.vertex_count) *
                            static_cast<std::size_t>(k + 1),
                        0),
          forbid_mask_(static_cast<std::size_t>(inst.vertex_count), 0),
          live_edges_(static_cast<std::size_t>(inst.vertex_count), 0) {
        if (k < 1 || k > 62)
            throw ResourceError("palette size " + std::to_string(k) + " outside 1..62");
        for (std::size_t e = 0; e < inst.edges.size(); ++e) {
            uncolored_[e] = static_cast<int>(inst.edges[e].size());
            for (int v : inst.edges[e])
                ++live_edges_[static_cast<std::size_t>(v)];
        }
    }

    enum class Outcome { colorable, not_colorable, budget_exhausted };

    Outcome run() {
        int r = search(0, 0);
        if (r == 1)
            return Outcome::colorable;
        return r == 0 ? Outcome::not_colorable : Outcome::budget_exhausted;
    }

    const std::vector<int>& solution() const { return solution_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct TrailEntry {
        int edge;
        int uncolored;
        int mono;
    };

    int uncolored_member(int e) const {
        for (int w : inst_.edges[static_cast<std::size_t>(e)])
            if (color_[static_cast<std::size_t>(w)] == 0)
                return w;
        return -1;
    }

    void contribute(int e, int sign) {
        const auto ue = static_cast<std::size_t>(e);
        if (mono_[ue] >= 0)
            for (int w : inst_.edges[ue])
                live_edges_[static_cast<std::size_t>(w)] += sign;
        if (uncolored_[ue] == 1 && mono_[ue] > 0) {
            const int u = uncolored_member(e);
            int& cnt = forbid_count_[static_cast<std::size_t>(u) * static_cast<std::size_t>(k_ + 1) +
                                     static_cast<std::size_t>(mono_[ue])];
            const std::uint64_t bit = std::uint64_t{1} << mono_[ue];
            cnt += sign;
            if (cnt == 0)
                forbid_mask_[static_cast<std::size_t>(u)] &= ~bit;
            else
                forbid_mask_[static_cast<std::size_t>(u)] |= bit;
        }
    }

    void assign(int v, int c) {
        const auto& inc = inc_[static_cast<std::size_t>(v)];
        for (int e : inc)
            contribute(e, -1);
        color_[static_cast<std::size_t>(v)] = c;
        for (int e : inc) {
            const auto ue = static_cast<std::size_t>(e);
            trail_.push_back({e, uncolored_[ue], mono_[ue]});
            --uncolored_[ue];
            if (mono_[ue] == 0)
                mono_[ue] = c;
            else if (mono_[ue] != c)
                mono_[ue] = -1;
        }
        for (int e : inc)
            contribute(e, +1);
    }

    void unassign(int v) {
        const auto& inc = inc_[static_cast<std::size_t>(v)];
        for (int e : inc)
            contribute(e, -1);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            TrailEntry t = trail_.back();
            trail_.pop_back();
            uncolored_[static_cast<std::size_t>(t.edge)] = t.uncolored;
            mono_[static_cast<std::size_t>(t.edge)] = t.mono;
        }
        color_[static_cast<std::size_t>(v)] = 0;
        for (int e : inc)
            contribute(e, +1);
    }

    // 1 found, 0 exhausted, -1 budget
    int search(int colored, int used) {
        if (++nodes_ > budget_)
            return -1;
        if (colored == inst_.vertex_count) {
            solution_ = color_;
            return 1;
        }
        const std::uint64_t palette = ((std::uint64_t{1} << (k_ + 1)) - 1) & ~std::uint64_t{1};
        int best = -1;
        int best_forbidden = -1;
        int best_live = -1;
        for (int v = 0; v < inst_.vertex_count; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0)
                continue;
            const int f = std::popcount(forbid_mask_[static_cast<std::size_t>(v)] & palette);
            const int live = live_edges_[static_cast<std::size_t>(v)];
            if (f > best_forbidden || (f == best_forbidden && live > best_live)) {
                best = v;
                best_forbidden = f;
                best_live = live;
            }
        }
        if (best_forbidden == k_)
            return 0;
        const int top = std::min(used + 1, k_);
        for (int c = 1; c <= top; ++c) {
            if ((forbid_mask_[static_cast<std::size_t>(best)] >> c) & 1U)
                continue;
            assign(best, c);
            int r = search(colored + 1, std::max(used, c));
            unassign(best);
            if (r != 0)
                return r;
        }
        return 0;
    }

    const ColoringInstance& inst_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<int>> inc_;
    std::vector<int> color_;
    std::vector<int> uncolored_;
    std::vector<int> mono_;
    std::vector<int> forbid_count_;
    std::vector<std::uint64_t> forbid_mask_;
    std::vector<int> live_edges_;
    std::vector<TrailEntry> trail_;
    std::vector<int> solution_;
};

} // namespace detail

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

namespace detail {

/// Colors vertices in the given order; pick(blocked, used) chooses a color in
/// 1..used+1 whose entry in blocked is 0. Color used+1 is never blocked.
template <typename Pick>
Coloring sequential_coloring(const ColoringInstance& inst, const std::vector<int>& order, Pick&& pick) {
    if (inst.has_singleton_edge())
        throw UncolorableError("hypergraph has a singleton edge and admits no proper coloring");
    const auto inc = incidence(inst);
    std::vector<int> color(static_cast<std::size_t>(inst.vertex_count), 0);
    int used = 0;
    std::vector<char> blocked;
    for (int v : order) {
        blocked.assign(static_cast<std::size_t>(used) + 2, 0);
        for (int e : inc[static_cast<std::size_t>(v)]) {
            const auto& members = inst.edges[static_cast<std::size_t>(e)];
            int shared = -1;
            for (int w : members) {
                if (w == v)
                    continue;
                const int cw = color[static_cast<std::size_t>(w)];
                if (cw == 0 || (shared != -1 && cw != shared)) {
                    shared = 0;
                    break;
                }
                shared = cw;
            }
            if (shared > 0)
                blocked[static_cast<std::size_t>(shared)] = 1;
        }
        const int c = pick(blocked, used);
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c);
    }
    return Coloring(used, std::move(color));
}

} // namespace detail

/// First-fit in index order. Throws UncolorableError on a singleton edge.
inline Coloring greedy_coloring(const ColoringInstance& inst) {
    std::vector<int> order(static_cast<std::size_t>(inst.vertex_count));
    for (int v = 0; v < inst.vertex_count; ++v)
        order[static_cast<std::size_t>(v)] = v;
    return detail::sequential_coloring(inst, order, [](const std::vector<char>& blocked, int) {
        int c = 1;
        while (blocked[static_cast<std::size_t>(c)])
            ++c;
        return c;
    });
}

/// A random proper coloring: vertices in shuffled order, each taking a uniformly
/// chosen admissible color among 1..used+1. Draws only from rng() so the result
/// depends on the engine alone, not on library distribution details.
template <typename Engine>
Coloring random_proper_coloring(const ColoringInstance& inst, Engine& rng) {
    auto below = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    std::vector<int> order(static_cast<std::size_t>(inst.vertex_count));
    for (int v = 0; v < inst.vertex_count; ++v)
        order[static_cast<std::size_t>(v)] = v;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[below(i)]);
    return detail::sequential_coloring(inst, order, [&](const std::vector<char>& blocked, int used) {
        std::vector<int> free;
        for (int c = 1; c <= used + 1; ++c)
            if (!blocked[static_cast<std::size_t>(c)])
                free.push_back(c);
        return free[below(free.size())];
    });
}

inline int greedy_upper(const ColoringInstance& inst) { return greedy_coloring(inst).palette_size(); }
inline int greedy_upper(const Hypergraph& h) { return greedy_upper(ColoringInstance::from(h)); }

enum class SolveStatus { exact, limit_exceeded, budget_exhausted };

inline const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::exact: return "exact";
    case SolveStatus::limit_exceeded: return "limit";
    case SolveStatus::budget_exhausted: return "budget";
    }
    return "?";
}

struct ChromaticResult {
    SolveStatus status = SolveStatus::exact;
    /// chi when exact; otherwise the best proven lower bound.
    int value = 0;
    /// Palette size of the best known proper coloring.
    int upper = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

/// Exact chromatic number by k-colorability search for k = 1, 2, ... up to limit.
/// A vertex-free instance has chromatic number 0.
inline ChromaticResult chromatic_number(const ColoringInstance& inst, int limit,
                                        std::uint64_t node_budget = kDefaultNodeBudget) {
    if (limit < 1)
        throw InputError("limit must be positive");
    ChromaticResult result;
    Coloring greedy = greedy_coloring(inst);
    result.upper = greedy.palette_size();
    result.witness = greedy;
    if (inst.vertex_count == 0)
        return result;

    for (int k = 1; k < result.upper; ++k) {
        if (k > limit) {
            result.status = SolveStatus::limit_exceeded;
            result.value = k;
            return result;
        }
        detail::KColorSearch search(inst, k, node_budget - std::min(node_budget, result.nodes));
        auto outcome = search.run();
        result.nodes += search.nodes();
        if (outcome == detail::KColorSearch::Outcome::colorable) {
            result.value = k;
            result.upper = k;
            result.witness = Coloring(k, detail::normalize_colors(search.solution()));
            return result;
        }
        if (outcome == detail::KColorSearch::Outcome::budget_exhausted) {
            result.status = SolveStatus::budget_exhausted;
            result.value = k;
            return result;
        }
    }
    if (result.upper > limit) {
        result.status = SolveStatus::limit_exceeded;
        result.value = limit + 1;
        return result;
    }
    result.value = result.upper;
    result.witness = Coloring(result.upper, detail::normalize_colors(greedy.assignment()));
    return result;
}

inline ChromaticResult chromatic_number(const Hypergraph& h, int limit,
                                        std::uint64_t node_budget = kDefaultNodeBudget) {
    return chromatic_number(ColoringInstance::from(h), limit, node_budget);
}

/// Is there a proper coloring with at most k colors? Returns it if so.
inline std::optional<Coloring> find_k_coloring(const ColoringInstance& inst, int k,
                                               std::uint64_t node_budget = kDefaultNodeBudget) {
    if (inst.has_singleton_edge())
        throw UncolorableError("hypergraph has a singleton edge and admits no proper coloring");
    if (inst.vertex_count == 0)
        return Coloring(k, {});
    detail::KColorSearch search(inst, k, node_budget);
    auto outcome = search.run();
    if (outcome == detail::KColorSearch::Outcome::budget_exhausted)
        throw ResourceError("node budget exhausted in " + std::to_string(k) + "-coloring search");
    if (outcome == detail::KColorSearch::Outcome::not_colorable)
        return std::nullopt;
    return Coloring(k, search.solution());
}

} // namespace kgh
