#include "tilt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "tilt/geometry.hpp"

namespace tilt {

namespace {

struct ConfigHash {
    size_t operator()(const Config& c) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ c.size();
        for (int p : c) {
            h ^= static_cast<std::uint64_t>(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

[[noreturn]] void over_budget(long long budget) {
    throw Error(ErrorKind::BudgetExceeded, "configuration search visited more than " + std::to_string(budget) + " states");
}

}  // namespace

std::string ReachGraph::witness(int node) const {
    std::string w;
    for (int c = node; c >= 0 && parent[c] >= 0; c = parent[c]) w += dir_char(static_cast<Dir>(letter[c]));
    std::reverse(w.begin(), w.end());
    return w;
}

int ReachGraph::find(const Config& c) const {
    for (int i = 0; i < size(); ++i)
        if (configs[i] == c) return i;
    return -1;
}

bool includes(const Config& big, const Config& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

SearchResult search(const Polyomino& P, const Config& C, Variant m, long long budget, const Goal& goal) {
    SearchResult res;
    ReachGraph& g = res.graph;
    for (int p : C)
        if (p < 0 || p >= P.size()) throw Error(ErrorKind::ConfigurationNotInPolyomino, "bad pixel index");
    if (P.size() <= 64 && goal.mask) {
        MaskStepper ms(P);
        std::vector<std::uint64_t> nodes;
        std::unordered_map<std::uint64_t, int> seen;
        std::uint64_t s = MaskStepper::to_mask(C);
        nodes.push_back(s);
        seen.emplace(s, 0);
        g.parent.push_back(-1);
        g.letter.push_back(-1);
        g.depth.push_back(0);
        if (goal.mask(s)) res.goal = 0;
        for (size_t h = 0; h < nodes.size() && res.goal < 0; ++h) {
            for (Dir d : kDirs) {
                std::uint64_t t = ms.step(nodes[h], d, m);
                if (seen.emplace(t, static_cast<int>(nodes.size())).second) {
                    nodes.push_back(t);
                    g.parent.push_back(static_cast<int>(h));
                    g.letter.push_back(static_cast<int>(d));
                    g.depth.push_back(g.depth[h] + 1);
                    if (goal.mask(t)) {
                        res.goal = static_cast<int>(nodes.size()) - 1;
                        break;
                    }
                    if (static_cast<long long>(nodes.size()) > budget) over_budget(budget);
                }
            }
        }
        g.configs.reserve(nodes.size());
        for (auto x : nodes) g.configs.push_back(MaskStepper::from_mask(x));
        return res;
    }
    std::unordered_map<Config, int, ConfigHash> seen;
    g.configs.push_back(C);
    seen.emplace(C, 0);
    g.parent.push_back(-1);
    g.letter.push_back(-1);
    g.depth.push_back(0);
    if (goal.config && goal.config(C)) res.goal = 0;
    for (size_t h = 0; h < g.configs.size() && res.goal < 0; ++h) {
        for (Dir d : kDirs) {
            Config t = step(P, g.configs[h], d, m);
            if (seen.count(t)) continue;
            seen.emplace(t, static_cast<int>(g.configs.size()));
            g.configs.push_back(std::move(t));
            g.parent.push_back(static_cast<int>(h));
            g.letter.push_back(static_cast<int>(d));
            g.depth.push_back(g.depth[h] + 1);
            if (goal.config && goal.config(g.configs.back())) {
                res.goal = g.size() - 1;
                break;
            }
            if (static_cast<long long>(g.configs.size()) > budget) over_budget(budget);
        }
    }
    return res;
}

ReachGraph explore(const Polyomino& P, const Config& C, Variant m, long long budget) {
    Goal none{[](const Config&) { return false; }, [](std::uint64_t) { return false; }};
    return search(P, C, m, budget, none).graph;
}

long long count_reachable(const Polyomino& P, const Config& C, Variant m, long long budget) {
    if (P.size() <= 64) {
        MaskStepper ms(P);
        std::vector<std::uint64_t> nodes{MaskStepper::to_mask(C)};
        std::unordered_set<std::uint64_t> seen{nodes[0]};
        for (size_t h = 0; h < nodes.size(); ++h)
            for (Dir d : kDirs) {
                std::uint64_t t = ms.step(nodes[h], d, m);
                if (seen.insert(t).second) {
                    nodes.push_back(t);
                    if (static_cast<long long>(nodes.size()) > budget) over_budget(budget);
                }
            }
        return static_cast<long long>(nodes.size());
    }
    return explore(P, C, m, budget).size();
}

std::optional<SgsResult> sgs_exact(const Polyomino& P, const Config& C, long long budget) {
    if (C.empty()) throw Error(ErrorKind::ConfigurationNotInPolyomino, "configuration must be nonempty");
    Goal g{[](const Config& c) { return c.size() == 1; }, [](std::uint64_t x) { return std::popcount(x) == 1; }};
    auto r = search(P, C, kFTMerge, budget, g);
    if (r.goal < 0) return std::nullopt;
    SgsResult s;
    s.word = r.graph.witness(r.goal);
    s.length = static_cast<int>(s.word.size());
    return s;
}

bool occupancy(const Polyomino& P, const Config& C, int p, Variant m, long long budget, std::string* witness) {
    if (p < 0 || p >= P.size()) throw Error(ErrorKind::PixelOutsidePolyomino, "probe outside polyomino");
    Goal g{[p](const Config& c) { return std::binary_search(c.begin(), c.end(), p); },
           [p](std::uint64_t x) { return (x >> p) & 1; }};
    auto r = search(P, C, m, budget, g);
    if (r.goal >= 0 && witness) *witness = r.graph.witness(r.goal);
    return r.goal >= 0;
}

std::optional<std::string> shape_reconfiguration(const Polyomino& P, const Config& C, const Config& target, Variant m,
                                                 long long budget) {
    if (m.merge == Merge::Blocking && C.size() != target.size())
        throw Error(ErrorKind::CardinalityMismatch, "blocking moves preserve the particle count");
    std::uint64_t tm = P.size() <= 64 ? MaskStepper::to_mask(target) : 0;
    Goal g{[&target](const Config& c) { return c == target; }, [tm](std::uint64_t x) { return x == tm; }};
    auto r = search(P, C, m, budget, g);
    if (r.goal < 0) return std::nullopt;
    return r.graph.witness(r.goal);
}

std::optional<std::string> tilt_cover(const Polyomino& P, const Config& C, const Config& S, Variant m,
                                      long long budget) {
    std::uint64_t sm = P.size() <= 64 ? MaskStepper::to_mask(S) : 0;
    Goal g{[&S](const Config& c) { return includes(c, S); }, [sm](std::uint64_t x) { return (x & sm) == sm; }};
    auto r = search(P, C, m, budget, g);
    if (r.goal < 0) return std::nullopt;
    return r.graph.witness(r.goal);
}

std::optional<long long> tilt_cover_deterministic(const Polyomino& P, const Config& C, const Config& S,
                                                  const std::string& cycle, Variant m, long long maxReps) {
    if (cycle.empty()) throw Error(ErrorKind::ParseError, "cycle must be nonempty");
    std::unordered_set<Config, ConfigHash> seen;
    Config cur = C;
    for (long long l = 0; l <= maxReps; ++l) {
        if (includes(cur, S)) return l;
        if (!seen.insert(cur).second) return std::nullopt;
        cur = apply(P, cur, cycle, m);
    }
    return std::nullopt;
}

long long rectangle_census(const Polyomino& P, const Config& C, long long budget) {
    if (!classify(P).rectangle) throw Error(ErrorKind::NotARectangle, "census requires a rectangle");
    return count_reachable(P, C, kFTBlock, budget);
}

}  // namespace tilt
