#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tilt/dynamics.hpp"

namespace tilt {

inline constexpr long long kDefaultExploreBudget = 1LL << 22;
inline constexpr long long kDefaultCycleBudget = 100000;

struct ReachGraph {
    std::vector<Config> configs;  // BFS order; configs[0] is the start
    std::vector<int> parent;
    std::vector<int> letter;      // Dir as int, -1 for the root
    std::vector<int> depth;
    int size() const { return static_cast<int>(configs.size()); }
    std::string witness(int node) const;
    int find(const Config& c) const;
};

struct Goal {
    std::function<bool(const Config&)> config;
    std::function<bool(std::uint64_t)> mask;  // optional fast path for N <= 64
};

struct SearchResult {
    ReachGraph graph;
    int goal = -1;
};

// BFS over configurations; stops at the first configuration satisfying the goal.
SearchResult search(const Polyomino& P, const Config& C, Variant m, long long budget, const Goal& goal);
ReachGraph explore(const Polyomino& P, const Config& C, Variant m, long long budget = kDefaultExploreBudget);
long long count_reachable(const Polyomino& P, const Config& C, Variant m, long long budget = kDefaultExploreBudget);

struct SgsResult {
    int length = 0;
    std::string word;
};

std::optional<SgsResult> sgs_exact(const Polyomino& P, const Config& C, long long budget = kDefaultExploreBudget);
bool occupancy(const Polyomino& P, const Config& C, int p, Variant m, long long budget = kDefaultExploreBudget,
               std::string* witness = nullptr);
std::optional<std::string> shape_reconfiguration(const Polyomino& P, const Config& C, const Config& target, Variant m,
                                                 long long budget = kDefaultExploreBudget);
std::optional<std::string> tilt_cover(const Polyomino& P, const Config& C, const Config& S, Variant m,
                                      long long budget = kDefaultExploreBudget);
std::optional<long long> tilt_cover_deterministic(const Polyomino& P, const Config& C, const Config& S,
                                                  const std::string& cycle, Variant m,
                                                  long long maxReps = kDefaultCycleBudget);
long long rectangle_census(const Polyomino& P, const Config& C, long long budget = kDefaultExploreBudget);

bool includes(const Config& big, const Config& small);

}  // namespace tilt
