#pragma once

#include <optional>
#include <string>

#include "tilt/automata.hpp"
#include "tilt/dynamics.hpp"
#include "tilt/geometry.hpp"
#include "tilt/oracle.hpp"

namespace tilt {

struct GatherResult {
    std::string sequence;
    Pixel target;
    Variant model = kFTMerge;
};

struct FullGatherStats {
    int helperIterations = 0;
    int xAfterHelpers = 0;
    int significant = 0;
    int convexCorners = 0;
};

std::optional<GatherResult> full_gathering(const Boundary& b, FullGatherStats* stats = nullptr,
                                           long long verifyBudget = 200000);
bool is_gatherable(const Boundary& b);
std::optional<GatherResult> gather_at_pixel(const Boundary& b, Pixel p);
std::optional<GatherResult> subset_gathering_exact(const Polyomino& P, const Config& C,
                                                   long long budget = kDefaultExploreBudget);
std::optional<GatherResult> para_gathering(const Polyomino& P, const Config& C, int maxLen);

struct ApproxInfo {
    int segmentR = -1;
    int d = 0;
    char finalMove = 0;
};

GatherResult approx_simple_maze(const Polyomino& P, ApproxInfo* info = nullptr);
GatherResult s1_gathering(const Polyomino& P);

bool verify_gathering(const Polyomino& P, const Config& C, const GatherResult& g);

}  // namespace tilt
