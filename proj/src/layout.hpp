#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tilt/geometry.hpp"

namespace tilt::detail {

// offset that moves the bounding box minimum to the origin
inline Pixel origin_shift(const std::vector<Pixel>& V) {
    Pixel m{V.at(0).x, V.at(0).y};
    for (auto& p : V) m = {std::min(m.x, p.x), std::min(m.y, p.y)};
    return m;
}

inline std::vector<Pixel> shifted(std::vector<Pixel> V, Pixel s) {
    for (auto& p : V) p = {p.x - s.x, p.y - s.y};
    return V;
}

inline void hline(std::set<Pixel>& V, int y, int x0, int x1) {
    for (int x = std::min(x0, x1); x <= std::max(x0, x1); ++x) V.insert({x, y});
}

inline void vline(std::set<Pixel>& V, int x, int y0, int y1) {
    for (int y = std::min(y0, y1); y <= std::max(y0, y1); ++y) V.insert({x, y});
}

}  // namespace tilt::detail
