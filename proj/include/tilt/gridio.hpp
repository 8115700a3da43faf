#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilt/dynamics.hpp"
#include "tilt/geometry.hpp"

namespace tilt {

struct GridDocument {
    Polyomino P;
    Config C;
    Config targets;
    std::vector<std::pair<std::string, std::string>> meta;

    const std::string* get(const std::string& key) const;
    void set(const std::string& key, const std::string& value);
};

// '#' free, 'o' occupied, 'X' target, '@' occupied target, '.' or ' ' outside.
// The top line holds the highest y; the bottom line is y = 0 unless an origin is given.
GridDocument parse_grid(const std::string& text);
std::string render_ascii(const Polyomino& P, const Config& C = {}, const Config& targets = {});
std::string render_document(const GridDocument& doc);
std::string render_svg(const GridDocument& doc, int cell = 16);

std::vector<Pixel> parse_pixel_list(const std::string& s);
std::string format_pixel_list(const std::vector<Pixel>& px);
Pixel parse_pixel(const std::string& s);

}  // namespace tilt
