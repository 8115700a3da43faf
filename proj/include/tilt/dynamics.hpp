#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilt/geometry.hpp"

namespace tilt {

enum class Model { FT, S1 };
enum class Merge { Blocking, Merging };

struct Variant {
    Model model = Model::FT;
    Merge merge = Merge::Merging;
    friend bool operator==(const Variant&, const Variant&) = default;
};

inline constexpr Variant kFTMerge{Model::FT, Merge::Merging};
inline constexpr Variant kFTBlock{Model::FT, Merge::Blocking};
inline constexpr Variant kS1Merge{Model::S1, Merge::Merging};
inline constexpr Variant kS1Block{Model::S1, Merge::Blocking};

std::string variant_name(Variant v);

// Sorted pixel indices of a Polyomino.
using Config = std::vector<int>;

Config make_config(const Polyomino& P, const std::vector<Pixel>& pixels);
std::vector<Pixel> config_pixels(const Polyomino& P, const Config& C);
Config full_config(const Polyomino& P);

Config step(const Polyomino& P, const Config& C, Dir v, Variant m);
Config apply(const Polyomino& P, Config C, const std::string& w, Variant m);

int singleton_move(const Polyomino& P, int p, Dir v, Model model);
Pixel singleton_move(const Polyomino& P, Pixel p, Dir v, Model model);
int singleton_apply(const Polyomino& P, int p, const std::string& w, Model model);

std::string normalize(const std::string& w);
std::string repeat(const std::string& w, int times);

// Word-sized configurations for polyominoes with at most 64 pixels.
class MaskStepper {
public:
    explicit MaskStepper(const Polyomino& P);
    std::uint64_t step(std::uint64_t c, Dir v, Variant m) const;
    static std::uint64_t to_mask(const Config& C);
    static Config from_mask(std::uint64_t c);

private:
    const Polyomino* P_;
    struct Seg {
        std::uint64_t mask = 0;
        std::vector<int> order;  // pixel indices, ascending coordinate
        std::vector<std::uint64_t> lowPrefix, highPrefix;
    };
    std::vector<Seg> rows_, cols_;
};

}  // namespace tilt
