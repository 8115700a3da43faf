#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilt {

enum class ErrorKind {
    DisconnectedPolyomino,
    EmptyPolyomino,
    IllegalCharacter,
    BudgetExceeded,
    PixelOutsidePolyomino,
    ConfigurationNotInPolyomino,
    InvalidBoundary,
    InvalidTallyShape,
    InvalidAlphabet,
    EmptyWordList,
    NotOddPrime,
    NotASimpleMaze,
    NotGatherable,
    NotARectangle,
    CardinalityMismatch,
    NotRepresentativeClosed,
    VerificationFailed,
    ParseError,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(error_name(k)) + ": " + msg), kind(k) {}
    ErrorKind kind;
};

struct Pixel {
    int x = 0;
    int y = 0;
    friend bool operator==(const Pixel&, const Pixel&) = default;
    friend std::strong_ordering operator<=>(const Pixel& a, const Pixel& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

enum class Dir : std::uint8_t { U = 0, D = 1, L = 2, R = 3 };
inline constexpr std::array<Dir, 4> kDirs{Dir::U, Dir::D, Dir::L, Dir::R};

inline int dx(Dir d) { return d == Dir::L ? -1 : d == Dir::R ? 1 : 0; }
inline int dy(Dir d) { return d == Dir::D ? -1 : d == Dir::U ? 1 : 0; }
inline Dir opposite(Dir d) {
    switch (d) {
        case Dir::U: return Dir::D;
        case Dir::D: return Dir::U;
        case Dir::L: return Dir::R;
        default: return Dir::L;
    }
}
inline bool horizontal(Dir d) { return d == Dir::L || d == Dir::R; }
inline bool perpendicular(Dir a, Dir b) { return horizontal(a) != horizontal(b); }
char dir_char(Dir d);
Dir dir_from_char(char c);
inline Pixel step_pixel(Pixel p, Dir d) { return {p.x + dx(d), p.y + dy(d)}; }

struct Loop {
    std::vector<Pixel> corners;  // lattice points, interior on the left
    std::vector<bool> convex;
};

struct Boundary {
    std::vector<Loop> loops;  // loops[0] is the outer loop
    int n = 0;
    int n_c = 0;
    int n_r() const { return n - n_c; }
    bool simple() const { return loops.size() == 1; }
    friend bool operator==(const Boundary& a, const Boundary& b) {
        if (a.loops.size() != b.loops.size()) return false;
        for (size_t i = 0; i < a.loops.size(); ++i)
            if (a.loops[i].corners != b.loops[i].corners) return false;
        return true;
    }
};

struct Segment {
    bool horizontal = true;
    std::vector<int> pixels;  // pixel indices, increasing coordinate
    int cornerEndpointCount = 0;
    int first() const { return pixels.front(); }
    int last() const { return pixels.back(); }
};

struct Classification {
    bool simple = false;
    bool thin = false;
    bool maze = false;
    bool rectangle = false;
};

inline constexpr long long kDefaultPixelBudget = 4'000'000;

// Dense polyomino; pixels are stored in (y,x) order and addressed by index.
class Polyomino {
public:
    Polyomino() = default;
    explicit Polyomino(std::vector<Pixel> pixels);

    int size() const { return static_cast<int>(pixels_.size()); }
    const std::vector<Pixel>& pixels() const { return pixels_; }
    const Pixel& pixel(int i) const { return pixels_[i]; }
    int index(Pixel p) const;
    bool contains(Pixel p) const { return index(p) >= 0; }
    int neighbor(int i, Dir d) const { return nb_[i][static_cast<int>(d)]; }
    int degree(int i) const;
    int slide(int i, Dir d) const { return ft_[i][static_cast<int>(d)]; }

    const std::vector<Segment>& segments() const { return segs_; }
    int row_segment(int i) const { return rowSeg_[i]; }
    int col_segment(int i) const { return colSeg_[i]; }
    int segment_of(int i, Dir d) const { return horizontal(d) ? rowSeg_[i] : colSeg_[i]; }

    const Boundary& boundary() const { return boundary_; }
    bool is_corner_pixel(int i) const { return cornerPixel_[i]; }
    std::vector<int> corner_pixels() const;

    int min_x() const { return minx_; }
    int min_y() const { return miny_; }
    int width() const { return w_; }
    int height() const { return h_; }

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.pixels_ == b.pixels_; }

private:
    std::vector<Pixel> pixels_;
    int minx_ = 0, miny_ = 0, w_ = 0, h_ = 0;
    std::vector<int> grid_;
    std::vector<std::array<int, 4>> nb_;
    std::vector<std::array<int, 4>> ft_;
    std::vector<Segment> segs_;
    std::vector<int> rowSeg_, colSeg_;
    std::vector<bool> cornerPixel_;
    Boundary boundary_;
};

Boundary extract_boundary(const std::vector<Pixel>& V);
Polyomino materialize(const Boundary& b, long long budget = kDefaultPixelBudget);
long long boundary_area(const Boundary& b);
void validate_boundary(const Boundary& b);
Classification classify(const Polyomino& P);
bool is_connected(const std::vector<Pixel>& V);

// Pixel inside the corner where the incoming and outgoing sides meet.
Pixel corner_pixel_at(const Loop& loop, size_t i);

// Axis-parallel ray shooting against the boundary, no dense pixel set needed.
class BoundaryIndex {
public:
    explicit BoundaryIndex(const Boundary& b);
    bool inside(Pixel p) const;
    Pixel project(Pixel p, Dir v) const;
    const Boundary& boundary() const { return b_; }

private:
    struct Lanes {
        std::vector<int> cuts;                  // sorted distinct coordinates
        std::vector<std::vector<int>> walls;    // per elementary interval, sorted positions
    };
    static Lanes build(const std::vector<std::array<int, 3>>& sides);
    static const std::vector<int>* lane(const Lanes& l, int c);
    Boundary b_;
    Lanes vert_;  // vertical sides, lanes along y, positions x
    Lanes horz_;  // horizontal sides, lanes along x, positions y
};

Pixel project(const Boundary& b, Pixel p, Dir v);

struct SignificantPixelSet {
    std::vector<Pixel> corners;
    std::vector<Pixel> helpers;  // helpers that are not also corners
    std::vector<Pixel> all;      // sorted union
    bool is_helper(Pixel p) const;
};

SignificantPixelSet significant_pixels(const Boundary& b);
SignificantPixelSet significant_pixels(const BoundaryIndex& bi);

std::string format_boundary(const Boundary& b);
Boundary parse_boundary(const std::string& text);

}  // namespace tilt
