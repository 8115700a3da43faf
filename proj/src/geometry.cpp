#include "tilt/geometry.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tilt {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DisconnectedPolyomino: return "DisconnectedPolyomino";
        case ErrorKind::EmptyPolyomino: return "EmptyPolyomino";
        case ErrorKind::IllegalCharacter: return "IllegalCharacter";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::PixelOutsidePolyomino: return "PixelOutsidePolyomino";
        case ErrorKind::ConfigurationNotInPolyomino: return "ConfigurationNotInPolyomino";
        case ErrorKind::InvalidBoundary: return "InvalidBoundary";
        case ErrorKind::InvalidTallyShape: return "InvalidTallyShape";
        case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
        case ErrorKind::EmptyWordList: return "EmptyWordList";
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::NotASimpleMaze: return "NotASimpleMaze";
        case ErrorKind::NotGatherable: return "NotGatherable";
        case ErrorKind::NotARectangle: return "NotARectangle";
        case ErrorKind::CardinalityMismatch: return "CardinalityMismatch";
        case ErrorKind::NotRepresentativeClosed: return "NotRepresentativeClosed";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

char dir_char(Dir d) {
    static const char c[] = {'U', 'D', 'L', 'R'};
    return c[static_cast<int>(d)];
}

Dir dir_from_char(char c) {
    switch (c) {
        case 'U': case 'u': return Dir::U;
        case 'D': case 'd': return Dir::D;
        case 'L': case 'l': return Dir::L;
        case 'R': case 'r': return Dir::R;
    }
    throw Error(ErrorKind::ParseError, std::string("bad direction '") + c + "'");
}

namespace {

Dir left_of(Dir d) {
    switch (d) {
        case Dir::R: return Dir::U;
        case Dir::U: return Dir::L;
        case Dir::L: return Dir::D;
        default: return Dir::R;
    }
}
Dir right_of(Dir d) { return opposite(left_of(d)); }

Dir dir_between(Pixel a, Pixel b) {
    if (b.x > a.x) return Dir::R;
    if (b.x < a.x) return Dir::L;
    if (b.y > a.y) return Dir::U;
    return Dir::D;
}

// pixel in the quadrant at lattice point v selected by one horizontal and one vertical direction
Pixel quadrant(Pixel v, Dir a, Dir b) {
    Dir h = horizontal(a) ? a : b;
    Dir vv = horizontal(a) ? b : a;
    return {v.x + (h == Dir::L ? -1 : 0), v.y + (vv == Dir::D ? -1 : 0)};
}

struct PixelHash {
    size_t operator()(const Pixel& p) const noexcept {
        return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^ static_cast<unsigned>(p.y));
    }
};

long long loop_area2(const Loop& l) {
    long long a = 0;
    size_t n = l.corners.size();
    for (size_t i = 0; i < n; ++i) {
        const Pixel& p = l.corners[i];
        const Pixel& q = l.corners[(i + 1) % n];
        a += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
    }
    return a;
}

void finish_loop(Loop& l) {
    size_t n = l.corners.size();
    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (l.corners[i] < l.corners[best]) best = i;
    std::rotate(l.corners.begin(), l.corners.begin() + best, l.corners.end());
    l.convex.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        Dir din = dir_between(l.corners[(i + n - 1) % n], l.corners[i]);
        Dir dout = dir_between(l.corners[i], l.corners[(i + 1) % n]);
        l.convex[i] = (dout == left_of(din));
    }
}

void count_corners(Boundary& b) {
    b.n = 0;
    b.n_c = 0;
    for (auto& l : b.loops) {
        b.n += static_cast<int>(l.corners.size());
        for (bool c : l.convex) b.n_c += c;
    }
}

}  // namespace

bool is_connected(const std::vector<Pixel>& V) {
    if (V.empty()) return false;
    std::unordered_set<Pixel, PixelHash> all(V.begin(), V.end()), seen;
    std::vector<Pixel> stack{V.front()};
    seen.insert(V.front());
    while (!stack.empty()) {
        Pixel p = stack.back();
        stack.pop_back();
        for (Dir d : kDirs) {
            Pixel q = step_pixel(p, d);
            if (all.count(q) && seen.insert(q).second) stack.push_back(q);
        }
    }
    return seen.size() == all.size();
}

Boundary extract_boundary(const std::vector<Pixel>& V) {
    if (V.empty()) throw Error(ErrorKind::EmptyPolyomino, "no pixels");
    std::unordered_set<Pixel, PixelHash> in(V.begin(), V.end());
    // unit edges with the interior on the left
    std::map<Pixel, std::vector<Dir>> out;
    for (const Pixel& p : in) {
        if (!in.count({p.x, p.y - 1})) out[{p.x, p.y}].push_back(Dir::R);
        if (!in.count({p.x + 1, p.y})) out[{p.x + 1, p.y}].push_back(Dir::U);
        if (!in.count({p.x, p.y + 1})) out[{p.x + 1, p.y + 1}].push_back(Dir::L);
        if (!in.count({p.x - 1, p.y})) out[{p.x, p.y + 1}].push_back(Dir::D);
    }
    Boundary b;
    std::vector<Loop> loops;
    while (true) {
        auto it = std::find_if(out.begin(), out.end(), [](auto& kv) { return !kv.second.empty(); });
        if (it == out.end()) break;
        Pixel start = it->first;
        Dir d = it->second.front();
        it->second.erase(it->second.begin());
        std::vector<Pixel> pts{start};
        Pixel cur = step_pixel(start, d);
        Dir prev = d;
        while (true) {
            auto& cand = out[cur];
            bool closed = false;
            Dir pick = prev;
            bool found = false;
            for (Dir pref : {left_of(prev), prev, right_of(prev)}) {
                if (cur == start && pref == d) {
                    closed = true;
                    break;
                }
                auto f = std::find(cand.begin(), cand.end(), pref);
                if (f != cand.end()) {
                    pick = *f;
                    cand.erase(f);
                    found = true;
                    break;
                }
            }
            if (closed) break;
            if (!found) throw Error(ErrorKind::InvalidBoundary, "boundary trace failed");
            if (pick != prev) pts.push_back(cur);
            cur = step_pixel(cur, pick);
            prev = pick;
        }
        // closing vertex: start is a corner iff the direction changes there
        Loop l;
        if (prev == d) pts.erase(pts.begin());
        l.corners = std::move(pts);
        finish_loop(l);
        loops.push_back(std::move(l));
    }
    std::stable_sort(loops.begin(), loops.end(), [](const Loop& a, const Loop& c) {
        bool oa = loop_area2(a) > 0, oc = loop_area2(c) > 0;
        if (oa != oc) return oa;
        return a.corners.front() < c.corners.front();
    });
    b.loops = std::move(loops);
    count_corners(b);
    return b;
}

Pixel corner_pixel_at(const Loop& l, size_t i) {
    size_t n = l.corners.size();
    Dir din = dir_between(l.corners[(i + n - 1) % n], l.corners[i]);
    return quadrant(l.corners[i], opposite(din), left_of(din));
}

void validate_boundary(const Boundary& b) {
    if (b.loops.empty()) throw Error(ErrorKind::InvalidBoundary, "no loops");
    for (const auto& l : b.loops) {
        size_t n = l.corners.size();
        if (n < 4 || n % 2) throw Error(ErrorKind::InvalidBoundary, "loop corner count must be even and >= 4");
        for (size_t i = 0; i < n; ++i) {
            const Pixel& p = l.corners[i];
            const Pixel& q = l.corners[(i + 1) % n];
            if ((p.x == q.x) == (p.y == q.y))
                throw Error(ErrorKind::InvalidBoundary, "consecutive corners must differ in exactly one coordinate");
        }
    }
    if (loop_area2(b.loops[0]) <= 0) throw Error(ErrorKind::InvalidBoundary, "outer loop must be counterclockwise");
    for (size_t i = 1; i < b.loops.size(); ++i)
        if (loop_area2(b.loops[i]) >= 0) throw Error(ErrorKind::InvalidBoundary, "hole loops must be clockwise");
}

long long boundary_area(const Boundary& b) {
    long long a = 0;
    for (const auto& l : b.loops) a += loop_area2(l);
    return a / 2;
}

// ---- BoundaryIndex ----

BoundaryIndex::Lanes BoundaryIndex::build(const std::vector<std::array<int, 3>>& sides) {
    Lanes l;
    for (auto& s : sides) {
        l.cuts.push_back(s[1]);
        l.cuts.push_back(s[2]);
    }
    std::sort(l.cuts.begin(), l.cuts.end());
    l.cuts.erase(std::unique(l.cuts.begin(), l.cuts.end()), l.cuts.end());
    if (l.cuts.size() < 2) return l;
    l.walls.resize(l.cuts.size() - 1);
    for (auto& s : sides) {
        size_t a = std::lower_bound(l.cuts.begin(), l.cuts.end(), s[1]) - l.cuts.begin();
        size_t e = std::lower_bound(l.cuts.begin(), l.cuts.end(), s[2]) - l.cuts.begin();
        for (size_t j = a; j < e; ++j) l.walls[j].push_back(s[0]);
    }
    for (auto& w : l.walls) std::sort(w.begin(), w.end());
    return l;
}

const std::vector<int>* BoundaryIndex::lane(const Lanes& l, int c) {
    auto it = std::upper_bound(l.cuts.begin(), l.cuts.end(), c);
    if (it == l.cuts.begin() || it == l.cuts.end()) return nullptr;
    return &l.walls[(it - l.cuts.begin()) - 1];
}

BoundaryIndex::BoundaryIndex(const Boundary& b) : b_(b) {
    std::vector<std::array<int, 3>> v, h;
    for (const auto& l : b.loops) {
        size_t n = l.corners.size();
        for (size_t i = 0; i < n; ++i) {
            const Pixel& p = l.corners[i];
            const Pixel& q = l.corners[(i + 1) % n];
            if (p.x == q.x)
                v.push_back({p.x, std::min(p.y, q.y), std::max(p.y, q.y)});
            else
                h.push_back({p.y, std::min(p.x, q.x), std::max(p.x, q.x)});
        }
    }
    vert_ = build(v);
    horz_ = build(h);
}

bool BoundaryIndex::inside(Pixel p) const {
    const auto* w = lane(vert_, p.y);
    if (!w) return false;
    auto cnt = std::upper_bound(w->begin(), w->end(), p.x) - w->begin();
    return cnt % 2 == 1;
}

Pixel BoundaryIndex::project(Pixel p, Dir v) const {
    if (!inside(p)) throw Error(ErrorKind::PixelOutsidePolyomino, "projection source outside polyomino");
    if (horizontal(v)) {
        const auto& w = *lane(vert_, p.y);
        if (v == Dir::L) {
            auto it = std::upper_bound(w.begin(), w.end(), p.x);
            return {*(it - 1), p.y};
        }
        auto it = std::upper_bound(w.begin(), w.end(), p.x);
        return {*it - 1, p.y};
    }
    const auto& w = *lane(horz_, p.x);
    auto it = std::upper_bound(w.begin(), w.end(), p.y);
    if (v == Dir::D) return {p.x, *(it - 1)};
    return {p.x, *it - 1};
}

Pixel project(const Boundary& b, Pixel p, Dir v) { return BoundaryIndex(b).project(p, v); }

// ---- significant pixels ----

bool SignificantPixelSet::is_helper(Pixel p) const {
    return std::binary_search(helpers.begin(), helpers.end(), p);
}

SignificantPixelSet significant_pixels(const BoundaryIndex& bi) {
    const Boundary& b = bi.boundary();
    std::set<Pixel> corners, helpers;
    for (const auto& l : b.loops) {
        size_t n = l.corners.size();
        for (size_t i = 0; i < n; ++i) {
            Dir din = dir_between(l.corners[(i + n - 1) % n], l.corners[i]);
            if (l.convex[i]) {
                corners.insert(corner_pixel_at(l, i));
                continue;
            }
            Pixel a = quadrant(l.corners[i], opposite(din), left_of(din));
            Pixel c = quadrant(l.corners[i], right_of(din), din);
            helpers.insert(bi.project(a, din));
            helpers.insert(bi.project(c, left_of(din)));
        }
    }
    SignificantPixelSet s;
    s.corners.assign(corners.begin(), corners.end());
    for (const Pixel& h : helpers)
        if (!corners.count(h)) s.helpers.push_back(h);
    std::set<Pixel> all(corners);
    all.insert(helpers.begin(), helpers.end());
    s.all.assign(all.begin(), all.end());
    return s;
}

SignificantPixelSet significant_pixels(const Boundary& b) { return significant_pixels(BoundaryIndex(b)); }

Polyomino materialize(const Boundary& b, long long budget) {
    validate_boundary(b);
    long long area = boundary_area(b);
    if (area > budget)
        throw Error(ErrorKind::BudgetExceeded, "polyomino has " + std::to_string(area) + " pixels");
    BoundaryIndex bi(b);
    int miny = INT32_MAX, maxy = INT32_MIN;
    for (auto& l : b.loops)
        for (auto& c : l.corners) miny = std::min(miny, c.y), maxy = std::max(maxy, c.y);
    std::vector<std::array<int, 3>> v;
    for (const auto& l : b.loops) {
        size_t n = l.corners.size();
        for (size_t i = 0; i < n; ++i) {
            const Pixel& p = l.corners[i];
            const Pixel& q = l.corners[(i + 1) % n];
            if (p.x == q.x) v.push_back({p.x, std::min(p.y, q.y), std::max(p.y, q.y)});
        }
    }
    std::vector<Pixel> px;
    px.reserve(static_cast<size_t>(area));
    for (int y = miny; y < maxy; ++y) {
        std::vector<int> xs;
        for (auto& s : v)
            if (s[1] <= y && s[2] >= y + 1) xs.push_back(s[0]);
        std::sort(xs.begin(), xs.end());
        for (size_t i = 0; i + 1 < xs.size(); i += 2)
            for (int x = xs[i]; x < xs[i + 1]; ++x) px.push_back({x, y});
    }
    return Polyomino(std::move(px));
}

// ---- Polyomino ----

Polyomino::Polyomino(std::vector<Pixel> px) : pixels_(std::move(px)) {
    if (pixels_.empty()) throw Error(ErrorKind::EmptyPolyomino, "no pixels");
    std::sort(pixels_.begin(), pixels_.end());
    pixels_.erase(std::unique(pixels_.begin(), pixels_.end()), pixels_.end());
    int maxx = INT32_MIN, maxy = INT32_MIN;
    minx_ = INT32_MAX;
    miny_ = INT32_MAX;
    for (auto& p : pixels_) {
        minx_ = std::min(minx_, p.x);
        miny_ = std::min(miny_, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    w_ = maxx - minx_ + 1;
    h_ = maxy - miny_ + 1;
    if (static_cast<long long>(w_) * h_ > 64LL * 1024 * 1024)
        throw Error(ErrorKind::BudgetExceeded, "bounding box too large");
    grid_.assign(static_cast<size_t>(w_) * h_, -1);
    int N = size();
    for (int i = 0; i < N; ++i) grid_[(pixels_[i].y - miny_) * static_cast<size_t>(w_) + (pixels_[i].x - minx_)] = i;
    if (!is_connected(pixels_)) throw Error(ErrorKind::DisconnectedPolyomino, "dual graph is not connected");
    nb_.resize(N);
    for (int i = 0; i < N; ++i)
        for (Dir d : kDirs) nb_[i][static_cast<int>(d)] = index(step_pixel(pixels_[i], d));

    rowSeg_.assign(N, -1);
    colSeg_.assign(N, -1);
    for (int i = 0; i < N; ++i) {
        if (rowSeg_[i] < 0) {
            Segment s;
            s.horizontal = true;
            for (int j = i; j >= 0; j = nb_[j][static_cast<int>(Dir::R)]) {
                rowSeg_[j] = static_cast<int>(segs_.size());
                s.pixels.push_back(j);
            }
            segs_.push_back(std::move(s));
        }
    }
    for (int i = 0; i < N; ++i) {
        if (colSeg_[i] < 0 && nb_[i][static_cast<int>(Dir::D)] < 0) {
            Segment s;
            s.horizontal = false;
            for (int j = i; j >= 0; j = nb_[j][static_cast<int>(Dir::U)]) {
                colSeg_[j] = static_cast<int>(segs_.size());
                s.pixels.push_back(j);
            }
            segs_.push_back(std::move(s));
        }
    }
    ft_.resize(N);
    for (int i = 0; i < N; ++i) {
        const auto& rs = segs_[rowSeg_[i]];
        const auto& cs = segs_[colSeg_[i]];
        ft_[i][static_cast<int>(Dir::L)] = rs.first();
        ft_[i][static_cast<int>(Dir::R)] = rs.last();
        ft_[i][static_cast<int>(Dir::D)] = cs.first();
        ft_[i][static_cast<int>(Dir::U)] = cs.last();
    }
    boundary_ = extract_boundary(pixels_);
    cornerPixel_.assign(N, false);
    for (const auto& l : boundary_.loops)
        for (size_t i = 0; i < l.corners.size(); ++i)
            if (l.convex[i]) cornerPixel_[index(corner_pixel_at(l, i))] = true;
    for (auto& s : segs_) {
        s.cornerEndpointCount = cornerPixel_[s.first()];
        if (s.last() != s.first()) s.cornerEndpointCount += cornerPixel_[s.last()];
    }
}

int Polyomino::index(Pixel p) const {
    int x = p.x - minx_, y = p.y - miny_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return -1;
    return grid_[y * static_cast<size_t>(w_) + x];
}

int Polyomino::degree(int i) const {
    int d = 0;
    for (int k = 0; k < 4; ++k) d += nb_[i][k] >= 0;
    return d;
}

std::vector<int> Polyomino::corner_pixels() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (cornerPixel_[i]) r.push_back(i);
    return r;
}

Classification classify(const Polyomino& P) {
    Classification c;
    c.simple = P.boundary().simple();
    c.rectangle = static_cast<long long>(P.width()) * P.height() == P.size();
    c.thin = true;
    for (int i = 0; i < P.size() && c.thin; ++i) {
        int r = P.neighbor(i, Dir::R), u = P.neighbor(i, Dir::U);
        if (r >= 0 && u >= 0 && P.neighbor(r, Dir::U) >= 0) c.thin = false;
    }
    c.maze = c.thin;
    for (int i = 0; i < P.size() && c.maze; ++i)
        if (P.is_corner_pixel(i) && P.degree(i) != 1) c.maze = false;
    return c;
}

std::string format_boundary(const Boundary& b) {
    std::ostringstream os;
    for (const auto& l : b.loops) {
        for (size_t i = 0; i < l.corners.size(); ++i) {
            if (i) os << ' ';
            os << l.corners[i].x << ',' << l.corners[i].y;
        }
        os << '\n';
    }
    return os.str();
}

Boundary parse_boundary(const std::string& text) {
    Boundary b;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        for (char& ch : line)
            if (ch == ';') ch = ' ';
        std::istringstream ls(line);
        std::string tok;
        Loop l;
        while (ls >> tok) {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "bad corner '" + tok + "'");
            try {
                l.corners.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad corner '" + tok + "'");
            }
        }
        if (l.corners.empty()) continue;
        finish_loop(l);
        b.loops.push_back(std::move(l));
    }
    validate_boundary(b);
    count_corners(b);
    return b;
}

}  // namespace tilt
