#include "tilt/dynamics.hpp"

#include <algorithm>
#include <bit>

namespace tilt {

std::string variant_name(Variant v) {
    std::string s = v.model == Model::FT ? "FT" : "S1";
    s += v.merge == Merge::Merging ? "-merging" : "-blocking";
    return s;
}

Config make_config(const Polyomino& P, const std::vector<Pixel>& pixels) {
    Config c;
    c.reserve(pixels.size());
    for (const Pixel& p : pixels) {
        int i = P.index(p);
        if (i < 0)
            throw Error(ErrorKind::ConfigurationNotInPolyomino,
                        "pixel " + std::to_string(p.x) + "," + std::to_string(p.y) + " not in polyomino");
        c.push_back(i);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::vector<Pixel> config_pixels(const Polyomino& P, const Config& C) {
    std::vector<Pixel> r;
    r.reserve(C.size());
    for (int i : C) r.push_back(P.pixel(i));
    return r;
}

Config full_config(const Polyomino& P) {
    Config c(P.size());
    for (int i = 0; i < P.size(); ++i) c[i] = i;
    return c;
}

int singleton_move(const Polyomino& P, int p, Dir v, Model model) {
    if (model == Model::FT) return P.slide(p, v);
    int q = P.neighbor(p, v);
    return q >= 0 ? q : p;
}

Pixel singleton_move(const Polyomino& P, Pixel p, Dir v, Model model) {
    int i = P.index(p);
    if (i < 0) throw Error(ErrorKind::PixelOutsidePolyomino, "pixel not in polyomino");
    return P.pixel(singleton_move(P, i, v, model));
}

int singleton_apply(const Polyomino& P, int p, const std::string& w, Model model) {
    for (char c : w) p = singleton_move(P, p, dir_from_char(c), model);
    return p;
}

namespace {

bool occupied(const Config& C, int p) { return std::binary_search(C.begin(), C.end(), p); }

void finish(Config& r) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
}

}  // namespace

Config step(const Polyomino& P, const Config& C, Dir v, Variant m) {
    for (int p : C)
        if (p < 0 || p >= P.size()) throw Error(ErrorKind::ConfigurationNotInPolyomino, "bad pixel index");
    Config r;
    r.reserve(C.size());
    if (m.merge == Merge::Merging) {
        if (m.model == Model::FT) {
            for (int p : C) r.push_back(P.slide(p, v));
        } else {
            for (int p : C) r.push_back(singleton_move(P, p, v, Model::S1));
        }
        finish(r);
        return r;
    }
    if (m.model == Model::FT) {
        // count particles per segment, then pack them against the v side
        std::vector<std::pair<int, int>> seg;
        seg.reserve(C.size());
        for (int p : C) seg.push_back({P.segment_of(p, v), p});
        std::sort(seg.begin(), seg.end());
        bool low = (v == Dir::L || v == Dir::D);
        for (size_t i = 0; i < seg.size();) {
            size_t j = i;
            while (j < seg.size() && seg[j].first == seg[i].first) ++j;
            const auto& px = P.segments()[seg[i].first].pixels;
            size_t k = j - i;
            for (size_t t = 0; t < k; ++t) r.push_back(low ? px[t] : px[px.size() - 1 - t]);
            i = j;
        }
        finish(r);
        return r;
    }
    // S1 blocking: a particle stays iff every pixel between it and the wall is occupied
    std::vector<signed char> blocked(C.size(), -1);
    auto pos = [&](int p) { return static_cast<size_t>(std::lower_bound(C.begin(), C.end(), p) - C.begin()); };
    for (size_t i = 0; i < C.size(); ++i) {
        if (blocked[i] >= 0) continue;
        std::vector<size_t> chain{i};
        signed char res = 0;
        while (true) {
            int q = P.neighbor(C[chain.back()], v);
            if (q < 0) {
                res = 1;
                break;
            }
            if (!occupied(C, q)) {
                res = 0;
                break;
            }
            size_t k = pos(q);
            if (blocked[k] >= 0) {
                res = blocked[k];
                break;
            }
            chain.push_back(k);
        }
        for (size_t k : chain) blocked[k] = res;
    }
    for (size_t i = 0; i < C.size(); ++i) r.push_back(blocked[i] ? C[i] : P.neighbor(C[i], v));
    finish(r);
    return r;
}

Config apply(const Polyomino& P, Config C, const std::string& w, Variant m) {
    for (char c : w) C = step(P, C, dir_from_char(c), m);
    return C;
}

std::string normalize(const std::string& w) {
    std::string out;
    for (char c : w) {
        Dir d = dir_from_char(c);
        if (!out.empty() && horizontal(dir_from_char(out.back())) == horizontal(d)) out.pop_back();
        out.push_back(dir_char(d));
    }
    return out;
}

std::string repeat(const std::string& w, int times) {
    std::string s;
    for (int i = 0; i < times; ++i) s += w;
    return s;
}

MaskStepper::MaskStepper(const Polyomino& P) : P_(&P) {
    if (P.size() > 64) throw Error(ErrorKind::BudgetExceeded, "mask stepper needs at most 64 pixels");
    for (const auto& s : P.segments()) {
        Seg g;
        g.order = s.pixels;
        for (int p : s.pixels) g.mask |= std::uint64_t{1} << p;
        size_t n = s.pixels.size();
        g.lowPrefix.assign(n + 1, 0);
        g.highPrefix.assign(n + 1, 0);
        for (size_t k = 1; k <= n; ++k) {
            g.lowPrefix[k] = g.lowPrefix[k - 1] | (std::uint64_t{1} << s.pixels[k - 1]);
            g.highPrefix[k] = g.highPrefix[k - 1] | (std::uint64_t{1} << s.pixels[n - k]);
        }
        (s.horizontal ? rows_ : cols_).push_back(std::move(g));
    }
}

std::uint64_t MaskStepper::to_mask(const Config& C) {
    std::uint64_t m = 0;
    for (int p : C) m |= std::uint64_t{1} << p;
    return m;
}

Config MaskStepper::from_mask(std::uint64_t c) {
    Config r;
    while (c) {
        r.push_back(std::countr_zero(c));
        c &= c - 1;
    }
    return r;
}

std::uint64_t MaskStepper::step(std::uint64_t c, Dir v, Variant m) const {
    const auto& segs = horizontal(v) ? rows_ : cols_;
    bool low = (v == Dir::L || v == Dir::D);
    std::uint64_t r = 0;
    if (m.model == Model::FT) {
        for (const auto& g : segs) {
            std::uint64_t in = c & g.mask;
            if (!in) continue;
            if (m.merge == Merge::Merging)
                r |= std::uint64_t{1} << (low ? g.order.front() : g.order.back());
            else
                r |= (low ? g.lowPrefix : g.highPrefix)[std::popcount(in)];
        }
        return r;
    }
    if (m.merge == Merge::Merging) {
        std::uint64_t t = c;
        while (t) {
            int p = std::countr_zero(t);
            t &= t - 1;
            int q = P_->neighbor(p, v);
            r |= std::uint64_t{1} << (q >= 0 ? q : p);
        }
        return r;
    }
    for (const auto& g : segs) {
        if (!(c & g.mask)) continue;
        int n = static_cast<int>(g.order.size());
        int k = 0;
        auto at = [&](int i) { return low ? g.order[i] : g.order[n - 1 - i]; };
        while (k < n && (c >> at(k) & 1)) {
            r |= std::uint64_t{1} << at(k);
            ++k;
        }
        for (int i = k + 1; i < n; ++i)
            if (c >> at(i) & 1) r |= std::uint64_t{1} << at(i - 1);
    }
    return r;
}

}  // namespace tilt
