#include <algorithm>
#include <set>

#include "layout.hpp"
#include "tilt/generators.hpp"

namespace tilt {

Config ScsInstance::deep() const { return make_config(P, starts); }

namespace {

using detail::hline;
using detail::vline;

ScsInstance finish(std::set<Pixel>& V, std::vector<Pixel> starts) {
    std::vector<Pixel> px(V.begin(), V.end());
    Pixel s = detail::origin_shift(px);
    ScsInstance inst;
    inst.P = Polyomino(detail::shifted(px, s));
    inst.starts = detail::shifted(std::move(starts), s);
    return inst;
}

}  // namespace

// Symbol gadget with entry (c,y): row [c-2,c+2] at y, exit column at c+2 for 0 and c-2 for 1,
// with a stub below the exit. The column climbs to the next entry three rows up.
ScsInstance gen_scs_binary(const std::vector<std::string>& words) {
    if (words.size() < 2) throw Error(ErrorKind::EmptyWordList, "need at least two words");
    size_t maxLen = 0;
    for (auto& w : words) {
        if (w.empty()) throw Error(ErrorKind::EmptyWordList, "empty word");
        for (char ch : w)
            if (ch != '0' && ch != '1') throw Error(ErrorKind::InvalidAlphabet, "binary words only");
        maxLen = std::max(maxLen, w.size());
    }
    int top = 3 * static_cast<int>(maxLen);
    std::set<Pixel> V;
    std::vector<Pixel> starts;
    int cursor = 0;
    for (auto& w : words) {
        int n = static_cast<int>(w.size());
        int c = cursor + 2 * n + 2;
        int y = top - 3 * n;
        starts.push_back({c, y});
        for (char ch : w) {
            int ex = ch == '0' ? c + 2 : c - 2;
            hline(V, y, c - 2, c + 2);
            V.insert({ex, y - 1});
            vline(V, ex, y + 1, y + 2);
            c = ex;
            y += 3;
        }
        cursor = starts.back().x + 2 * n + 4;
    }
    hline(V, top, 0, cursor);
    auto inst = finish(V, starts);
    inst.words = words;
    inst.binary = true;
    inst.bits = 1;
    auto cls = classify(inst.P);
    if (!cls.simple || !cls.maze) throw Error(ErrorKind::VerificationFailed, "scs layout is not a simple maze");
    // each gadget advances under its own encoding and stays in its row under the other one
    for (size_t i = 0; i < words.size(); ++i) {
        int p = inst.P.index(inst.starts[i]);
        for (char ch : words[i]) {
            std::string good = ch == '0' ? "RU" : "LU", bad = ch == '0' ? "LU" : "RU";
            int q = singleton_apply(inst.P, p, bad, Model::FT);
            if (inst.P.pixel(q).y != inst.P.pixel(p).y) throw Error(ErrorKind::VerificationFailed, "mismatch leaves the row");
            int n = singleton_apply(inst.P, p, good, Model::FT);
            if (inst.P.pixel(n).y != inst.P.pixel(p).y + 3) throw Error(ErrorKind::VerificationFailed, "match does not advance");
            p = n;
        }
    }
    return inst;
}

}  // namespace tilt

namespace tilt {

namespace {

int bits_for(int sigmaSize) {
    int l = 1;
    while ((1 << l) < sigmaSize) ++l;
    return l;
}

// Decision tree of one symbol gadget. A node entered moving L ("left" node) branches with
// URUL (bit 1, stays left) or DRUR (bit 0, becomes right); a right node mirrors this with
// ULUR (bit 0) and DLUL (bit 1). Nodes of level i sit on row Y0 + 6i.
struct Tree {
    int bits;
    int G = 8;
    std::set<Pixel>* V;
    std::vector<Pixel> leaves;  // indexed by symbol
    int W(int h) const { return h == 0 ? 0 : 2 * W(h - 1) + G; }

    void node(bool left, int x, int y, int level, int sym) {
        if (level == bits) {
            leaves[sym] = {x, y};
            return;
        }
        int h = bits - level, ny = y + 6, s = left ? 1 : -1;
        int b0 = W(h - 1) + G / 2;
        vline(*V, x, y - 2, y + 2);
        // U-first branch
        hline(*V, y + 2, x, x + 2 * s);
        vline(*V, x + 2 * s, y + 2, ny);
        hline(*V, ny, x, x + 2 * s);
        // D-first branch
        hline(*V, y - 2, x, x + b0 * s);
        vline(*V, x + b0 * s, y - 2, ny);
        hline(*V, ny, x + b0 * s, x + W(h) * s);
        int bitU = left ? 1 : 0;
        node(left, x, ny, level + 1, sym * 2 + bitU);
        node(!left, x + W(h) * s, ny, level + 1, sym * 2 + (1 - bitU));
    }
};

struct GadgetFrame {
    int hx;     // left end of the entry row
    int entry;  // x of the entry pixel
    int exitX;  // column that drops to the next entry row
    int top;    // row of the exit run
};

// Adds the gadget for `symbol` whose entry row starts at hx on row ye.
GadgetFrame add_gadget(std::set<Pixel>& V, int symbol, int bits, int hx, int ye) {
    Tree t{bits, 8, &V, std::vector<Pixel>(1 << bits)};
    int gx = hx + 4, y0 = ye + 4;
    t.node(true, gx, y0, 0, 0);
    int right = gx + t.W(bits) + 2;
    GadgetFrame f;
    f.hx = hx;
    int xret = right + 4;
    f.entry = xret + 4;
    f.exitX = f.entry + 4;
    int yl = y0 + 6 * bits;
    std::vector<int> order(t.leaves.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return t.leaves[a].x < t.leaves[b].x; });
    int hmax = yl;
    for (size_t j = 0; j < order.size(); ++j) {
        Pixel lf = t.leaves[order[j]];
        if (order[j] == symbol) continue;
        int h = yl + 4 + 2 * static_cast<int>(j);
        vline(V, lf.x, yl, h);
        hline(V, h, lf.x, xret);
        hmax = std::max(hmax, h);
    }
    f.top = yl + 4 + 2 * static_cast<int>(order.size());
    Pixel ex = t.leaves[symbol];
    vline(V, ex.x, yl, f.top);
    hline(V, f.top, ex.x, f.exitX);
    vline(V, xret, ye, hmax);
    hline(V, ye, hx, f.entry);
    vline(V, f.entry, ye, y0);
    hline(V, y0, gx, f.entry);
    vline(V, f.exitX, ye, f.top);
    return f;
}

// Start subpath below the first entry row: DLULURDR leads from the start pixel to the entry.
Pixel add_start(std::set<Pixel>& V, int hx, int hy) {
    vline(V, hx + 2, hy - 2, hy + 3);
    hline(V, hy - 2, hx - 2, hx + 2);
    vline(V, hx - 2, hy - 2, hy + 2);
    hline(V, hy + 2, hx - 4, hx - 2);
    vline(V, hx - 4, hy + 2, hy + 6);
    hline(V, hy + 6, hx - 4, hx);
    vline(V, hx, hy, hy + 6);
    return {hx + 2, hy + 3};
}

}  // namespace

std::string scs_symbol_moves(int symbol, int bits) {
    std::string w = "UL";
    bool left = true;
    for (int i = bits - 1; i >= 0; --i) {
        int b = (symbol >> i) & 1;
        if (left) w += b ? "URUL" : "DRUR";
        else w += b ? "DLUL" : "ULUR";
        if (left == (b == 0)) left = !left;
    }
    return w + "URDR";
}

int scs_general_length(int supersequenceLength, int bits) { return 10 + supersequenceLength * (6 + 4 * bits); }

ScsInstance gen_scs_general(const std::vector<std::vector<int>>& words, int sigmaSize) {
    if (words.size() < 2) throw Error(ErrorKind::EmptyWordList, "need at least two words");
    if (sigmaSize < 1) throw Error(ErrorKind::InvalidAlphabet, "empty alphabet");
    int bits = bits_for(sigmaSize);
    for (auto& w : words) {
        if (w.empty()) throw Error(ErrorKind::EmptyWordList, "empty word");
        for (int s : w)
            if (s < 0 || s >= sigmaSize) throw Error(ErrorKind::InvalidAlphabet, "symbol outside the alphabet");
    }
    std::set<Pixel> V;
    std::vector<Pixel> starts;
    std::vector<std::vector<GadgetFrame>> frames;
    int ye = 0, cursor = 6, top = 0;
    for (auto& w : words) {
        int hx = cursor;
        starts.push_back(add_start(V, hx, ye));
        std::vector<GadgetFrame> fs;
        for (int s : w) {
            fs.push_back(add_gadget(V, s, bits, hx, ye));
            hx = fs.back().exitX;
            top = std::max(top, fs.back().top);
        }
        // last exit lands on a final entry whose column climbs to the baseline
        int fin = hx + 4;
        hline(V, ye, hx, fin);
        frames.push_back(fs);
        cursor = fin + 10;
    }
    int base = top + 4;
    for (auto& fs : frames) vline(V, fs.back().exitX + 4, ye, base);
    hline(V, base, 0, cursor);

    std::vector<Pixel> px(V.begin(), V.end());
    Pixel sh = detail::origin_shift(px);
    ScsInstance inst;
    inst.P = Polyomino(detail::shifted(px, sh));
    inst.starts = detail::shifted(starts, sh);
    inst.binary = false;
    inst.bits = bits;
    for (auto& w : words) {
        std::string s;
        for (int x : w) s += std::to_string(x) + ",";
        if (!s.empty()) s.pop_back();
        inst.words.push_back(s);
    }

    auto fail = [](const std::string& m) { throw Error(ErrorKind::VerificationFailed, "scs gadget: " + m); };
    auto at = [&](int x, int y) { return inst.P.index({x - sh.x, y - sh.y}); };
    for (size_t i = 0; i < words.size(); ++i) {
        auto& fs = frames[i];
        int p = singleton_apply(inst.P, inst.P.index(inst.starts[i]), "DLULURDR", Model::FT);
        if (p != at(fs[0].entry, ye)) fail("start path misses the first entry");
        for (size_t g = 0; g < fs.size(); ++g) {
            int e = at(fs[g].entry, ye);
            int next = g + 1 < fs.size() ? at(fs[g + 1].entry, ye) : at(fs[g].exitX + 4, ye);
            for (int s = 0; s < (1 << bits); ++s) {
                int q = singleton_apply(inst.P, e, scs_symbol_moves(s, bits), Model::FT);
                if (s == words[i][g] ? q != next : q != e) fail("symbol " + std::to_string(s) + " misroutes");
            }
        }
        int r = singleton_apply(inst.P, at(fs.back().exitX + 4, ye), "UL", Model::FT);
        if (r != at(0, base)) fail("final entry does not reach the baseline end");
    }
    return inst;
}

}  // namespace tilt
