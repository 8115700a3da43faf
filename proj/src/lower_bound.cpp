#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "layout.hpp"
#include "tilt/generators.hpp"

namespace tilt {

namespace {

using detail::hline;
using detail::vline;

// Cycle of M = 2m+1 positions. p_i tops the column X_i on row T_i; RDLU runs
// p_i -> q_i (right end of T_i) -> s_i (foot of C_i on Y_{i+1}) -> r_i (left end of Y_{i+1}) -> p_{i+1}.
// L from p_i hits the dead end left of X_i, except at i = 2m-1 where a column rises to t on row T_{2m}.
struct Cycle {
    int M;
    int X(int j) const { return 4 * (M - 1 - j) + 4; }
    int Cx(int j) const { return 4 * M + 4 + 4 * j; }
    int E() const { return Cx(M - 1) + 4; }
    int Y(int j) const { return 4 * (M - 1 - j) + 4; }
    int T(int j) const { return Y(0) + 4 + 4 * j; }
};

int mod(int a, int m) { return ((a % m) + m) % m; }

// coarsest congruence refining the split {V_p, rest} on the move-closed set W
std::map<int, int> refine(const Polyomino& P, const std::vector<int>& W, const std::set<int>& vp) {
    std::map<int, int> cls;
    for (int a : W) cls[a] = vp.count(a) ? 0 : 1;
    for (;;) {
        std::map<std::array<int, 5>, int> sig;
        std::map<int, int> next;
        for (int a : W) {
            std::array<int, 5> k{cls[a], 0, 0, 0, 0};
            for (int d = 0; d < 4; ++d) k[d + 1] = cls.at(P.slide(a, static_cast<Dir>(d)));
            auto it = sig.emplace(k, static_cast<int>(sig.size())).first;
            next[a] = it->second;
        }
        std::set<int> before;
        for (auto& [a, c] : cls) before.insert(c);
        bool same = sig.size() == before.size();
        cls = std::move(next);
        if (same) return cls;
    }
}

}  // namespace

LowerBoundInstance gen_lower_bound(int m, bool) {
    if (m < 1) throw Error(ErrorKind::InvalidTallyShape, "m must be positive");
    int M = 2 * m + 1;
    Cycle g{M};
    std::set<Pixel> V;
    for (int j = 0; j < M; ++j) {
        int nx = (j + 1) % M;
        hline(V, g.Y(j), g.X(j), g.E());
        vline(V, g.X(j), g.Y(j) - 1, g.T(j));
        hline(V, g.T(j), g.X(j) - 2, g.Cx(j));
        vline(V, g.Cx(j), g.T(j) + 1, g.Y(nx));
    }
    int sx = g.X(2 * m - 1) - 2;
    vline(V, sx, g.T(2 * m - 1), g.T(2 * m));

    std::map<Pixel, int> idx;
    std::map<std::string, std::vector<Pixel>> classes;
    for (int j = 0; j < M; ++j) {
        int nx = (j + 1) % M;
        Pixel p{g.X(j), g.T(j)}, q{g.Cx(j), g.T(j)}, s{g.Cx(j), g.Y(nx)}, r{g.X(nx), g.Y(nx)};
        classes["p"].push_back(p);
        classes["q"].push_back(q);
        classes["s"].push_back(s);
        classes["r"].push_back(r);
        idx[p] = idx[q] = idx[s] = idx[r] = j;
        idx[{g.E(), g.Y(j)}] = mod(j - 1, M);
        idx[{g.X(j), g.Y(j) - 1}] = mod(j - 1, M);
        idx[{g.Cx(j), g.T(j) + 1}] = j;
        idx[{g.X(j) - 2, g.T(j)}] = j;
    }
    Pixel t{sx, g.T(2 * m)}, tp{sx, g.T(2 * m - 1)};
    idx[t] = 2 * m;
    idx[tp] = 2 * m - 1;

    std::vector<Pixel> px(V.begin(), V.end());
    Pixel sh = detail::origin_shift(px);
    auto move = [&](Pixel p) { return Pixel{p.x - sh.x, p.y - sh.y}; };
    LowerBoundInstance L;
    L.P = Polyomino(detail::shifted(px, sh));
    L.m = m;
    for (auto& [k, v] : classes)
        for (auto& p : v) L.classes[k].push_back(move(p));
    L.extras["t"] = move(t);
    L.extras["t'"] = move(tp);
    for (auto& [p, i] : idx) L.idx[move(p)] = i;

    auto fail = [](const std::string& msg) { throw Error(ErrorKind::VerificationFailed, "lower bound: " + msg); };
    const Polyomino& P = L.P;
    std::set<int> vp;
    for (auto& p : L.classes["p"]) vp.insert(P.index(p));
    std::set<int> seen(vp);
    std::vector<int> W(vp.begin(), vp.end());
    for (size_t k = 0; k < W.size(); ++k)
        for (int d = 0; d < 4; ++d) {
            int b = P.slide(W[k], static_cast<Dir>(d));
            if (seen.insert(b).second) W.push_back(b);
        }
    for (int a : W)
        if (!L.idx.count(P.pixel(a))) fail("unindexed pixel in the move closure");
    if (!L.idx.count(L.extras["t"]) || seen.count(P.index(L.extras["t"])) == 0) fail("skip target unreachable");

    auto cls = refine(P, W, vp);
    for (auto& [name, v] : L.classes) {
        int c = cls.at(P.index(v.front()));
        int n = 0;
        for (auto& [a, ca] : cls) n += ca == c;
        for (auto& p : v)
            if (cls.at(P.index(p)) != c) fail("class " + name + " splits");
        if (n != M) fail("class " + name + " has extra members");
    }
    for (auto& [a, c] : cls) L.cls[P.pixel(a)] = c;
    for (int i = 0; i < M; ++i) {
        int a = P.index(L.classes["p"][i]);
        if (P.pixel(singleton_apply(P, a, "RDLU", Model::FT)) != L.classes["p"][(i + 1) % M]) fail("RDLU does not advance");
    }

    // (class, letter) pairs whose members change idx by different amounts, grouped by segment
    std::map<std::pair<int, int>, std::set<int>> inc;
    for (int a : W)
        for (int d = 0; d < 4; ++d) {
            int b = P.slide(a, static_cast<Dir>(d));
            inc[{cls[a], d}].insert(mod(L.idx[P.pixel(b)] - L.idx[P.pixel(a)], M));
        }
    std::set<int> segs;
    for (int a : W)
        for (int d = 0; d < 4; ++d) {
            auto& s = inc[{cls[a], d}];
            if (s.size() < 2) continue;
            int b = P.slide(a, static_cast<Dir>(d));
            if (b != a) segs.insert(P.segment_of(a, static_cast<Dir>(d)));
        }
    L.divergencePoints = static_cast<int>(segs.size());
    if (L.divergencePoints != 1 || !segs.count(P.col_segment(P.index(L.extras["t"]))))
        fail("expected a single divergence segment through t");
    return L;
}

}  // namespace tilt
