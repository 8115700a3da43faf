#include "tilt/gathering.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tilt {

bool verify_gathering(const Polyomino& P, const Config& C, const GatherResult& g) {
    Config r = apply(P, C, g.sequence, Variant{g.model.model, Merge::Merging});
    return r.size() == 1 && P.pixel(r[0]) == g.target;
}

std::optional<GatherResult> full_gathering(const Boundary& b, FullGatherStats* stats, long long verifyBudget) {
    BoundaryIndex bi(b);
    TiltAutomaton T = build_tilt_automaton(bi);
    const SemiAutomaton& A = T.a;
    PairAutomaton pa = pair_automaton(A);
    Word DL = word_from_moves("DL");
    Word w = DL;
    std::vector<int> X(A.n);
    std::iota(X.begin(), X.end(), 0);
    X = A.image(X, DL);
    auto has_helper = [&](const std::vector<int>& xs) {
        return std::any_of(xs.begin(), xs.end(), [&](int q) { return T.helper[q]; });
    };
    int H = 0;
    while (has_helper(X)) {
        w.insert(w.end(), DL.begin(), DL.end());
        X = A.image(X, DL);
        if (++H > A.n + 1) throw Error(ErrorKind::VerificationFailed, "helper elimination did not terminate");
    }
    if (stats) {
        stats->helperIterations = H;
        stats->xAfterHelpers = static_cast<int>(X.size());
        stats->significant = A.n;
        stats->convexCorners = b.n_c;
    }
    std::vector<int> fin;
    auto u = greedy_merge(A, pa, X, &fin);
    if (!u) return std::nullopt;
    w.insert(w.end(), u->begin(), u->end());
    GatherResult g;
    g.sequence = normalize(moves_from_word(w));
    g.model = kFTMerge;

    // DL maps V into S, so V.w lies in X.u
    std::string s = g.sequence;
    if (s.size() < 2 || !perpendicular(dir_from_char(s[0]), dir_from_char(s[1])))
        throw Error(ErrorKind::VerificationFailed, "gathering word does not start with two perpendicular moves");
    std::vector<int> all(A.n);
    std::iota(all.begin(), all.end(), 0);
    auto img = A.image(all, word_from_moves(s));
    if (img.size() != 1) throw Error(ErrorKind::VerificationFailed, "gathering word does not synchronize A(P)");
    g.target = T.pixels[img[0]];
    if (boundary_area(b) <= verifyBudget) {
        Polyomino P = materialize(b, verifyBudget);
        if (!verify_gathering(P, full_config(P), g))
            throw Error(ErrorKind::VerificationFailed, "gathering word fails on the dense polyomino");
    }
    return g;
}

bool is_gatherable(const Boundary& b) {
    TiltAutomaton T = build_tilt_automaton(b);
    if (T.a.n <= 1) return true;
    return is_synchronizing(pair_automaton(T.a));
}

std::optional<GatherResult> gather_at_pixel(const Boundary& b, Pixel p) {
    BoundaryIndex bi(b);
    if (!bi.inside(p)) throw Error(ErrorKind::PixelOutsidePolyomino, "target pixel outside polyomino");
    auto g = full_gathering(b);
    if (!g) return std::nullopt;
    TiltAutomaton T = build_tilt_automaton(bi);
    int src = T.state_of(g->target), dst = T.state_of(p);
    // every singleton reachable from a significant pixel is significant
    if (dst < 0) return std::nullopt;
    std::vector<int> par(T.a.n, -2), let(T.a.n, -1);
    std::deque<int> q{src};
    par[src] = -1;
    while (!q.empty() && par[dst] == -2) {
        int x = q.front();
        q.pop_front();
        for (int a = 0; a < 4; ++a) {
            int y = T.a.delta[a][x];
            if (par[y] != -2) continue;
            par[y] = x;
            let[y] = a;
            q.push_back(y);
        }
    }
    if (par[dst] == -2) return std::nullopt;
    Word u;
    for (int x = dst; par[x] >= 0; x = par[x]) u.push_back(let[x]);
    std::reverse(u.begin(), u.end());
    GatherResult r = *g;
    r.sequence = normalize(g->sequence + moves_from_word(u));
    r.target = p;
    return r;
}

std::optional<GatherResult> subset_gathering_exact(const Polyomino& P, const Config& C, long long budget) {
    auto s = sgs_exact(P, C, budget);
    if (!s) return std::nullopt;
    GatherResult g;
    g.sequence = s->word;
    g.model = kFTMerge;
    Config r = apply(P, C, g.sequence, kFTMerge);
    g.target = P.pixel(r[0]);
    return g;
}

namespace {

bool para_dfs(const Polyomino& P, const Config& C, int remaining, char last, std::string& w) {
    if (remaining == 0) return C.size() == 1;
    static const char order[] = {'D', 'L', 'R', 'U'};
    for (char c : order) {
        Dir d = dir_from_char(c);
        if (last && horizontal(dir_from_char(last)) == horizontal(d)) continue;
        w.push_back(c);
        if (para_dfs(P, step(P, C, d, kFTMerge), remaining - 1, c, w)) return true;
        w.pop_back();
    }
    return false;
}

}  // namespace

std::optional<GatherResult> para_gathering(const Polyomino& P, const Config& C, int maxLen) {
    if (C.empty()) throw Error(ErrorKind::ConfigurationNotInPolyomino, "configuration must be nonempty");
    for (int len = 0; len <= maxLen; ++len) {
        std::string w;
        if (para_dfs(P, C, len, 0, w)) {
            GatherResult g;
            g.sequence = w;
            g.target = P.pixel(apply(P, C, w, kFTMerge)[0]);
            return g;
        }
    }
    return std::nullopt;
}

GatherResult approx_simple_maze(const Polyomino& P, ApproxInfo* info) {
    Classification c = classify(P);
    if (!c.simple || !c.maze || P.size() <= 1) throw Error(ErrorKind::NotASimpleMaze, "input is not a simple maze with N > 1");
    if (!is_gatherable(P.boundary())) throw Error(ErrorKind::NotGatherable, "maze is not gatherable");
    int R = -1;
    for (size_t s = 0; s < P.segments().size(); ++s) {
        const Segment& seg = P.segments()[s];
        if (seg.pixels.size() < 2 || seg.cornerEndpointCount != 2) continue;
        if (R >= 0) throw Error(ErrorKind::VerificationFailed, "more than one segment with two corner endpoints");
        R = static_cast<int>(s);
    }
    if (R < 0) throw Error(ErrorKind::VerificationFailed, "no segment with two corner endpoints");
    const Segment& seg = P.segments()[R];
    // multi-source BFS from R over reversed singleton moves
    int N = P.size();
    std::vector<std::vector<int>> rev(N);
    for (int p = 0; p < N; ++p)
        for (Dir d : kDirs) rev[P.slide(p, d)].push_back(p);
    std::vector<int> dist(N, -1);
    std::deque<int> q;
    for (int p : seg.pixels) {
        dist[p] = 0;
        q.push_back(p);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : rev[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    int d = 0;
    for (int p : P.corner_pixels()) {
        if (dist[p] < 0) throw Error(ErrorKind::NotGatherable, "corner pixel cannot reach the gathering segment");
        d = std::max(d, dist[p]);
    }
    std::string base = repeat("URDL", d);
    std::string finals = seg.horizontal ? "LR" : "DU";
    Config V = full_config(P);
    for (char f : finals) {
        GatherResult g;
        g.sequence = base + f;
        g.model = kFTMerge;
        Config r = apply(P, V, g.sequence, kFTMerge);
        if (r.size() != 1) continue;
        g.target = P.pixel(r[0]);
        if (info) {
            info->segmentR = R;
            info->d = d;
            info->finalMove = f;
        }
        return g;
    }
    throw Error(ErrorKind::VerificationFailed, "approximation word does not gather the maze");
}

GatherResult s1_gathering(const Polyomino& P) {
    TiltAutomaton T = build_s1_automaton(P);
    auto w = synchronizing_word(T.a);
    if (!w) throw Error(ErrorKind::NotGatherable, "single step automaton is not synchronizing");
    GatherResult g;
    g.sequence = moves_from_word(*w);
    g.model = kS1Merge;
    Config r = apply(P, full_config(P), g.sequence, kS1Merge);
    if (r.size() != 1) throw Error(ErrorKind::VerificationFailed, "single step word does not gather");
    g.target = P.pixel(r[0]);
    return g;
}

}  // namespace tilt
