#include <algorithm>
#include <set>

#include "layout.hpp"
#include "tilt/generators.hpp"

namespace tilt {

namespace {

using detail::hline;
using detail::vline;

// One strip per automaton, lines spaced 4 apart. State j owns the column X_j that rises from
// its state row Y_j to its top row T_j; the top row runs right to C_j, which drops onto the
// row of state j+1. Every turn carries a stub so corners are dead ends.
struct Strip {
    int K;
    int oy;
    int X(int j) const { return 4 * (K - 1 - j) + 4; }
    int Cx(int j) const { return 4 * K + 4 + 4 * j; }
    int E() const { return Cx(K - 1) + 4; }
    int Y(int j) const { return oy + 4 * (K - 1 - j) + 4; }
    int T(int j) const { return oy + 4 * K + 4 + 4 * (K - 1 - j); }
    int gutter() const { return oy; }
    int xr() const { return X(0) - 1; }
    int top() const { return T(0) + 1; }
};

void check_automata(const std::vector<TallyAutomaton>& as) {
    if (as.empty()) throw Error(ErrorKind::InvalidTallyShape, "no automata");
    for (auto& a : as) {
        if (a.rho < 1) throw Error(ErrorKind::InvalidTallyShape, "empty cycle");
        if (a.initial < 0 || a.initial >= a.rho) throw Error(ErrorKind::InvalidTallyShape, "initial state out of range");
        for (int q : a.accepting)
            if (q < 0 || q >= a.rho) throw Error(ErrorKind::InvalidTallyShape, "accepting state out of range");
    }
}

struct RawTally {
    std::set<Pixel> V;
    std::vector<std::vector<Pixel>> reps;
    std::vector<Pixel> acceptingReps;
    int goalBottomY = 0;
    int goalTopY = 0;
    int topGutter = 0;
};

RawTally build(const std::vector<TallyAutomaton>& as, int extraTop) {
    RawTally r;
    int oy = 0;
    for (auto& a : as) {
        Strip s{a.rho, oy};
        std::set<int> acc(a.accepting.begin(), a.accepting.end());
        std::vector<Pixel> reps;
        for (int j = 0; j < s.K; ++j) {
            int nx = (j + 1) % s.K;
            hline(r.V, s.Y(j), s.X(j), s.E());
            vline(r.V, s.X(j), s.Y(j) - 1, s.T(j));
            hline(r.V, s.T(j), s.X(j) - 2, s.Cx(j));
            vline(r.V, s.Cx(j), s.T(j) + 1, s.Y(nx));
            int ex = s.X(j) - 2;
            if (acc.count(j))
                vline(r.V, ex, s.T(j) + 1, s.gutter());
            else
                vline(r.V, ex, s.T(j) - 1, s.T(j) + 1);
            reps.push_back({s.X(j), s.T(j)});
            if (acc.count(j)) r.acceptingReps.push_back(reps.back());
        }
        hline(r.V, s.gutter(), 0, s.xr());
        r.topGutter = s.gutter();
        r.reps.push_back(reps);
        oy = s.top() + 4;
    }
    r.goalBottomY = -1;
    r.goalTopY = r.topGutter + 1 + extraTop;
    vline(r.V, 0, r.goalBottomY, r.goalTopY);
    return r;
}

std::set<int> closure(const Polyomino& P, int p) {
    std::set<int> seen{p};
    std::vector<int> st{p};
    while (!st.empty()) {
        int q = st.back();
        st.pop_back();
        for (Dir d : {Dir::U, Dir::D, Dir::L, Dir::R}) {
            int n = P.slide(q, d);
            if (seen.insert(n).second) st.push_back(n);
        }
    }
    return seen;
}

void verify(const TallyInstance& t) {
    auto fail = [](const std::string& m) { throw Error(ErrorKind::VerificationFailed, "tally: " + m); };
    const Polyomino& P = t.P;
    int gb = P.index(t.goalBottom);
    std::set<int> repIdx;
    for (auto& row : t.reps)
        for (auto& p : row) repIdx.insert(P.index(p));
    for (size_t i = 0; i < t.reps.size(); ++i) {
        auto& row = t.reps[i];
        std::set<int> acc(t.automata[i].accepting.begin(), t.automata[i].accepting.end());
        for (size_t j = 0; j < row.size(); ++j) {
            int p = P.index(row[j]);
            if (singleton_apply(P, p, "RDLU", Model::FT) != P.index(row[(j + 1) % row.size()]))
                fail("cycle step broken");
            if (acc.count(static_cast<int>(j))) {
                if (singleton_apply(P, p, "LDRDLD", Model::FT) != gb) fail("accepting exit misses the goal");
            } else {
                for (const char* w : {"LU", "LD"}) {
                    for (int q : closure(P, singleton_apply(P, p, w, Model::FT)))
                        if (repIdx.count(q) || q == gb) fail("trap is not closed");
                }
            }
        }
    }
    if (!classify(P).maze) fail("layout is not a maze");
}

TallyInstance make_instance(const std::vector<TallyAutomaton>& as, bool maze, int extraTop, RawTally& raw) {
    check_automata(as);
    raw = build(as, extraTop);
    std::vector<Pixel> V(raw.V.begin(), raw.V.end());
    Pixel s = detail::origin_shift(V);
    auto sh = [&](Pixel p) { return Pixel{p.x - s.x, p.y - s.y}; };
    TallyInstance t;
    t.P = Polyomino(detail::shifted(V, s));
    t.automata = as;
    t.asMaze = maze;
    std::vector<Pixel> init;
    for (size_t i = 0; i < as.size(); ++i) {
        std::vector<Pixel> row;
        for (auto& p : raw.reps[i]) row.push_back(sh(p));
        init.push_back(row[as[i].initial]);
        t.reps.push_back(row);
    }
    t.C0 = make_config(t.P, init);
    for (auto& p : raw.acceptingReps) t.acceptingReps.push_back(sh(p));
    for (int y = raw.goalBottomY; y <= raw.goalTopY; ++y) t.goalColumn.push_back(sh({0, y}));
    t.goalBottom = t.goalColumn.front();
    verify(t);
    return t;
}

bool odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

TallyInstance gen_tally(const std::vector<TallyAutomaton>& automata, bool maze) {
    RawTally raw;
    return make_instance(automata, maze, 0, raw);
}

std::vector<TallyAutomaton> example_tally_pair() {
    return {tally_cycle(7, {1, 3, 4}, 3), tally_cycle(5, {2, 3}, 4)};
}

std::vector<TallyAutomaton> gen_prime_tally(const std::vector<int>& primes) {
    std::vector<TallyAutomaton> as;
    for (int p : primes) {
        if (!odd_prime(p)) throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
        as.push_back(tally_cycle(p, {p - 1}, 0));
    }
    return as;
}

std::vector<int> greedy_odd_primes(int count) {
    std::vector<int> ps;
    for (int p = 3; static_cast<int>(ps.size()) < count; p += 2)
        if (odd_prime(p)) ps.push_back(p);
    return ps;
}

TiltCoverInstance gen_tiltcover(const std::vector<TallyAutomaton>& automata, bool maze) {
    TiltCoverInstance tc;
    tc.base = gen_tally(automata, maze);
    tc.P = tc.base.P;
    std::set<int> c0(tc.base.C0.begin(), tc.base.C0.end());
    std::set<Pixel> accept(tc.base.acceptingReps.begin(), tc.base.acceptingReps.end());
    for (int i = 0; i < tc.P.size(); ++i) {
        if (!c0.count(i)) tc.C.push_back(i);
        if (!accept.count(tc.P.pixel(i))) tc.target.push_back(i);
    }
    return tc;
}

OccupancyInstance gen_occupancy_variant(const std::vector<TallyAutomaton>& automata, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidTallyShape, "occupancy needs k >= 1");
    RawTally raw;
    OccupancyInstance o;
    o.base = make_instance(automata, false, k - 1, raw);
    o.P = o.base.P;
    o.C = o.base.C0;
    auto& col = o.base.goalColumn;
    std::vector<Pixel> goal(col.end() - k, col.end());
    o.goal = make_config(o.P, goal);
    o.probe = o.P.index(col[col.size() - k]);
    return o;
}

}  // namespace tilt
