#include <algorithm>
#include <set>

#include "layout.hpp"
#include "tilt/generators.hpp"

namespace tilt {

int SimulationInstance::state_of(Pixel p) const {
    for (size_t q = 0; q < reps.size(); ++q)
        if (reps[q] == p) return static_cast<int>(q);
    return -1;
}

Config SimulationInstance::reps_config(const std::vector<int>& states) const {
    std::vector<Pixel> px;
    for (int q : states) px.push_back(reps.at(q));
    return make_config(P, px);
}

SemiAutomaton example_automaton_a0() {
    SemiAutomaton A = make_automaton(3, {"0", "1"});
    A.delta[0] = {1, 2, 2};
    A.delta[1] = {0, 1, 2};
    return A;
}

Acceptor example_acceptor_a0() {
    Acceptor acc;
    acc.a = example_automaton_a0();
    acc.initial = 0;
    acc.accepting = {1};
    return acc;
}

namespace {

void check_binary(const SemiAutomaton& A) {
    if (A.k() != 2 || A.n < 1) throw Error(ErrorKind::InvalidAlphabet, "simulation needs a binary automaton with at least one state");
    for (auto& row : A.delta)
        for (int q : row)
            if (q < 0 || q >= A.n) throw Error(ErrorKind::InvalidAlphabet, "transition leaves the state set");
}

// Three stacked blocks. States sit on even rows of the middle block, q_{K-1} at the bottom.
// Column x_i carries q_i up into the top row R_i and down into the bottom row B_i; the right
// ends c_i (top) and d_i (bottom) drop into the target state's row onto a hole.
struct SimLayout {
    int K;
    int x(int i) const { return 2 * (K - 1 - i); }
    int d(int i) const { return x(0) + 1 + 2 * i; }
    int c(int i) const { return x(0) + 2 * K + 1 + 2 * i; }
    int W() const { return c(K - 1) + 3; }
    int y(int i) const { return 2 * (K - 1 - i); }
};

// Row order of the states: the bottom row goes to a state with exactly one 0-preimage when
// there is one, which keeps one hole per transition apart from that single natural stop.
std::vector<int> row_order(const SemiAutomaton& A) {
    std::vector<int> pre(A.n, 0);
    for (int q = 0; q < A.n; ++q) ++pre[A.delta[0][q]];
    std::vector<int> order(A.n);
    for (int q = 0; q < A.n; ++q) order[q] = q;
    auto it = std::find(pre.begin(), pre.end(), 1);
    if (it != pre.end()) {
        int s = static_cast<int>(it - pre.begin());
        order.erase(order.begin() + s);
        order.push_back(s);
    }
    return order;
}

std::vector<Pixel> block_layout(const SemiAutomaton& A, std::vector<Pixel>& reps) {
    SimLayout L{A.n};
    int K = A.n, W = L.W();
    std::vector<int> order = row_order(A), pos(K);
    for (int r = 0; r < K; ++r) pos[order[r]] = r;
    std::set<Pixel> V, holes;
    int top = 2 * K - 1;  // spacer above the top state row
    for (int yy = 0; yy <= top; ++yy) {
        bool stateRow = yy % 2 == 0 && yy <= 2 * K - 2;
        for (int xx = 0; xx < (stateRow ? W : yy == top ? W - 2 : W - 1); ++xx) V.insert({xx, yy});
    }
    for (int i = 0; i < K; ++i) {
        for (int xx = L.x(i); xx <= L.c(i); ++xx) V.insert({xx, top + 1 + (K - 1 - i)});
        for (int xx = L.x(i); xx <= L.d(i); ++xx) V.insert({xx, -1 - (K - 1 - i)});
        if (i != K - 1) holes.insert({L.x(i) - 1, L.y(i)});
    }
    for (int q = 0; q < K; ++q) {
        int i = pos[q], j0 = pos[A.delta[0][q]], j1 = pos[A.delta[1][q]];
        if (j0 != K - 1) holes.insert({L.c(i), L.y(j0) - 1});
        holes.insert({L.d(i), L.y(j1) + 1});
    }
    for (auto h : holes) V.erase(h);
    reps.assign(K, {});
    for (int q = 0; q < K; ++q) reps[q] = {L.x(pos[q]), L.y(pos[q])};
    return {V.begin(), V.end()};
}

// Corridor version of the same routes on a doubled grid. Every turn happens at a junction,
// so each line that ends on another gets a one-pixel stub past the junction.
std::vector<Pixel> maze_layout(const SemiAutomaton& A, std::vector<Pixel>& reps) {
    int K = A.n;
    std::vector<int> order = row_order(A), pos(K);
    for (int r = 0; r < K; ++r) pos[order[r]] = r;
    auto X = [&](int i) { return 2 * (K - 1 - i); };
    auto D = [&](int i) { return X(0) + 2 + 2 * i; };
    auto C = [&](int i) { return D(K - 1) + 2 + 2 * i; };
    auto Y = [&](int i) { return 2 * (K - 1 - i); };
    auto T = [&](int i) { return 2 * K + 2 * (K - 1 - i); };
    auto B = [&](int i) { return -2 - 2 * (K - 1 - i); };
    int E = C(K - 1) + 2;
    std::set<Pixel> V;
    auto hline = [&](int y, int a, int b) {
        for (int x = a; x <= b; ++x) V.insert({x, y});
    };
    auto vline = [&](int x, int a, int b) {
        for (int y = std::min(a, b); y <= std::max(a, b); ++y) V.insert({x, y});
    };
    for (int i = 0; i < K; ++i) {
        hline(Y(i), X(i), E);
        vline(X(i), B(i), T(i));
        hline(T(i), X(i) - 1, C(i));
        hline(B(i), X(i) - 1, D(i));
    }
    for (int q = 0; q < K; ++q) {
        int i = pos[q];
        vline(C(i), T(i) + 1, Y(pos[A.delta[0][q]]));
        vline(D(i), B(i) - 1, Y(pos[A.delta[1][q]]));
    }
    reps.assign(K, {});
    for (int q = 0; q < K; ++q) reps[q] = {X(pos[q]), Y(pos[q])};
    return {V.begin(), V.end()};
}

}  // namespace

SimulationInstance gen_simulation(const SemiAutomaton& A, bool maze) {
    check_binary(A);
    SimulationInstance inst;
    inst.source = A;
    inst.isMaze = maze;
    std::vector<Pixel> reps;
    std::vector<Pixel> V = maze ? maze_layout(A, reps) : block_layout(A, reps);
    Pixel shift = detail::origin_shift(V);
    inst.P = Polyomino(detail::shifted(V, shift));
    for (auto& r : reps) r = {r.x - shift.x, r.y - shift.y};
    inst.reps = reps;

    const Polyomino& P = inst.P;
    for (int q = 0; q < A.n; ++q) {
        int r = P.index(reps[q]);
        if (P.pixel(singleton_apply(P, r, "URDL", Model::FT)) != reps[A.delta[0][q]] ||
            P.pixel(singleton_apply(P, r, "DRUL", Model::FT)) != reps[A.delta[1][q]])
            throw Error(ErrorKind::VerificationFailed, "representative of state " + std::to_string(q) + " does not follow its transitions");
    }
    Config img = apply(P, full_config(P), "RDRUL", kFTMerge);
    for (int p : img)
        if (inst.state_of(P.pixel(p)) < 0)
            throw Error(ErrorKind::VerificationFailed, "RDRUL leaves a particle outside the representatives");
    if (maze && !classify(P).maze) throw Error(ErrorKind::VerificationFailed, "corridor layout is not a maze");
    return inst;
}

std::string canonicalize_cycle_word(const SimulationInstance& inst, const std::string& w) {
    const Polyomino& P = inst.P;
    const SemiAutomaton& A = inst.source;
    int start = -1;
    for (int q = 0; q < A.n && start < 0; ++q)
        if (inst.state_of(P.pixel(singleton_apply(P, P.index(inst.reps[q]), w, Model::FT))) >= 0) start = q;
    if (start < 0) throw Error(ErrorKind::NotRepresentativeClosed, "no representative returns to a representative");

    std::string out;
    int q = start, p = P.index(inst.reps[q]);
    int viaURD = singleton_apply(P, p, "URD", Model::FT);
    int viaDRU = singleton_apply(P, p, "DRU", Model::FT);
    bool saw0 = false, saw1 = false;
    for (char ch : w) {
        p = P.slide(p, dir_from_char(ch));
        saw0 = saw0 || p == viaURD;
        saw1 = saw1 || p == viaDRU;
        int r = inst.state_of(P.pixel(p));
        if (r < 0) continue;
        // a leg ends here; name it after the transition it realizes
        bool is0 = r == A.delta[0][q], is1 = r == A.delta[1][q];
        if (is0 && (!is1 || saw0 || !saw1) && (saw0 || r != q)) out += "URDL";
        else if (is1 && (saw1 || r != q)) out += "DRUL";
        else if (r != q) throw Error(ErrorKind::VerificationFailed, "leg between representatives is not a transition");
        q = r;
        viaURD = singleton_apply(P, p, "URD", Model::FT);
        viaDRU = singleton_apply(P, p, "DRU", Model::FT);
        saw0 = saw1 = false;
    }
    for (int s = 0; s < A.n; ++s) {
        int a = P.index(inst.reps[s]);
        if (singleton_apply(P, a, w, Model::FT) != singleton_apply(P, a, out, Model::FT))
            throw Error(ErrorKind::VerificationFailed, "canonical word disagrees with the input on a representative");
    }
    return out;
}

}  // namespace tilt
