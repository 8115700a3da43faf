#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "tilt/dynamics.hpp"
#include "tilt/geometry.hpp"

namespace tilt {

using Word = std::vector<int>;

struct SemiAutomaton {
    int n = 0;
    std::vector<std::string> letters;
    std::vector<std::vector<int>> delta;  // delta[letter][state]
    std::vector<std::string> labels;

    int k() const { return static_cast<int>(letters.size()); }
    int next(int q, int a) const { return delta[a][q]; }
    int run(int q, const Word& w) const;
    std::vector<int> image(const std::vector<int>& states, const Word& w) const;
    std::string word_string(const Word& w) const;
    Word parse_word(const std::string& s) const;
    int letter_index(const std::string& name) const;
};

struct Acceptor {
    SemiAutomaton a;
    int initial = 0;
    std::vector<int> accepting;
    bool accepts(const Word& w) const;
    bool is_accepting(int q) const;
};

SemiAutomaton make_automaton(int n, std::vector<std::string> letters);

struct TiltAutomaton {
    SemiAutomaton a;  // letters U,D,L,R in Dir order
    std::vector<Pixel> pixels;
    std::vector<bool> helper;
    int state_of(Pixel p) const;  // -1 if not a state
};

TiltAutomaton build_tilt_automaton(const Boundary& b);
TiltAutomaton build_tilt_automaton(const BoundaryIndex& bi);
TiltAutomaton build_s1_automaton(const Polyomino& P);
Word word_from_moves(const std::string& moves);
std::string moves_from_word(const Word& w);

struct PairAutomaton {
    int n = 0;
    std::vector<int> dist;    // -1 if the pair cannot be merged
    std::vector<int> letter;  // first letter on a shortest merging path
    std::vector<int> parent;  // pair reached by that letter
    std::vector<int> first, second;

    int index(int p, int q) const {
        if (p > q) std::swap(p, q);
        return p * n - p * (p - 1) / 2 + (q - p);
    }
    int size() const { return n * (n + 1) / 2; }
    std::pair<int, int> members(int idx) const { return {first[idx], second[idx]}; }
    int distance(int p, int q) const { return dist[index(p, q)]; }
    Word merging_word(int p, int q) const;
};

PairAutomaton pair_automaton(const SemiAutomaton& A);
bool is_synchronizing(const SemiAutomaton& A);
bool is_synchronizing(const PairAutomaton& pa);

// Greedy pair merging starting from the state set X; the merged pair is always the
// one with the smallest forest distance, ties broken lexicographically.
std::optional<Word> greedy_merge(const SemiAutomaton& A, const PairAutomaton& pa, std::vector<int> X,
                                 std::vector<int>* finalState = nullptr);
std::optional<Word> synchronizing_word(const SemiAutomaton& A);

inline constexpr long long kDefaultSubsetBudget = 1LL << 22;

struct ResetResult {
    int length = 0;
    Word word;
};

std::optional<ResetResult> reset_threshold_exact(const SemiAutomaton& A, const std::vector<int>& S,
                                                 long long budget = kDefaultSubsetBudget);

struct TallyAutomaton {
    int rho = 0;
    std::vector<int> accepting;
    int initial = 0;
    bool accepts_length(long long l) const;
    bool is_accepting(int j) const;
    Acceptor acceptor() const;
};

TallyAutomaton tally_cycle(int rho, std::vector<int> accepting, int initial);
// Same automaton with states renumbered so that state 0 is rejecting.
TallyAutomaton tally_renumbered(int rho, std::vector<int> accepting, int initial);
std::optional<long long> tally_intersection_smallest(const std::vector<TallyAutomaton>& as, long long bound);
std::optional<long long> tally_intersection_scan(const std::vector<TallyAutomaton>& as, long long bound);

struct EulerianReport {
    bool eulerian = false;
    bool synchronizing = false;
    long long witnessLength = -1;
    bool exact = false;
    long long kariBound = 0;
    bool withinBound = false;
};

EulerianReport check_eulerian_bound(const SemiAutomaton& A, long long budget = kDefaultSubsetBudget);

std::string format_automaton(const Acceptor& acc, bool withAcceptor = true);
Acceptor parse_automaton(const std::string& text);

}  // namespace tilt
