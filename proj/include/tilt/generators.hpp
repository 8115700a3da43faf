#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilt/automata.hpp"
#include "tilt/dynamics.hpp"
#include "tilt/geometry.hpp"

namespace tilt {

// ---- binary automata simulation ----

struct SimulationInstance {
    Polyomino P;
    std::vector<Pixel> reps;  // reps[q] represents state q
    SemiAutomaton source;
    bool isMaze = false;

    int state_of(Pixel p) const;
    Config reps_config(const std::vector<int>& states) const;
};

SimulationInstance gen_simulation(const SemiAutomaton& A, bool maze = false);
std::string canonicalize_cycle_word(const SimulationInstance& inst, const std::string& w);
SemiAutomaton example_automaton_a0();
Acceptor example_acceptor_a0();

// ---- tally automata reduction ----

struct TallyInstance {
    Polyomino P;
    Config C0;
    std::vector<std::vector<Pixel>> reps;  // reps[i][j] for automaton i, state j
    std::vector<Pixel> acceptingReps;
    std::vector<Pixel> goalColumn;         // bottom to top
    Pixel goalBottom;
    std::vector<TallyAutomaton> automata;
    bool asMaze = false;
};

TallyInstance gen_tally(const std::vector<TallyAutomaton>& automata, bool maze = false);
std::vector<TallyAutomaton> example_tally_pair();
std::vector<TallyAutomaton> gen_prime_tally(const std::vector<int>& primes);
std::vector<int> greedy_odd_primes(int count);

struct TiltCoverInstance {
    Polyomino P;
    Config C;
    Config target;
    std::string cycle = "LURD";
    TallyInstance base;
};

TiltCoverInstance gen_tiltcover(const std::vector<TallyAutomaton>& automata, bool maze = false);

struct OccupancyInstance {
    Polyomino P;
    Config C;
    int probe = -1;
    Config goal;
    TallyInstance base;
};

OccupancyInstance gen_occupancy_variant(const std::vector<TallyAutomaton>& automata, int k);

// ---- shortest common supersequence reductions ----

struct ScsInstance {
    Polyomino P;
    std::vector<Pixel> starts;  // deepest particle of each word's path
    std::vector<std::string> words;
    int bits = 1;               // symbol bit width of the general gadget
    bool binary = true;
    Config deep() const;
};

ScsInstance gen_scs_binary(const std::vector<std::string>& words);
ScsInstance gen_scs_general(const std::vector<std::vector<int>>& words, int sigmaSize);
// move word of one symbol gadget of the general construction
std::string scs_symbol_moves(int symbol, int bits);
int scs_general_length(int supersequenceLength, int bits);

// ---- lower bound family ----

struct LowerBoundInstance {
    Polyomino P;
    int m = 1;
    // class name ("p","q","r","s") -> index -> pixel; extras keyed separately
    std::map<std::string, std::vector<Pixel>> classes;
    std::map<std::string, Pixel> extras;  // "t", "t'"
    std::map<Pixel, int> idx;              // cyclic index of every annotated pixel
    std::map<Pixel, int> cls;              // congruence class of every annotated pixel
    int divergencePoints = 0;
};

LowerBoundInstance gen_lower_bound(int m, bool maze = false);

}  // namespace tilt
