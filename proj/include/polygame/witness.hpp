#pragma once

#include <string>
#include <vector>

#include "polygame/chain.hpp"
#include "polygame/game.hpp"

namespace polygame {

// Replayable program reconstructing a full mixed profile from a point of
// the encoded variety: copy the point into the mapped coordinates, run the
// chain, apply fixed and balance assignments, fill the free block with the
// uniform center, and derive each player's first-strategy probability.

struct WitnessMapEntry {
    int player = 0;
    int strat = 0;
    int coord = 0;  // profile[player][strat] = point[coord]
};

struct WitnessStep {
    bool constrain = false;    // value must vanish on the variety
    int target_player = -1;    // probability slot receiving the value
    int target_strat = -1;
    int mult_coord = -1;       // multiplies operand by point[mult_coord]
    ChainOperand operand;      // refs index earlier witness steps
    ChainOperand addend;
    Rational s = 1;            // probability = (raw - delta) / s
    Rational delta = 0;
};

struct FixedEntry {
    int player = 0;
    int strat = 0;
    Rational value;
};

// probability = base + coef * (sum of the player's already assigned
// probabilities over strategies >= 1).
struct BalanceEntry {
    int player = 0;
    int strat = 0;
    Rational base;
    Rational coef;
};

struct EncodingWitness {
    std::string method;  // "3p" | "np" | "1d"
    bool sum_constrained = true;  // input coordinates must sum below 1
    int coord_dim = 0;
    std::vector<int> strategy_counts;
    std::vector<WitnessMapEntry> map;
    std::vector<WitnessStep> chain;
    std::vector<FixedEntry> fixed;
    std::vector<BalanceEntry> balance;
    int simplex_dim = 0;  // number of free coordinates (filled at replay)
};

struct ReplayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws ReplayError when the point lies outside the open box. A point off
// the variety replays fine; its nonzero residuals surface when the profile
// is checked against the game.
MixedProfile replay_witness(const EncodingWitness& witness, const std::vector<Rational>& point);
FloatProfile replay_witness(const EncodingWitness& witness, const std::vector<double>& point);

std::string serialize_witness(const EncodingWitness& witness);
EncodingWitness deserialize_witness(const std::string& text);

}  // namespace polygame
