#pragma once

#include <map>
#include <vector>

#include "polygame/capacity.hpp"
#include "polygame/chain.hpp"
#include "polygame/polynomial.hpp"
#include "polygame/synth.hpp"
#include "polygame/witness.hpp"

namespace polygame {

// 3-player encoding: Alice's coordinates carry the variety point, Bob's
// carry the scaled Horner intermediates, and Critter's equations are the
// gadget chain. Alice's and Bob's own equations pin Critter's coordinates
// to 1/(D+1); when m > n the leftover Critter coordinates form a free
// simplex factor recorded in the witness.
struct ThreePlayerEncoding {
    Game game;
    EncodingWitness witness;
    ThreePlayerCapacity capacity;
    std::vector<ChainStep> steps;
    std::vector<AffineScaling> scalings;  // per Define step, in step order
};

ThreePlayerEncoding encode_three_player(const PolySystem& sys);

// A multilinear equation over binary players: sorted sets of 0-based
// player ids mapped to coefficients. The empty set is the constant term.
struct BinaryEquation {
    int owner = -1;
    std::map<std::vector<int>, Rational> terms;

    void add(std::vector<int> players, const Rational& c);
    bool mentions(int player) const;

    friend bool operator==(const BinaryEquation& a, const BinaryEquation& b) {
        return a.owner == b.owner && a.terms == b.terms;
    }
};

// Binary-game encoding: one 2-strategy player per original variable, per
// power-chain variable, and (with the reduction active) per equation. The
// emitted equation list is exposed for structural inspection.
struct BinaryEncoding {
    Game game;
    EncodingWitness witness;
    BinaryCapacity capacity;
    std::vector<BinaryEquation> equations;  // equations[i] is player i's
};

// reduce_players trims the player count to D' + m when n > m by letting
// the variable players appear in the substituted equations and assigning
// those equations to m fresh players pinned at 1/2.
BinaryEncoding encode_binary(const PolySystem& sys, bool reduce_players = false);

// Compact univariate encoding for alpha_0 + alpha_1 a + ... + alpha_d a^d:
// formats (2, ceil(d/2)+1, ceil(d/2)+1). Bob and Critter split the Horner
// ladder; Alice's single equation transfers the running value between them.
struct UnivariateEncoding {
    Game game;
    EncodingWitness witness;
    int e = 0;  // ceil(d/2)
    bool odd = false;
    std::vector<AffineScaling> slot_scalings;  // slot k holds the k-th ladder value
};

UnivariateEncoding encode_univariate(const std::vector<Rational>& coeffs);

// Assigns equations to owners so that no owner's variable occurs in its
// assigned equation, via deterministic augmenting-path matching.
// equation_vars[q] lists the variable ids occurring in equation q.
struct EquationAssignment {
    std::vector<int> equation_of_owner;
};

EquationAssignment assign_equations(const std::vector<std::vector<int>>& equation_vars,
                                    const std::vector<int>& owner_vars);

}  // namespace polygame
