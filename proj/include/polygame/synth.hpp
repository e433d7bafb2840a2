#pragma once

#include <vector>

#include "polygame/game.hpp"

namespace polygame {

// One prescribed indifference equation for a player: a dense coefficient
// tensor over the OTHER players' strategy indices 0..d_k (index 0 stands
// for the constant factor sigma_k^0 = 1). The owner's own strategies never
// index the tensor, which enforces the ownership rule structurally.
struct MultilinearEquation {
    int owner = 0;  // 0-based player
    int index = 1;  // which of the owner's equations, 1..d_owner
    std::vector<int> shape;  // counts of the other players, in player order
    std::vector<Rational> coeffs;  // flat, last axis fastest

    static MultilinearEquation zero(int owner, int index, const std::vector<int>& all_counts);

    std::size_t flat(const std::vector<int>& multi) const;
    Rational& at(const std::vector<int>& multi) { return coeffs[flat(multi)]; }
    const Rational& at(const std::vector<int>& multi) const { return coeffs[flat(multi)]; }
};

// Realizes the prescribed equations as a payoff tensor for the owner:
// the owner's first strategy pays zero everywhere, and against each pure
// opponent profile t the strategy-j payoff is the sum of lambda over all
// multi-indices J with J_k in {0, t_k} (the subset-sum induced by
// substituting sigma_k^0 = sum of player k's probabilities). The owner's
// exact indifference residuals at any profile then equal the prescribed
// multilinear forms.
std::vector<Rational> payoffs_from_equations(int player,
                                             const std::vector<MultilinearEquation>& eqs,
                                             const std::vector<int>& strategy_counts);

// Exact inverse on residual differences: recovers the lambda tensors of
// the equations a payoff tensor induces.
std::vector<MultilinearEquation> equations_from_payoffs(const Game& game, int player);

// Direct evaluation of an equation's left-hand side at a profile, with
// sigma^0 read as the constant 1.
Rational eval_equation(const MultilinearEquation& eq, const MixedProfile& profile);
double eval_equation(const MultilinearEquation& eq, const FloatProfile& profile);

}  // namespace polygame
