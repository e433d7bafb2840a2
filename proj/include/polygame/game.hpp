#pragma once

#include <string>
#include <vector>

#include "polygame/rational.hpp"

namespace polygame {

// Finite normal-form game with exact payoff tensors. Payoffs are stored
// flat per player, row-major with the LAST player's strategy index varying
// fastest; this fixes the file format byte-for-byte.
struct Game {
    int players = 0;
    std::vector<int> strategy_counts;
    std::vector<std::vector<Rational>> payoffs;  // payoffs[i][flat profile index]

    std::size_t tensor_size() const {
        std::size_t s = 1;
        for (int k : strategy_counts) s *= static_cast<std::size_t>(k);
        return s;
    }

    std::size_t flat_index(const std::vector<int>& pure) const {
        std::size_t idx = 0;
        for (int i = 0; i < players; ++i)
            idx = idx * static_cast<std::size_t>(strategy_counts[static_cast<std::size_t>(i)]) +
                  static_cast<std::size_t>(pure[static_cast<std::size_t>(i)]);
        return idx;
    }

    const Rational& payoff(int player, const std::vector<int>& pure) const {
        return payoffs[static_cast<std::size_t>(player)][flat_index(pure)];
    }

    void validate() const;
};

// Full probability vectors, one per player (entry 0 is the first pure
// strategy, so each row sums to 1).
template <typename T>
using StrategyProfile = std::vector<std::vector<T>>;

struct MixedProfile {
    StrategyProfile<Rational> p;
};

struct FloatProfile {
    StrategyProfile<double> p;
};

// Builds a full profile from the free coordinates sigma_i(s_ij), j >= 1;
// entry 0 becomes 1 - sum of the rest.
MixedProfile profile_from_free(const std::vector<int>& counts,
                               const StrategyProfile<Rational>& free_rows);
FloatProfile profile_from_free(const std::vector<int>& counts,
                               const StrategyProfile<double>& free_rows);

FloatProfile to_float(const MixedProfile& profile);

Rational expected_payoff(const Game& game, int player, const MixedProfile& profile);
double expected_payoff(const Game& game, int player, const FloatProfile& profile);

// Expected payoff with player's strategy replaced by the point mass on
// strategy j.
Rational pure_vs_profile_payoff(const Game& game, int player, int j, const MixedProfile& profile);
double pure_vs_profile_payoff(const Game& game, int player, int j, const FloatProfile& profile);

// Residual (i, j) = u_i(s_ij, sigma_-i) - u_i(s_i0, sigma_-i) for j = 1..d_i.
// A totally mixed equilibrium is exactly: all residuals zero and every
// probability strictly interior. Players with a single strategy contribute
// no residual rows and are exempt from the interiority check (their
// strategy simplex is a point).
template <typename T>
struct ResidualReportT {
    std::vector<std::vector<T>> residuals;  // [player][j-1]
    T max_abs{};
    std::vector<std::vector<bool>> interior;  // [player][strategy]
    bool all_interior = true;
};
using ResidualReport = ResidualReportT<Rational>;
using ResidualReportF = ResidualReportT<double>;

ResidualReport indifference_residuals(const Game& game, const MixedProfile& profile);
ResidualReportF indifference_residuals(const Game& game, const FloatProfile& profile);

// Exact mode: tol must be zero.
bool is_totally_mixed_equilibrium(const Game& game, const MixedProfile& profile,
                                  const Rational& tol = Rational(0));
bool is_totally_mixed_equilibrium(const Game& game, const FloatProfile& profile, double tol);

std::string serialize_game(const Game& game);
Game deserialize_game(const std::string& text);

}  // namespace polygame
