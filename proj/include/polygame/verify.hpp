#pragma once

#include <string>
#include <vector>

#include "polygame/game.hpp"
#include "polygame/witness.hpp"

namespace polygame {

// Per-point equilibrium check of a witness against its game.
struct VerificationReport {
    struct Entry {
        std::string point_text;
        double max_residual = 0.0;
        bool residual_zero = false;  // exact mode only
        bool interior = false;
        bool pass = false;
        std::string note;  // replay failure, when any
    };
    std::vector<Entry> entries;
    int passed = 0;

    bool all_pass() const { return passed == static_cast<int>(entries.size()); }
    std::string to_text() const;
};

// Replays the witness at every point and evaluates the game's indifference
// residuals. Exact mode demands tol = 0 and exact zeros; points that fall
// outside the open box fail with a note instead of aborting the report.
VerificationReport check_points(const Game& game, const EncodingWitness& witness,
                                const std::vector<std::vector<Rational>>& points,
                                const Rational& tol = Rational(0));
VerificationReport check_points(const Game& game, const EncodingWitness& witness,
                                const std::vector<std::vector<double>>& points, double tol);

// Scans t = i/(resolution-1), i = 0..resolution-1, through the witness's
// single input coordinate (float replay) and returns the coordinates whose
// profiles pass: residuals within tol and every probability interior.
// Boundary grid points fail the interiority check naturally.
std::vector<double> grid_completeness(const Game& game, const EncodingWitness& witness,
                                      int resolution, double tol);

// Groups sorted passing coordinates into clusters: points within
// radius_steps grid steps of the previous one extend its cluster.
int count_clusters(const std::vector<double>& passing, double step, int radius_steps);

}  // namespace polygame
