#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polygame/game.hpp"
#include "polygame/polynomial.hpp"

namespace testing {

// Deterministic generator for randomized checks.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long next(long n) { return static_cast<long>(gen() % static_cast<std::uint64_t>(n)); }

    polygame::Rational rational(long num_range = 9, long den_range = 9) {
        long num = next(2 * num_range + 1) - num_range;
        long den = 1 + next(den_range);
        return polygame::rat(num, den);
    }

    polygame::Rational nonzero_rational(long num_range = 9, long den_range = 9) {
        polygame::Rational r;
        do {
            r = rational(num_range, den_range);
        } while (r == 0);
        return r;
    }

    // Rational in the open (0,1).
    polygame::Rational unit_rational(long den_range = 64) {
        long den = 2 + next(den_range);
        long num = 1 + next(den - 1);
        return polygame::rat(num, den);
    }

    polygame::Polynomial polynomial(int n, int max_deg, int terms) {
        polygame::Polynomial p(n);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> exps(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] =
                static_cast<int>(next(max_deg + 1));
            p.add_term(polygame::Monomial(std::move(exps)), rational());
        }
        return p;
    }

    polygame::Polynomial nonzero_polynomial(int n, int max_deg, int terms) {
        polygame::Polynomial p;
        do {
            p = polynomial(n, max_deg, terms);
        } while (p.is_zero());
        return p;
    }

    std::vector<polygame::Rational> point(int n, long den_range = 64) {
        std::vector<polygame::Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(unit_rational(den_range));
        return x;
    }

    // Full profile rows with strictly positive entries summing to one.
    polygame::MixedProfile totally_mixed(const std::vector<int>& counts) {
        polygame::StrategyProfile<polygame::Rational> rows(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            polygame::Rational sum(0);
            std::vector<polygame::Rational> weights;
            for (int j = 0; j < counts[i]; ++j) {
                polygame::Rational w = polygame::rat(1 + next(9));
                weights.push_back(w);
                sum += w;
            }
            for (polygame::Rational& w : weights) rows[i].push_back(w / sum);
        }
        return polygame::MixedProfile{rows};
    }

    polygame::Game game(const std::vector<int>& counts) {
        polygame::Game g;
        g.players = static_cast<int>(counts.size());
        g.strategy_counts = counts;
        g.payoffs.resize(counts.size());
        for (auto& tensor : g.payoffs) {
            tensor.resize(g.tensor_size());
            for (auto& v : tensor) v = rational();
        }
        return g;
    }
};

}  // namespace testing
