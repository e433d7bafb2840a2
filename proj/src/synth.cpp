#include "polygame/synth.hpp"

#include <stdexcept>
#include <type_traits>

namespace polygame {

namespace {

std::size_t product(const std::vector<int>& shape) {
    std::size_t s = 1;
    for (int k : shape) s *= static_cast<std::size_t>(k);
    return s;
}

std::vector<std::size_t> strides_of(const std::vector<int>& shape) {
    std::vector<std::size_t> strides(shape.size(), 1);
    for (std::size_t a = shape.size(); a-- > 1;)
        strides[a - 1] = strides[a] * static_cast<std::size_t>(shape[a]);
    return strides;
}

// In-place zeta transform along one axis: entry at index v >= 1 gains the
// index-0 entry. `invert` applies the Moebius inverse instead.
void sweep_axis(std::vector<Rational>& arr, const std::vector<int>& shape, std::size_t axis,
                bool invert) {
    const auto strides = strides_of(shape);
    const std::size_t stride = strides[axis];
    const int extent = shape[axis];
    if (extent <= 1) return;
    for (std::size_t idx = 0; idx < arr.size(); ++idx) {
        if ((idx / stride) % static_cast<std::size_t>(extent) != 0) continue;
        for (int v = 1; v < extent; ++v) {
            if (invert)
                arr[idx + static_cast<std::size_t>(v) * stride] -= arr[idx];
            else
                arr[idx + static_cast<std::size_t>(v) * stride] += arr[idx];
        }
    }
}

std::vector<int> others_shape(int player, const std::vector<int>& counts) {
    std::vector<int> shape;
    shape.reserve(counts.size() - 1);
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (static_cast<int>(k) != player) shape.push_back(counts[k]);
    return shape;
}

template <typename T>
T eval_equation_impl(const MultilinearEquation& eq, const StrategyProfile<T>& p) {
    const std::vector<std::size_t> strides = strides_of(eq.shape);
    T total(0);
    for (std::size_t idx = 0; idx < eq.coeffs.size(); ++idx) {
        if (eq.coeffs[idx] == 0) continue;
        T term;
        if constexpr (std::is_same_v<T, Rational>)
            term = eq.coeffs[idx];
        else
            term = to_double(eq.coeffs[idx]);
        std::size_t axis = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (static_cast<int>(k) == eq.owner) continue;
            std::size_t j = (idx / strides[axis]) % static_cast<std::size_t>(eq.shape[axis]);
            if (j != 0) term = term * p[k][j];
            ++axis;
        }
        total = total + term;
    }
    return total;
}

}  // namespace

MultilinearEquation MultilinearEquation::zero(int owner, int index,
                                              const std::vector<int>& all_counts) {
    MultilinearEquation eq;
    eq.owner = owner;
    eq.index = index;
    eq.shape = others_shape(owner, all_counts);
    eq.coeffs.assign(product(eq.shape), Rational(0));
    return eq;
}

std::size_t MultilinearEquation::flat(const std::vector<int>& multi) const {
    if (multi.size() != shape.size()) throw std::invalid_argument("multi-index arity mismatch");
    std::size_t idx = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) {
        if (multi[a] < 0 || multi[a] >= shape[a])
            throw std::out_of_range("multi-index component out of range");
        idx = idx * static_cast<std::size_t>(shape[a]) + static_cast<std::size_t>(multi[a]);
    }
    return idx;
}

std::vector<Rational> payoffs_from_equations(int player,
                                             const std::vector<MultilinearEquation>& eqs,
                                             const std::vector<int>& strategy_counts) {
    const int players = static_cast<int>(strategy_counts.size());
    if (player < 0 || player >= players) throw std::out_of_range("player index out of range");
    const int own_count = strategy_counts[static_cast<std::size_t>(player)];
    if (static_cast<int>(eqs.size()) != own_count - 1)
        throw std::invalid_argument("need exactly one equation per non-first own strategy");
    const std::vector<int> shape = others_shape(player, strategy_counts);
    const std::size_t block = product(shape);

    std::vector<Rational> tensor(block * static_cast<std::size_t>(own_count), Rational(0));
    std::vector<bool> seen(eqs.size(), false);
    for (const MultilinearEquation& eq : eqs) {
        if (eq.owner != player) throw std::invalid_argument("equation owned by the wrong player");
        if (eq.index < 1 || eq.index > own_count - 1 || seen[static_cast<std::size_t>(eq.index - 1)])
            throw std::invalid_argument("equation indices must cover 1..d exactly once");
        seen[static_cast<std::size_t>(eq.index - 1)] = true;
        if (eq.shape != shape) throw std::invalid_argument("equation shape disagrees with formats");
        std::vector<Rational> row = eq.coeffs;
        for (std::size_t a = 0; a < shape.size(); ++a) sweep_axis(row, shape, a, false);
        // Scatter the opponent-profile block into the full tensor at own
        // strategy eq.index; the full layout orders the own axis among the
        // others, all axes last-player-fastest.
        std::vector<int> full_counts = strategy_counts;
        std::vector<int> pure(static_cast<std::size_t>(players), 0);
        pure[static_cast<std::size_t>(player)] = eq.index;
        const auto other_strides = strides_of(shape);
        for (std::size_t pos = 0; pos < block; ++pos) {
            std::size_t axis = 0;
            for (int k = 0; k < players; ++k) {
                if (k == player) continue;
                pure[static_cast<std::size_t>(k)] = static_cast<int>(
                    (pos / other_strides[axis]) % static_cast<std::size_t>(shape[axis]));
                ++axis;
            }
            std::size_t idx = 0;
            for (int k = 0; k < players; ++k)
                idx = idx * static_cast<std::size_t>(full_counts[static_cast<std::size_t>(k)]) +
                      static_cast<std::size_t>(pure[static_cast<std::size_t>(k)]);
            tensor[idx] = row[pos];
        }
    }
    return tensor;
}

std::vector<MultilinearEquation> equations_from_payoffs(const Game& game, int player) {
    game.validate();
    const int own_count = game.strategy_counts[static_cast<std::size_t>(player)];
    const std::vector<int> shape = others_shape(player, game.strategy_counts);
    const std::size_t block = product(shape);
    const auto other_strides = strides_of(shape);

    std::vector<MultilinearEquation> eqs;
    for (int j = 1; j < own_count; ++j) {
        MultilinearEquation eq = MultilinearEquation::zero(player, j, game.strategy_counts);
        std::vector<int> pure(static_cast<std::size_t>(game.players), 0);
        for (std::size_t pos = 0; pos < block; ++pos) {
            std::size_t axis = 0;
            for (int k = 0; k < game.players; ++k) {
                if (k == player) continue;
                pure[static_cast<std::size_t>(k)] = static_cast<int>(
                    (pos / other_strides[axis]) % static_cast<std::size_t>(shape[axis]));
                ++axis;
            }
            pure[static_cast<std::size_t>(player)] = j;
            Rational diff = game.payoff(player, pure);
            pure[static_cast<std::size_t>(player)] = 0;
            diff -= game.payoff(player, pure);
            eq.coeffs[pos] = diff;
        }
        for (std::size_t a = 0; a < shape.size(); ++a) sweep_axis(eq.coeffs, shape, a, true);
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

Rational eval_equation(const MultilinearEquation& eq, const MixedProfile& profile) {
    return eval_equation_impl(eq, profile.p);
}

double eval_equation(const MultilinearEquation& eq, const FloatProfile& profile) {
    return eval_equation_impl(eq, profile.p);
}

}  // namespace polygame
