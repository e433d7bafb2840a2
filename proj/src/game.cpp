#include "polygame/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polygame {

namespace {

template <typename T>
T from_rational(const Rational& r);
template <>
Rational from_rational<Rational>(const Rational& r) {
    return r;
}
template <>
double from_rational<double>(const Rational& r) {
    return to_double(r);
}

template <typename T>
T abs_value(const T& v) {
    return v < T(0) ? -v : v;
}

void check_dims(const Game& game, std::size_t rows) {
    if (static_cast<int>(rows) != game.players)
        throw std::invalid_argument("profile has wrong number of players");
}

template <typename T>
void check_profile(const Game& game, const StrategyProfile<T>& p) {
    check_dims(game, p.size());
    for (int i = 0; i < game.players; ++i)
        if (static_cast<int>(p[static_cast<std::size_t>(i)].size()) !=
            game.strategy_counts[static_cast<std::size_t>(i)])
            throw std::invalid_argument("profile row has wrong strategy count");
}

// Walks all pure profiles of the players other than `skip` and calls
// fn(pure, prob_product). `pure[skip]` is left untouched.
template <typename T, typename Fn>
void for_each_opponent_profile(const Game& game, const StrategyProfile<T>& p, int skip, Fn&& fn) {
    std::vector<int> pure(static_cast<std::size_t>(game.players), 0);
    // Recursive descent kept iterative via an explicit odometer.
    while (true) {
        T prod(1);
        for (int k = 0; k < game.players; ++k)
            if (k != skip)
                prod = prod * p[static_cast<std::size_t>(k)]
                              [static_cast<std::size_t>(pure[static_cast<std::size_t>(k)])];
        fn(pure, prod);
        int k = game.players - 1;
        while (k >= 0) {
            if (k == skip) {
                --k;
                continue;
            }
            if (++pure[static_cast<std::size_t>(k)] <
                game.strategy_counts[static_cast<std::size_t>(k)])
                break;
            pure[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) return;
    }
}

template <typename T>
T expected_payoff_impl(const Game& game, int player, const StrategyProfile<T>& p) {
    check_profile(game, p);
    T total(0);
    for_each_opponent_profile(game, p, -1, [&](const std::vector<int>& pure, const T& prod) {
        total = total + prod * from_rational<T>(game.payoff(player, pure));
    });
    return total;
}

template <typename T>
T pure_vs_profile_impl(const Game& game, int player, int j, const StrategyProfile<T>& p) {
    check_profile(game, p);
    if (j < 0 || j >= game.strategy_counts[static_cast<std::size_t>(player)])
        throw std::out_of_range("pure strategy index out of range");
    T total(0);
    for_each_opponent_profile(game, p, player, [&](std::vector<int>& pure, const T& prod) {
        pure[static_cast<std::size_t>(player)] = j;
        total = total + prod * from_rational<T>(game.payoff(player, pure));
    });
    return total;
}

template <typename T>
bool interior_entry(const T& v) {
    return v > T(0) && v < T(1);
}

template <typename T>
ResidualReportT<T> residuals_impl(const Game& game, const StrategyProfile<T>& p) {
    check_profile(game, p);
    ResidualReportT<T> report;
    report.residuals.resize(static_cast<std::size_t>(game.players));
    report.interior.resize(static_cast<std::size_t>(game.players));
    report.max_abs = T(0);
    for (int i = 0; i < game.players; ++i) {
        const int count = game.strategy_counts[static_cast<std::size_t>(i)];
        auto& interior_row = report.interior[static_cast<std::size_t>(i)];
        interior_row.resize(static_cast<std::size_t>(count), true);
        if (count >= 2) {
            for (int s = 0; s < count; ++s) {
                bool ok = interior_entry(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]);
                interior_row[static_cast<std::size_t>(s)] = ok;
                if (!ok) report.all_interior = false;
            }
        }
        if (count < 2) continue;
        auto& row = report.residuals[static_cast<std::size_t>(i)];
        std::vector<T> pure_payoffs(static_cast<std::size_t>(count), T(0));
        for_each_opponent_profile(game, p, i, [&](std::vector<int>& pure, const T& prod) {
            for (int j = 0; j < count; ++j) {
                pure[static_cast<std::size_t>(i)] = j;
                pure_payoffs[static_cast<std::size_t>(j)] =
                    pure_payoffs[static_cast<std::size_t>(j)] +
                    prod * from_rational<T>(game.payoff(i, pure));
            }
        });
        row.reserve(static_cast<std::size_t>(count - 1));
        for (int j = 1; j < count; ++j) {
            T r = pure_payoffs[static_cast<std::size_t>(j)] - pure_payoffs[0];
            T a = abs_value(r);
            if (a > report.max_abs) report.max_abs = a;
            row.push_back(std::move(r));
        }
    }
    return report;
}

template <typename T>
StrategyProfile<T> from_free_impl(const std::vector<int>& counts,
                                  const StrategyProfile<T>& free_rows) {
    if (free_rows.size() != counts.size())
        throw std::invalid_argument("free rows have wrong player count");
    StrategyProfile<T> full(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (static_cast<int>(free_rows[i].size()) != counts[i] - 1)
            throw std::invalid_argument("free row has wrong length");
        T rest(0);
        for (const T& v : free_rows[i]) rest = rest + v;
        full[i].reserve(static_cast<std::size_t>(counts[i]));
        full[i].push_back(T(1) - rest);
        for (const T& v : free_rows[i]) full[i].push_back(v);
    }
    return full;
}

}  // namespace

void Game::validate() const {
    if (players < 1) throw std::invalid_argument("game needs at least one player");
    if (static_cast<int>(strategy_counts.size()) != players ||
        static_cast<int>(payoffs.size()) != players)
        throw std::invalid_argument("game field sizes disagree with player count");
    for (int k : strategy_counts)
        if (k < 1) throw std::invalid_argument("strategy count must be at least 1");
    for (const auto& tensor : payoffs)
        if (tensor.size() != tensor_size())
            throw std::invalid_argument("payoff tensor size does not match strategy counts");
}

MixedProfile profile_from_free(const std::vector<int>& counts,
                               const StrategyProfile<Rational>& free_rows) {
    return MixedProfile{from_free_impl(counts, free_rows)};
}

FloatProfile profile_from_free(const std::vector<int>& counts,
                               const StrategyProfile<double>& free_rows) {
    return FloatProfile{from_free_impl(counts, free_rows)};
}

FloatProfile to_float(const MixedProfile& profile) {
    FloatProfile out;
    out.p.resize(profile.p.size());
    for (std::size_t i = 0; i < profile.p.size(); ++i)
        for (const Rational& v : profile.p[i]) out.p[i].push_back(to_double(v));
    return out;
}

Rational expected_payoff(const Game& game, int player, const MixedProfile& profile) {
    return expected_payoff_impl(game, player, profile.p);
}
double expected_payoff(const Game& game, int player, const FloatProfile& profile) {
    return expected_payoff_impl(game, player, profile.p);
}

Rational pure_vs_profile_payoff(const Game& game, int player, int j, const MixedProfile& profile) {
    return pure_vs_profile_impl(game, player, j, profile.p);
}
double pure_vs_profile_payoff(const Game& game, int player, int j, const FloatProfile& profile) {
    return pure_vs_profile_impl(game, player, j, profile.p);
}

ResidualReport indifference_residuals(const Game& game, const MixedProfile& profile) {
    return residuals_impl(game, profile.p);
}
ResidualReportF indifference_residuals(const Game& game, const FloatProfile& profile) {
    return residuals_impl(game, profile.p);
}

bool is_totally_mixed_equilibrium(const Game& game, const MixedProfile& profile,
                                  const Rational& tol) {
    if (tol != 0) throw std::invalid_argument("exact mode requires tol = 0");
    ResidualReport report = indifference_residuals(game, profile);
    return report.all_interior && report.max_abs == 0;
}

bool is_totally_mixed_equilibrium(const Game& game, const FloatProfile& profile, double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    ResidualReportF report = indifference_residuals(game, profile);
    return report.all_interior && report.max_abs <= tol;
}

std::string serialize_game(const Game& game) {
    game.validate();
    std::ostringstream os;
    os << "players: " << game.players << "\n";
    os << "strategies:";
    for (int k : game.strategy_counts) os << " " << k;
    os << "\n";
    for (int i = 0; i < game.players; ++i) {
        os << "payoffs " << (i + 1) << ":";
        for (const Rational& v : game.payoffs[static_cast<std::size_t>(i)])
            os << " " << to_string(v);
        os << "\n";
    }
    return os.str();
}

namespace {

// Whitespace token reader that tracks line numbers for error messages.
class TokenReader {
  public:
    explicit TokenReader(const std::string& text) : in_(text) {}

    bool next(std::string& tok) {
        tok.clear();
        char c;
        while (in_.get(c)) {
            if (c == '\n') ++line_;
            if (!std::isspace(static_cast<unsigned char>(c))) {
                tok.push_back(c);
                break;
            }
        }
        if (tok.empty()) return false;
        while (in_.get(c)) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                break;
            }
            tok.push_back(c);
        }
        return true;
    }

    std::string expect(const std::string& what) {
        std::string tok;
        if (!next(tok)) fail("unexpected end of file, expected " + what);
        return tok;
    }

    long expect_int(const std::string& what) {
        std::string tok = expect(what);
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            fail("expected an integer for " + what + ", got '" + tok + "'");
        }
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("game file, line " + std::to_string(line_) + ": " + msg);
    }

    int line() const { return line_; }

  private:
    std::istringstream in_;
    int line_ = 1;
};

}  // namespace

Game deserialize_game(const std::string& text) {
    TokenReader rd(text);
    Game game;
    if (rd.expect("'players:'") != "players:") rd.fail("expected 'players:'");
    game.players = static_cast<int>(rd.expect_int("player count"));
    if (game.players < 1) rd.fail("player count must be positive");
    if (rd.expect("'strategies:'") != "strategies:") rd.fail("expected 'strategies:'");
    for (int i = 0; i < game.players; ++i) {
        long k = rd.expect_int("strategy count");
        if (k < 1) rd.fail("strategy counts must be positive");
        game.strategy_counts.push_back(static_cast<int>(k));
    }
    const std::size_t tensor = game.tensor_size();
    game.payoffs.resize(static_cast<std::size_t>(game.players));
    for (int i = 0; i < game.players; ++i) {
        std::string label = rd.expect("'payoffs'");
        if (label != "payoffs") rd.fail("expected 'payoffs', got '" + label + "'");
        std::string idx = rd.expect("payoff player index");
        if (idx != std::to_string(i + 1) + ":")
            rd.fail("expected 'payoffs " + std::to_string(i + 1) + ":'");
        auto& row = game.payoffs[static_cast<std::size_t>(i)];
        row.reserve(tensor);
        for (std::size_t t = 0; t < tensor; ++t) {
            std::string tok = rd.expect("payoff value");
            try {
                row.push_back(parse_rational(tok));
            } catch (const std::exception& e) {
                rd.fail(e.what());
            }
        }
    }
    std::string extra;
    if (rd.next(extra)) rd.fail("trailing content '" + extra + "'");
    game.validate();
    return game;
}

}  // namespace polygame
