#include "polygame/witness.hpp"

#include <sstream>
#include <type_traits>

namespace polygame {

namespace {

template <typename T>
T scalar_of(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
        return r;
    else
        return to_double(r);
}

template <typename T>
StrategyProfile<T> replay_impl(const EncodingWitness& w, const std::vector<T>& point) {
    if (static_cast<int>(point.size()) != w.coord_dim)
        throw ReplayError("point dimension does not match the witness map");
    T sum(0);
    for (const T& x : point) {
        if (!(x > T(0) && x < T(1))) throw ReplayError("point outside the open box");
        sum = sum + x;
    }
    if (w.sum_constrained && !(sum < T(1)))
        throw ReplayError("point coordinates do not sum below 1");

    const std::size_t players = w.strategy_counts.size();
    StrategyProfile<T> p(players);
    std::vector<std::vector<bool>> assigned(players);
    for (std::size_t i = 0; i < players; ++i) {
        p[i].assign(static_cast<std::size_t>(w.strategy_counts[i]), T(0));
        assigned[i].assign(static_cast<std::size_t>(w.strategy_counts[i]), false);
    }
    auto assign = [&](int player, int strat, const T& v) {
        auto& row = assigned[static_cast<std::size_t>(player)];
        if (strat < 1 || strat >= static_cast<int>(row.size()))
            throw ReplayError("witness assigns a strategy index out of range");
        if (row[static_cast<std::size_t>(strat)])
            throw ReplayError("witness assigns a probability twice");
        row[static_cast<std::size_t>(strat)] = true;
        p[static_cast<std::size_t>(player)][static_cast<std::size_t>(strat)] = v;
    };

    for (const WitnessMapEntry& e : w.map)
        assign(e.player, e.strat, point[static_cast<std::size_t>(e.coord)]);

    std::vector<T> raw;
    raw.reserve(w.chain.size());
    auto value_of = [&](const ChainOperand& op) -> T {
        if (op.is_ref) {
            if (op.ref < 0 || op.ref >= static_cast<int>(raw.size()))
                throw ReplayError("witness step references a later step");
            return raw[static_cast<std::size_t>(op.ref)];
        }
        return scalar_of<T>(op.value);
    };
    for (const WitnessStep& step : w.chain) {
        T v = value_of(step.operand);
        if (step.mult_coord >= 0) v = point[static_cast<std::size_t>(step.mult_coord)] * v;
        v = v + value_of(step.addend);
        raw.push_back(v);
        if (!step.constrain && step.target_player >= 0)
            assign(step.target_player, step.target_strat,
                   (v - scalar_of<T>(step.delta)) / scalar_of<T>(step.s));
    }

    for (const FixedEntry& e : w.fixed) assign(e.player, e.strat, scalar_of<T>(e.value));

    for (const BalanceEntry& e : w.balance) {
        T acc(0);
        const auto& row = assigned[static_cast<std::size_t>(e.player)];
        for (std::size_t sidx = 1; sidx < row.size(); ++sidx)
            if (row[sidx]) acc = acc + p[static_cast<std::size_t>(e.player)][sidx];
        assign(e.player, e.strat, scalar_of<T>(e.base) + scalar_of<T>(e.coef) * acc);
    }

    // Unassigned coordinates share the leftover mass uniformly with the
    // first strategy.
    for (std::size_t i = 0; i < players; ++i) {
        T used(0);
        int free = 0;
        for (std::size_t sidx = 1; sidx < assigned[i].size(); ++sidx) {
            if (assigned[i][sidx])
                used = used + p[i][sidx];
            else
                ++free;
        }
        if (free > 0) {
            T share = (T(1) - used) / T(free + 1);
            for (std::size_t sidx = 1; sidx < assigned[i].size(); ++sidx)
                if (!assigned[i][sidx]) {
                    p[i][sidx] = share;
                    used = used + share;
                }
        }
        p[i][0] = T(1) - used;
    }
    return p;
}

std::string operand_text(const ChainOperand& op) {
    return op.is_ref ? "#" + std::to_string(op.ref + 1) : to_string(op.value);
}

ChainOperand parse_operand(const std::string& tok) {
    if (!tok.empty() && tok[0] == '#') {
        int ref = std::stoi(tok.substr(1));
        if (ref < 1) throw std::invalid_argument("bad step reference " + tok);
        return ChainOperand::reference(ref - 1);
    }
    return ChainOperand::constant(parse_rational(tok));
}

}  // namespace

MixedProfile replay_witness(const EncodingWitness& witness, const std::vector<Rational>& point) {
    return MixedProfile{replay_impl(witness, point)};
}

FloatProfile replay_witness(const EncodingWitness& witness, const std::vector<double>& point) {
    return FloatProfile{replay_impl(witness, point)};
}

std::string serialize_witness(const EncodingWitness& w) {
    std::ostringstream os;
    os << "method: " << w.method << "\n";
    os << "box: " << (w.sum_constrained ? "simplex" : "cube") << "\n";
    os << "coords: " << w.coord_dim << "\n";
    os << "strategies:";
    for (int k : w.strategy_counts) os << " " << k;
    os << "\n";
    for (const WitnessMapEntry& e : w.map)
        os << "map: " << (e.player + 1) << " " << (e.strat) << " " << (e.coord + 1) << "\n";
    for (std::size_t t = 0; t < w.chain.size(); ++t) {
        const WitnessStep& s = w.chain[t];
        os << "chain: " << (t + 1) << " " << (s.constrain ? "constrain" : "define") << " ";
        if (s.target_player >= 0)
            os << (s.target_player + 1) << " " << s.target_strat << " ";
        else
            os << "- - ";
        if (s.mult_coord >= 0)
            os << "x" << (s.mult_coord + 1) << " ";
        else
            os << "- ";
        os << operand_text(s.operand) << " " << operand_text(s.addend) << " " << to_string(s.s)
           << " " << to_string(s.delta) << "\n";
    }
    for (const FixedEntry& e : w.fixed)
        os << "fixed: " << (e.player + 1) << " " << e.strat << " " << to_string(e.value) << "\n";
    for (const BalanceEntry& e : w.balance)
        os << "balance: " << (e.player + 1) << " " << e.strat << " " << to_string(e.base) << " "
           << to_string(e.coef) << "\n";
    os << "simplex: " << w.simplex_dim << "\n";
    return os.str();
}

EncodingWitness deserialize_witness(const std::string& text) {
    EncodingWitness w;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("witness file, line " + std::to_string(line_no) + ": " + msg);
    };
    bool saw_method = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string label;
        ls >> label;
        auto next = [&]() -> std::string {
            std::string tok;
            if (!(ls >> tok)) fail("missing field after '" + label + "'");
            return tok;
        };
        try {
            if (label == "method:") {
                w.method = next();
                saw_method = true;
            } else if (label == "box:") {
                std::string kind = next();
                if (kind != "simplex" && kind != "cube") fail("unknown box kind '" + kind + "'");
                w.sum_constrained = kind == "simplex";
            } else if (label == "coords:") {
                w.coord_dim = std::stoi(next());
            } else if (label == "strategies:") {
                int k;
                while (ls >> k) w.strategy_counts.push_back(k);
            } else if (label == "map:") {
                WitnessMapEntry e;
                e.player = std::stoi(next()) - 1;
                e.strat = std::stoi(next());
                e.coord = std::stoi(next()) - 1;
                w.map.push_back(e);
            } else if (label == "chain:") {
                WitnessStep s;
                int id = std::stoi(next());
                if (id != static_cast<int>(w.chain.size()) + 1) fail("chain steps out of order");
                std::string kind = next();
                if (kind == "constrain")
                    s.constrain = true;
                else if (kind != "define")
                    fail("unknown step kind '" + kind + "'");
                std::string tp = next(), tsd = next();
                if (tp != "-") {
                    s.target_player = std::stoi(tp) - 1;
                    s.target_strat = std::stoi(tsd);
                }
                std::string mult = next();
                if (mult != "-") {
                    if (mult.size() < 2 || mult[0] != 'x') fail("bad multiplier '" + mult + "'");
                    s.mult_coord = std::stoi(mult.substr(1)) - 1;
                }
                s.operand = parse_operand(next());
                s.addend = parse_operand(next());
                s.s = parse_rational(next());
                s.delta = parse_rational(next());
                if (s.s == 0) fail("scaling s must be nonzero");
                w.chain.push_back(std::move(s));
            } else if (label == "fixed:") {
                FixedEntry e;
                e.player = std::stoi(next()) - 1;
                e.strat = std::stoi(next());
                e.value = parse_rational(next());
                w.fixed.push_back(std::move(e));
            } else if (label == "balance:") {
                BalanceEntry e;
                e.player = std::stoi(next()) - 1;
                e.strat = std::stoi(next());
                e.base = parse_rational(next());
                e.coef = parse_rational(next());
                w.balance.push_back(std::move(e));
            } else if (label == "simplex:") {
                w.simplex_dim = std::stoi(next());
            } else {
                fail("unknown section '" + label + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (!saw_method) throw std::runtime_error("witness file: missing method line");
    return w;
}

}  // namespace polygame
