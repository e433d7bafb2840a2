#include "polygame/encoders.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "polygame/matching.hpp"

namespace polygame {

namespace {

constexpr std::size_t kMaxTensorEntries = std::size_t(1) << 22;

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

void guard_tensor_size(const std::vector<int>& counts) {
    std::size_t total = 1;
    for (int k : counts) {
        total *= uz(k);
        if (total > kMaxTensorEntries)
            throw std::overflow_error("encoded game is too large to materialize");
    }
}

}  // namespace

// ---------------------------------------------------------------- 3-player

ThreePlayerEncoding encode_three_player(const PolySystem& sys) {
    const DegreeProfile profile = degree_profile(sys);
    ThreePlayerEncoding out;
    out.capacity = capacity_3p(profile);
    const int n = sys.n;
    const int m = sys.m();
    if (out.capacity.D >= static_cast<long long>(kMaxTensorEntries))
        throw std::overflow_error("encoded game is too large to materialize");
    const int D = static_cast<int>(out.capacity.D);
    const int B = D - m;  // free Bob slots

    out.steps = build_chain_3p(sys, profile);
    if (static_cast<int>(out.steps.size()) != D)
        throw std::logic_error("chain length disagrees with capacity");
    out.scalings = select_scalings(out.steps, Box::unit(n, rat(1)), B);

    const std::vector<int> counts = {n + 1, B + 1, D + 1};
    guard_tensor_size(counts);

    // Scaled view of each step's value: Define steps read s*b + delta off
    // their Bob slot, Constrain steps are the constant 0.
    std::vector<const AffineScaling*> scaling_of(out.steps.size(), nullptr);
    {
        std::size_t next = 0;
        for (std::size_t t = 0; t < out.steps.size(); ++t)
            if (out.steps[t].kind == ChainStep::Kind::Define)
                scaling_of[t] = &out.scalings[next++];
    }

    // Critter owns one equation per chain step, over (Alice, Bob) indices.
    std::vector<MultilinearEquation> critter_eqs;
    critter_eqs.reserve(out.steps.size());
    const Rational fix_value = rat(1, static_cast<long>(D) + 1);
    for (std::size_t t = 0; t < out.steps.size(); ++t) {
        const ChainStep& step = out.steps[t];
        MultilinearEquation eq =
            MultilinearEquation::zero(2, static_cast<int>(t) + 1, counts);
        // Left side: the defined slot's scaled value, or 0 for constraints.
        if (step.kind == ChainStep::Kind::Define) {
            eq.at({0, step.b_index}) += scaling_of[t]->s;
            eq.at({0, 0}) += scaling_of[t]->delta;
        }
        // Minus the right side a_mult * operand + addend, with referenced
        // steps appearing through their scaled slots.
        const int ja = step.mult_var + 1;  // Alice's strategy carrying x_mult
        if (step.operand.is_ref) {
            const ChainStep& src = out.steps[uz(step.operand.ref)];
            const AffineScaling* sc = scaling_of[uz(step.operand.ref)];
            eq.at({ja, src.b_index}) -= sc->s;
            eq.at({ja, 0}) -= sc->delta;
        } else {
            eq.at({ja, 0}) -= step.operand.value;
        }
        if (step.addend.is_ref) {
            const ChainStep& src = out.steps[uz(step.addend.ref)];
            const AffineScaling* sc = scaling_of[uz(step.addend.ref)];
            eq.at({0, src.b_index}) -= sc->s;
            eq.at({0, 0}) -= sc->delta;
        } else {
            eq.at({0, 0}) -= step.addend.value;
        }
        critter_eqs.push_back(std::move(eq));
    }

    // Alice's n and Bob's D-m equations each pin one Critter coordinate to
    // 1/(D+1); leftovers stay free (m > n) or become trivial equations.
    int next_fix = 1;
    std::vector<MultilinearEquation> alice_eqs;
    for (int j = 1; j <= n; ++j) {
        MultilinearEquation eq = MultilinearEquation::zero(0, j, counts);
        if (next_fix <= D) {
            eq.at({0, next_fix}) += 1;
            eq.at({0, 0}) -= fix_value;
            ++next_fix;
        }
        alice_eqs.push_back(std::move(eq));
    }
    std::vector<MultilinearEquation> bob_eqs;
    for (int j = 1; j <= B; ++j) {
        MultilinearEquation eq = MultilinearEquation::zero(1, j, counts);
        if (next_fix <= D) {
            eq.at({0, next_fix}) += 1;
            eq.at({0, 0}) -= fix_value;
            ++next_fix;
        }
        bob_eqs.push_back(std::move(eq));
    }
    const int fixed_count = next_fix - 1;

    out.game.players = 3;
    out.game.strategy_counts = counts;
    out.game.payoffs.resize(3);
    out.game.payoffs[0] = payoffs_from_equations(0, alice_eqs, counts);
    out.game.payoffs[1] = payoffs_from_equations(1, bob_eqs, counts);
    out.game.payoffs[2] = payoffs_from_equations(2, critter_eqs, counts);
    out.game.validate();

    EncodingWitness& w = out.witness;
    w.method = "3p";
    w.sum_constrained = true;
    w.coord_dim = n;
    w.strategy_counts = counts;
    for (int i = 0; i < n; ++i) w.map.push_back({0, i + 1, i});
    for (std::size_t t = 0; t < out.steps.size(); ++t) {
        const ChainStep& step = out.steps[t];
        WitnessStep ws;
        ws.constrain = step.kind == ChainStep::Kind::Constrain;
        ws.mult_coord = step.mult_var;
        ws.operand = step.operand;
        ws.addend = step.addend;
        if (!ws.constrain) {
            ws.target_player = 1;
            ws.target_strat = step.b_index;
            ws.s = scaling_of[t]->s;
            ws.delta = scaling_of[t]->delta;
        }
        w.chain.push_back(std::move(ws));
    }
    for (int c = 1; c <= fixed_count; ++c) w.fixed.push_back({2, c, fix_value});
    w.simplex_dim = D - fixed_count;
    return out;
}

// ------------------------------------------------------------------ binary

void BinaryEquation::add(std::vector<int> players, const Rational& c) {
    if (c == 0) return;
    std::sort(players.begin(), players.end());
    if (std::adjacent_find(players.begin(), players.end()) != players.end())
        throw std::logic_error("binary equation term repeats a player");
    auto [it, inserted] = terms.emplace(std::move(players), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

bool BinaryEquation::mentions(int player) const {
    for (const auto& [ids, c] : terms)
        if (std::binary_search(ids.begin(), ids.end(), player)) return true;
    return false;
}

namespace {

using Subst = std::function<std::vector<int>(int var, int power)>;

BinaryEquation substitute_poly(const Polynomial& f, const Subst& subst) {
    BinaryEquation eq;
    for (const auto& [mono, c] : f.terms) {
        std::vector<int> ids;
        for (int i = 0; i < f.n; ++i) {
            int e = mono.degree_of(i);
            if (e == 0) continue;
            std::vector<int> part = subst(i, e);
            ids.insert(ids.end(), part.begin(), part.end());
        }
        eq.add(std::move(ids), c);
    }
    return eq;
}

BinaryEquation fix_equation(int variable, const Rational& value) {
    BinaryEquation eq;
    eq.add({variable}, rat(1));
    eq.add({}, -value);
    return eq;
}

// target = base or target = factor1 * factor2, written as target - rhs.
BinaryEquation ladder_equation(int target, const std::vector<int>& rhs) {
    BinaryEquation eq;
    eq.add({target}, rat(1));
    eq.add(rhs, rat(-1));
    return eq;
}

MultilinearEquation to_multilinear(const BinaryEquation& eq, int players) {
    const std::vector<int> counts(uz(players), 2);
    MultilinearEquation out = MultilinearEquation::zero(eq.owner, 1, counts);
    for (const auto& [ids, c] : eq.terms) {
        std::vector<int> multi(uz(players - 1), 0);
        for (int id : ids) {
            if (id == eq.owner) throw std::logic_error("equation mentions its owner");
            multi[uz(id < eq.owner ? id : id - 1)] = 1;
        }
        out.at(multi) += c;
    }
    return out;
}

std::vector<int> equation_variables(const BinaryEquation& eq) {
    std::vector<int> vars;
    for (const auto& [ids, c] : eq.terms) vars.insert(vars.end(), ids.begin(), ids.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void finish_binary(BinaryEncoding& out) {
    const int players = static_cast<int>(out.equations.size());
    for (int i = 0; i < players; ++i) {
        if (out.equations[uz(i)].owner != i) throw std::logic_error("equation owner mismatch");
        if (out.equations[uz(i)].mentions(i))
            throw std::logic_error("player's variable occurs in its own equation");
    }
    const std::vector<int> counts(uz(players), 2);
    guard_tensor_size(counts);
    out.game.players = players;
    out.game.strategy_counts = counts;
    out.game.payoffs.resize(uz(players));
    for (int i = 0; i < players; ++i)
        out.game.payoffs[uz(i)] =
            payoffs_from_equations(i, {to_multilinear(out.equations[uz(i)], players)}, counts);
    out.game.validate();
}

}  // namespace

EquationAssignment assign_equations(const std::vector<std::vector<int>>& equation_vars,
                                    const std::vector<int>& owner_vars) {
    if (equation_vars.size() != owner_vars.size())
        throw std::invalid_argument("assignment needs as many equations as owners");
    std::vector<std::vector<int>> adj(owner_vars.size());
    for (std::size_t o = 0; o < owner_vars.size(); ++o)
        for (std::size_t q = 0; q < equation_vars.size(); ++q)
            if (std::find(equation_vars[q].begin(), equation_vars[q].end(), owner_vars[o]) ==
                equation_vars[q].end())
                adj[o].push_back(static_cast<int>(q));
    std::vector<int> match =
        augmenting_path_matching(adj, static_cast<int>(equation_vars.size()));
    for (int q : match)
        if (q < 0)
            throw std::runtime_error(
                "no admissible perfect assignment exists; the equation set is malformed");
    return EquationAssignment{std::move(match)};
}

BinaryEncoding encode_binary(const PolySystem& sys, bool reduce_players) {
    const DegreeProfile profile = degree_profile(sys);
    BinaryEncoding out;
    out.capacity = capacity_np(profile);
    const int n = sys.n;
    const int m = sys.m();
    const int Dp = static_cast<int>(out.capacity.Dprime);
    const std::vector<int>& d = profile.d_i;
    const bool reduce_active = reduce_players && n > m;

    EncodingWitness& w = out.witness;
    w.method = "np";
    w.sum_constrained = false;
    w.coord_dim = n;

    if (reduce_active) {
        // Variable players 0..n-1, chain players for powers 1..d_i-1, and
        // one fresh player per equation, pinned at 1/2 by the variable
        // players' spare equations.
        std::vector<std::vector<int>> chain_id(uz(n));
        int next_id = n;
        for (int i = 0; i < n; ++i) {
            chain_id[uz(i)].assign(uz(std::max(d[uz(i)], 1)), -1);
            for (int k = 1; k <= d[uz(i)] - 1; ++k) chain_id[uz(i)][uz(k)] = next_id++;
        }
        const int nq = next_id;  // variable + chain players
        const int players = nq + m;
        out.equations.assign(uz(players), BinaryEquation{});

        Subst subst = [&](int var, int power) -> std::vector<int> {
            if (power == 1) return {var};
            return {var, chain_id[uz(var)][uz(power - 1)]};
        };
        for (int j = 0; j < m; ++j) {
            BinaryEquation eq = substitute_poly(sys.polys[uz(j)], subst);
            eq.owner = nq + j;
            out.equations[uz(nq + j)] = std::move(eq);
        }

        // Pool of the remaining equations: the 1/2 pins, trivial fillers,
        // and the power ladders; owners are the variable and chain players.
        std::vector<BinaryEquation> pool;
        for (int j = 0; j < m; ++j) pool.push_back(fix_equation(nq + j, rat(1, 2)));
        for (int j = 0; j < n - m; ++j) pool.push_back(BinaryEquation{});
        for (int i = 0; i < n; ++i)
            for (int k = 1; k <= d[uz(i)] - 1; ++k)
                pool.push_back(ladder_equation(
                    chain_id[uz(i)][uz(k)],
                    k == 1 ? std::vector<int>{i}
                           : std::vector<int>{i, chain_id[uz(i)][uz(k - 1)]}));
        std::vector<std::vector<int>> pool_vars;
        pool_vars.reserve(pool.size());
        for (const BinaryEquation& eq : pool) pool_vars.push_back(equation_variables(eq));
        std::vector<int> owners(uz(nq));
        for (int o = 0; o < nq; ++o) owners[uz(o)] = o;
        EquationAssignment assignment = assign_equations(pool_vars, owners);
        for (int o = 0; o < nq; ++o) {
            BinaryEquation eq = pool[uz(assignment.equation_of_owner[uz(o)])];
            eq.owner = o;
            out.equations[uz(o)] = std::move(eq);
        }

        for (int i = 0; i < n; ++i) w.map.push_back({i, 1, i});
        std::vector<std::vector<int>> step_of(uz(n));
        for (int i = 0; i < n; ++i) {
            step_of[uz(i)].assign(uz(std::max(d[uz(i)], 1)), -1);
            for (int k = 1; k <= d[uz(i)] - 1; ++k) {
                WitnessStep ws;
                ws.mult_coord = i;
                ws.operand = k == 1 ? ChainOperand::constant(rat(1))
                                    : ChainOperand::reference(step_of[uz(i)][uz(k - 1)]);
                ws.addend = ChainOperand::constant(rat(0));
                ws.target_player = chain_id[uz(i)][uz(k)];
                ws.target_strat = 1;
                step_of[uz(i)][uz(k)] = static_cast<int>(w.chain.size());
                w.chain.push_back(std::move(ws));
            }
        }
        for (int j = 0; j < m; ++j) w.fixed.push_back({nq + j, 1, rat(1, 2)});
        w.simplex_dim = 0;
        w.strategy_counts.assign(uz(players), 2);
        finish_binary(out);
        return out;
    }

    // Unreduced layout: variable players 0..n-1, filler players up to
    // max(m, n), then one player per power-chain variable.
    const int E = std::max(m, n);
    const int players = Dp + E;
    std::vector<std::vector<int>> chain_id(uz(n));
    {
        int next_id = E;
        for (int i = 0; i < n; ++i) {
            chain_id[uz(i)].assign(uz(d[uz(i)]) + 1, -1);
            for (int k = 1; k <= d[uz(i)]; ++k) chain_id[uz(i)][uz(k)] = next_id++;
        }
        if (next_id != players) throw std::logic_error("player layout disagrees");
    }
    out.equations.assign(uz(players), BinaryEquation{});
    for (int p = 0; p < players; ++p) out.equations[uz(p)].owner = p;

    // Owners for the substituted equations: the first E players, possibly
    // skipping one that must stay out of them.
    auto assign_front = [&](const std::vector<BinaryEquation>& front, int skip) {
        std::size_t next = 0;
        for (int p = 0; p < E; ++p) {
            if (p == skip) continue;
            if (next < front.size()) {
                BinaryEquation eq = front[next++];
                eq.owner = p;
                out.equations[uz(p)] = std::move(eq);
            }
        }
        if (next != front.size()) throw std::logic_error("front equations exceed owners");
    };

    int single_main = -1;   // the variable of a degree-1 or degree-2 ladder
    if (Dp == 1 || (Dp == 2 && *std::max_element(d.begin(), d.end()) == 2))
        for (int i = 0; i < n; ++i)
            if (d[uz(i)] > 0) single_main = i;

    if (Dp == 1) {
        // No ladder needed: pin the lone chain variable at 1/2, write the
        // first equation in the variable itself and hand it to the chain
        // player.
        const int chain = chain_id[uz(single_main)][1];
        Subst direct = [&](int var, int) -> std::vector<int> { return {var}; };
        BinaryEquation first = substitute_poly(sys.polys[0], direct);
        first.owner = chain;
        out.equations[uz(chain)] = std::move(first);
        BinaryEquation pin = fix_equation(chain, rat(1, 2));
        pin.owner = single_main;
        out.equations[uz(single_main)] = std::move(pin);
        std::vector<BinaryEquation> rest;
        for (int j = 1; j < m; ++j) rest.push_back(substitute_poly(sys.polys[uz(j)], direct));
        assign_front(rest, single_main);
        w.fixed.push_back({chain, 1, rat(1, 2)});
    } else if (Dp == 2 && single_main >= 0) {
        // Quadratic ladder: two chain players both carrying the variable's
        // value, glued to it by each other's equations.
        const int A = chain_id[uz(single_main)][1];
        const int B = chain_id[uz(single_main)][2];
        Subst first_subst = [&](int, int power) -> std::vector<int> {
            return power == 1 ? std::vector<int>{A} : std::vector<int>{A, B};
        };
        Subst rest_subst = [&](int var, int power) -> std::vector<int> {
            return power == 1 ? std::vector<int>{var} : std::vector<int>{var, A};
        };
        BinaryEquation first = substitute_poly(sys.polys[0], first_subst);
        first.owner = single_main;
        out.equations[uz(single_main)] = std::move(first);
        std::vector<BinaryEquation> rest;
        for (int j = 1; j < m; ++j) rest.push_back(substitute_poly(sys.polys[uz(j)], rest_subst));
        assign_front(rest, single_main);
        BinaryEquation eqA = ladder_equation(B, {single_main});
        eqA.owner = A;
        out.equations[uz(A)] = std::move(eqA);
        BinaryEquation eqB = ladder_equation(A, {single_main});
        eqB.owner = B;
        out.equations[uz(B)] = std::move(eqB);
        WitnessStep wsA;
        wsA.mult_coord = single_main;
        wsA.operand = ChainOperand::constant(rat(1));
        wsA.addend = ChainOperand::constant(rat(0));
        wsA.target_player = A;
        wsA.target_strat = 1;
        w.chain.push_back(wsA);
        WitnessStep wsB = wsA;
        wsB.target_player = B;
        w.chain.push_back(wsB);
    } else {
        // General layout: substitute every power by its chain variable and
        // match the ladder equations to the chain players (cross-assigned
        // by hand for the two-variable degree-1 case, Hall-matched above
        // D' >= 3).
        Subst subst = [&](int var, int power) -> std::vector<int> {
            return {chain_id[uz(var)][uz(power)]};
        };
        std::vector<BinaryEquation> front;
        for (int j = 0; j < m; ++j) front.push_back(substitute_poly(sys.polys[uz(j)], subst));
        assign_front(front, -1);
        std::vector<BinaryEquation> ladders;
        std::vector<int> ladder_owners;
        for (int i = 0; i < n; ++i)
            for (int k = 1; k <= d[uz(i)]; ++k) {
                ladders.push_back(ladder_equation(
                    chain_id[uz(i)][uz(k)],
                    k == 1 ? std::vector<int>{i}
                           : std::vector<int>{i, chain_id[uz(i)][uz(k - 1)]}));
                ladder_owners.push_back(chain_id[uz(i)][uz(k)]);
            }
        if (!ladders.empty()) {
            std::vector<std::vector<int>> ladder_vars;
            ladder_vars.reserve(ladders.size());
            for (const BinaryEquation& eq : ladders) ladder_vars.push_back(equation_variables(eq));
            EquationAssignment assignment = assign_equations(ladder_vars, ladder_owners);
            for (std::size_t o = 0; o < ladder_owners.size(); ++o) {
                BinaryEquation eq = ladders[uz(assignment.equation_of_owner[o])];
                eq.owner = ladder_owners[o];
                out.equations[uz(ladder_owners[o])] = std::move(eq);
            }
        }
    }

    for (int i = 0; i < n; ++i) w.map.push_back({i, 1, i});
    if (Dp != 1 && !(Dp == 2 && single_main >= 0)) {
        std::vector<std::vector<int>> step_of(uz(n));
        for (int i = 0; i < n; ++i) {
            step_of[uz(i)].assign(uz(d[uz(i)]) + 1, -1);
            for (int k = 1; k <= d[uz(i)]; ++k) {
                WitnessStep ws;
                ws.mult_coord = i;
                ws.operand = k == 1 ? ChainOperand::constant(rat(1))
                                    : ChainOperand::reference(step_of[uz(i)][uz(k - 1)]);
                ws.addend = ChainOperand::constant(rat(0));
                ws.target_player = chain_id[uz(i)][uz(k)];
                ws.target_strat = 1;
                step_of[uz(i)][uz(k)] = static_cast<int>(w.chain.size());
                w.chain.push_back(std::move(ws));
            }
        }
    }
    const int constrained = static_cast<int>(w.map.size() + w.chain.size() + w.fixed.size());
    w.simplex_dim = players - constrained;
    w.strategy_counts.assign(uz(players), 2);
    finish_binary(out);
    return out;
}

// -------------------------------------------------------------- univariate

UnivariateEncoding encode_univariate(const std::vector<Rational>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) throw std::invalid_argument("need a polynomial of degree at least 1");
    if (coeffs.back() == 0) throw std::invalid_argument("leading coefficient must be nonzero");

    UnivariateEncoding out;
    out.odd = deg % 2 != 0;
    out.e = (deg + 1) / 2;
    const int e = out.e;
    const std::vector<int> counts = {2, e + 1, e + 1};
    guard_tensor_size(counts);

    // Ladder values H_k = alpha_k + a * H_{k+1}; slot k stores H_k in a
    // scaled coordinate. Critter coordinates c_1..c_{e-1} hold slots
    // 1..e-1, slot e is shared between b_1 and c_e (Alice equates them),
    // Bob coordinates b_2.. hold the higher slots.
    const int top = deg;          // H_top = alpha_top stays inline
    const int last_slot = top - 1;
    std::vector<Interval> raw(uz(top) + 1, Interval());
    raw[uz(top)] = Interval::point(coeffs[uz(top)]);
    for (int k = top - 1; k >= 1; --k)
        raw[uz(k)] = Interval(rat(0), rat(1)) * raw[uz(k) + 1] + coeffs[uz(k)];

    const Interval target(rat(1, 4L * e), rat(1, 2L * e));
    out.slot_scalings.assign(uz(last_slot) + 1, AffineScaling{rat(1), rat(0), target});
    for (int k = 1; k <= last_slot; ++k) out.slot_scalings[uz(k)] = scaling_for(raw[uz(k)], target);
    if (out.odd && e == 1) {
        // Degree 1: the single shared slot is pinned at 1/2 by Critter, so
        // its scaling must carry the constant alpha_1 onto exactly 1/2.
        AffineScaling pinned;
        pinned.s = rat(1);
        pinned.delta = coeffs[1] - rat(1, 2);
        pinned.target = Interval(rat(1, 2), rat(1, 2));
        out.slot_scalings.resize(2, pinned);
        out.slot_scalings[1] = pinned;
    }
    auto scaling = [&](int slot) -> const AffineScaling& { return out.slot_scalings[uz(slot)]; };
    // Coordinate of slot k on the Bob (player 1) or Critter (player 2) side.
    auto b_strat = [&](int slot) { return slot - e + 1; };
    auto c_strat = [&](int slot) { return slot; };  // slot <= e

    // Alice: c_e = b_1.
    std::vector<MultilinearEquation> alice_eqs;
    {
        MultilinearEquation eq = MultilinearEquation::zero(0, 1, counts);
        eq.at({0, e}) += 1;
        eq.at({1, 0}) -= 1;
        alice_eqs.push_back(std::move(eq));
    }

    // Bob: 0 = alpha_0 + a*V(1) and V(k) = alpha_k + a*V(k+1) up to the
    // shared slot, all through Critter coordinates.
    std::vector<MultilinearEquation> bob_eqs;
    for (int k = 0; k <= e - 1; ++k) {
        MultilinearEquation eq = MultilinearEquation::zero(1, k + 1, counts);
        if (k >= 1) {
            eq.at({0, c_strat(k)}) += scaling(k).s;
            eq.at({0, 0}) += scaling(k).delta;
        }
        eq.at({0, 0}) -= coeffs[uz(k)];
        eq.at({1, c_strat(k + 1)}) -= scaling(k + 1).s;
        eq.at({1, 0}) -= scaling(k + 1).delta;
        bob_eqs.push_back(std::move(eq));
    }

    // Critter: the Bob half of the ladder; for odd degrees the spare
    // equation balances b_e against the other Bob coordinates.
    std::vector<MultilinearEquation> critter_eqs;
    for (int k = e; k <= last_slot; ++k) {
        MultilinearEquation eq = MultilinearEquation::zero(2, k - e + 1, counts);
        eq.at({0, b_strat(k)}) += scaling(k).s;
        eq.at({0, 0}) += scaling(k).delta;
        eq.at({0, 0}) -= coeffs[uz(k)];
        if (k + 1 <= last_slot) {
            eq.at({1, b_strat(k + 1)}) -= scaling(k + 1).s;
            eq.at({1, 0}) -= scaling(k + 1).delta;
        } else {
            eq.at({1, 0}) -= coeffs[uz(top)];
        }
        critter_eqs.push_back(std::move(eq));
    }
    if (out.odd) {
        MultilinearEquation eq = MultilinearEquation::zero(2, e, counts);
        eq.at({0, e}) += 1;
        for (int k = 1; k <= e - 1; ++k) eq.at({0, k}) += rat(1, 2);
        eq.at({0, 0}) -= rat(1, 2);
        critter_eqs.push_back(std::move(eq));
    }
    if (static_cast<int>(critter_eqs.size()) != e) throw std::logic_error("ladder split is off");

    out.game.players = 3;
    out.game.strategy_counts = counts;
    out.game.payoffs.resize(3);
    out.game.payoffs[0] = payoffs_from_equations(0, alice_eqs, counts);
    out.game.payoffs[1] = payoffs_from_equations(1, bob_eqs, counts);
    out.game.payoffs[2] = payoffs_from_equations(2, critter_eqs, counts);
    out.game.validate();

    EncodingWitness& w = out.witness;
    w.method = "1d";
    w.sum_constrained = true;
    w.coord_dim = 1;
    w.strategy_counts = counts;
    w.map.push_back({0, 1, 0});
    // Slots computed from the top down so each step references the one
    // above it; then the shared slot is copied onto Critter's side.
    std::vector<int> step_of(uz(last_slot) + 2, -1);
    int glue_slot = e;
    if (out.odd && e == 1) {
        WitnessStep ws;
        ws.operand = ChainOperand::constant(coeffs[1]);
        ws.addend = ChainOperand::constant(rat(0));
        ws.target_player = 1;
        ws.target_strat = 1;
        ws.s = scaling(1).s;
        ws.delta = scaling(1).delta;
        step_of[1] = static_cast<int>(w.chain.size());
        w.chain.push_back(std::move(ws));
    } else {
        for (int k = last_slot; k >= 1; --k) {
            WitnessStep ws;
            ws.mult_coord = 0;
            ws.operand = k == last_slot ? ChainOperand::constant(coeffs[uz(top)])
                                        : ChainOperand::reference(step_of[uz(k) + 1]);
            ws.addend = ChainOperand::constant(coeffs[uz(k)]);
            if (k >= e) {
                ws.target_player = 1;
                ws.target_strat = b_strat(k);
            } else {
                ws.target_player = 2;
                ws.target_strat = c_strat(k);
            }
            ws.s = scaling(k).s;
            ws.delta = scaling(k).delta;
            step_of[uz(k)] = static_cast<int>(w.chain.size());
            w.chain.push_back(std::move(ws));
        }
    }
    {
        // c_e copies the shared slot.
        WitnessStep copy;
        copy.operand = ChainOperand::reference(step_of[uz(glue_slot)]);
        copy.addend = ChainOperand::constant(rat(0));
        copy.target_player = 2;
        copy.target_strat = e;
        copy.s = scaling(glue_slot).s;
        copy.delta = scaling(glue_slot).delta;
        w.chain.push_back(std::move(copy));
        // Final constraint 0 = alpha_0 + a*H_1 for grid diagnostics.
        WitnessStep cons;
        cons.constrain = true;
        cons.mult_coord = 0;
        cons.operand = ChainOperand::reference(step_of[1]);
        cons.addend = ChainOperand::constant(coeffs[0]);
        w.chain.push_back(std::move(cons));
    }
    if (out.odd && e >= 2) w.balance.push_back({1, e, rat(1, 2), rat(-1, 2)});
    w.simplex_dim = 0;
    return out;
}

}  // namespace polygame
