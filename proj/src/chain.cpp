#include "polygame/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polygame/horner.hpp"

namespace polygame {

namespace {

using PrefixValues = std::map<std::vector<int>, ChainOperand>;

void collect_levels(const HornerNode& node, std::vector<int>& prefix, std::size_t depth,
                    std::vector<std::vector<std::pair<std::vector<int>, const HornerNode*>>>& out) {
    if (node.is_leaf()) return;
    out[depth].emplace_back(prefix, &node);
    for (std::size_t t = 0; t < node.children.size(); ++t) {
        prefix.push_back(static_cast<int>(t));
        collect_levels(node.children[t], prefix, depth + 1, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ChainStep> build_chain_3p(const PolySystem& sys, const DegreeProfile& profile) {
    if (profile.m != sys.m() || profile.n != sys.n)
        throw std::invalid_argument("degree profile does not match the system");
    std::vector<ChainStep> steps;
    for (int j = 0; j < sys.m(); ++j) {
        const HornerForm form = horner_decompose(sys.polys[static_cast<std::size_t>(j)]);
        std::vector<std::vector<std::pair<std::vector<int>, const HornerNode*>>> levels(
            static_cast<std::size_t>(form.n));
        std::vector<int> prefix;
        collect_levels(form.root, prefix, 0, levels);

        PrefixValues values;
        ChainOperand root_value;
        bool have_root = false;
        for (std::size_t depth = levels.size(); depth-- > 0;) {
            auto& level = levels[depth];
            // Highest coefficient prefixes first, as the schedule builds the
            // top Horner coefficients before the lower ones.
            std::reverse(level.begin(), level.end());
            for (auto& [node_prefix, node] : level) {
                const std::size_t deg = node->children.size() - 1;
                auto child_value = [&](std::size_t t) -> ChainOperand {
                    const HornerNode& child = node->children[t];
                    if (child.is_leaf()) return ChainOperand::constant(child.value);
                    std::vector<int> key = node_prefix;
                    key.push_back(static_cast<int>(t));
                    return values.at(key);
                };
                ChainOperand acc = child_value(deg);
                for (std::size_t t = deg; t-- > 0;) {
                    ChainStep step;
                    step.kind = ChainStep::Kind::Define;
                    step.equation = j;
                    step.mult_var = form.order[depth];
                    step.operand = acc;
                    step.addend = child_value(t);
                    steps.push_back(std::move(step));
                    acc = ChainOperand::reference(static_cast<int>(steps.size()) - 1);
                }
                values[node_prefix] = acc;
                if (depth == 0) {
                    root_value = acc;
                    have_root = true;
                }
            }
        }
        if (!have_root || !root_value.is_ref)
            throw std::domain_error("equation " + std::to_string(j + 1) +
                                    " is constant and cannot be compiled into a chain");
        // The step producing the full polynomial value is the block's last;
        // it becomes the zero constraint instead of defining a new slot.
        if (root_value.ref != static_cast<int>(steps.size()) - 1)
            throw std::logic_error("chain value does not end its block");
        steps[static_cast<std::size_t>(root_value.ref)].kind = ChainStep::Kind::Constrain;
    }
    int b = 0;
    for (ChainStep& step : steps)
        if (step.kind == ChainStep::Kind::Define) step.b_index = ++b;
    return steps;
}

AffineScaling scaling_for(const Interval& raw, const Interval& target) {
    AffineScaling sc;
    sc.target = target;
    if (raw.is_point()) {
        sc.s = rat(1);
        sc.delta = raw.lo - target.midpoint();
    } else {
        sc.s = raw.width() / target.width();
        sc.delta = raw.lo - sc.s * target.lo;
    }
    return sc;
}

namespace {

template <typename T, typename ConstFn, typename MultFn>
std::vector<T> walk_chain(const std::vector<ChainStep>& steps, ConstFn&& constant, MultFn&& mult) {
    std::vector<T> out;
    out.reserve(steps.size());
    auto value_of = [&](const ChainOperand& op) -> T {
        if (op.is_ref) {
            if (op.ref < 0 || op.ref >= static_cast<int>(out.size()))
                throw std::logic_error("chain step references a later step");
            return out[static_cast<std::size_t>(op.ref)];
        }
        return constant(op.value);
    };
    for (const ChainStep& step : steps) {
        T v = value_of(step.operand);
        if (step.mult_var >= 0) v = mult(step.mult_var, v);
        out.push_back(v + value_of(step.addend));
    }
    return out;
}

}  // namespace

std::vector<Interval> chain_intervals(const std::vector<ChainStep>& steps, const Box& box) {
    return walk_chain<Interval>(
        steps, [](const Rational& c) { return Interval::point(c); },
        [&](int var, const Interval& v) { return box.coords[static_cast<std::size_t>(var)] * v; });
}

std::vector<Rational> chain_values(const std::vector<ChainStep>& steps,
                                   const std::vector<Rational>& point) {
    return walk_chain<Rational>(
        steps, [](const Rational& c) { return c; },
        [&](int var, const Rational& v) { return point[static_cast<std::size_t>(var)] * v; });
}

std::vector<AffineScaling> select_scalings(const std::vector<ChainStep>& steps, const Box& box,
                                           int budget) {
    std::vector<AffineScaling> out;
    int defines = 0;
    for (const ChainStep& step : steps)
        if (step.kind == ChainStep::Kind::Define) ++defines;
    if (defines == 0) return out;
    if (budget < defines)
        throw std::invalid_argument("scaling budget smaller than the number of defined slots");
    const Interval target(rat(1, 4 * static_cast<long>(budget)),
                          rat(1, 2 * static_cast<long>(budget)));
    const std::vector<Interval> raw = chain_intervals(steps, box);
    out.reserve(static_cast<std::size_t>(defines));
    for (std::size_t t = 0; t < steps.size(); ++t)
        if (steps[t].kind == ChainStep::Kind::Define)
            out.push_back(scaling_for(raw[t], target));
    return out;
}

}  // namespace polygame
