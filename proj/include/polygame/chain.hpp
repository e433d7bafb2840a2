#pragma once

#include <vector>

#include "polygame/capacity.hpp"
#include "polygame/interval.hpp"
#include "polygame/polynomial.hpp"

namespace polygame {

// Operand of a gadget step: either an exact constant or a reference to the
// value computed by an earlier step.
struct ChainOperand {
    bool is_ref = false;
    int ref = -1;
    Rational value;

    static ChainOperand constant(Rational v) {
        ChainOperand op;
        op.value = std::move(v);
        return op;
    }
    static ChainOperand reference(int step) {
        ChainOperand op;
        op.is_ref = true;
        op.ref = step;
        return op;
    }
};

// One gadget equation of the 3-player construction. A Define step stores
// its value x_mult * operand + addend in a fresh auxiliary probability; the
// final step of each source equation is the Constrain step forcing the
// accumulated polynomial value to zero.
struct ChainStep {
    enum class Kind { Define, Constrain };
    Kind kind = Kind::Define;
    int equation = 0;  // index of the source polynomial
    int mult_var = -1;
    ChainOperand operand;
    ChainOperand addend;
    int b_index = 0;  // 1-based auxiliary slot for Define steps
};

// Compiles every equation into its nested multiply-add schedule: innermost
// variable first, one step per multiply-add over the complete coefficient
// tree, Constrain last. Equation j contributes prod_i (1 + d_ij) - 1 steps.
std::vector<ChainStep> build_chain_3p(const PolySystem& sys, const DegreeProfile& profile);

// Affine change b' = s*b + delta placing a raw chain value into a target
// subinterval of (0,1).
struct AffineScaling {
    Rational s;
    Rational delta;
    Interval target;
};

// Maps raw values in [raw.lo, raw.hi] onto target; a constant raw value
// goes to the target midpoint with s = 1.
AffineScaling scaling_for(const Interval& raw, const Interval& target);

// Sound raw-value enclosures for every step over the box.
std::vector<Interval> chain_intervals(const std::vector<ChainStep>& steps, const Box& box);

// Exact raw values of every step at a point of the box.
std::vector<Rational> chain_values(const std::vector<ChainStep>& steps,
                                   const std::vector<Rational>& point);

// One scaling per Define step, in step order. With budget B, every target
// is [1/(4B), 1/(2B)], so the defined probabilities are positive and sum
// to at most 1/2.
std::vector<AffineScaling> select_scalings(const std::vector<ChainStep>& steps, const Box& box,
                                           int budget);

}  // namespace polygame
