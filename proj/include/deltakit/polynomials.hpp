#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltakit/laurent.hpp"
#include "deltakit/ribbon.hpp"
#include "deltakit/setsystem.hpp"

namespace deltakit {

// Characteristic and Penrose polynomials, in the variable l.

LaurentPoly characteristic(const Matroid& m);
/// chi of the lower matroid.
LaurentPoly characteristic_dm(const SetSystem& d);

/// Sum over X of (-1)^|X| l^{d(D*E dual-pivot X)}. D must be vf-safe.
LaurentPoly penrose_dm(const DeltaMatroid& d);
/// Sum over A of (-1)^|A| l^{f(G^tau(A))}.
LaurentPoly penrose_ribbon(const RibbonGraph& g);
/// Four-case recursion on the lowest-indexed element.
LaurentPoly penrose_recursive(const DeltaMatroid& d);
/// Sum over A of (-1)^|A| chi((D+A)^*).
LaurentPoly penrose_via_characteristic(const DeltaMatroid& d);

// Transition polynomial.

struct WeightTriple {
    LaurentPoly alpha, beta, gamma;
    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

/// Per-element weights (alpha_e, beta_e, gamma_e) over a ground set.
class WeightSystem {
public:
    WeightSystem(GroundSet ground, std::vector<WeightTriple> weights);
    /// Every element carries the formal variables (alpha, beta, gamma).
    static WeightSystem uniform_symbolic(GroundSet ground);
    static WeightSystem uniform(GroundSet ground, const WeightTriple& w);

    const GroundSet& ground() const { return ground_; }
    const WeightTriple& at(int e) const { return weights_[static_cast<std::size_t>(e)]; }
    /// Weights for the ground set with element e removed.
    WeightSystem without(int e) const;
    /// (beta, alpha, gamma) on every element.
    WeightSystem swapped_alpha_beta() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    GroundSet ground_;
    std::vector<WeightTriple> weights_;
};

/// Twist swaps alpha and beta on its set; loop complementation swaps beta and
/// gamma. Steps are applied in the listed order, as in apply_word.
WeightSystem weight_transform(const WeightSystem& w, std::span<const WordStep> word);

/// Sum over ordered 3-partitions (A,B,C) of the weight products times
/// t^{d(D*B dual-pivot C)}, where t is substituted by `t`.
LaurentPoly transition_dm(const SetSystem& d, const WeightSystem& w, const LaurentPoly& t);
/// Ribbon form: exponent f(G^tau(C) \ B).
LaurentPoly transition_ribbon(const RibbonGraph& g, const WeightSystem& w, const LaurentPoly& t);
/// Deletion-contraction recursion on the lowest-indexed element. D must be vf-safe.
LaurentPoly transition_recursive(const DeltaMatroid& d, const WeightSystem& w, const LaurentPoly& t);
/// Q_W(D) == Q_{W word}(D word).
bool transition_invariance_check(const DeltaMatroid& d, const WeightSystem& w, std::span<const WordStep> word,
                                 const LaurentPoly& t);

// Bollobas-Riordan polynomial.

/// R(D; x, y, z) with ranks taken in the lower matroid.
LaurentPoly br_dm(const DeltaMatroid& d);
/// R(D; x + 1, y, z).
LaurentPoly br_dm_shifted(const DeltaMatroid& d);
/// R(G; x, y, z) with graph rank and Euler genus of spanning subgraphs.
LaurentPoly br_ribbon(const RibbonGraph& g);
LaurentPoly br_ribbon_shifted(const RibbonGraph& g);
/// R(D; s^2 + 1, t^2, 1/(s t)).
LaurentPoly br_dm_st(const DeltaMatroid& d);

struct BrTransitionOutcome {
    LaurentPoly rhs;                ///< (t/s)^{r(E)} R(D; s^2+1, t^2, 1/(st))
    LaurentPoly lhs_root_weight;    ///< Q_{(1, t/s, 0)}(D; st)
    LaurentPoly lhs_square_weight;  ///< Q_{(1, t^2/s^2, 0)}(D; st)
    bool root_weight_holds() const { return lhs_root_weight == rhs; }
    bool square_weight_holds() const { return lhs_square_weight == rhs; }
};

/// Evaluates both sides of the transition/BR specialization under x = s^2, y = t^2.
BrTransitionOutcome br_from_transition(const DeltaMatroid& d);
/// True iff the identity holds with weight (1, t/s, 0).
bool br_from_transition_check(const DeltaMatroid& d);

/// Checks the deletion-contraction identity for R(D; s^2+1, t^2, 1/(st)) at
/// every element. Returns the first failing element, if any.
bool br_recursion_holds_at(const DeltaMatroid& d, int e);
std::optional<int> br_recursion_failure(const DeltaMatroid& d);
bool br_recursion_check(const DeltaMatroid& d);

}  // namespace deltakit
