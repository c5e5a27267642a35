#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deltakit/elemset.hpp"

namespace deltakit {

/// A ground set together with a family of feasible subsets.
///
/// The family is kept deduplicated and sorted in canonical order
/// (cardinality, then bit value). Values are immutable; every operation
/// returns a new system.
class SetSystem {
public:
    SetSystem() = default;
    /// Throws DomainError if some set is not a subset of the ground set.
    SetSystem(GroundSet ground, std::vector<ElemSet> feasible);

    static SetSystem from_labels(GroundSet ground,
                                 const std::vector<std::vector<std::string>>& feasible);

    const GroundSet& ground() const { return ground_; }
    std::span<const ElemSet> feasible() const { return feasible_; }
    int size() const { return ground_.size(); }
    ElemSet all() const { return ground_.all(); }
    std::size_t family_size() const { return feasible_.size(); }
    bool proper() const { return !feasible_.empty(); }
    bool contains(ElemSet s) const;

    /// "({a,b},{{},{a,b}})"
    std::string to_string() const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_ == b.ground_ && a.feasible_ == b.feasible_;
    }

private:
    GroundSet ground_;
    std::vector<ElemSet> feasible_;
};

/// A proper set system satisfying the symmetric exchange axiom.
class DeltaMatroid : public SetSystem {
public:
    DeltaMatroid() : SetSystem(GroundSet(), {ElemSet{}}) {}
    /// Runs the exchange-axiom check; throws ImproperSetSystem or DomainError.
    static DeltaMatroid validated(SetSystem s);
    /// Caller asserts that `s` is a delta-matroid (e.g. it is a twist of one,
    /// or comes from a vf-safe source).
    static DeltaMatroid unchecked(SetSystem s);

protected:
    explicit DeltaMatroid(SetSystem s) : SetSystem(std::move(s)) {}
};

/// A delta-matroid whose feasible sets (the bases) are equicardinal.
class Matroid : public DeltaMatroid {
public:
    Matroid() = default;
    /// Checks properness, equicardinality and the exchange axiom.
    static Matroid validated(SetSystem bases);
    /// Checks equicardinality only.
    static Matroid from_delta_matroid(DeltaMatroid d);

    int rank() const { return rank_; }
    /// max over bases B of |A ∩ B|
    int rank(ElemSet a) const;
    int nullity(ElemSet a) const { return a.size() - rank(a); }
    /// r(A) for every A, indexed by A.bits. Throws SizeGuardError above 24 elements.
    std::vector<std::uint8_t> rank_table() const;

private:
    explicit Matroid(DeltaMatroid d);
    int rank_ = 0;
};

enum class ElementKind {
    Coloop,
    DmLoop,  ///< trivial orientable ribbon loop
    NonTrivialOrientableRibbonLoop,
    TrivialNonOrientableRibbonLoop,
    NonTrivialNonOrientableRibbonLoop,
    Ordinary,
};

std::string_view to_string(ElementKind k);

// Exchange axiom. Throws ImproperSetSystem on an empty family.
bool validate_delta_matroid(const SetSystem& s);

SetSystem twist(const SetSystem& s, ElemSet a);
DeltaMatroid twist(const DeltaMatroid& d, ElemSet a);
SetSystem dual(const SetSystem& s);
DeltaMatroid dual(const DeltaMatroid& d);
Matroid dual(const Matroid& m);

/// Loop complementation, one element at a time. The result need not be a delta-matroid.
SetSystem loop_complement(const SetSystem& s, ElemSet a);
/// ((S * X) + X) * X
SetSystem dual_pivot(const SetSystem& s, ElemSet x);

enum class Generator { Twist, LoopComplement };

struct WordStep {
    Generator gen;
    ElemSet set;
};

/// Applies the steps in the order listed.
SetSystem apply_word(const SetSystem& s, std::span<const WordStep> word);

bool is_loop(const SetSystem& s, int e);
bool is_coloop(const SetSystem& s, int e);

DeltaMatroid delete_element(const DeltaMatroid& d, int e);
DeltaMatroid contract_element(const DeltaMatroid& d, int e);
/// Delete X and contract Y (disjoint).
DeltaMatroid minor(const DeltaMatroid& d, ElemSet del, ElemSet con);
/// D|A = D \ (E - A)
DeltaMatroid restrict_to(const DeltaMatroid& d, ElemSet a);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid minor(const Matroid& m, ElemSet del, ElemSet con);
Matroid restrict_to(const Matroid& m, ElemSet a);

/// Ground sets must be disjoint; throws LabelCollision otherwise.
DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b);
Matroid direct_sum(const Matroid& a, const Matroid& b);

Matroid lower_matroid(const SetSystem& s);
Matroid upper_matroid(const SetSystem& s);

/// Size of a smallest feasible set (the rank of the lower matroid).
int d_min(const SetSystem& s);
/// |E| - min{|A △ F|}
int rho(const SetSystem& s, ElemSet a);

bool is_ribbon_loop(const SetSystem& s, int e);
/// Classification of e. Throws std::logic_error if the orientability tests disagree,
/// which can only happen when `s` is not vf-safe.
ElementKind element_kind(const SetSystem& s, int e);

bool is_even(const SetSystem& s);
bool is_matroid(const SetSystem& s);
/// Finest partition of E into separators.
std::vector<ElemSet> matroid_components(const Matroid& m);
bool is_separable(const SetSystem& s);
/// r(A) + r(E - A) = r(E)
bool is_separator(const Matroid& m, ElemSet a);

/// Every image under per-element twisted-duality words is a delta-matroid.
/// Throws SizeGuardError when |E| > max_n.
bool is_vf_safe(const SetSystem& s, int max_n = 10);

/// Same labels, re-expressed in the order of `target`.
SetSystem reorder(const SetSystem& s, const GroundSet& target);
/// Element i becomes target.label(i).
SetSystem rename(const SetSystem& s, const GroundSet& target);

}  // namespace deltakit
