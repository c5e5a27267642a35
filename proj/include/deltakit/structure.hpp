#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "deltakit/setsystem.hpp"

namespace deltakit {

enum class Obstruction { X0, X1, X2 };

std::string_view to_string(Obstruction o);

/// ({a}, {{}, {a}})
DeltaMatroid x0();
/// ({a,b,c}, {{a}, {b}, {c}, {a,b,c}})
DeltaMatroid x1();
/// ({a,b,c}, {{}, {a,b}, {a,c}, {b,c}})
DeltaMatroid x2();
DeltaMatroid obstruction(Obstruction o);

/// perm[i] is the element of the second system that element i maps to.
using Relabeling = std::vector<int>;

/// Throws SizeGuardError above 10 elements.
std::optional<Relabeling> is_isomorphic(const SetSystem& a, const SetSystem& b);

struct MinorWitness {
    ElemSet delete_set;
    ElemSet contract_set;
    /// Minor element i (in the order of the minor's ground set) maps to relabeling[i] in H.
    Relabeling relabeling;
};

/// Throws SizeGuardError above 12 elements.
std::optional<MinorWitness> has_minor(const DeltaMatroid& d, const DeltaMatroid& h);

struct ExcludedMinorWitness {
    Obstruction which;
    MinorWitness minor;
};

std::optional<ExcludedMinorWitness> find_excluded_minor(const DeltaMatroid& d);
/// No minor isomorphic to X0, X1 or X2.
bool is_twist_of_matroid_em(const DeltaMatroid& d);
/// Smallest B in canonical order with D*B a matroid. Throws SizeGuardError above 16 elements.
std::optional<ElemSet> is_twist_of_matroid_search(const SetSystem& d);

/// Every B with D*B a matroid, in canonical order. For each non-empty proper A the answer is
/// compared with separator_criterion; a disagreement throws std::logic_error.
std::vector<ElemSet> twist_sets_yielding_matroid(const DeltaMatroid& d);

/// A is a separator of the lower matroid, and D\A and D\A^c are matroids.
bool separator_criterion(const DeltaMatroid& d, ElemSet a);

/// D*B is a matroid, tested without building the twist.
bool twist_is_matroid(const SetSystem& d, ElemSet b);

}  // namespace deltakit
