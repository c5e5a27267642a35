#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deltakit/laurent.hpp"
#include "deltakit/setsystem.hpp"

namespace deltakit {

/// Subspace of GF(2)^n kept as a reduced row-echelon basis. Vectors are
/// ElemSets over the same n coordinates.
class Gf2Subspace {
public:
    Gf2Subspace() = default;
    Gf2Subspace(int n, const std::vector<ElemSet>& generators);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<ElemSet>& basis() const { return basis_; }
    bool contains(ElemSet v) const;
    /// Vectors orthogonal to every member under the dot product.
    Gf2Subspace orthogonal_complement() const;
    Gf2Subspace intersect(const Gf2Subspace& o) const;
    Gf2Subspace sum(const Gf2Subspace& o) const;
    /// Every member; for small dimensions only.
    std::vector<ElemSet> members() const;

    friend bool operator==(const Gf2Subspace& a, const Gf2Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    int n_ = 0;
    std::vector<ElemSet> basis_;  // sorted by descending leading bit, fully reduced
};

/// Binary matrix whose columns are labelled by a ground set.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(GroundSet labels, std::vector<ElemSet> rows);
    /// Rows given as strings over {0,1}, one character per column.
    static Gf2Matrix from_strings(GroundSet labels, const std::vector<std::string>& rows);

    const GroundSet& labels() const { return labels_; }
    const std::vector<ElemSet>& rows() const { return rows_; }
    int columns() const { return labels_.size(); }
    int rank() const { return row_space().dim(); }
    Gf2Subspace row_space() const { return Gf2Subspace(columns(), rows_); }
    std::vector<std::string> row_strings() const;

    /// A representation of the dual matroid (a null-space basis as rows).
    Gf2Matrix dual() const;

private:
    GroundSet labels_;
    std::vector<ElemSet> rows_;
};

/// Column matroid.
Matroid matroid_of(const Gf2Matrix& m);

Gf2Subspace cycle_space(const Gf2Matrix& m);
Gf2Subspace cocycle_space(const Gf2Matrix& m);
Gf2Subspace bicycle_space(const Gf2Matrix& m);

bool is_eulerian(const Gf2Matrix& m);
bool is_bipartite(const Gf2Matrix& m);

// Brute-force oracles on abstract matroids (size-guarded at 16 elements).

/// Minimal dependent sets, in canonical order.
std::vector<ElemSet> circuits(const Matroid& m);
/// E is a disjoint union of circuits (exhaustive search).
bool is_eulerian_bruteforce(const Matroid& m);
/// Every circuit has even size.
bool is_bipartite_bruteforce(const Matroid& m);

/// Sum over X of (-1)^|X| l^{dim B(X)}, B(X) = {A in cycle space : A & X in cocycle space}.
LaurentPoly penrose_binary(const Gf2Matrix& m);
/// The subspace B(X) itself.
Gf2Subspace penrose_space(const Gf2Matrix& m, ElemSet x);

/// M/A + (M|A)^*, re-expressed in the ground order of M.
Matroid twist_min_decomposition(const Matroid& m, ElemSet a);
/// M\A + (M/A^c)^*, re-expressed in the ground order of M.
Matroid twist_max_decomposition(const Matroid& m, ElemSet a);

/// (bipartite, Eulerian) for the lower matroid of M*A, by circuit enumeration.
std::pair<bool, bool> bipartite_eulerian_twist_test(const Gf2Matrix& m, ElemSet a);

}  // namespace deltakit
