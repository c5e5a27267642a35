#include "deltakit/binary_matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

/// Rank of a list of 64-bit vectors.
int vector_rank(std::vector<std::uint64_t> v) {
    int r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        ++r;
        const std::uint64_t low = v[i] & (~v[i] + 1);
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] & low) v[j] ^= v[i];
    }
    return r;
}

}  // namespace

Gf2Subspace::Gf2Subspace(int n, const std::vector<ElemSet>& generators) : n_(n) {
    const ElemSet all = ElemSet::full(n);
    for (ElemSet g : generators) {
        if (!g.subset_of(all)) throw DomainError("vector has coordinates outside the ambient space");
        for (ElemSet b : basis_)
            if (g.contains(b.lowest())) g = g ^ b;
        if (g.empty()) continue;
        const int p = g.lowest();
        for (ElemSet& b : basis_)
            if (b.contains(p)) b = b ^ g;
        basis_.push_back(g);
    }
    std::sort(basis_.begin(), basis_.end(), [](ElemSet a, ElemSet b) { return a.lowest() < b.lowest(); });
}

bool Gf2Subspace::contains(ElemSet v) const {
    for (ElemSet b : basis_)
        if (v.contains(b.lowest())) v = v ^ b;
    return v.empty();
}

Gf2Subspace Gf2Subspace::orthogonal_complement() const {
    ElemSet pivots;
    for (ElemSet b : basis_) pivots = pivots.with(b.lowest());
    std::vector<ElemSet> gens;
    (ElemSet::full(n_) - pivots).for_each([&](int f) {
        ElemSet v = ElemSet::single(f);
        for (ElemSet b : basis_)
            if (b.contains(f)) v = v.with(b.lowest());
        gens.push_back(v);
    });
    return Gf2Subspace(n_, gens);
}

Gf2Subspace Gf2Subspace::sum(const Gf2Subspace& o) const {
    std::vector<ElemSet> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return Gf2Subspace(n_, gens);
}

Gf2Subspace Gf2Subspace::intersect(const Gf2Subspace& o) const {
    return orthogonal_complement().sum(o.orthogonal_complement()).orthogonal_complement();
}

std::vector<ElemSet> Gf2Subspace::members() const {
    if (dim() > 24) throw SizeGuardError("subspace enumeration is limited to dimension 24");
    std::vector<ElemSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim()); ++mask) {
        ElemSet v;
        for (int i = 0; i < dim(); ++i)
            if (mask >> i & 1u) v = v ^ basis_[static_cast<std::size_t>(i)];
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

Gf2Matrix::Gf2Matrix(GroundSet labels, std::vector<ElemSet> rows) : labels_(std::move(labels)), rows_(std::move(rows)) {
    for (ElemSet r : rows_)
        if (!r.subset_of(labels_.all())) throw DomainError("matrix row has bits outside the column range");
}

Gf2Matrix Gf2Matrix::from_strings(GroundSet labels, const std::vector<std::string>& rows) {
    std::vector<ElemSet> out;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != labels.size())
            throw DomainError("matrix row '" + r + "' does not have one entry per column");
        ElemSet v;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] == '1') v = v.with(static_cast<int>(j));
            else if (r[j] != '0') throw DomainError("matrix row '" + r + "' contains a character other than 0/1");
        }
        out.push_back(v);
    }
    return Gf2Matrix(std::move(labels), std::move(out));
}

std::vector<std::string> Gf2Matrix::row_strings() const {
    std::vector<std::string> out;
    for (ElemSet r : rows_) {
        std::string s;
        for (int j = 0; j < columns(); ++j) s += r.contains(j) ? '1' : '0';
        out.push_back(std::move(s));
    }
    return out;
}

Gf2Matrix Gf2Matrix::dual() const { return Gf2Matrix(labels_, cycle_space(*this).basis()); }

Matroid matroid_of(const Gf2Matrix& m) {
    const int n = m.columns();
    if (n > 24) throw SizeGuardError("column matroid enumeration is limited to 24 columns");
    const auto basis = m.row_space().basis();
    const int r = static_cast<int>(basis.size());
    // Column j as a vector over the independent rows.
    std::vector<std::uint64_t> col(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < r; ++i)
        basis[static_cast<std::size_t>(i)].for_each([&](int j) { col[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i; });
    std::vector<ElemSet> bases;
    for_each_subset(m.labels().all(), [&](ElemSet a) {
        if (a.size() != r) return;
        std::vector<std::uint64_t> v;
        a.for_each([&](int j) { v.push_back(col[static_cast<std::size_t>(j)]); });
        if (vector_rank(v) == r) bases.push_back(a);
    });
    return Matroid::from_delta_matroid(DeltaMatroid::unchecked(SetSystem(m.labels(), std::move(bases))));
}

Gf2Subspace cycle_space(const Gf2Matrix& m) { return m.row_space().orthogonal_complement(); }

Gf2Subspace cocycle_space(const Gf2Matrix& m) { return m.row_space(); }

Gf2Subspace bicycle_space(const Gf2Matrix& m) { return cycle_space(m).intersect(cocycle_space(m)); }

bool is_eulerian(const Gf2Matrix& m) { return cycle_space(m).contains(m.labels().all()); }

bool is_bipartite(const Gf2Matrix& m) { return cocycle_space(m).contains(m.labels().all()); }

std::vector<ElemSet> circuits(const Matroid& m) {
    if (m.size() > 16) throw SizeGuardError("circuit enumeration is limited to 16 elements");
    const auto rt = m.rank_table();
    std::vector<ElemSet> out;
    for_each_subset(m.all(), [&](ElemSet a) {
        if (rt[a.bits] == a.size()) return;
        bool minimal = true;
        a.for_each([&](int e) {
            if (rt[a.without(e).bits] != a.size() - 1) minimal = false;
        });
        if (minimal) out.push_back(a);
    });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool is_eulerian_bruteforce(const Matroid& m) {
    const std::vector<ElemSet> cs = circuits(m);
    std::map<std::uint64_t, bool> memo;
    auto partition = [&](auto&& self, ElemSet rest) -> bool {
        if (rest.empty()) return true;
        if (auto it = memo.find(rest.bits); it != memo.end()) return it->second;
        const int e = rest.lowest();
        bool ok = false;
        for (ElemSet c : cs)
            if (c.contains(e) && c.subset_of(rest) && self(self, rest - c)) {
                ok = true;
                break;
            }
        memo[rest.bits] = ok;
        return ok;
    };
    return partition(partition, m.all());
}

bool is_bipartite_bruteforce(const Matroid& m) {
    for (ElemSet c : circuits(m))
        if (c.size() % 2 != 0) return false;
    return true;
}

Gf2Subspace penrose_space(const Gf2Matrix& m, ElemSet x) {
    const Gf2Subspace cycles = cycle_space(m);
    const Gf2Subspace cocycles = cocycle_space(m);
    // A & X lies in the cocycle space iff A is orthogonal to X & c for every cycle c.
    std::vector<ElemSet> constraints = cocycles.basis();
    for (ElemSet c : cycles.basis()) constraints.push_back(c & x);
    Gf2Subspace b = Gf2Subspace(m.columns(), constraints).orthogonal_complement();
    for (ElemSet v : b.basis())
        if (!cycles.contains(v) || !cocycles.contains(v & x))
            throw std::logic_error("penrose subspace basis vector violates its defining condition");
    return b;
}

LaurentPoly penrose_binary(const Gf2Matrix& m) {
    if (m.columns() > 20) throw SizeGuardError("binary Penrose state sum is limited to 20 columns");
    std::map<int, long> counts;
    for_each_subset(m.labels().all(), [&](ElemSet x) {
        counts[penrose_space(m, x).dim()] += (x.size() & 1) ? -1 : 1;
    });
    LaurentPoly out;
    for (const auto& [k, c] : counts) out += LaurentPoly(c) * LaurentPoly::var(Var::L, k);
    return out;
}

Matroid twist_min_decomposition(const Matroid& m, ElemSet a) {
    const Matroid left = minor(m, ElemSet{}, a);
    const Matroid right = dual(restrict_to(m, a));
    return Matroid::from_delta_matroid(DeltaMatroid::unchecked(reorder(direct_sum(left, right), m.ground())));
}

Matroid twist_max_decomposition(const Matroid& m, ElemSet a) {
    const Matroid left = minor(m, a, ElemSet{});
    const Matroid right = dual(minor(m, ElemSet{}, m.all() - a));
    return Matroid::from_delta_matroid(DeltaMatroid::unchecked(reorder(direct_sum(left, right), m.ground())));
}

std::pair<bool, bool> bipartite_eulerian_twist_test(const Gf2Matrix& m, ElemSet a) {
    const Matroid low = lower_matroid(twist(matroid_of(m), a));
    return {is_bipartite_bruteforce(low), is_eulerian_bruteforce(low)};
}

}  // namespace deltakit
