#include "deltakit/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

DeltaMatroid from_chars(std::string_view ground, std::initializer_list<std::string_view> sets) {
    GroundSet g = GroundSet::from_chars(ground);
    std::vector<ElemSet> fam;
    for (auto s : sets) {
        ElemSet f;
        for (char c : s) f = f.with(g.index(std::string(1, c)));
        fam.push_back(f);
    }
    return DeltaMatroid::unchecked(SetSystem(std::move(g), std::move(fam)));
}

std::vector<int> profile(const SetSystem& s, int e) {
    std::vector<int> p(static_cast<std::size_t>(s.size() + 1), 0);
    for (ElemSet f : s.feasible())
        if (f.contains(e)) ++p[static_cast<std::size_t>(f.size())];
    return p;
}

ElemSet map_set(ElemSet f, const std::vector<int>& perm) {
    ElemSet out;
    f.for_each([&](int i) { out = out.with(perm[static_cast<std::size_t>(i)]); });
    return out;
}

std::vector<std::uint64_t> projected(std::span<const ElemSet> fam, ElemSet mask, const std::vector<int>* perm) {
    std::vector<std::uint64_t> out;
    out.reserve(fam.size());
    for (ElemSet f : fam) out.push_back((perm ? map_set(f & mask, *perm) : (f & mask)).bits);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string_view to_string(Obstruction o) {
    switch (o) {
        case Obstruction::X0: return "X0";
        case Obstruction::X1: return "X1";
        case Obstruction::X2: return "X2";
    }
    return "?";
}

DeltaMatroid x0() { return from_chars("a", {"", "a"}); }
DeltaMatroid x1() { return from_chars("abc", {"a", "b", "c", "abc"}); }
DeltaMatroid x2() { return from_chars("abc", {"", "ab", "ac", "bc"}); }

DeltaMatroid obstruction(Obstruction o) {
    switch (o) {
        case Obstruction::X0: return x0();
        case Obstruction::X1: return x1();
        case Obstruction::X2: return x2();
    }
    throw DomainError("unknown obstruction");
}

std::optional<Relabeling> is_isomorphic(const SetSystem& a, const SetSystem& b) {
    const int n = a.size();
    if (n > 10 || b.size() > 10) throw SizeGuardError("isomorphism search is limited to 10 elements");
    if (n != b.size() || a.family_size() != b.family_size()) return std::nullopt;
    std::vector<int> sa, sb;
    for (ElemSet f : a.feasible()) sa.push_back(f.size());
    for (ElemSet f : b.feasible()) sb.push_back(f.size());
    if (sa != sb) return std::nullopt;

    std::vector<std::vector<int>> pa, pb;
    for (int i = 0; i < n; ++i) {
        pa.push_back(profile(a, i));
        pb.push_back(profile(b, i));
    }
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    ElemSet used;
    auto search = [&](auto&& self, int i) -> bool {
        if (i > 0) {
            // Projections onto the assigned prefix must agree as multisets.
            const ElemSet dom = ElemSet::full(i);
            ElemSet img;
            for (int k = 0; k < i; ++k) img = img.with(perm[static_cast<std::size_t>(k)]);
            if (projected(a.feasible(), dom, &perm) != projected(b.feasible(), img, nullptr)) return false;
        }
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used.contains(j) || pa[static_cast<std::size_t>(i)] != pb[static_cast<std::size_t>(j)]) continue;
            perm[static_cast<std::size_t>(i)] = j;
            used = used.with(j);
            if (self(self, i + 1)) return true;
            used = used.without(j);
            perm[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return perm;
}

std::optional<MinorWitness> has_minor(const DeltaMatroid& d, const DeltaMatroid& h) {
    const int n = d.size();
    if (n > 12) throw SizeGuardError("minor search is limited to 12 elements");
    const int k = n - h.size();
    if (k < 0) return std::nullopt;
    std::optional<MinorWitness> found;
    std::vector<ElemSet> removals;
    for_each_subset(d.all(), [&](ElemSet r) {
        if (r.size() == k) removals.push_back(r);
    });
    std::sort(removals.begin(), removals.end(), CanonicalLess{});
    for (ElemSet r : removals) {
        std::vector<ElemSet> splits;
        for_each_subset(r, [&](ElemSet del) { splits.push_back(del); });
        std::sort(splits.begin(), splits.end(), CanonicalLess{});
        for (ElemSet del : splits) {
            const DeltaMatroid m = minor(d, del, r - del);
            if (auto iso = is_isomorphic(m, h)) return MinorWitness{del, r - del, *iso};
        }
    }
    return found;
}

std::optional<ExcludedMinorWitness> find_excluded_minor(const DeltaMatroid& d) {
    for (Obstruction o : {Obstruction::X0, Obstruction::X1, Obstruction::X2})
        if (auto w = has_minor(d, obstruction(o))) return ExcludedMinorWitness{o, *w};
    return std::nullopt;
}

bool is_twist_of_matroid_em(const DeltaMatroid& d) { return !find_excluded_minor(d).has_value(); }

bool twist_is_matroid(const SetSystem& d, ElemSet b) {
    const auto fam = d.feasible();
    if (fam.empty()) return false;
    const int size = (fam.front() ^ b).size();
    for (ElemSet f : fam)
        if ((f ^ b).size() != size) return false;
    return true;
}

namespace {

std::vector<ElemSet> canonical_subsets(ElemSet all) {
    std::vector<ElemSet> out;
    for_each_subset(all, [&](ElemSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

}  // namespace

std::optional<ElemSet> is_twist_of_matroid_search(const SetSystem& d) {
    if (d.size() > 16) throw SizeGuardError("twist search is limited to 16 elements");
    for (ElemSet b : canonical_subsets(d.all()))
        if (twist_is_matroid(d, b)) return b;
    return std::nullopt;
}

bool separator_criterion(const DeltaMatroid& d, ElemSet a) {
    const ElemSet ac = d.all() - a;
    return is_separator(lower_matroid(d), a) && is_matroid(minor(d, a, ElemSet{})) &&
           is_matroid(minor(d, ac, ElemSet{}));
}

std::vector<ElemSet> twist_sets_yielding_matroid(const DeltaMatroid& d) {
    if (d.size() > 16) throw SizeGuardError("twist search is limited to 16 elements");
    std::vector<ElemSet> out;
    for (ElemSet b : canonical_subsets(d.all())) {
        const bool direct = twist_is_matroid(d, b);
        if (!b.empty() && b != d.all() && direct != separator_criterion(d, b))
            throw std::logic_error("separation criterion disagrees with direct twist test at " + d.ground().format(b));
        if (direct) out.push_back(b);
    }
    return out;
}

}  // namespace deltakit
