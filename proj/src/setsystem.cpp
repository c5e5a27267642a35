#include "deltakit/setsystem.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

void require_subset(const SetSystem& s, ElemSet a, const char* what) {
    if (!a.subset_of(s.all()))
        throw DomainError(std::string(what) + ": set is not a subset of the ground set");
}

void require_element(const SetSystem& s, int e) {
    if (e < 0 || e >= s.size()) throw DomainError("element index out of range");
}

// Membership oracle over a fixed family: dense bitmap for small ground sets.
class Membership {
public:
    explicit Membership(const SetSystem& s) : s_(s) {
        if (s.size() <= 22) {
            dense_.assign(std::size_t{1} << s.size(), 0);
            for (ElemSet f : s.feasible()) dense_[f.bits] = 1;
        }
    }
    bool operator()(ElemSet x) const { return dense_.empty() ? s_.contains(x) : dense_[x.bits] != 0; }

private:
    const SetSystem& s_;
    std::vector<unsigned char> dense_;
};

SetSystem loop_complement_one(const SetSystem& s, int e) {
    std::vector<ElemSet> all(s.feasible().begin(), s.feasible().end());
    for (ElemSet f : s.feasible())
        if (!f.contains(e)) all.push_back(f.with(e));
    std::sort(all.begin(), all.end(), CanonicalLess{});
    // Keep sets occurring an odd number of times (here: exactly once).
    std::vector<ElemSet> out;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(all[i]);
        i = j;
    }
    return SetSystem(s.ground(), std::move(out));
}

// Deletion / contraction on the raw family with the loop/coloop fallback.
SetSystem remove_element(const SetSystem& s, int e, bool contract) {
    const bool loop = is_loop(s, e);
    const bool coloop = is_coloop(s, e);
    bool keep_containing = contract;
    if (loop) keep_containing = false;
    if (coloop) keep_containing = true;
    std::vector<ElemSet> out;
    for (ElemSet f : s.feasible()) {
        if (f.contains(e) == keep_containing) out.push_back(remove_position(f, e));
    }
    return SetSystem(s.ground().without(e), std::move(out));
}

SetSystem minor_raw(const SetSystem& s, ElemSet del, ElemSet con) {
    require_subset(s, del, "minor");
    require_subset(s, con, "minor");
    if (!(del & con).empty()) throw DomainError("minor: delete and contract sets overlap");
    SetSystem cur = s;
    // Remove from the highest position down so lower positions stay valid.
    for (int i = s.size() - 1; i >= 0; --i) {
        if (del.contains(i)) cur = remove_element(cur, i, false);
        else if (con.contains(i)) cur = remove_element(cur, i, true);
    }
    return cur;
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<ElemSet> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
    const ElemSet all = ground_.all();
    for (ElemSet f : feasible_)
        if (!f.subset_of(all)) throw DomainError("feasible set is not a subset of the ground set");
    std::sort(feasible_.begin(), feasible_.end(), CanonicalLess{});
    feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

SetSystem SetSystem::from_labels(GroundSet ground,
                                 const std::vector<std::vector<std::string>>& feasible) {
    std::vector<ElemSet> sets;
    sets.reserve(feasible.size());
    for (const auto& f : feasible) sets.push_back(ground.set_of(f));
    return SetSystem(std::move(ground), std::move(sets));
}

bool SetSystem::contains(ElemSet s) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), s, CanonicalLess{});
}

std::string SetSystem::to_string() const {
    std::string out = "(" + ground_.format(all()) + ",{";
    for (std::size_t i = 0; i < feasible_.size(); ++i) {
        if (i) out += ',';
        out += ground_.format(feasible_[i]);
    }
    return out + "})";
}

DeltaMatroid DeltaMatroid::validated(SetSystem s) {
    if (!validate_delta_matroid(s)) throw DomainError("set system violates the symmetric exchange axiom");
    return DeltaMatroid(std::move(s));
}

DeltaMatroid DeltaMatroid::unchecked(SetSystem s) {
    if (!s.proper()) throw ImproperSetSystem();
    return DeltaMatroid(std::move(s));
}

Matroid::Matroid(DeltaMatroid d) : DeltaMatroid(std::move(d)) {
    rank_ = feasible().front().size();
    for (ElemSet b : feasible())
        if (b.size() != rank_) throw DomainError("bases are not equicardinal");
}

Matroid Matroid::validated(SetSystem bases) { return Matroid(DeltaMatroid::validated(std::move(bases))); }

Matroid Matroid::from_delta_matroid(DeltaMatroid d) { return Matroid(std::move(d)); }

int Matroid::rank(ElemSet a) const {
    int best = 0;
    for (ElemSet b : feasible()) best = std::max(best, (a & b).size());
    return best;
}

std::vector<std::uint8_t> Matroid::rank_table() const {
    if (size() > 24) throw SizeGuardError("rank table is limited to 24 elements");
    const std::size_t total = std::size_t{1} << size();
    // Independent sets are subsets of bases; r(A) is the largest independent subset of A.
    std::vector<std::uint8_t> r(total, 0);
    std::vector<char> indep(total, 0);
    for (ElemSet b : feasible()) indep[b.bits] = 1;
    for (int i = 0; i < size(); ++i)
        for (std::size_t a = 0; a < total; ++a)
            if ((a >> i & 1u) && indep[a]) indep[a & ~(std::size_t{1} << i)] = 1;
    for (std::size_t a = 0; a < total; ++a)
        if (indep[a]) r[a] = static_cast<std::uint8_t>(std::popcount(a));
    for (int i = 0; i < size(); ++i)
        for (std::size_t a = 0; a < total; ++a)
            if (a >> i & 1u) r[a] = std::max(r[a], r[a & ~(std::size_t{1} << i)]);
    return r;
}

std::string_view to_string(ElementKind k) {
    switch (k) {
        case ElementKind::Coloop: return "coloop";
        case ElementKind::DmLoop: return "trivial-orientable-ribbon-loop";
        case ElementKind::NonTrivialOrientableRibbonLoop: return "non-trivial-orientable-ribbon-loop";
        case ElementKind::TrivialNonOrientableRibbonLoop: return "trivial-non-orientable-ribbon-loop";
        case ElementKind::NonTrivialNonOrientableRibbonLoop: return "non-trivial-non-orientable-ribbon-loop";
        case ElementKind::Ordinary: return "ordinary";
    }
    return "?";
}

bool validate_delta_matroid(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    const int n = s.size();
    const Membership member(s);
    const auto fam = s.feasible();
    // reach[u] = { v : X △ {u,v} is feasible } for the current X.
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n));
    for (ElemSet x : fam) {
        for (int u = 0; u < n; ++u) {
            std::uint64_t r = 0;
            const ElemSet xu = x ^ ElemSet::single(u);
            for (int v = 0; v < n; ++v) {
                const ElemSet cand = v == u ? xu : xu ^ ElemSet::single(v);
                if (member(cand)) r |= std::uint64_t{1} << v;
            }
            reach[static_cast<std::size_t>(u)] = r;
        }
        for (ElemSet y : fam) {
            const ElemSet diff = x ^ y;
            bool ok = true;
            diff.for_each([&](int u) {
                if ((reach[static_cast<std::size_t>(u)] & diff.bits) == 0) ok = false;
            });
            if (!ok) return false;
        }
    }
    return true;
}

SetSystem twist(const SetSystem& s, ElemSet a) {
    require_subset(s, a, "twist");
    std::vector<ElemSet> out;
    out.reserve(s.family_size());
    for (ElemSet f : s.feasible()) out.push_back(f ^ a);
    return SetSystem(s.ground(), std::move(out));
}

DeltaMatroid twist(const DeltaMatroid& d, ElemSet a) {
    return DeltaMatroid::unchecked(twist(static_cast<const SetSystem&>(d), a));
}

SetSystem dual(const SetSystem& s) { return twist(s, s.all()); }
DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, d.all()); }
Matroid dual(const Matroid& m) { return Matroid::from_delta_matroid(twist(m, m.all())); }

SetSystem loop_complement(const SetSystem& s, ElemSet a) {
    require_subset(s, a, "loop complementation");
    SetSystem cur = s;
    a.for_each([&](int e) { cur = loop_complement_one(cur, e); });
    return cur;
}

SetSystem dual_pivot(const SetSystem& s, ElemSet x) {
    return twist(loop_complement(twist(s, x), x), x);
}

SetSystem apply_word(const SetSystem& s, std::span<const WordStep> word) {
    SetSystem cur = s;
    for (const WordStep& w : word)
        cur = w.gen == Generator::Twist ? twist(cur, w.set) : loop_complement(cur, w.set);
    return cur;
}

bool is_loop(const SetSystem& s, int e) {
    require_element(s, e);
    return std::none_of(s.feasible().begin(), s.feasible().end(), [e](ElemSet f) { return f.contains(e); });
}

bool is_coloop(const SetSystem& s, int e) {
    require_element(s, e);
    return std::all_of(s.feasible().begin(), s.feasible().end(), [e](ElemSet f) { return f.contains(e); });
}

DeltaMatroid delete_element(const DeltaMatroid& d, int e) {
    require_element(d, e);
    return DeltaMatroid::unchecked(remove_element(d, e, false));
}

DeltaMatroid contract_element(const DeltaMatroid& d, int e) {
    require_element(d, e);
    return DeltaMatroid::unchecked(remove_element(d, e, true));
}

DeltaMatroid minor(const DeltaMatroid& d, ElemSet del, ElemSet con) {
    return DeltaMatroid::unchecked(minor_raw(d, del, con));
}

DeltaMatroid restrict_to(const DeltaMatroid& d, ElemSet a) {
    require_subset(d, a, "restriction");
    return minor(d, d.all() - a, ElemSet{});
}

Matroid delete_element(const Matroid& m, int e) {
    return Matroid::from_delta_matroid(delete_element(static_cast<const DeltaMatroid&>(m), e));
}
Matroid contract_element(const Matroid& m, int e) {
    return Matroid::from_delta_matroid(contract_element(static_cast<const DeltaMatroid&>(m), e));
}
Matroid minor(const Matroid& m, ElemSet del, ElemSet con) {
    return Matroid::from_delta_matroid(minor(static_cast<const DeltaMatroid&>(m), del, con));
}
Matroid restrict_to(const Matroid& m, ElemSet a) {
    return Matroid::from_delta_matroid(restrict_to(static_cast<const DeltaMatroid&>(m), a));
}

DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b) {
    std::vector<std::string> labels = a.ground().labels();
    for (const auto& l : b.ground().labels()) {
        if (a.ground().find(l) >= 0) throw LabelCollision(l);
        labels.push_back(l);
    }
    if (labels.size() > static_cast<std::size_t>(kMaxElements))
        throw SizeGuardError("direct sum exceeds 64 elements");
    const int shift = a.size();
    std::vector<ElemSet> out;
    out.reserve(a.family_size() * b.family_size());
    for (ElemSet fa : a.feasible())
        for (ElemSet fb : b.feasible()) out.push_back(ElemSet{fa.bits | (shift >= 64 ? 0 : fb.bits << shift)});
    return DeltaMatroid::unchecked(SetSystem(GroundSet(std::move(labels)), std::move(out)));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    return Matroid::from_delta_matroid(
        direct_sum(static_cast<const DeltaMatroid&>(a), static_cast<const DeltaMatroid&>(b)));
}

Matroid lower_matroid(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    const int k = s.feasible().front().size();
    std::vector<ElemSet> out;
    for (ElemSet f : s.feasible())
        if (f.size() == k) out.push_back(f);
    return Matroid::from_delta_matroid(DeltaMatroid::unchecked(SetSystem(s.ground(), std::move(out))));
}

Matroid upper_matroid(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    const int k = s.feasible().back().size();
    std::vector<ElemSet> out;
    for (ElemSet f : s.feasible())
        if (f.size() == k) out.push_back(f);
    return Matroid::from_delta_matroid(DeltaMatroid::unchecked(SetSystem(s.ground(), std::move(out))));
}

int d_min(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    return s.feasible().front().size();
}

int rho(const SetSystem& s, ElemSet a) {
    require_subset(s, a, "rho");
    if (!s.proper()) throw ImproperSetSystem();
    int best = s.size() + 1;
    for (ElemSet f : s.feasible()) best = std::min(best, (a ^ f).size());
    return s.size() - best;
}

bool is_ribbon_loop(const SetSystem& s, int e) {
    require_element(s, e);
    const int k = d_min(s);
    for (ElemSet f : s.feasible()) {
        if (f.size() != k) break;
        if (f.contains(e)) return false;
    }
    return true;
}

ElementKind element_kind(const SetSystem& s, int e) {
    require_element(s, e);
    const ElemSet single = ElemSet::single(e);
    const SetSystem twisted = twist(s, single);
    const SetSystem pivoted = dual_pivot(s, single);
    const int d = d_min(s), dt = d_min(twisted), dp = d_min(pivoted);
    const bool ribbon = is_ribbon_loop(s, e);

    auto fail = [&](const char* what) -> ElementKind {
        throw std::logic_error(std::string("element_kind: ") + what + " for element '" + s.ground().label(e) +
                               "' of " + s.to_string());
    };

    if (is_coloop(s, e)) {
        if (ribbon) fail("coloop is also a ribbon loop");
        return ElementKind::Coloop;
    }
    if (!ribbon) {
        if (!(dt == dp && d == dt + 1)) fail("lower-matroid ranks break the trichotomy");
        return ElementKind::Ordinary;
    }

    const bool non_orientable = d == dt && dp == d + 1;
    const bool orientable = d == dp && dt == d + 1;
    if (non_orientable == orientable) fail("lower-matroid ranks break the trichotomy");
    if (is_ribbon_loop(twisted, e) != non_orientable || is_ribbon_loop(pivoted, e) != orientable)
        fail("trichotomy disagrees with the definition");

    // F in family iff F ∪ e in family, for all F avoiding e.
    bool paired = true;
    for (ElemSet f : s.feasible())
        if (!s.contains(f ^ single)) paired = false;

    ElementKind kind;
    if (orientable) {
        kind = is_loop(s, e) ? ElementKind::DmLoop : ElementKind::NonTrivialOrientableRibbonLoop;
    } else {
        kind = is_loop(loop_complement(s, single), e) ? ElementKind::TrivialNonOrientableRibbonLoop
                                                      : ElementKind::NonTrivialNonOrientableRibbonLoop;
    }
    if (paired != (kind == ElementKind::TrivialNonOrientableRibbonLoop))
        fail("trivial non-orientable characterisation disagrees");
    return kind;
}

bool is_even(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    const int parity = s.feasible().front().size() % 2;
    return std::all_of(s.feasible().begin(), s.feasible().end(),
                       [parity](ElemSet f) { return f.size() % 2 == parity; });
}

bool is_matroid(const SetSystem& s) {
    if (!s.proper()) throw ImproperSetSystem();
    return s.feasible().front().size() == s.feasible().back().size();
}

bool is_separator(const Matroid& m, ElemSet a) {
    return m.rank(a) + m.rank(m.all() - a) == m.rank();
}

std::vector<ElemSet> matroid_components(const Matroid& m) {
    const int n = m.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    // Components are generated by the fundamental circuits of any one basis.
    const ElemSet basis = m.feasible().front();
    (m.all() - basis).for_each([&](int x) {
        basis.for_each([&](int b) {
            if (m.contains(basis.without(b).with(x)))
                parent[static_cast<std::size_t>(find(x))] = find(b);
        });
    });
    std::vector<ElemSet> comps;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        auto& c = comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])];
        c = c.with(i);
    }
    return comps;
}

bool is_separable(const SetSystem& s) { return matroid_components(lower_matroid(s)).size() >= 2; }

namespace {

// The six elements of the group generated by * and + acting on one element.
constexpr std::array<std::array<int, 3>, 6> kLocalWords = {{
    {-1, -1, -1},  // identity
    {0, -1, -1},   // *
    {1, -1, -1},   // +
    {0, 1, -1},    // * then +
    {1, 0, -1},    // + then *
    {0, 1, 0},     // * + *
}};

bool vf_safe_from(const SetSystem& s, int e) {
    if (e == s.size()) return s.proper() && validate_delta_matroid(s);
    for (const auto& word : kLocalWords) {
        SetSystem cur = s;
        for (int g : word) {
            if (g == 0) cur = twist(cur, ElemSet::single(e));
            else if (g == 1) cur = loop_complement(cur, ElemSet::single(e));
        }
        if (!vf_safe_from(cur, e + 1)) return false;
    }
    return true;
}

}  // namespace

bool is_vf_safe(const SetSystem& s, int max_n) {
    if (s.size() > max_n)
        throw SizeGuardError("vf-safety check limited to " + std::to_string(max_n) + " elements");
    if (!s.proper()) throw ImproperSetSystem();
    return vf_safe_from(s, 0);
}

SetSystem reorder(const SetSystem& s, const GroundSet& target) {
    if (target.size() != s.size()) throw DomainError("reorder: ground sets differ in size");
    std::vector<int> pos(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) pos[static_cast<std::size_t>(i)] = target.index(s.ground().label(i));
    std::vector<ElemSet> out;
    out.reserve(s.family_size());
    for (ElemSet f : s.feasible()) {
        ElemSet g;
        f.for_each([&](int i) { g = g.with(pos[static_cast<std::size_t>(i)]); });
        out.push_back(g);
    }
    return SetSystem(target, std::move(out));
}

SetSystem rename(const SetSystem& s, const GroundSet& target) {
    if (target.size() != s.size()) throw DomainError("rename: ground sets differ in size");
    return SetSystem(target, std::vector<ElemSet>(s.feasible().begin(), s.feasible().end()));
}

}  // namespace deltakit
