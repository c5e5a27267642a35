#include "deltakit/polynomials.hpp"

#include <map>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

const LaurentPoly& lambda() {
    static const LaurentPoly l = LaurentPoly::var(Var::L);
    return l;
}

/// Builds sum_k counts[k] * l^k.
LaurentPoly from_counts(const std::map<int, long long>& counts) {
    LaurentPoly out;
    for (const auto& [k, c] : counts) {
        Exponents e{};
        e[static_cast<std::size_t>(Var::L)] = k;
        out.add_term(e, mpq_class(static_cast<long>(c)));
    }
    return out;
}

void guard(int n, int limit, const char* what) {
    if (n > limit)
        throw SizeGuardError(std::string(what) + " is limited to " + std::to_string(limit) + " elements");
}

int sign_of(ElemSet a) { return (a.size() & 1) ? -1 : 1; }

DeltaMatroid loop_complemented_contraction(const DeltaMatroid& d, int e) {
    return contract_element(DeltaMatroid::unchecked(loop_complement(d, ElemSet::single(e))), e);
}

using BrCounts = std::map<std::array<int, 3>, long long>;

BrCounts br_counts_dm(const DeltaMatroid& d) {
    guard(d.size(), 20, "Bollobas-Riordan state sum");
    const auto rt = lower_matroid(d).rank_table();
    const int re = rt[d.all().bits];
    BrCounts counts;
    for_each_subset(d.all(), [&](ElemSet a) {
        const DeltaMatroid r = restrict_to(d, a);
        const auto fam = r.feasible();
        const int zexp = fam.back().size() - fam.front().size();
        const int ra = rt[a.bits];
        ++counts[{re - ra, a.size() - ra, zexp}];
    });
    return counts;
}

BrCounts br_counts_ribbon(const RibbonGraph& g) {
    guard(g.edges(), 20, "Bollobas-Riordan state sum");
    const int re = graph_rank(g, g.all_edges());
    BrCounts counts;
    for_each_subset(g.all_edges(), [&](ElemSet a) {
        const RibbonGraph h = spanning_subgraph(g, a);
        const int ra = h.vertices() - h.components();
        ++counts[{re - ra, a.size() - ra, h.euler_genus()}];
    });
    return counts;
}

LaurentPoly shifted_from_counts(const BrCounts& counts) {
    LaurentPoly out;
    for (const auto& [k, c] : counts) {
        Exponents e{};
        e[static_cast<std::size_t>(Var::X)] = k[0];
        e[static_cast<std::size_t>(Var::Y)] = k[1];
        e[static_cast<std::size_t>(Var::Z)] = k[2];
        out.add_term(e, mpq_class(static_cast<long>(c)));
    }
    return out;
}

LaurentPoly unshift(const LaurentPoly& shifted) {
    return shifted.substitute(Var::X, LaurentPoly::var(Var::X) - LaurentPoly(1));
}

LaurentPoly weight_product(const WeightSystem& w, ElemSet a, ElemSet b, ElemSet c, bool& zero) {
    LaurentPoly p(1);
    zero = false;
    auto mul = [&](ElemSet set, LaurentPoly WeightTriple::*field) {
        set.for_each([&](int e) {
            if (zero) return;
            const LaurentPoly& v = w.at(e).*field;
            if (v.is_zero()) zero = true;
            else p *= v;
        });
    };
    mul(a, &WeightTriple::alpha);
    mul(b, &WeightTriple::beta);
    mul(c, &WeightTriple::gamma);
    return p;
}

LaurentPoly combine_by_exponent(const std::map<int, LaurentPoly>& by_exp, const LaurentPoly& t) {
    LaurentPoly out;
    for (const auto& [k, coeff] : by_exp) out += coeff * t.pow(k);
    return out;
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
    if (!(a == b)) throw DomainError("weight system ground set differs from the delta-matroid ground set");
}

const LaurentPoly& var_s() {
    static const LaurentPoly v = LaurentPoly::var(Var::S);
    return v;
}
const LaurentPoly& var_t() {
    static const LaurentPoly v = LaurentPoly::var(Var::T);
    return v;
}

}  // namespace

LaurentPoly characteristic(const Matroid& m) {
    guard(m.size(), 24, "characteristic polynomial");
    const auto rt = m.rank_table();
    const int re = m.rank();
    std::map<int, long long> counts;
    for_each_subset(m.all(), [&](ElemSet a) { counts[re - rt[a.bits]] += sign_of(a); });
    return from_counts(counts);
}

LaurentPoly characteristic_dm(const SetSystem& d) { return characteristic(lower_matroid(d)); }

LaurentPoly penrose_dm(const DeltaMatroid& d) {
    guard(d.size(), 20, "Penrose state sum");
    const SetSystem de = dual(static_cast<const SetSystem&>(d));
    std::map<int, long long> counts;
    for_each_subset(d.all(), [&](ElemSet x) { counts[d_min(dual_pivot(de, x))] += sign_of(x); });
    return from_counts(counts);
}

LaurentPoly penrose_ribbon(const RibbonGraph& g) {
    guard(g.edges(), 20, "Penrose state sum");
    std::map<int, long long> counts;
    for_each_subset(g.all_edges(),
                    [&](ElemSet a) { counts[partial_petrial(g, a).boundary_components()] += sign_of(a); });
    return from_counts(counts);
}

LaurentPoly penrose_recursive(const DeltaMatroid& d) {
    if (d.size() == 0) return LaurentPoly(1);
    const LaurentPoly lm1 = lambda() - LaurentPoly(1);
    switch (element_kind(d, 0)) {
        case ElementKind::DmLoop:
            return lm1 * penrose_recursive(contract_element(d, 0));
        case ElementKind::TrivialNonOrientableRibbonLoop:
            return -(lm1 * penrose_recursive(loop_complemented_contraction(d, 0)));
        default:
            return penrose_recursive(contract_element(d, 0)) - penrose_recursive(loop_complemented_contraction(d, 0));
    }
}

LaurentPoly penrose_via_characteristic(const DeltaMatroid& d) {
    guard(d.size(), 16, "characteristic expansion");
    LaurentPoly out;
    for_each_subset(d.all(), [&](ElemSet a) {
        const LaurentPoly chi = characteristic_dm(dual(loop_complement(d, a)));
        if (a.size() & 1) out -= chi;
        else out += chi;
    });
    return out;
}

WeightSystem::WeightSystem(GroundSet ground, std::vector<WeightTriple> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != ground_.size())
        throw DomainError("weight system must have exactly one triple per element");
}

WeightSystem WeightSystem::uniform_symbolic(GroundSet ground) {
    return uniform(std::move(ground), {LaurentPoly::var(Var::Alpha), LaurentPoly::var(Var::Beta),
                                       LaurentPoly::var(Var::Gamma)});
}

WeightSystem WeightSystem::uniform(GroundSet ground, const WeightTriple& w) {
    std::vector<WeightTriple> ws(static_cast<std::size_t>(ground.size()), w);
    return WeightSystem(std::move(ground), std::move(ws));
}

WeightSystem WeightSystem::without(int e) const {
    std::vector<WeightTriple> ws = weights_;
    ws.erase(ws.begin() + e);
    return WeightSystem(ground_.without(e), std::move(ws));
}

WeightSystem WeightSystem::swapped_alpha_beta() const {
    std::vector<WeightTriple> ws = weights_;
    for (auto& w : ws) std::swap(w.alpha, w.beta);
    return WeightSystem(ground_, std::move(ws));
}

WeightSystem weight_transform(const WeightSystem& w, std::span<const WordStep> word) {
    std::vector<WeightTriple> ws;
    for (int e = 0; e < w.ground().size(); ++e) ws.push_back(w.at(e));
    for (const auto& step : word) {
        if (!step.set.subset_of(w.ground().all())) throw DomainError("word set not contained in the ground set");
        step.set.for_each([&](int e) {
            auto& t = ws[static_cast<std::size_t>(e)];
            if (step.gen == Generator::Twist) std::swap(t.alpha, t.beta);
            else std::swap(t.beta, t.gamma);
        });
    }
    return WeightSystem(w.ground(), std::move(ws));
}

LaurentPoly transition_dm(const SetSystem& d, const WeightSystem& w, const LaurentPoly& t) {
    guard(d.size(), 12, "transition state sum");
    require_same_ground(d.ground(), w.ground());
    const ElemSet all = d.all();
    std::map<int, LaurentPoly> by_exp;
    for_each_subset(all, [&](ElemSet b) {
        const SetSystem db = twist(d, b);
        for_each_subset(all - b, [&](ElemSet c) {
            bool zero = false;
            LaurentPoly weight = weight_product(w, all - b - c, b, c, zero);
            if (zero) return;
            by_exp[d_min(dual_pivot(db, c))] += weight;
        });
    });
    return combine_by_exponent(by_exp, t);
}

LaurentPoly transition_ribbon(const RibbonGraph& g, const WeightSystem& w, const LaurentPoly& t) {
    guard(g.edges(), 12, "transition state sum");
    require_same_ground(g.edge_labels(), w.ground());
    const ElemSet all = g.all_edges();
    std::map<int, LaurentPoly> by_exp;
    for_each_subset(all, [&](ElemSet c) {
        const RibbonGraph gc = partial_petrial(g, c);
        for_each_subset(all - c, [&](ElemSet b) {
            bool zero = false;
            LaurentPoly weight = weight_product(w, all - b - c, b, c, zero);
            if (zero) return;
            by_exp[delete_edges(gc, b).boundary_components()] += weight;
        });
    });
    return combine_by_exponent(by_exp, t);
}

LaurentPoly transition_recursive(const DeltaMatroid& d, const WeightSystem& w, const LaurentPoly& t) {
    require_same_ground(d.ground(), w.ground());
    if (d.size() == 0) return LaurentPoly(1);
    const WeightTriple& we = w.at(0);
    const WeightSystem rest = w.without(0);
    LaurentPoly fa = we.alpha, fb = we.beta, fc = we.gamma;
    switch (element_kind(d, 0)) {
        case ElementKind::DmLoop: fb *= t; break;
        case ElementKind::TrivialNonOrientableRibbonLoop: fc *= t; break;
        case ElementKind::Coloop: fa *= t; break;
        default: break;
    }
    LaurentPoly out;
    if (!fa.is_zero()) out += fa * transition_recursive(delete_element(d, 0), rest, t);
    if (!fb.is_zero()) out += fb * transition_recursive(contract_element(d, 0), rest, t);
    if (!fc.is_zero()) out += fc * transition_recursive(loop_complemented_contraction(d, 0), rest, t);
    return out;
}

bool transition_invariance_check(const DeltaMatroid& d, const WeightSystem& w, std::span<const WordStep> word,
                                 const LaurentPoly& t) {
    return transition_dm(d, w, t) == transition_dm(apply_word(d, word), weight_transform(w, word), t);
}

LaurentPoly br_dm_shifted(const DeltaMatroid& d) { return shifted_from_counts(br_counts_dm(d)); }

LaurentPoly br_dm(const DeltaMatroid& d) { return unshift(br_dm_shifted(d)); }

LaurentPoly br_ribbon_shifted(const RibbonGraph& g) { return shifted_from_counts(br_counts_ribbon(g)); }

LaurentPoly br_ribbon(const RibbonGraph& g) { return unshift(br_ribbon_shifted(g)); }

LaurentPoly br_dm_st(const DeltaMatroid& d) {
    LaurentPoly out;
    for (const auto& [k, c] : br_counts_dm(d)) {
        Exponents e{};
        e[static_cast<std::size_t>(Var::S)] = 2 * k[0] - k[2];
        e[static_cast<std::size_t>(Var::T)] = 2 * k[1] - k[2];
        out.add_term(e, mpq_class(static_cast<long>(c)));
    }
    return out;
}

BrTransitionOutcome br_from_transition(const DeltaMatroid& d) {
    const LaurentPoly t_over_s = var_t() * var_s().pow(-1);
    const LaurentPoly st = var_s() * var_t();
    BrTransitionOutcome out;
    out.rhs = t_over_s.pow(d_min(d)) * br_dm_st(d);
    out.lhs_root_weight = transition_dm(d, WeightSystem::uniform(d.ground(), {1, t_over_s, 0}), st);
    out.lhs_square_weight = transition_dm(d, WeightSystem::uniform(d.ground(), {1, t_over_s.pow(2), 0}), st);
    return out;
}

bool br_from_transition_check(const DeltaMatroid& d) { return br_from_transition(d).root_weight_holds(); }

bool br_recursion_holds_at(const DeltaMatroid& d, int e) {
    const LaurentPoly t_over_s = var_t() * var_s().pow(-1);
    const LaurentPoly rd = br_dm_st(delete_element(d, e));
    const LaurentPoly rc = br_dm_st(contract_element(d, e));
    LaurentPoly expected;
    switch (element_kind(d, e)) {
        case ElementKind::DmLoop: expected = rd + var_t().pow(2) * rc; break;
        case ElementKind::NonTrivialOrientableRibbonLoop: expected = rd + t_over_s.pow(2) * rc; break;
        case ElementKind::TrivialNonOrientableRibbonLoop:
        case ElementKind::NonTrivialNonOrientableRibbonLoop: expected = rd + t_over_s * rc; break;
        case ElementKind::Coloop: expected = var_s().pow(2) * rd + rc; break;
        case ElementKind::Ordinary: expected = rd + rc; break;
    }
    return expected == br_dm_st(d);
}

std::optional<int> br_recursion_failure(const DeltaMatroid& d) {
    for (int e = 0; e < d.size(); ++e)
        if (!br_recursion_holds_at(d, e)) return e;
    return std::nullopt;
}

bool br_recursion_check(const DeltaMatroid& d) {
    if (d.size() == 0) return br_dm_st(d) == LaurentPoly(1);
    return !br_recursion_failure(d).has_value();
}

}  // namespace deltakit
