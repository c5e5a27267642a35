#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace deltakit {

/// Variables known to the polynomial type, in canonical order.
enum class Var : int { L, X, Y, Z, T, S, Alpha, Beta, Gamma };

inline constexpr int kNumVars = 9;

std::string_view var_name(Var v);

using Exponents = std::array<int, kNumVars>;

/// Graded lex, descending: larger total degree first, ties broken by
/// comparing exponents in variable order.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate Laurent polynomial with exact rational coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exponents, mpq_class, TermOrder>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(mpq_class c);

    static LaurentPoly var(Var v, int power = 1);
    static LaurentPoly monomial(mpq_class coeff, const Exponents& e);
    /// Parses the canonical text form; throws ParseError.
    static LaurentPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of x^e (zero if absent).
    mpq_class coeff(const Exponents& e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const mpq_class& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Negative powers are allowed only for monomials.
    LaurentPoly pow(int k) const;

    /// Replaces `v` by `value`; negative powers of `v` require `value` to be a monomial.
    LaurentPoly substitute(Var v, const LaurentPoly& value) const;

    /// Canonical text, e.g. "-l^2 + 1", "2*x^2*y", "3/2*x^-1".
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace deltakit
