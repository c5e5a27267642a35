#include "deltakit/laurent.hpp"

#include <cctype>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {"l", "x", "y", "z", "t", "s", "alpha", "beta", "gamma"};

int degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

bool is_monomial_constant(const Exponents& e) {
    for (int v : e)
        if (v != 0) return false;
    return true;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpq_class(c)) {}

LaurentPoly::LaurentPoly(mpq_class c) {
    c.canonicalize();
    if (c != 0) terms_.emplace(Exponents{}, std::move(c));
}

LaurentPoly LaurentPoly::var(Var v, int power) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = power;
    return monomial(1, e);
}

LaurentPoly LaurentPoly::monomial(mpq_class coeff, const Exponents& e) {
    LaurentPoly p;
    p.add_term(e, coeff);
    return p;
}

mpq_class LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i) e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) {
        if (terms_.size() != 1) throw DomainError("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Exponents ne;
        for (int i = 0; i < kNumVars; ++i) ne[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] * k;
        mpq_class nc = 1;
        for (int i = 0; i < -k; ++i) nc /= c;
        return monomial(nc, ne);
    }
    LaurentPoly result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& value) const {
    const auto idx = static_cast<std::size_t>(v);
    LaurentPoly out;
    std::map<int, LaurentPoly> powers;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const int k = rest[idx];
        rest[idx] = 0;
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        out += monomial(c, rest) * it->second;
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body;
        const bool constant = is_monomial_constant(e);
        if (constant || mag != 1) body = mag.get_str();
        for (int i = 0; i < kNumVars; ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            if (!body.empty()) body += '*';
            body += kNames[static_cast<std::size_t>(i)];
            if (p != 1) body += "^" + std::to_string(p);
        }
        out += body;
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("polynomial", "empty text");
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("polynomial", what + " at offset " + std::to_string(i));
    };
    auto read_int = [&]() {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || !std::isdigit(static_cast<unsigned char>(s[i - 1]))) fail("expected integer");
        return s.substr(start, i - start);
    };
    LaurentPoly out;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!out.terms_.empty() || i != 0) {
            fail("expected sign");
        }
        mpq_class coeff = 1;
        Exponents e{};
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (any) {
                if (s[i] != '*') fail("expected '*'");
                ++i;
            }
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string num = read_int();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    num += "/" + read_int();
                }
                mpq_class q(num);
                q.canonicalize();
                coeff *= q;
            } else {
                std::size_t start = i;
                while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
                const std::string name = s.substr(start, i - start);
                int idx = -1;
                for (int k = 0; k < kNumVars; ++k)
                    if (kNames[static_cast<std::size_t>(k)] == name) idx = k;
                if (idx < 0) fail("unknown variable '" + name + "'");
                int p = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    p = std::stoi(read_int());
                }
                e[static_cast<std::size_t>(idx)] += p;
            }
            any = true;
        }
        if (!any) fail("empty term");
        out.add_term(e, sign * coeff);
    }
    return out;
}

}  // namespace deltakit
