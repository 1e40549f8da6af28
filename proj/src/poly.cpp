#include "zetagraph/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zg {

IntPoly::IntPoly(long value) {
    if (value != 0) coeffs_.push_back(BigInt(value));
}

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(BigInt c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, BigInt(0));
        p.coeffs_[deg] = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[i];
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly base = *this, acc(1);
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::string> IntPoly::decimal_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivision poly_divide(const IntPoly& lhs, const IntPoly& rhs) {
    if (rhs.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyDivision out;
    IntPoly rem = lhs;
    IntPoly quo;
    const BigInt& d = rhs.leading();
    while (!rem.is_zero() && rem.degree() >= rhs.degree()) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(), d.get_mpz_t());
        if (r != 0) {
            out.exact = false;
            out.remainder = rem;
            return out;
        }
        IntPoly term = IntPoly::monomial(q, rem.degree() - rhs.degree());
        quo += term;
        rem -= term * rhs;
    }
    out.exact = rem.is_zero();
    out.quotient = std::move(quo);
    out.remainder = std::move(rem);
    return out;
}

IntPoly divexact(const IntPoly& lhs, const IntPoly& rhs) {
    PolyDivision d = poly_divide(lhs, rhs);
    if (!d.exact)
        throw std::domain_error("inexact polynomial division, remainder " +
                                d.remainder.to_string());
    return d.quotient;
}

namespace {

struct FactorParser {
    const std::string& s;
    size_t i = 0;

    explicit FactorParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("factored polynomial parse error at offset " +
                                    std::to_string(i) + ": " + what);
    }

    BigInt parse_uint() {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return BigInt(s.substr(start, i - start));
    }

    // term := [sign] [coef] [var [^ exp]]
    IntPoly parse_term(int sign) {
        BigInt coef(1);
        bool saw_any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = parse_uint();
            saw_any = true;
            if (i < s.size() && s[i] == '*') ++i;  // 3*t
        }
        int deg = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            ++i;
            saw_any = true;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                deg = static_cast<int>(parse_uint().get_si());
            }
        }
        if (!saw_any) fail("expected term");
        return IntPoly::monomial(sign < 0 ? BigInt(-coef) : coef, deg);
    }

    // sum := term { (+|-) term }
    IntPoly parse_sum() {
        IntPoly acc;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        acc += parse_term(sign);
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            acc += parse_term(sign);
        }
        return acc;
    }

    // factor := '(' sum ')' ['^' exp] | term ['^' handled inside term]
    IntPoly parse_factor() {
        if (s[i] == '(') {
            ++i;
            IntPoly inner = parse_sum();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            unsigned e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = static_cast<unsigned>(parse_uint().get_ui());
            }
            return inner.pow(e);
        }
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        return parse_term(sign);
    }

    IntPoly parse() {
        IntPoly acc(1);
        skip_ws();
        if (i >= s.size()) fail("empty input");
        while (i < s.size()) {
            acc = acc * parse_factor();
            if (i < s.size() && (s[i] == '+' || s[i] == '-'))
                fail("top-level sums must be parenthesized");
            skip_ws();
        }
        return acc;
    }
};

}  // namespace

IntPoly parse_factored(const std::string& text) {
    FactorParser p(text);
    return p.parse();
}

}  // namespace zg
