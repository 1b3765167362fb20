#pragma once

// Laurent polynomials in v with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fockcb {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[v, v^-1], stored as a sparse exponent -> coefficient map.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c) { // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(0, BigInt(c));
    }
    LaurentPoly(const BigInt& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(0, c);
    }

    static LaurentPoly monomial(const BigInt& c, int exponent) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(exponent, c);
        return p;
    }
    /// v^k
    static LaurentPoly v_pow(int k) { return monomial(1, k); }

    static LaurentPoly from_pairs(const std::vector<std::pair<int, BigInt>>& pairs) {
        LaurentPoly p;
        for (const auto& [e, c] : pairs) p.add_term(e, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    /// Only meaningful for nonzero polynomials.
    int min_degree() const { return terms_.begin()->first; }
    int max_degree() const { return terms_.rbegin()->first; }

    void add_term(int exponent, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& q) {
        *this = *this * q;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator-(LaurentPoly p) {
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, cp * cq);
        return r;
    }
    /// Multiply by v^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

    /// v -> v^-1
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }
    bool is_bar_invariant() const { return *this == bar(); }

    /// Specialization v = 1.
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }
    /// Member of v Z[v]: every exponent >= 1. Zero counts.
    bool in_vZv() const { return terms_.empty() || terms_.begin()->first >= 1; }
    bool has_nonnegative_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

private:
    TermMap terms_;
};

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

/// Balanced quantum integer [n] = v^(n-1) + v^(n-3) + ... + v^(1-n).
inline LaurentPoly qint(int n) {
    if (n <= 0) throw InvalidArgument("qint: n must be positive, got " + std::to_string(n));
    LaurentPoly r;
    for (int k = 0; k < n; ++k) r.add_term(n - 1 - 2 * k, 1);
    return r;
}

inline LaurentPoly qfactorial(int n) {
    if (n < 0) throw InvalidArgument("qfactorial: n must be nonnegative");
    LaurentPoly r = 1;
    for (int k = 2; k <= n; ++k) r = r * qint(k);
    return r;
}

/// Returns r with r * q == p, or throws DivisionNotExact.
inline LaurentPoly exact_div(LaurentPoly p, const LaurentPoly& q) {
    if (q.is_zero()) throw InvalidArgument("exact_div: division by zero polynomial");
    LaurentPoly r;
    if (p.is_zero()) return r;
    const int qtop = q.max_degree();
    const BigInt& qlead = q.terms().rbegin()->second;
    // Any quotient has exponents in [min p - min q, max p - max q].
    const int lowest = p.min_degree() - q.min_degree();
    while (!p.is_zero()) {
        const int shift = p.max_degree() - qtop;
        if (shift < lowest) throw DivisionNotExact("exact_div: remainder does not vanish");
        const BigInt& plead = p.terms().rbegin()->second;
        if (plead % qlead != 0) throw DivisionNotExact("exact_div: leading coefficient not divisible");
        LaurentPoly t = LaurentPoly::monomial(plead / qlead, shift);
        p -= t * q;
        r += t;
    }
    return r;
}

/// a_0 + sum_{k>0} a_{-k} (v^k + v^-k): the bar-invariant m with p - m in v Z[v].
inline LaurentPoly bar_symmetric_part(const LaurentPoly& p) {
    LaurentPoly m;
    for (const auto& [e, c] : p.terms()) {
        if (e > 0) break;
        m.add_term(e, c);
        if (e < 0) m.add_term(-e, c);
    }
    return m;
}

/// Human form, ascending exponents: "v^-2 + 3*v", "0" for zero.
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "v";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

/// Matrix-cell form: terms "c*v^k" (c omitted when 1, constants bare), "+"-joined, "." for zero.
inline std::string to_cell(const LaurentPoly& p) {
    if (p.is_zero()) return ".";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "v^" << e;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

/// Parses the to_cell grammar (and "0").
inline LaurentPoly parse_cell(const std::string& text) {
    LaurentPoly p;
    if (text == "." || text == "0") return p;
    std::size_t pos = 0;
    auto fail = [&] { throw ParseError("bad polynomial cell: '" + text + "'"); };
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        BigInt coef = 1;
        bool has_digits = false;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) {
            coef = BigInt(text.substr(start, pos - start));
            has_digits = true;
        }
        int exponent = 0;
        if (pos < text.size() && text[pos] == '*') {
            if (!has_digits) fail();
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'v') {
            ++pos;
            exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t used = 0;
                try {
                    exponent = std::stoi(text.substr(pos), &used);
                } catch (const std::exception&) {
                    fail();
                }
                pos += used;
            }
        } else if (!has_digits) {
            fail();
        }
        p.add_term(exponent, sign * coef);
    }
    return p;
}

} // namespace fockcb
