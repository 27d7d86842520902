#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "errors.hpp"

namespace chevalley {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

// Miller-Rabin with the first twelve prime bases; deterministic for
// n < 3.3*10^24, which covers every modulus this library is used with.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long long r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long long k = 1; k < r; ++k) {
            x = (x * x) % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

enum class RingKind { Integers, Rationals, PrimeField, Modular, IntPolynomial };

// A lightweight tag describing one of the supported coefficient rings.
// Copies are cheap; polynomial variable lists are shared.
class RingHandle {
  public:
    RingHandle() : kind_(RingKind::Integers) {}

    static RingHandle integers() { return RingHandle(RingKind::Integers); }
    static RingHandle rationals() { return RingHandle(RingKind::Rationals); }

    static RingHandle prime_field(const Int& p) {
        if (!is_probable_prime(p))
            throw std::invalid_argument("prime_field: modulus " + p.str() + " is not prime");
        RingHandle h(RingKind::PrimeField);
        h.modulus_ = p;
        return h;
    }

    static RingHandle modular(const Int& n) {
        if (n < 2) throw std::invalid_argument("modular: modulus must be >= 2");
        RingHandle h(RingKind::Modular);
        h.modulus_ = n;
        return h;
    }

    static RingHandle polynomial(std::vector<std::string> vars) {
        if (vars.size() < 2)
            throw std::invalid_argument("polynomial ring needs at least two variables");
        for (const auto& v : vars) {
            if (v.empty()) throw std::invalid_argument("polynomial variable name is empty");
            for (char c : v)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw std::invalid_argument("bad polynomial variable name: " + v);
            if (std::isdigit(static_cast<unsigned char>(v[0])))
                throw std::invalid_argument("polynomial variable may not start with a digit");
        }
        RingHandle h(RingKind::IntPolynomial);
        h.vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
        return h;
    }

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    const std::vector<std::string>& vars() const {
        static const std::vector<std::string> none;
        return vars_ ? *vars_ : none;
    }

    bool operator==(const RingHandle& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_ && vars() == o.vars();
    }
    bool operator!=(const RingHandle& o) const { return !(*this == o); }

    // The textual form accepted by parse(): int, rat, gfp:<p>, mod:<n>, poly:v1,v2,...
    std::string spec() const {
        switch (kind_) {
            case RingKind::Integers:  return "int";
            case RingKind::Rationals: return "rat";
            case RingKind::PrimeField: return "gfp:" + modulus_.str();
            case RingKind::Modular:    return "mod:" + modulus_.str();
            case RingKind::IntPolynomial: {
                std::string s = "poly:";
                const auto& vs = vars();
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (i) s += ',';
                    s += vs[i];
                }
                return s;
            }
        }
        return "";
    }

    static RingHandle parse(const std::string& spec) {
        if (spec == "int") return integers();
        if (spec == "rat") return rationals();
        auto parse_number = [](const std::string& s) {
            if (s.empty()) throw std::invalid_argument("ring spec: missing number");
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("ring spec: bad number '" + s + "'");
            return Int(s);
        };
        if (spec.rfind("gfp:", 0) == 0) return prime_field(parse_number(spec.substr(4)));
        if (spec.rfind("mod:", 0) == 0) return modular(parse_number(spec.substr(4)));
        if (spec.rfind("poly:", 0) == 0) {
            std::vector<std::string> vars;
            std::string rest = spec.substr(5), cur;
            for (char c : rest) {
                if (c == ',') { vars.push_back(cur); cur.clear(); }
                else cur += c;
            }
            vars.push_back(cur);
            return polynomial(std::move(vars));
        }
        throw std::invalid_argument("unknown ring spec '" + spec + "'");
    }

  private:
    explicit RingHandle(RingKind k) : kind_(k) {}
    RingKind kind_;
    Int modulus_;
    std::shared_ptr<const std::vector<std::string>> vars_;
};

// An immutable ring element in canonical form: reduced fractions with
// positive denominator, least non-negative residues, sorted polynomial
// terms with no zero coefficients. Equality is plain representation
// equality, which is what lets matrices be hashed.
class RingValue {
  public:
    using Monomial = std::vector<int>;        // exponent per ring variable
    using TermMap = std::map<Monomial, Int>;  // lexicographic key order

    RingValue() : ring_(RingHandle::integers()), num_(0), den_(1) {}

    static RingValue zero(const RingHandle& r) { return from_int(r, 0); }
    static RingValue one(const RingHandle& r) { return from_int(r, 1); }

    // The canonical morphism Z -> R applied to n.
    static RingValue from_int(const RingHandle& r, Int n) {
        RingValue v;
        v.ring_ = r;
        switch (r.kind()) {
            case RingKind::Integers:
            case RingKind::Rationals:
                v.num_ = std::move(n);
                break;
            case RingKind::PrimeField:
            case RingKind::Modular:
                v.num_ = mod_reduce(n, r.modulus());
                break;
            case RingKind::IntPolynomial:
                if (n != 0) v.terms_[Monomial(r.vars().size(), 0)] = std::move(n);
                break;
        }
        return v;
    }

    static RingValue rational(const RingHandle& r, const Int& num, const Int& den) {
        if (r.kind() != RingKind::Rationals)
            throw RingMismatch("rational value requested from a non-rational ring");
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        RingValue v;
        v.ring_ = r;
        v.num_ = q.numerator();
        v.den_ = q.denominator();
        return v;
    }

    // The generator x_k of the polynomial ring (k indexes the variable list).
    static RingValue variable(const RingHandle& r, std::size_t k) {
        if (r.kind() != RingKind::IntPolynomial)
            throw RingMismatch("variable requested from a non-polynomial ring");
        if (k >= r.vars().size()) throw std::invalid_argument("variable index out of range");
        RingValue v;
        v.ring_ = r;
        Monomial m(r.vars().size(), 0);
        m[k] = 1;
        v.terms_[std::move(m)] = 1;
        return v;
    }

    const RingHandle& ring() const { return ring_; }

    bool is_zero() const {
        if (ring_.kind() == RingKind::IntPolynomial) return terms_.empty();
        return num_ == 0;
    }
    bool is_one() const { return *this == one(ring_); }

    bool operator==(const RingValue& o) const {
        return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_ && terms_ == o.terms_;
    }
    bool operator!=(const RingValue& o) const { return !(*this == o); }

    // Total order for use as a container key; not a ring-theoretic order.
    bool operator<(const RingValue& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        if (den_ != o.den_) return den_ < o.den_;
        return terms_ < o.terms_;
    }

    RingValue operator+(const RingValue& o) const {
        check_same_ring(o);
        RingValue v;
        v.ring_ = ring_;
        switch (ring_.kind()) {
            case RingKind::Integers:
                v.num_ = num_ + o.num_;
                break;
            case RingKind::Rationals: {
                Rational q = as_rational() + o.as_rational();
                v.num_ = q.numerator(); v.den_ = q.denominator();
                break;
            }
            case RingKind::PrimeField:
            case RingKind::Modular:
                v.num_ = mod_reduce(num_ + o.num_, ring_.modulus());
                break;
            case RingKind::IntPolynomial: {
                v.terms_ = terms_;
                for (const auto& [m, c] : o.terms_) {
                    Int& dst = v.terms_[m];
                    dst += c;
                    if (dst == 0) v.terms_.erase(m);
                }
                break;
            }
        }
        return v;
    }

    RingValue operator-() const {
        RingValue v;
        v.ring_ = ring_;
        v.den_ = den_;
        switch (ring_.kind()) {
            case RingKind::Integers:
            case RingKind::Rationals:
                v.num_ = -num_;
                break;
            case RingKind::PrimeField:
            case RingKind::Modular:
                v.num_ = mod_reduce(-num_, ring_.modulus());
                break;
            case RingKind::IntPolynomial:
                for (const auto& [m, c] : terms_) v.terms_[m] = -c;
                break;
        }
        return v;
    }

    RingValue operator-(const RingValue& o) const { return *this + (-o); }

    RingValue operator*(const RingValue& o) const {
        check_same_ring(o);
        RingValue v;
        v.ring_ = ring_;
        switch (ring_.kind()) {
            case RingKind::Integers:
                v.num_ = num_ * o.num_;
                break;
            case RingKind::Rationals: {
                Rational q = as_rational() * o.as_rational();
                v.num_ = q.numerator(); v.den_ = q.denominator();
                break;
            }
            case RingKind::PrimeField:
            case RingKind::Modular:
                v.num_ = mod_reduce(num_ * o.num_, ring_.modulus());
                break;
            case RingKind::IntPolynomial:
                for (const auto& [m1, c1] : terms_) {
                    for (const auto& [m2, c2] : o.terms_) {
                        Monomial m(m1.size());
                        for (std::size_t k = 0; k < m.size(); ++k) m[k] = m1[k] + m2[k];
                        Int& dst = v.terms_[m];
                        dst += c1 * c2;
                        if (dst == 0) v.terms_.erase(m);
                    }
                }
                break;
        }
        return v;
    }

    // For the integer-like kinds, the stored representative.
    const Int& integer_value() const {
        if (ring_.kind() == RingKind::Rationals || ring_.kind() == RingKind::IntPolynomial)
            throw RingMismatch("integer_value on a non-integral ring value");
        return num_;
    }

    Rational as_rational() const {
        if (ring_.kind() == RingKind::Integers) return Rational(num_);
        if (ring_.kind() != RingKind::Rationals)
            throw RingMismatch("as_rational on a non-rational ring value");
        return Rational(num_, den_);
    }

    std::string to_string() const {
        switch (ring_.kind()) {
            case RingKind::Integers:
            case RingKind::PrimeField:
            case RingKind::Modular:
                return num_.str();
            case RingKind::Rationals:
                return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
            case RingKind::IntPolynomial: {
                if (terms_.empty()) return "0";
                std::string s;
                for (const auto& [m, c] : terms_) {
                    std::string t = term_string(m, c);
                    if (s.empty()) s = t;
                    else if (!t.empty() && t[0] == '-') s += t;
                    else s += "+" + t;
                }
                return s;
            }
        }
        return "";
    }

    // Inverse of the strict textual form produced by to_string().
    static RingValue parse(const RingHandle& r, const std::string& s);

    friend std::optional<RingValue> try_invert(const RingValue& a);
    friend std::ostream& operator<<(std::ostream& os, const RingValue& v) {
        return os << v.to_string();
    }

  private:
    static Int mod_reduce(Int x, const Int& m) {
        x %= m;
        if (x < 0) x += m;
        return x;
    }

    void check_same_ring(const RingValue& o) const {
        if (ring_ != o.ring_)
            throw RingMismatch("ring mismatch: " + ring_.spec() + " vs " + o.ring_.spec());
    }

    std::string term_string(const Monomial& m, const Int& c) const {
        bool constant = true;
        for (int e : m) if (e) constant = false;
        if (constant) return c.str();
        std::string v;
        const auto& names = ring_.vars();
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (!m[k]) continue;
            if (!v.empty()) v += "*";
            v += names[k];
            if (m[k] != 1) v += "^" + std::to_string(m[k]);
        }
        if (c == 1) return v;
        if (c == -1) return "-" + v;
        return c.str() + "*" + v;
    }

    RingHandle ring_;
    Int num_ = 0;   // integer value, residue, or rational numerator
    Int den_ = 1;   // rational denominator, 1 elsewhere
    TermMap terms_; // polynomial terms
};

inline std::optional<RingValue> try_invert(const RingValue& a) {
    const RingHandle& r = a.ring();
    switch (r.kind()) {
        case RingKind::Integers:
            if (a.num_ == 1 || a.num_ == -1) return a;
            return std::nullopt;
        case RingKind::Rationals: {
            if (a.num_ == 0) return std::nullopt;
            return RingValue::rational(r, a.den_, a.num_);
        }
        case RingKind::PrimeField:
        case RingKind::Modular: {
            // extended Euclid; works for both kinds and detects non-units
            Int old_r = a.num_, rr = r.modulus();
            Int old_s = 1, s = 0;
            while (rr != 0) {
                Int q = old_r / rr;
                Int tmp = old_r - q * rr; old_r = rr; rr = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
            }
            if (old_r != 1) return std::nullopt;  // gcd(a, n) != 1
            return RingValue::from_int(r, old_s);
        }
        case RingKind::IntPolynomial: {
            if (a.terms_.size() != 1) return std::nullopt;
            const auto& [m, c] = *a.terms_.begin();
            for (int e : m) if (e) return std::nullopt;
            if (c != 1 && c != -1) return std::nullopt;
            return a;  // +-1 are self-inverse
        }
    }
    return std::nullopt;
}

// t^k for integer k; negative k requires t to be a unit.
inline RingValue ring_pow(const RingValue& t, long long k) {
    RingValue base = t;
    if (k < 0) {
        auto inv = try_invert(t);
        if (!inv) throw NonUnit("negative power of a non-unit");
        base = *inv;
        k = -k;
    }
    RingValue acc = RingValue::one(t.ring());
    for (long long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

inline RingValue RingValue::parse(const RingHandle& r, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty ring value");
    auto parse_plain_int = [](const std::string& str) {
        std::size_t k = (str[0] == '-') ? 1 : 0;
        if (k == str.size()) throw std::invalid_argument("bad integer '" + str + "'");
        for (; k < str.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(str[k])))
                throw std::invalid_argument("bad integer '" + str + "'");
        return Int(str);
    };
    switch (r.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField:
        case RingKind::Modular:
            return from_int(r, parse_plain_int(s));
        case RingKind::Rationals: {
            auto pos = s.find('/');
            if (pos == std::string::npos) return from_int(r, parse_plain_int(s));
            return rational(r, parse_plain_int(s.substr(0, pos)),
                            parse_plain_int(s.substr(pos + 1)));
        }
        case RingKind::IntPolynomial: {
            // grammar: term (("+"|"-") term)*, term: [coeff *] var[^exp] (* var[^exp])*
            const auto& names = r.vars();
            RingValue acc = zero(r);
            std::size_t i = 0;
            bool first = true;
            while (i < s.size()) {
                int sign = 1;
                if (!first || s[i] == '+' || s[i] == '-') {
                    if (s[i] == '-') sign = -1;
                    else if (s[i] != '+') throw std::invalid_argument("bad polynomial '" + s + "'");
                    ++i;
                }
                first = false;
                // split the term at the next top-level +/-
                std::size_t j = i;
                while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
                std::string term = s.substr(i, j - i);
                i = j;
                if (term.empty()) throw std::invalid_argument("bad polynomial '" + s + "'");
                Int coeff = sign;
                Monomial mono(names.size(), 0);
                std::size_t p = 0;
                bool any_factor = false;
                while (p < term.size()) {
                    std::size_t q = term.find('*', p);
                    std::string fac = term.substr(p, q == std::string::npos ? q : q - p);
                    p = (q == std::string::npos) ? term.size() : q + 1;
                    if (fac.empty()) throw std::invalid_argument("bad polynomial '" + s + "'");
                    if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
                        coeff *= parse_plain_int(fac);
                    } else {
                        auto caret = fac.find('^');
                        std::string var = fac.substr(0, caret);
                        int exp = 1;
                        if (caret != std::string::npos) {
                            Int e = parse_plain_int(fac.substr(caret + 1));
                            if (e < 1 || e > 1000000) throw std::invalid_argument("bad exponent in '" + s + "'");
                            exp = static_cast<int>(e);
                        }
                        auto it = std::find(names.begin(), names.end(), var);
                        if (it == names.end())
                            throw std::invalid_argument("unknown variable '" + var + "' in '" + s + "'");
                        mono[static_cast<std::size_t>(it - names.begin())] += exp;
                    }
                    any_factor = true;
                }
                if (!any_factor) throw std::invalid_argument("bad polynomial '" + s + "'");
                RingValue t;
                t.ring_ = r;
                if (coeff != 0) t.terms_[mono] = coeff;
                acc = acc + t;
            }
            return acc;
        }
    }
    throw std::invalid_argument("unreachable ring kind");
}

} // namespace chevalley
