#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "persimod/error.hpp"

namespace persimod {

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; (uint64_t)d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

// Coefficient field: characteristic 0 (rationals) or a prime p.
struct FieldSpec {
    uint32_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec prime(uint32_t p) {
        if (p >= (1u << 31) || !detail::is_prime_u32(p))
            throw Error(Errc::bad_field, "field characteristic must be 0 or a prime < 2^31, got " + std::to_string(p));
        return FieldSpec{p};
    }

    bool is_rational() const { return characteristic == 0; }

    std::string name() const {
        return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
    }

    bool operator==(const FieldSpec&) const = default;
};

// Parses the CLI spelling: "q" (rationals) or "p:<prime>".
inline FieldSpec parse_field_spec(std::string_view s) {
    if (s == "q" || s == "Q") return FieldSpec::rationals();
    if (s.size() > 2 && (s[0] == 'p' || s[0] == 'P') && s[1] == ':') {
        uint64_t p = 0;
        for (char c : s.substr(2)) {
            if (c < '0' || c > '9') throw Error(Errc::bad_field, "bad prime in field spec '" + std::string(s) + "'");
            p = p * 10 + (uint64_t)(c - '0');
            if (p >= (1ull << 31)) throw Error(Errc::bad_field, "prime too large in field spec '" + std::string(s) + "'");
        }
        return FieldSpec::prime((uint32_t)p);
    }
    throw Error(Errc::bad_field, "bad field spec '" + std::string(s) + "' (expected q or p:<prime>)");
}

class RationalField;

// Exact rational, arbitrary precision.
class Rational {
public:
    using Field = RationalField;

    Rational() = default;
    Rational(long n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational inverse() const {
        if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    // Total order used only for canonical sorting of outputs.
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    const mpq_class& value() const { return v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

class RationalField {
public:
    using Elem = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_long(long n) const { return Rational(n); }

    // Accepts "3", "-4/7" and decimal literals like "0.25".
    Rational parse(std::string_view s) const {
        std::string txt(s);
        if (txt.empty()) throw Error(Errc::syntax, "empty rational literal");
        auto dot = txt.find('.');
        if (dot != std::string::npos) {
            std::string digits = txt.substr(0, dot) + txt.substr(dot + 1);
            size_t frac_len = txt.size() - dot - 1;
            mpz_class num;
            if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
                throw Error(Errc::syntax, "bad decimal literal '" + txt + "'");
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            return Rational(mpq_class(num) / mpq_class(den));
        }
        mpq_class v;
        if (mpq_set_str(v.get_mpq_t(), txt.c_str(), 10) != 0)
            throw Error(Errc::syntax, "bad rational literal '" + txt + "'");
        v.canonicalize();
        return Rational(v);
    }

    FieldSpec spec() const { return FieldSpec::rationals(); }
};

class PrimeField;

// Element of F_p. Carries its modulus; a default-constructed value is the
// detached zero, absorbed by arithmetic with attached elements.
class Fp {
public:
    using Field = PrimeField;

    Fp() = default;
    Fp(uint64_t v, uint32_t p) : p_(p) { v_ = v % p; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0) return Fp();
        uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return make(s, p);
    }

    Fp operator-(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0) return Fp();
        uint64_t s = v_ + p - o.v_;
        if (s >= p) s -= p;
        return make(s, p);
    }

    Fp operator*(const Fp& o) const {
        uint32_t p = join(o);
        if (p == 0 || v_ == 0 || o.v_ == 0) return Fp();
        return make((v_ * o.v_) % p, p);
    }

    Fp operator-() const {
        if (is_zero()) return *this;
        return make(p_ - v_, p_);
    }

    Fp inverse() const {
        if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        return pow(p_ - 2);
    }

    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp pow(uint64_t e) const {
        if (is_zero()) return e == 0 ? make(1, p_) : *this;
        Fp r = make(1, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Fp& o) const {
        if (v_ == 0 || o.v_ == 0) return v_ == o.v_;
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    int cmp(const Fp& o) const { return v_ < o.v_ ? -1 : v_ > o.v_ ? 1 : 0; }

    uint64_t value() const { return v_; }

    std::string str() const { return std::to_string(v_); }

private:
    uint64_t v_ = 0;
    uint32_t p_ = 0;

    static Fp make(uint64_t v, uint32_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }

    // Modulus of the pair; detached zeros adopt the other side's modulus.
    uint32_t join(const Fp& o) const { return p_ != 0 ? p_ : o.p_; }
};

class PrimeField {
public:
    using Elem = Fp;

    explicit PrimeField(uint32_t p) : spec_(FieldSpec::prime(p)) {}
    explicit PrimeField(FieldSpec s) : spec_(s) {
        if (s.characteristic == 0) throw Error(Errc::bad_field, "PrimeField requires positive characteristic");
    }

    Fp zero() const { return Fp(0, spec_.characteristic); }
    Fp one() const { return Fp(1, spec_.characteristic); }

    Fp from_long(long n) const {
        uint32_t p = spec_.characteristic;
        long r = n % (long)p;
        if (r < 0) r += p;
        return Fp((uint64_t)r, p);
    }

    // Accepts integer literals of any size, reduced mod p.
    Fp parse(std::string_view s) const {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10) != 0)
            throw Error(Errc::syntax, "bad integer literal '" + std::string(s) + "'");
        mpz_class r = z % spec_.characteristic;
        if (r < 0) r += spec_.characteristic;
        return Fp(r.get_ui(), spec_.characteristic);
    }

    FieldSpec spec() const { return spec_; }

private:
    FieldSpec spec_;
};

}  // namespace persimod
