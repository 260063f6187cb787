#pragma once

// Scalar types used by the exact linear algebra: arbitrary-precision
// rationals (the reference field) and a word-sized prime field used as a
// fast path for rank computations.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "apolar/errors.hpp"

namespace apolar {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

std::string to_string(const Rational& q);

// Element of Z/pZ for a runtime prime p < 2^32. The modulus is process-wide;
// ScopedModulus switches it for the duration of a computation.
class ModP {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

    ModP() = default;
    explicit ModP(std::uint64_t v) : v_(v % modulus_) {}
    explicit ModP(std::int64_t v)
        : v_(static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(modulus_)) +
                                         static_cast<std::int64_t>(modulus_)) %
                                        static_cast<std::int64_t>(modulus_))) {}
    explicit ModP(int v) : ModP(static_cast<std::int64_t>(v)) {}

    static std::uint64_t modulus() { return modulus_; }

    class ScopedModulus {
    public:
        explicit ScopedModulus(std::uint64_t p);
        ~ScopedModulus() { modulus_ = saved_; }
        ScopedModulus(const ScopedModulus&) = delete;
        ScopedModulus& operator=(const ScopedModulus&) = delete;

    private:
        std::uint64_t saved_;
    };

    std::uint64_t value() const { return v_; }

    friend ModP operator+(ModP a, ModP b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= modulus_) s -= modulus_;
        return raw(s);
    }
    friend ModP operator-(ModP a, ModP b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus_ - b.v_); }
    friend ModP operator*(ModP a, ModP b) { return raw((a.v_ * b.v_) % modulus_); }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

    ModP inverse() const;

    // Image of a rational number; throws if p divides the denominator.
    static ModP from_rational(const Rational& q);

private:
    static ModP raw(std::uint64_t v) {
        ModP r;
        r.v_ = v;
        return r;
    }

    std::uint64_t v_ = 0;
    static inline std::uint64_t modulus_ = kDefaultPrime;
};

bool is_prime(std::uint64_t p);

// Uniform access to field operations for the templated elimination code.
template <class S>
struct Field;

template <>
struct Field<Rational> {
    static constexpr const char* name = "rational";
    static Rational from(const Rational& q) { return q; }
    static bool is_zero(const Rational& q) { return q.is_zero(); }
    static bool is_one(const Rational& q) { return q == 1; }
    static Rational inverse(const Rational& q) { return 1 / q; }
    static Rational one() { return Rational(1); }
};

template <>
struct Field<ModP> {
    static constexpr const char* name = "mod-p";
    static ModP from(const Rational& q) { return ModP::from_rational(q); }
    static bool is_zero(ModP q) { return q.value() == 0; }
    static bool is_one(ModP q) { return q.value() == 1; }
    static ModP inverse(ModP q) { return q.inverse(); }
    static ModP one() { return ModP(std::uint64_t{1}); }
};

} // namespace apolar
