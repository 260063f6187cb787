#include "apolar/scalar.hpp"

namespace apolar {

std::string to_string(const Rational& q) { return q.str(); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

ModP::ScopedModulus::ScopedModulus(std::uint64_t p) : saved_(modulus_) {
    if (p >= (1ULL << 32) || !is_prime(p)) throw UsageError("modulus must be a prime below 2^32");
    modulus_ = p;
}

ModP ModP::inverse() const {
    if (v_ == 0) throw UsageError("inverse of zero mod p");
    // Extended Euclid on signed 64-bit values; both operands are < 2^32.
    std::int64_t r0 = static_cast<std::int64_t>(modulus_), r1 = static_cast<std::int64_t>(v_);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return ModP(t0);
}

ModP ModP::from_rational(const Rational& q) {
    const Integer p(modulus_);
    Integer num = boost::multiprecision::numerator(q) % p;
    if (num < 0) num += p;
    Integer den = boost::multiprecision::denominator(q) % p;
    if (den == 0) throw UsageError("rational denominator vanishes mod p");
    const ModP n(num.convert_to<std::uint64_t>());
    const ModP d(den.convert_to<std::uint64_t>());
    return n / d;
}

} // namespace apolar
