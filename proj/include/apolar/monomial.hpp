#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

#include "apolar/grid.hpp"

namespace apolar {

struct VarPower {
    VarIndex var;
    std::uint16_t exp;
    friend bool operator==(const VarPower&, const VarPower&) = default;
};

// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
// exponents strictly positive.
class Monomial {
public:
    using Storage = boost::container::small_vector<VarPower, 6>;

    Monomial() = default;
    Monomial(std::initializer_list<VarPower> powers);
    static Monomial variable(VarIndex v, std::uint16_t exp = 1);
    // Builds from unsorted pairs, merging repeated variables and dropping zero exponents.
    static Monomial from_powers(std::span<const VarPower> powers);

    unsigned degree() const { return degree_; }
    bool is_one() const { return powers_.empty(); }
    std::size_t support_size() const { return powers_.size(); }
    std::uint16_t exponent(VarIndex v) const;
    const Storage& powers() const { return powers_; }
    bool is_square_free() const;

    bool divides(const Monomial& other) const;
    // this / d; requires d.divides(*this).
    Monomial quotient(const Monomial& d) const;
    Monomial times(const Monomial& other) const;
    Monomial times_variable(VarIndex v) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    std::size_t hash() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }

private:
    Storage powers_;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded comparison followed by lex with variable 0 most significant. With the
// column-major variable numbering of VariableGrid this is the diagonal order.
std::strong_ordering diagonal_lex_compare(const Monomial& u, const Monomial& v);

// Strict "descending" comparator: true if u is larger than v.
struct DiagonalLexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const {
        return diagonal_lex_compare(u, v) == std::strong_ordering::greater;
    }
};

} // namespace apolar
