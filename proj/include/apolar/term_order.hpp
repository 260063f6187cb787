#pragma once

#include <compare>

#include "apolar/monomial.hpp"

namespace apolar {

// A monomial order. Only the diagonal order exists: d_ij < d_kl iff l > j, or
// l = j and k > i, extended lexicographically and graded by total degree.
struct TermOrder {
    enum class Kind { DiagonalLex };
    Kind kind = Kind::DiagonalLex;

    std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
        return diagonal_lex_compare(u, v);
    }
    bool greater(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::greater;
    }

    static TermOrder diagonal_lex() { return {}; }
};

} // namespace apolar
