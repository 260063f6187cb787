#pragma once

#include <optional>
#include <span>
#include <vector>

#include "apolar/grid.hpp"
#include "apolar/monomial.hpp"
#include "apolar/scalar.hpp"
#include "apolar/term_order.hpp"

namespace apolar {

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with rational coefficients over the variables of a grid,
// on one side of the apolarity pairing. Terms are kept sorted by the diagonal
// order, largest first, with no zero coefficients. Immutable in practice:
// every operation returns a new value.
class Polynomial {
public:
    Polynomial(Ring ring, VariableGrid grid) : ring_(ring), grid_(grid) {}

    static Polynomial constant(Ring ring, VariableGrid grid, const Rational& c);
    static Polynomial variable(Ring ring, VariableGrid grid, VarIndex v);
    static Polynomial monomial(Ring ring, VariableGrid grid, Monomial m, const Rational& c = 1);
    // Sorts, merges equal monomials and prunes zeros.
    static Polynomial from_terms(Ring ring, VariableGrid grid, std::vector<Term> terms);

    Ring ring() const { return ring_; }
    const VariableGrid& grid() const { return grid_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    // Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // Degree if homogeneous and nonzero.
    std::optional<int> homogeneous_degree() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coefficient(const Monomial& m) const;

    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m, const Rational& c = 1) const;
    Polynomial pow(unsigned e) const;
    // Same exponents on the other side of the pairing (a_ij <-> d_ij).
    Polynomial on_ring(Ring ring) const;
    // Substitutes variable v := 1.
    Polynomial with_variable_set_to_one(VarIndex v) const;

    Polynomial operator-() const { return scaled(-1); }
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.ring_ == q.ring_ && p.grid_ == q.grid_ && p.terms_ == q.terms_;
    }

private:
    Ring ring_;
    VariableGrid grid_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

// The contraction pairing: d_ij^k o a_uv^l = a_uv^(l-k) when (i,j) = (u,v)
// and l >= k, zero otherwise; multiplicative across variables and bilinear.
Polynomial contract(const Polynomial& h, const Polynomial& f);
// Contraction of a single operator monomial; null when it kills f.
Polynomial contract(const Monomial& m, const Polynomial& f);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division. The first divisor (by list position) whose leading
// monomial divides the current leading term is used.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const TermOrder& order = TermOrder::diagonal_lex());
// Remainder only; skips quotient bookkeeping.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                  const TermOrder& order = TermOrder::diagonal_lex());

void require_compatible(const Polynomial& p, const Polynomial& q);

} // namespace apolar
