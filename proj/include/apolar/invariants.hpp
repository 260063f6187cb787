#pragma once

#include <span>
#include <string>
#include <vector>

#include "apolar/grid.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

enum class InvariantKind { Determinant, Permanent, Pfaffian, Hafnian };

// "det", "perm", "pf", "hf".
std::string short_name(InvariantKind kind);
InvariantKind parse_invariant_kind(const std::string& name);

// Determinant/Permanent: generic n x n. Pfaffian: skew 2n x 2n.
// Hafnian: zero-diagonal symmetric 2n x 2n. Throws for n < 1.
VariableGrid grid_for(InvariantKind kind, int n);

// Full invariant in R, homogeneous of degree n.
Polynomial build_invariant(InvariantKind kind, int n);

// Leibniz expansions over an arbitrary square selection of cells; entries
// are read through the grid's canonicalization (sign and zero diagonal).
Polynomial grid_determinant(const VariableGrid& grid, Ring ring, std::span<const int> rows, std::span<const int> cols);
Polynomial grid_permanent(const VariableGrid& grid, Ring ring, std::span<const int> rows, std::span<const int> cols);
Polynomial grid_determinant(const VariableGrid& grid, Ring ring);

// Perfect-matching expansions over the principal submatrix on `indices`.
Polynomial grid_pfaffian(const VariableGrid& grid, Ring ring, std::span<const int> indices);
Polynomial grid_hafnian(const VariableGrid& grid, Ring ring, std::span<const int> indices);

// Perfect matchings of {0..2m-1} normalized with the smaller element first
// in each pair and pairs ordered by their smaller element, together with the
// sign of the flattened permutation.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int sign = 1;
};
std::vector<Matching> perfect_matchings(int size);

enum class MinorKind { DetMinors, PermMinors, PfaffianMinors, HafnianMinors };

struct LabeledPolynomial {
    std::vector<int> rows;  // 0-based
    std::vector<int> cols;  // equals rows for Pfaffian/Hafnian minors
    Polynomial poly;
};

struct MinorFamily {
    MinorKind kind;
    int size;  // k for det/perm minors, 2t for Pfaffian/Hafnian minors
    std::vector<LabeledPolynomial> members;

    std::vector<Polynomial> polynomials() const;
};

// k x k minors of the generic n x n grid, or 2t-minors of the 2n x 2n skew /
// zero-diagonal symmetric grid when kind is PfaffianMinors/HafnianMinors
// (`size` = 2t must be even). Members are R-side.
MinorFamily build_minors(MinorKind kind, int n, int size);
// Det/perm minors of a rectangular generic grid.
MinorFamily build_minors(MinorKind kind, int rows, int cols, int size);

// Degree-2 operators that annihilate the invariant, in a fixed order:
//   det:  2x2 permanents of D, then squares, same-row and same-column products
//   perm: 2x2 minors of D, then the same monomials
//   pf:   per 4-subset the two binomials, then squares and products of
//         variables sharing a row or column of Y
//   hf:   as pf with the binomial signs swapped
// The Hafnian list is checked to annihilate Hf before it is returned.
std::vector<Polynomial> degree2_candidates(InvariantKind kind, int n);

// Degree-2 monomials of S with a repeated variable or two variables sharing
// a row or column of the operator matrix, for any grid kind.
std::vector<Polynomial> unacceptable_quadrics(const VariableGrid& grid);

// Square-free with no two variables in a common row or column.
bool is_acceptable(const Monomial& m, const VariableGrid& grid);

} // namespace apolar
