#include "doctest.h"

#include <array>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/invariants.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/text_format.hpp"

using namespace apolar;

namespace {

const VariableGrid g2 = VariableGrid::generic(2, 2);

Polynomial R2(const char* text) { return parse_polynomial(text, Ring::R, g2); }
Polynomial S2(const char* text) { return parse_polynomial(text, Ring::S, g2); }

} // namespace

TEST_CASE("grid numbering is column-major and the first variable is the largest") {
    CHECK(g2.entry(0, 0).var == 0);
    CHECK(g2.entry(1, 0).var == 1);
    CHECK(g2.entry(0, 1).var == 2);
    CHECK(g2.variable_count() == 4);
    const auto sk = VariableGrid::skew_symmetric(4);
    CHECK(sk.variable_count() == 6);
    CHECK(sk.entry(1, 0).sign == -1);
    CHECK(sk.entry(1, 0).var == sk.entry(0, 1).var);
    CHECK(sk.entry(2, 2).is_zero());
    const auto sy = VariableGrid::zero_diagonal_symmetric(4);
    CHECK(sy.entry(3, 1).sign == 1);
    CHECK(sy.entry(1, 1).is_zero());
    CHECK_THROWS_AS(g2.entry(2, 0), UsageError);
}

TEST_CASE("poly_add examples") {
    CHECK(poly_add(R2("a_{1,1}*a_{2,2}"), R2("-a_{1,1}*a_{2,2}")).is_zero());
    CHECK(poly_add(R2("a_{1,1}*a_{2,2} - a_{1,2}*a_{2,1}"), R2("2*a_{1,2}*a_{2,1}")) ==
          R2("a_{1,1}*a_{2,2} + a_{1,2}*a_{2,1}"));
    const auto p = R2("a_{1,1} - 1/3*a_{2,1}^2");
    CHECK(poly_add(p, Polynomial(Ring::R, g2)) == p);
    CHECK_THROWS_AS(poly_add(p, S2("d_{1,1}")), UsageError);
    CHECK_THROWS_AS(poly_add(p, parse_polynomial("a_{1,1}", Ring::R, VariableGrid::generic(3, 3))), UsageError);
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(R2("a_{1,1} + a_{2,2}"), R2("a_{1,1} - a_{2,2}")) == R2("a_{1,1}^2 - a_{2,2}^2"));
    const auto p = R2("a_{1,2} - 7/2*a_{2,1}*a_{1,1}");
    CHECK(poly_mul(Polynomial::constant(Ring::R, g2, 1), p) == p);
    CHECK(poly_mul(S2("d_{1,2}"), S2("d_{1,2}")) == S2("d_{1,2}^2"));
    CHECK_THROWS_AS(poly_mul(p, S2("d_{1,1}")), UsageError);
}

TEST_CASE("contraction examples") {
    const auto det2 = build_invariant(InvariantKind::Determinant, 2);
    CHECK(contract(S2("d_{1,1}"), det2) == R2("a_{2,2}"));
    CHECK(contract(S2("d_{1,1}*d_{2,2}"), det2) == Polynomial::constant(Ring::R, g2, 1));
    const auto det3 = build_invariant(InvariantKind::Determinant, 3);
    const auto h = parse_polynomial("d_{2,2}*d_{3,3} + d_{2,3}*d_{3,2}", Ring::S, det3.grid());
    CHECK(contract(h, det3).is_zero());
    // No factorials: d^2 o a^3 = a.
    CHECK(contract(S2("d_{1,1}^2"), R2("a_{1,1}^3")) == R2("a_{1,1}"));
    CHECK(contract(S2("d_{1,1}^2"), R2("a_{1,1}")).is_zero());
    CHECK_THROWS_AS(contract(R2("a_{1,1}"), det2), UsageError);
}

TEST_CASE("diagonal order comparisons") {
    const auto order = TermOrder::diagonal_lex();
    const auto d11 = S2("d_{1,1}").leading_monomial();
    CHECK(order.compare(d11, d11) == std::strong_ordering::equal);
    CHECK(S2("d_{1,1}*d_{2,2} + d_{1,2}*d_{2,1}").leading_monomial() == S2("d_{1,1}*d_{2,2}").leading_monomial());
    const std::array<int, 2> rows{0, 1};
    CHECK(grid_permanent(g2, Ring::S, rows, rows).leading_monomial() == d11.times(S2("d_{2,2}").leading_monomial()));
    // d21 > d12 because the column index decides first.
    CHECK(order.greater(S2("d_{2,1}").leading_monomial(), S2("d_{1,2}").leading_monomial()));
    CHECK(order.greater(S2("d_{2,2}^2").leading_monomial(), S2("d_{1,1}").leading_monomial()));
}

TEST_CASE("division examples") {
    const auto perm = S2("d_{1,1}*d_{2,2} + d_{1,2}*d_{2,1}");
    std::vector<Polynomial> one{perm};
    auto res = divide(perm, one);
    CHECK(res.remainder.is_zero());
    CHECK(res.quotients[0] == Polynomial::constant(Ring::S, g2, 1));

    std::vector<Polynomial> sq{S2("d_{1,1}^2")};
    res = divide(S2("d_{1,1}^2*d_{2,2}"), sq);
    CHECK(res.remainder.is_zero());
    CHECK(res.quotients[0] == S2("d_{2,2}"));

    // Ties go to the first divisor in list order.
    std::vector<Polynomial> tie{S2("d_{1,1}"), S2("d_{1,1} + d_{2,2}")};
    res = divide(S2("d_{1,1}*d_{2,1}"), tie);
    CHECK(res.quotients[0] == S2("d_{2,1}"));
    CHECK(res.quotients[1].is_zero());

    std::vector<Polynomial> bad{Polynomial(Ring::S, g2)};
    CHECK_THROWS_AS(divide(perm, bad), UsageError);
}

TEST_CASE("canonical text format") {
    const auto det2 = build_invariant(InvariantKind::Determinant, 2);
    CHECK(format_polynomial(det2) == "a_{1,1}*a_{2,2} - a_{2,1}*a_{1,2}");
    CHECK(format_polynomial(R2("-1/24*a_{1,1}^3 + 2")) == "-1/24*a_{1,1}^3 + 2");
    CHECK(format_polynomial(Polynomial(Ring::R, g2)) == "0");
    const auto sk = VariableGrid::skew_symmetric(4);
    CHECK(parse_polynomial("x_{2,1}", Ring::R, sk) == -parse_polynomial("x_{1,2}", Ring::R, sk));
    CHECK(format_polynomial(parse_polynomial("y_{1,2}*y_{3,4}", Ring::S, sk)) == "y_{1,2}*y_{3,4}");
    CHECK_THROWS_AS(parse_polynomial("a_{1,1} +", Ring::R, g2), UsageError);
    CHECK_THROWS_AS(parse_polynomial("d_{1,1}", Ring::R, g2), UsageError);
    CHECK_THROWS_AS(parse_polynomial("a_{3,1}", Ring::R, g2), UsageError);
    CHECK(parse_polynomial("x_{1,1}", Ring::R, sk).is_zero());
}

TEST_CASE("polynomial helpers") {
    const auto p = R2("a_{1,1}^2*a_{2,2} + a_{1,2}");
    CHECK(p.degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK_FALSE(p.homogeneous_degree().has_value());
    CHECK(p.coefficient(R2("a_{1,2}").leading_monomial()) == 1);
    CHECK(p.with_variable_set_to_one(0) == R2("a_{2,2} + a_{1,2}"));
    CHECK(R2("a_{1,1} + a_{1,2}").pow(2) == R2("a_{1,1}^2 + 2*a_{1,1}*a_{1,2} + a_{1,2}^2"));
    CHECK(p.on_ring(Ring::S).ring() == Ring::S);
}

TEST_CASE("monomial ideal basics") {
    const auto a = S2("d_{1,1}*d_{2,2}").leading_monomial();
    const auto b = S2("d_{1,1}*d_{2,2}*d_{1,2}").leading_monomial();
    const MonomialIdeal ideal({a, b});
    CHECK(ideal.generators().size() == 1);
    CHECK(ideal.contains(b));
    CHECK(ideal.standard_monomial_count(4, 0) == 1);
    CHECK(ideal.standard_monomial_count(4, 2) == 9);
}
