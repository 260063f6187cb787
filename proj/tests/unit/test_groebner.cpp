#include "doctest.h"

#include <algorithm>
#include <array>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/invariants.hpp"
#include "apolar/text_format.hpp"
#include "oracles/dense_kernel.hpp"

using namespace apolar;

namespace {

Polynomial perm2(const VariableGrid& g, int i, int j, int k, int l) {
    const std::array<int, 2> rows{i, j}, cols{k, l};
    return grid_permanent(g, Ring::S, rows, cols);
}

Polynomial S(const char* text, const VariableGrid& g) { return parse_polynomial(text, Ring::S, g); }

bool unacceptable_terms_only(const Polynomial& p, const VariableGrid& g) {
    return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return !is_acceptable(t.mono, g); });
}

std::vector<std::string> formatted_sorted(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("S-polynomials") {
    const auto g = VariableGrid::generic(4, 4);
    const auto f = perm2(g, 0, 1, 0, 1);
    const auto h = perm2(g, 2, 3, 2, 3);
    CHECK(s_polynomial(f, f).is_zero());
    const auto s = s_polynomial(f, h);
    CHECK(s == S("d_{3,3}*d_{4,4}*d_{1,2}*d_{2,1} - d_{1,1}*d_{2,2}*d_{3,4}*d_{4,3}", g));
    const std::vector<Polynomial> pair{f, h};
    CHECK(reduce(s, pair).is_zero());
    const auto cands = degree2_candidates(InvariantKind::Determinant, 4);
    CHECK(reduce(s, cands).is_zero());

    const auto g3 = VariableGrid::generic(3, 3);
    const auto a = perm2(g3, 0, 1, 0, 1);
    const auto b = perm2(g3, 0, 1, 0, 2);
    const auto sab = s_polynomial(a, b);
    CHECK(sab == S("d_{2,3}*d_{1,2}*d_{2,1} - d_{2,2}*d_{1,3}*d_{2,1}", g3));
    CHECK(unacceptable_terms_only(sab, g3));
    CHECK(reduce(sab, degree2_candidates(InvariantKind::Determinant, 3)).is_zero());
    CHECK_THROWS_AS(s_polynomial(a, Polynomial(Ring::S, g3)), UsageError);
}

TEST_CASE("an engineered overlap reduces into the monomial part") {
    const auto g = VariableGrid::generic(2, 2);
    const std::vector<Polynomial> gens{S("d_{1,1}*d_{2,2} + d_{1,2}*d_{2,1}", g), S("d_{1,1}^2", g)};
    const auto s = s_polynomial(gens[0], gens[1]);
    CHECK(s == S("d_{1,1}*d_{1,2}*d_{2,1}", g));
    CHECK(unacceptable_terms_only(s, g));
    const auto rep = buchberger_check(gens);
    CHECK_FALSE(rep.is_groebner);
    CHECK(rep.failure_count == 1);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].remainder == s);
    auto with_u = gens;
    with_u.push_back(S("d_{1,1}*d_{1,2}", g));
    CHECK(reduce(s, with_u).is_zero());
}

TEST_CASE("determinant candidates form a Groebner basis") {
    for (int n = 2; n <= 5; ++n) {
        const auto cands = degree2_candidates(InvariantKind::Determinant, n);
        const auto rep = buchberger_check(cands);
        CHECK_MESSAGE(rep.is_groebner, "n=" << n);
        CHECK(rep.failures.empty());
        CHECK(rep.failure_count == 0);
        CHECK(rep.generators == cands.size());
        CHECK(rep.pairs == cands.size() * (cands.size() - 1) / 2);
        CHECK(rep.skipped + rep.reduced_to_zero == rep.pairs);
        CHECK(rep.minimal);
        CHECK(rep.reduced);
    }
}

TEST_CASE("threaded and serial checks agree") {
    const auto w = degree2_candidates(InvariantKind::Pfaffian, 3);
    BuchbergerOptions serial, threaded;
    threaded.threads = 4;
    const auto a = buchberger_check(w, TermOrder::diagonal_lex(), serial);
    const auto b = buchberger_check(w, TermOrder::diagonal_lex(), threaded);
    CHECK(a.failure_count == b.failure_count);
    CHECK(a.reduced_to_zero == b.reduced_to_zero);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        CHECK(a.failures[i].i == b.failures[i].i);
        CHECK(a.failures[i].j == b.failures[i].j);
        CHECK(a.failures[i].remainder == b.failures[i].remainder);
    }
}

TEST_CASE("initial ideals") {
    const auto g = VariableGrid::generic(3, 3);
    const auto cands = degree2_candidates(InvariantKind::Determinant, 3);
    const auto in = initial_ideal(cands);
    std::vector<Monomial> expected;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = k + 1; l < 3; ++l)
                    expected.push_back(Monomial::from_powers(std::vector<VarPower>{{g.entry(i, k).var, 1}, {g.entry(j, l).var, 1}}));
    for (const auto& u : unacceptable_quadrics(g)) expected.push_back(u.leading_monomial());
    CHECK(in.generators().size() == expected.size());
    for (const auto& m : expected) CHECK(std::find(in.generators().begin(), in.generators().end(), m) != in.generators().end());

    const std::vector<Polynomial> single{S("d_{1,1}*d_{2,2} + d_{1,3}", g)};
    CHECK(initial_ideal(single).generators() == std::vector<Monomial>{S("d_{1,1}*d_{2,2}", g).leading_monomial()});
    const std::vector<Polynomial> nested{S("d_{1,1}*d_{2,2}", g), S("d_{1,1}*d_{2,2}*d_{3,3}", g)};
    CHECK(initial_ideal(nested).generators() == std::vector<Monomial>{S("d_{1,1}*d_{2,2}", g).leading_monomial()});
}

TEST_CASE("standard monomial counts of the determinant candidates") {
    CHECK(standard_monomial_count(initial_ideal(degree2_candidates(InvariantKind::Determinant, 3)), 9, 2) == 9);
    CHECK(standard_monomial_count(initial_ideal(degree2_candidates(InvariantKind::Determinant, 3)), 9, 0) == 1);
    CHECK(standard_monomial_count(initial_ideal(degree2_candidates(InvariantKind::Determinant, 4)), 16, 2) == 36);
    for (int n = 3; n <= 6; ++n) {
        const auto in = initial_ideal(degree2_candidates(InvariantKind::Determinant, n));
        for (int k = 0; k <= n + 1; ++k) {
            CHECK(standard_monomial_count(in, n * n, k) == binomial(n, k) * binomial(n, k));
        }
    }
}

TEST_CASE("standard monomials are the acceptable anti-diagonal patterns") {
    for (int n = 2; n <= 4; ++n) {
        const auto g = VariableGrid::generic(n, n);
        const auto in = initial_ideal(degree2_candidates(InvariantKind::Determinant, n));
        for (int k = 0; k <= n; ++k) {
            std::vector<Monomial> expected;
            for (const auto& e : oracle::all_monomials(n * n, k)) {
                std::vector<std::pair<int, int>> cells;
                bool ok = true;
                for (int v = 0; v < n * n && ok; ++v) {
                    if (e[v] > 1) ok = false;
                    if (e[v] == 1) cells.push_back(g.cell_of(static_cast<VarIndex>(v)));
                }
                // Distinct rows and columns, and rows increasing as columns decrease.
                for (std::size_t a = 0; a < cells.size() && ok; ++a) {
                    for (std::size_t b = a + 1; b < cells.size() && ok; ++b) {
                        const auto [ra, ca] = cells[a];
                        const auto [rb, cb] = cells[b];
                        ok = ra != rb && ca != cb && (ra < rb) == (ca > cb);
                    }
                }
                if (!ok) continue;
                std::vector<VarPower> pw;
                for (int v = 0; v < n * n; ++v)
                    if (e[v]) pw.push_back({static_cast<VarIndex>(v), 1});
                expected.push_back(Monomial::from_powers(pw));
            }
            const auto got = in.standard_monomials(n * n, k);
            CHECK(got.size() == expected.size());
            for (const auto& m : expected) CHECK(std::find(got.begin(), got.end(), m) != got.end());
        }
    }
}

TEST_CASE("verification through the Groebner route") {
    const auto det4 = build_invariant(InvariantKind::Determinant, 4);
    const auto rep = verify_degree2_generation_via_groebner(det4, degree2_candidates(InvariantKind::Determinant, 4));
    CHECK(rep.passed());
    CHECK(rep.groebner.is_groebner);
    CHECK_FALSE(rep.interreduced.has_value());
    std::vector<std::uint64_t> counts;
    for (const auto& d : rep.degrees) counts.push_back(d.standard);
    CHECK(counts == std::vector<std::uint64_t>{1, 16, 36, 16, 1, 0});

    const auto perm3 = build_invariant(InvariantKind::Permanent, 3);
    const auto prep = verify_degree2_generation_via_groebner(perm3, degree2_candidates(InvariantKind::Permanent, 3));
    CHECK(prep.passed());
    counts.clear();
    for (const auto& d : prep.degrees) counts.push_back(d.standard);
    CHECK(counts == std::vector<std::uint64_t>{1, 9, 9, 1, 0});

    const auto pf6 = build_invariant(InvariantKind::Pfaffian, 3);
    const auto wrep = verify_degree2_generation_via_groebner(pf6, degree2_candidates(InvariantKind::Pfaffian, 3));
    CHECK_FALSE(wrep.groebner.is_groebner);
    CHECK(wrep.groebner.failure_count == 43);
    REQUIRE(wrep.interreduced.has_value());
    CHECK(wrep.interreduced->is_groebner);
    CHECK(wrep.passed());

    auto fewer = degree2_candidates(InvariantKind::Determinant, 3);
    fewer.erase(fewer.begin());
    const auto det3 = build_invariant(InvariantKind::Determinant, 3);
    CHECK_FALSE(verify_degree2_generation_via_groebner(det3, fewer).passed());
}

TEST_CASE("the basis of the permanental ideal") {
    for (int n = 3; n <= 4; ++n) {
        const auto ls = laubenbacher_swanson_basis(n);
        CHECK(ls.permanents.size() == binomial(n, 2) * binomial(n, 2));
        const auto all = ls.all();
        const auto rep = buchberger_check(all);
        CHECK(rep.is_groebner);
        CHECK(rep.minimal);
        CHECK(rep.reduced);
        CHECK(is_minimal_basis(all));
        CHECK(is_reduced_basis(all));
        const auto& g = all.front().grid();
        auto monomials = ls.cubics;
        monomials.insert(monomials.end(), ls.quartics.begin(), ls.quartics.end());
        const auto u = unacceptable_quadrics(g);
        for (const auto& m : monomials) {
            CHECK(m.is_monomial());
            CHECK(reduce(m, u).is_zero());
        }
    }
    CHECK(laubenbacher_swanson_basis(3).all().size() == 24);
}

TEST_CASE("completion of the permanents reproduces the basis") {
    for (int n = 3; n <= 4; ++n) {
        const auto ls = laubenbacher_swanson_basis(n);
        const auto completed = reduced_groebner_basis(ls.permanents);
        CHECK(formatted_sorted(completed) == formatted_sorted(ls.all()));
    }
}

TEST_CASE("minimality and reducedness flags") {
    const auto g = VariableGrid::generic(2, 2);
    const std::vector<Polynomial> dup{S("d_{1,1}*d_{2,2}", g), S("d_{1,1}*d_{2,2}*d_{1,2}", g)};
    CHECK_FALSE(is_minimal_basis(dup));
    const std::vector<Polynomial> tail{S("d_{1,1}*d_{2,2} + d_{1,2}^2", g), S("d_{1,2}^2", g)};
    CHECK(is_minimal_basis(tail));
    CHECK_FALSE(is_reduced_basis(tail));
    const std::vector<Polynomial> not_monic{S("2*d_{1,1}", g)};
    CHECK_FALSE(is_reduced_basis(not_monic));
    const auto inter = interreduce(tail);
    CHECK(is_reduced_basis(inter));
}
