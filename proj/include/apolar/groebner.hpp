#pragma once

// S-pairs, Buchberger's criterion for a proposed basis, completion, initial
// ideals, and the Groebner route to degree-2 generation of an apolar ideal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/term_order.hpp"

namespace apolar {

// lcm/LT(f) * f / LC(f) - lcm/LT(g) * g / LC(g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order = TermOrder::diagonal_lex());

struct BuchbergerOptions {
    bool skip_coprime = true;
    unsigned threads = 1;
    std::size_t max_recorded_failures = 1000;
};

struct PairFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    Polynomial remainder;
};

struct GroebnerReport {
    std::size_t generators = 0;
    std::size_t pairs = 0;            // all unordered pairs
    std::size_t skipped = 0;          // coprime leading terms
    std::size_t reduced_to_zero = 0;
    std::size_t failure_count = 0;
    std::vector<PairFailure> failures;  // at most max_recorded_failures, in pair order
    bool is_groebner = false;
    bool minimal = false;
    bool reduced = false;
};

// Pairs are examined in the normal strategy order (lcm degree, then lcm in
// the diagonal order, then indices); the remainder of each S-polynomial on
// division by the generators in list order decides the pair.
GroebnerReport buchberger_check(std::span<const Polynomial> gens, const TermOrder& order = TermOrder::diagonal_lex(),
                                const BuchbergerOptions& opts = {});

// No leading term divisible by the leading term of another generator.
bool is_minimal_basis(std::span<const Polynomial> gens);
// Minimal, monic, and no non-leading term divisible by any leading term.
bool is_reduced_basis(std::span<const Polynomial> gens);

// Buchberger completion: appends monic remainders until every pair reduces to
// zero. Throws CeilingError when the basis grows beyond max_size.
std::vector<Polynomial> buchberger_complete(std::span<const Polynomial> gens,
                                            const TermOrder& order = TermOrder::diagonal_lex(),
                                            std::size_t max_size = 20000);
// Minimal reduced basis obtained from a Groebner basis, sorted by leading term
// (largest first).
std::vector<Polynomial> interreduce(std::span<const Polynomial> basis);
std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens,
                                               const TermOrder& order = TermOrder::diagonal_lex());

MonomialIdeal initial_ideal(std::span<const Polynomial> gens, const TermOrder& order = TermOrder::diagonal_lex());
std::uint64_t standard_monomial_count(const MonomialIdeal& ideal, int nvars, int k);

struct StandardCount {
    int k = 0;
    std::uint64_t standard = 0;  // standard monomials of the candidate ideal
    std::uint64_t hilbert = 0;   // h_k of S/Ann(F)
    bool equal() const { return standard == hilbert; }
};

struct GroebnerVerificationReport {
    bool candidates_annihilate = true;
    std::vector<std::size_t> failing_candidates;
    bool route_available = false;  // false when no Groebner basis was found
    GroebnerReport groebner;       // the candidates as listed
    // When the list is not a Groebner basis, the reduced echelon basis of its
    // span is tried instead (same ideal, interreduced in degree 2).
    std::optional<GroebnerReport> interreduced;
    std::vector<StandardCount> degrees;  // k = 0 .. deg F + 1

    bool passed() const;
};

// Candidates annihilating F, forming (possibly after interreduction) a Groebner basis, and with standard
// monomial counts equal to the Hilbert function of S/Ann(F) in every degree
// generate Ann(F). `known` supplies a previously computed Hilbert function.
GroebnerVerificationReport verify_degree2_generation_via_groebner(const Polynomial& f,
                                                                  std::span<const Polynomial> candidates,
                                                                  const TermOrder& order = TermOrder::diagonal_lex(),
                                                                  const EngineConfig& cfg = {},
                                                                  const BuchbergerOptions& opts = {},
                                                                  const HilbertFunction* known = nullptr);

// The basis of the ideal of 2x2 permanents of the generic n x n operator
// matrix: the permanents and five families of monomials of degree 3 and 4.
struct LaubenbacherSwansonBasis {
    std::vector<Polynomial> permanents;
    std::vector<Polynomial> cubics;    // four index patterns
    std::vector<Polynomial> quartics;  // one squared entry on an anti-diagonal triple

    std::vector<Polynomial> all() const;
};
LaubenbacherSwansonBasis laubenbacher_swanson_basis(int n);

} // namespace apolar
