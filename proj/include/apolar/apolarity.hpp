#pragma once

// Graded pieces of apolar ideals: images of the catalecticant maps
// S_k -> R_{j-k}, h -> h o F, their kernels, Hilbert functions of S/Ann(F),
// minimal generator counts, and the direct rank check that a candidate set
// of quadrics generates Ann(F).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/polynomial.hpp"
#include "apolar/scalar.hpp"

namespace apolar {

enum class Arithmetic { Rational, ModPrime };

std::string to_string(Arithmetic a);

struct EngineConfig {
    Arithmetic arithmetic = Arithmetic::Rational;
    std::uint64_t prime = ModP::kDefaultPrime;
    std::uint64_t max_ambient = 200'000;  // monomials in one graded piece
    std::size_t max_pivots = 50'000;
    unsigned threads = 1;
    std::function<void(const std::string&)> progress;  // optional
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// Number of degree-k monomials in `nvars` variables.
std::uint64_t ambient_dimension(int nvars, int k);
// All degree-k monomials, largest first in the diagonal order.
std::vector<Monomial> monomials_of_degree(int nvars, int k);

// A subspace of a single graded piece, represented by its reduced row
// echelon basis in the diagonal-order monomial coordinates (pivots are the
// leading monomials, each pivot monomial appears in exactly one basis
// element, leading coefficients are 1). Basis is sorted by pivot, largest first.
class GradedSubspace {
public:
    GradedSubspace(Ring ring, VariableGrid grid, int degree) : ring_(ring), grid_(grid), degree_(degree) {}

    // Span of homogeneous degree-`degree` polynomials.
    static GradedSubspace span_of(std::span<const Polynomial> polys, Ring ring, const VariableGrid& grid, int degree,
                                  std::size_t max_pivots = 50'000);
    // Adopts a basis already in reduced echelon form.
    static GradedSubspace from_reduced_basis(Ring ring, const VariableGrid& grid, int degree,
                                             std::vector<Polynomial> basis);

    Ring ring() const { return ring_; }
    const VariableGrid& grid() const { return grid_; }
    int degree() const { return degree_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    bool contains(const Polynomial& p) const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.ring_ == b.ring_ && a.grid_ == b.grid_ && a.degree_ == b.degree_ && a.basis_ == b.basis_;
    }

private:
    Ring ring_;
    VariableGrid grid_;
    int degree_;
    std::vector<Polynomial> basis_;
};

// S_k o F. Rational only.
GradedSubspace image_space(const Polynomial& f, int k, const EngineConfig& cfg = {});
// rank of S_k o (f_1, ..., f_s), in the configured arithmetic.
std::uint64_t image_rank(std::span<const Polynomial> family, int k, const EngineConfig& cfg = {});
std::uint64_t image_rank(const Polynomial& f, int k, const EngineConfig& cfg = {});

// Ann(F)_k, or for a family the common annihilator of all members in degree k.
// Rational only; k may exceed the degree (the whole of S_k is returned).
GradedSubspace graded_annihilator(const Polynomial& f, int k, const EngineConfig& cfg = {});
GradedSubspace graded_annihilator(std::span<const Polynomial> family, int k, const EngineConfig& cfg = {});
std::uint64_t annihilator_dimension(std::span<const Polynomial> family, int k, const EngineConfig& cfg = {});

struct HilbertFunction {
    std::vector<std::uint64_t> values;  // h_0 .. h_j
    Arithmetic arithmetic = Arithmetic::Rational;

    std::uint64_t length() const;
    std::uint64_t max_value() const;
    bool is_symmetric() const;
};

HilbertFunction hilbert_function(const Polynomial& f, const EngineConfig& cfg = {});

struct GeneratorReport {
    std::map<int, std::uint64_t> mu;  // k -> number of minimal generators in degree k
    int k_max = 0;
    Arithmetic arithmetic = Arithmetic::Rational;

    // Largest k with mu_k > 0; 0 if none.
    int max_generating_degree() const;
    // True when every minimal generator found sits in degree d. Complete only
    // when k_max > deg F (no generators exist beyond deg F + 1).
    bool generated_only_in(int d) const;
};

// mu_k = dim Ann_k - dim (S_1 * Ann_{k-1}) for k = 1..k_max.
GeneratorReport minimal_generator_degrees(std::span<const Polynomial> family, int k_max, const EngineConfig& cfg = {});
GeneratorReport minimal_generator_degrees(const Polynomial& f, int k_max, const EngineConfig& cfg = {});

struct DegreeComparison {
    int k = 0;
    std::uint64_t generated = 0;   // dim of span(S_{k-2} * candidates)
    std::uint64_t annihilator = 0; // dim S_k - h_k
    bool equal() const { return generated == annihilator; }
};

struct DirectVerificationReport {
    bool candidates_annihilate = true;
    std::vector<std::size_t> failing_candidates;
    std::vector<DegreeComparison> degrees;
    // Whether the monomial candidates alone fill S_{deg F + 1}; empty when
    // that degree was not requested.
    std::optional<bool> monomials_fill_next_degree;
    Arithmetic arithmetic = Arithmetic::Rational;

    bool passed() const;
};

// Compares (candidates)_k with Ann(F)_k by rank for k = 1..k_max.
DirectVerificationReport verify_degree2_generation_direct(const Polynomial& f, std::span<const Polynomial> candidates,
                                                          int k_max, const EngineConfig& cfg = {});

// Checks F == sum c_i l_i^d exactly.
bool waring_verify(const Polynomial& f, std::span<const Polynomial> forms, std::span<const Rational> coefficients);
// Solves for the c_i; nullopt when F is not in the span of the l_i^d.
std::optional<std::vector<Rational>> waring_solve(const Polynomial& f, std::span<const Polynomial> forms);

} // namespace apolar
