#pragma once

// Rank bounds derived from the apolar algebra: cactus-rank lower bounds from
// the length and generating degree, the determinant rank lower bound from
// the catalecticant and its singular locus, monomial ranks, Pfaffian cactus
// bounds, closed-form asymptotics, the dehomogenized differential length,
// and the determinant table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/groebner.hpp"
#include "apolar/invariants.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

enum class Provenance { Direct, Groebner, Theorem };
std::string to_string(Provenance p);

// Generating degree d of Ann(F) and how it was established. Direct and
// Groebner mean it was computed in this run; Theorem means it was taken from
// the known structure of the invariant without a computation.
struct GeneratingDegree {
    int degree = 0;
    Provenance provenance = Provenance::Theorem;
    std::string detail;

    bool certified() const { return provenance != Provenance::Theorem; }
};

// ceil(length / d). In strict mode uncertified degrees are refused with a
// VerificationError.
std::uint64_t rs_lower_bound(std::uint64_t length, const GeneratingDegree& d, bool strict = true);

// C(n, floor(n/2))^2 + n^2 - (floor(n/2)+1)^2 for n >= 2.
std::uint64_t lt_lower_bound_det(int n);
// n^2 - (floor(n/2)+1)^2 - 1: dimension of the singular locus used above.
std::int64_t det_singular_locus_dimension(int n);
// h_s(F) + dim_sigma + 1 for a caller-supplied singular-locus dimension.
std::uint64_t general_lt_lower_bound(const Polynomial& f, int s, std::optional<std::int64_t> dim_sigma,
                                     const EngineConfig& cfg = {});

struct MonomialRanks {
    std::uint64_t rank = 0;
    std::uint64_t cactus_rank = 0;
};
// Exponents sorted ascending, each at least 1.
MonomialRanks monomial_ranks(const std::vector<unsigned>& exponents);
// n! * 2^(n-1): the Laplace expansion into n! monomials of rank 2^(n-1) each.
std::uint64_t det_rank_upper_bound(int n);

struct CactusBounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
};
// (2^(2n-2), 2^(2n-1)) for the Pfaffian of a 2n x 2n skew matrix.
CactusBounds pfaffian_cactus_bounds(int n);

struct AsymptoticEntry {
    std::string quantity;
    double exact = 0;
    double estimate = 0;
    std::string formula;
};
// Stirling-type estimates for the generic n x n determinant.
std::vector<AsymptoticEntry> asymptotic_estimates(int n);

struct DiffDimension {
    std::uint64_t dimension = 0;
    std::vector<std::uint64_t> by_degree;  // leading-degree counts of a graded echelon basis
};
// Dimension of the span of all contractions of F with the variable set to 1.
DiffDimension dehomogenized_diff_dimension(const Polynomial& f, VarIndex var);

enum class Comparison { Less, Equal, Greater };
std::string to_string(Comparison c);

struct BoundsReport {
    InvariantKind invariant = InvariantKind::Determinant;
    int n = 0;
    HilbertFunction hilbert;
    GeneratingDegree generating_degree;
    std::uint64_t length = 0;
    std::uint64_t rs_lower = 0;
    std::optional<std::uint64_t> lt_lower;    // determinant only
    std::optional<std::uint64_t> rank_upper;  // determinant only
    std::uint64_t l_diff = 0;
    std::uint64_t cactus_upper = 0;
    Comparison rs_vs_ldiff = Comparison::Equal;
    std::vector<std::string> notes;
};

enum class CertificationRoute { Auto, Direct, Groebner, None };

// Establishes the generating degree of Ann(F) for the invariant. Auto tries
// the direct generator count when the ambient ceiling allows it and the
// Groebner route otherwise; when both are out of reach the degree is taken
// from the known structure (provenance Theorem).
GeneratingDegree certify_generating_degree(InvariantKind kind, int n, const HilbertFunction& h,
                                           CertificationRoute route = CertificationRoute::Auto,
                                           const EngineConfig& cfg = {});

BoundsReport bounds_report(InvariantKind kind, int n, const HilbertFunction& h, const GeneratingDegree& d,
                           bool strict = true);
BoundsReport bounds_report(InvariantKind kind, int n, const EngineConfig& cfg = {},
                           CertificationRoute route = CertificationRoute::Auto, bool strict = false);

struct TableRow {
    int n = 0;
    std::uint64_t rs_lower = 0;
    std::uint64_t lt_lower = 0;
    std::uint64_t l_diff = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow table_row(const BoundsReport& det_report);
std::vector<TableRow> assemble_table(const std::vector<BoundsReport>& det_reports);

std::string table_markdown(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(const std::string& text);

} // namespace apolar
