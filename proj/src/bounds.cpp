#include "apolar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "apolar/errors.hpp"
#include "apolar/sparse_echelon.hpp"

namespace apolar {

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Direct: return "direct";
    case Provenance::Groebner: return "groebner";
    case Provenance::Theorem: return "theorem";
    }
    return "theorem";
}

std::string to_string(Comparison c) {
    switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    }
    return "equal";
}

std::uint64_t rs_lower_bound(std::uint64_t length, const GeneratingDegree& d, bool strict) {
    if (d.degree < 1) throw UsageError("generating degree must be at least 1");
    if (strict && !d.certified()) {
        throw VerificationError("generating degree " + std::to_string(d.degree) + " has not been certified");
    }
    const auto dd = static_cast<std::uint64_t>(d.degree);
    return (length + dd - 1) / dd;
}

std::uint64_t lt_lower_bound_det(int n) {
    if (n < 2) throw UsageError("the determinant rank bound needs n >= 2");
    const auto h = static_cast<std::uint64_t>(n / 2);
    const std::uint64_t c = binomial(static_cast<std::uint64_t>(n), h);
    return c * c + static_cast<std::uint64_t>(n * n) - (h + 1) * (h + 1);
}

std::int64_t det_singular_locus_dimension(int n) {
    if (n < 2) throw UsageError("the determinant rank bound needs n >= 2");
    const std::int64_t h = n / 2;
    return static_cast<std::int64_t>(n) * n - (h + 1) * (h + 1) - 1;
}

std::uint64_t general_lt_lower_bound(const Polynomial& f, int s, std::optional<std::int64_t> dim_sigma,
                                     const EngineConfig& cfg) {
    if (!dim_sigma) throw UsageError("the singular-locus dimension must be supplied");
    if (*dim_sigma < -1) throw UsageError("singular-locus dimension below -1");
    if (f.is_zero() || s < 1 || s > f.degree()) throw UsageError("s must lie in 1..deg F");
    const auto h = static_cast<std::int64_t>(image_rank(f, s, cfg));
    return static_cast<std::uint64_t>(h + *dim_sigma + 1);
}

MonomialRanks monomial_ranks(const std::vector<unsigned>& exponents) {
    if (exponents.empty()) throw UsageError("empty exponent list");
    if (!std::is_sorted(exponents.begin(), exponents.end())) throw UsageError("exponents must be ascending");
    if (exponents.front() == 0) throw UsageError("exponents must be positive");
    MonomialRanks r{1, 1};
    for (std::size_t i = 1; i < exponents.size(); ++i) r.rank *= exponents[i] + 1;
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i) r.cactus_rank *= exponents[i] + 1;
    return r;
}

std::uint64_t det_rank_upper_bound(int n) {
    if (n < 1) throw UsageError("n must be positive");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    const std::vector<unsigned> ones(static_cast<std::size_t>(n), 1);
    return f * monomial_ranks(ones).rank;
}

CactusBounds pfaffian_cactus_bounds(int n) {
    if (n < 1) throw UsageError("n must be positive");
    return CactusBounds{std::uint64_t{1} << (2 * n - 2), std::uint64_t{1} << (2 * n - 1)};
}

std::vector<AsymptoticEntry> asymptotic_estimates(int n) {
    if (n < 1) throw UsageError("n must be positive");
    const double dn = n;
    const double pi = std::numbers::pi;
    const double four_n = std::pow(4.0, dn);
    const auto central = static_cast<double>(binomial(2 * static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n)));
    const auto mid = static_cast<double>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n / 2)));
    std::vector<AsymptoticEntry> out;
    out.push_back({"rs_lower", std::ceil(central / 2), four_n / (2 * std::sqrt(dn * pi)), "4^n/(2 sqrt(n pi))"});
    if (n >= 2) {
        out.push_back({"lt_lower", static_cast<double>(lt_lower_bound_det(n)), 2 * four_n / (dn * pi),
                       "2 4^n/(n pi)"});
    }
    out.push_back({"l_diff", mid * mid, mid * mid, "C(n,floor(n/2))^2"});
    out.push_back({"rank_upper", static_cast<double>(det_rank_upper_bound(n)),
                   std::sqrt(2 * pi * dn) * std::pow(dn / std::numbers::e, dn) * std::pow(2.0, dn - 1),
                   "sqrt(2 pi n) (n/e)^n 2^(n-1)"});
    out.push_back({"cactus_upper", central, four_n / std::sqrt(dn * pi), "4^n/sqrt(n pi)"});
    return out;
}

DiffDimension dehomogenized_diff_dimension(const Polynomial& f, VarIndex var) {
    if (f.ring() != Ring::R) throw UsageError("the form must live in R");
    if (static_cast<int>(var) >= f.grid().variable_count()) throw UsageError("variable out of range");
    const Polynomial g = f.with_variable_set_to_one(var);
    DiffDimension out;
    if (g.is_zero()) return out;
    std::unordered_set<Monomial, MonomialHash> divisors;
    for (const auto& t : g.terms()) {
        std::vector<VarPower> chosen;
        const auto& powers = t.mono.powers();
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == powers.size()) {
                divisors.insert(Monomial::from_powers(chosen));
                return;
            }
            for (std::uint16_t e = 0; e <= powers[i].exp; ++e) {
                if (e > 0) chosen.push_back({powers[i].var, e});
                self(self, i + 1);
                if (e > 0) chosen.pop_back();
            }
        };
        rec(rec, 0);
    }
    std::vector<Polynomial> images;
    std::vector<Monomial> cols;
    for (const auto& m : divisors) {
        images.push_back(contract(m, g));
        for (const auto& t : images.back().terms()) cols.push_back(t.mono);
    }
    std::sort(cols.begin(), cols.end(), DiagonalLexGreater{});
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
    for (std::uint32_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
    SparseEchelon<Rational> ech(cols.size() + 1);
    for (const auto& p : images) {
        SparseRow<Rational> row;
        for (const auto& t : p.terms()) row.emplace_back(col_of.at(t.mono), t.coeff);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(std::move(row));
    }
    out.dimension = ech.rank();
    out.by_degree.assign(static_cast<std::size_t>(g.degree()) + 1, 0);
    // Columns are graded descending, so a pivot is the top-degree part of its row.
    for (const auto& row : ech.reduced_rows()) ++out.by_degree[cols[row.front().first].degree()];
    return out;
}

GeneratingDegree certify_generating_degree(InvariantKind kind, int n, const HilbertFunction& h,
                                           CertificationRoute route, const EngineConfig& cfg) {
    const Polynomial f = build_invariant(kind, n);
    const int deg = f.degree();
    const int nvars = f.grid().variable_count();
    GeneratingDegree out;
    out.degree = 2;
    if (route == CertificationRoute::None) {
        out.detail = "not computed";
        return out;
    }
    const bool direct_fits = ambient_dimension(nvars, deg + 1) <= cfg.max_ambient;
    if (route == CertificationRoute::Direct || (route == CertificationRoute::Auto && direct_fits)) {
        try {
            const GeneratorReport rep = minimal_generator_degrees(f, deg + 1, cfg);
            out.degree = rep.max_generating_degree();
            out.provenance = Provenance::Direct;
            std::ostringstream os;
            os << "minimal generators by degree (" << to_string(cfg.arithmetic) << "):";
            for (const auto& [k, m] : rep.mu) os << ' ' << k << ':' << m;
            out.detail = os.str();
            return out;
        } catch (const CeilingError& e) {
            if (route == CertificationRoute::Direct) throw;
            out.detail = std::string("direct route: ") + e.what() + "; ";
        }
    }
    if (n < 2) {
        out.detail += "no degree-2 candidate set at this size";
        return out;
    }
    const auto candidates = degree2_candidates(kind, n);
    BuchbergerOptions opts;
    opts.threads = cfg.threads;
    opts.max_recorded_failures = 1;
    const auto rep = verify_degree2_generation_via_groebner(f, candidates, TermOrder::diagonal_lex(), cfg, opts, &h);
    if (rep.passed()) {
        out.provenance = Provenance::Groebner;
        out.detail += rep.groebner.is_groebner
                          ? "candidates form a Groebner basis with matching standard monomial counts"
                          : "interreduced candidates form a Groebner basis with matching standard monomial counts";
    } else if (!rep.route_available) {
        out.detail += "groebner route unavailable";
    } else {
        out.detail += "standard monomial counts differ from the Hilbert function";
    }
    return out;
}

BoundsReport bounds_report(InvariantKind kind, int n, const HilbertFunction& h, const GeneratingDegree& d,
                           bool strict) {
    BoundsReport r;
    r.invariant = kind;
    r.n = n;
    r.hilbert = h;
    r.generating_degree = d;
    r.length = h.length();
    r.l_diff = h.max_value();
    r.rs_lower = rs_lower_bound(r.length, d, strict);
    r.cactus_upper = r.length;
    if (kind == InvariantKind::Determinant && n >= 2) {
        const auto s = static_cast<std::size_t>(n / 2);
        const std::int64_t lt = static_cast<std::int64_t>(h.values.at(s)) + det_singular_locus_dimension(n) + 1;
        r.lt_lower = static_cast<std::uint64_t>(lt);
        if (*r.lt_lower != lt_lower_bound_det(n)) r.notes.push_back("lt_lower from the Hilbert data differs from the closed form");
    }
    if (kind == InvariantKind::Determinant) r.rank_upper = det_rank_upper_bound(n);
    if (kind == InvariantKind::Pfaffian) {
        r.notes.push_back("cactus_upper is the apolar length 2^(2n-1)");
    }
    if (!d.certified()) r.notes.push_back("generating degree assumed, not computed: " + d.detail);
    r.rs_vs_ldiff = r.rs_lower < r.l_diff   ? Comparison::Less
                    : r.rs_lower > r.l_diff ? Comparison::Greater
                                            : Comparison::Equal;
    return r;
}

BoundsReport bounds_report(InvariantKind kind, int n, const EngineConfig& cfg, CertificationRoute route, bool strict) {
    const Polynomial f = build_invariant(kind, n);
    const HilbertFunction h = hilbert_function(f, cfg);
    const GeneratingDegree d = certify_generating_degree(kind, n, h, route, cfg);
    return bounds_report(kind, n, h, d, strict);
}

TableRow table_row(const BoundsReport& r) {
    if (r.invariant != InvariantKind::Determinant || !r.lt_lower) {
        throw UsageError("table rows need a determinant report with n >= 2");
    }
    return TableRow{r.n, r.rs_lower, *r.lt_lower, r.l_diff};
}

std::vector<TableRow> assemble_table(const std::vector<BoundsReport>& reports) {
    std::vector<TableRow> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(table_row(r));
    return rows;
}

std::string table_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "| n | rs_lower | lt_lower | l_diff |\n|---|---|---|---|\n";
    for (const auto& r : rows) os << "| " << r.n << " | " << r.rs_lower << " | " << r.lt_lower << " | " << r.l_diff << " |\n";
    return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,rs_lower,lt_lower,l_diff\n";
    for (const auto& r : rows) os << r.n << ',' << r.rs_lower << ',' << r.lt_lower << ',' << r.l_diff << '\n';
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        j.push_back({{"n", r.n}, {"rs_lower", r.rs_lower}, {"lt_lower", r.lt_lower}, {"l_diff", r.l_diff}});
    }
    return j.dump() + "\n";
}

std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("n,rs_lower,lt_lower,l_diff", 0) != 0) {
        throw UsageError("table CSV must start with the header n,rs_lower,lt_lower,l_diff");
    }
    std::vector<TableRow> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        TableRow r;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(ls >> r.n >> c1 >> r.rs_lower >> c2 >> r.lt_lower >> c3 >> r.l_diff) || c1 != ',' || c2 != ',' ||
            c3 != ',') {
            throw UsageError("malformed table row: " + line);
        }
        rows.push_back(r);
    }
    return rows;
}

} // namespace apolar
