#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/bounds.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/invariants.hpp"
#include "apolar/reports.hpp"
#include "apolar/text_format.hpp"

namespace apolar::cli {

namespace {

struct RunConfig {
    std::string invariant = "det";
    int n = 0;
    std::string mode = "rational";
    std::uint64_t prime = ModP::kDefaultPrime;
    std::uint64_t ceiling = 200'000;
    std::size_t max_pivots = 50'000;
    std::string format = "json";
    std::string route = "direct";
    int k_max = 0;  // 0: deg F + 1
    std::vector<std::size_t> drop;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool quiet = false;
    bool strict = false;
    bool mu = false;
    bool no_coprime = false;
    std::string basis = "candidates";
    std::string certify = "auto";
    std::string range = "2..6";
    std::string golden;
    std::string h_text;
    std::string f_text;
    std::string grid_text;
    std::vector<std::string> forms;
    std::vector<std::string> coefficients;
};

InvariantKind kind_of(const RunConfig& c) { return parse_invariant_kind(c.invariant); }

void require_n(const RunConfig& c) {
    if (c.n < 1) throw UsageError("--n must be a positive integer");
}

EngineConfig engine_config(const RunConfig& c, std::ostream& err, int degree) {
    EngineConfig cfg;
    if (c.mode == "rational") {
        cfg.arithmetic = Arithmetic::Rational;
    } else if (c.mode == "mod-p") {
        cfg.arithmetic = Arithmetic::ModPrime;
        if (!is_prime(c.prime) || c.prime >= (std::uint64_t{1} << 32)) {
            throw UsageError("--prime must be a prime below 2^32");
        }
        if (c.prime <= 2 * static_cast<std::uint64_t>(std::max(degree, 1))) {
            throw UsageError("--prime must exceed twice the degree");
        }
    } else {
        throw UsageError("--mode must be rational or mod-p");
    }
    cfg.prime = c.prime;
    if (c.ceiling == 0 || c.max_pivots == 0) throw UsageError("ceilings must be positive");
    cfg.max_ambient = c.ceiling;
    cfg.max_pivots = c.max_pivots;
    cfg.threads = std::max(1U, c.threads);
    if (!c.quiet) cfg.progress = [&err](const std::string& m) { err << m << '\n'; };
    return cfg;
}

VariableGrid parse_grid(const std::string& text) {
    std::smatch m;
    static const std::regex generic(R"(generic:(\d+)x(\d+))");
    static const std::regex square(R"((skew|symmetric):(\d+))");
    if (std::regex_match(text, m, generic)) return VariableGrid::generic(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, square)) {
        const int size = std::stoi(m[2]);
        return m[1] == "skew" ? VariableGrid::skew_symmetric(size) : VariableGrid::zero_diagonal_symmetric(size);
    }
    throw UsageError("--grid must be generic:RxC, skew:N or symmetric:N");
}

Rational parse_rational(const std::string& s) {
    static const std::regex frac(R"(\s*[+-]?\d+(/\d+)?\s*)");
    if (!std::regex_match(s, frac)) throw UsageError("not a rational number: " + s);
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    return Rational(t);
}

// The form F: --f on --grid when given, otherwise the invariant.
Polynomial form_of(const RunConfig& c) {
    if (!c.f_text.empty()) {
        if (c.grid_text.empty()) throw UsageError("--f needs --grid");
        return parse_polynomial(c.f_text, Ring::R, parse_grid(c.grid_text));
    }
    require_n(c);
    return build_invariant(kind_of(c), c.n);
}

std::vector<Polynomial> candidates_of(const RunConfig& c) {
    auto cands = degree2_candidates(kind_of(c), c.n);
    std::vector<std::size_t> drop = c.drop;
    std::sort(drop.rbegin(), drop.rend());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (std::size_t i : drop) {
        if (i >= cands.size()) throw UsageError("--drop-candidate index out of range");
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return cands;
}

std::pair<int, int> parse_range(const std::string& text) {
    std::smatch m;
    static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
    if (!std::regex_match(text, m, range)) throw UsageError("--n must be N or A..B");
    const int a = std::stoi(m[1]);
    const int b = m[2].matched ? std::stoi(m[2]) : a;
    if (a < 2 || b < a) throw UsageError("table range must satisfy 2 <= A <= B");
    return {a, b};
}

int cmd_hilbert(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_n(c);
    const auto kind = kind_of(c);
    const Polynomial f = build_invariant(kind, c.n);
    const EngineConfig cfg = engine_config(c, err, f.degree());
    const HilbertFunction h = hilbert_function(f, cfg);
    std::optional<GeneratorReport> mu;
    if (c.mu) mu = minimal_generator_degrees(f, c.k_max > 0 ? c.k_max : f.degree() + 1, cfg);
    if (c.format == "csv") {
        out << hilbert_csv_header() << '\n' << hilbert_csv_row(kind, c.n, h) << '\n';
    } else if (c.format == "json") {
        out << hilbert_json(kind, c.n, h, mu ? &*mu : nullptr).dump() << '\n';
    } else {
        throw UsageError("hilbert supports --format json or csv");
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_n(c);
    const auto kind = kind_of(c);
    const Polynomial f = build_invariant(kind, c.n);
    const EngineConfig cfg = engine_config(c, err, f.degree());
    const auto cands = candidates_of(c);
    const int k_max = c.k_max > 0 ? c.k_max : f.degree() + 1;
    Json j;
    j["invariant"] = short_name(kind);
    j["n"] = c.n;
    j["candidates"] = cands.size();
    bool ok = true;
    if (c.route != "direct" && c.route != "groebner" && c.route != "both") {
        throw UsageError("--route must be direct, groebner or both");
    }
    if (c.route == "direct" || c.route == "both") {
        const auto rep = verify_degree2_generation_direct(f, cands, k_max, cfg);
        j["direct"] = direct_verification_json(rep);
        ok = ok && rep.passed();
    }
    if (c.route == "groebner" || c.route == "both") {
        BuchbergerOptions opts;
        opts.threads = cfg.threads;
        opts.skip_coprime = !c.no_coprime;
        opts.max_recorded_failures = 20;
        const auto rep = verify_degree2_generation_via_groebner(f, cands, TermOrder::diagonal_lex(), cfg, opts);
        j["groebner"] = groebner_verification_json(rep);
        ok = ok && rep.passed();
    }
    if (c.mu) {
        const auto mu = minimal_generator_degrees(f, k_max, cfg);
        j["mu"] = generator_json(mu);
        ok = ok && mu.generated_only_in(2);
    }
    j["passed"] = ok;
    out << j.dump() << '\n';
    return ok ? kOk : kVerificationFailed;
}

int cmd_groebner(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_n(c);
    const EngineConfig cfg = engine_config(c, err, c.n);
    std::vector<Polynomial> gens;
    if (c.basis == "candidates") {
        gens = candidates_of(c);
    } else if (c.basis == "permanents") {
        if (kind_of(c) != InvariantKind::Determinant) throw UsageError("--basis permanents needs --invariant det");
        gens = laubenbacher_swanson_basis(c.n).permanents;
    } else if (c.basis == "ls") {
        if (kind_of(c) != InvariantKind::Determinant) throw UsageError("--basis ls needs --invariant det");
        gens = laubenbacher_swanson_basis(c.n).all();
    } else {
        throw UsageError("--basis must be candidates, permanents or ls");
    }
    BuchbergerOptions opts;
    opts.threads = cfg.threads;
    opts.skip_coprime = !c.no_coprime;
    opts.max_recorded_failures = 20;
    if (cfg.progress) cfg.progress("groebner: " + std::to_string(gens.size()) + " generators");
    const auto rep = buchberger_check(gens, TermOrder::diagonal_lex(), opts);
    Json j;
    j["invariant"] = short_name(kind_of(c));
    j["n"] = c.n;
    j["basis"] = c.basis;
    j["report"] = groebner_json(rep);
    out << j.dump() << '\n';
    return rep.is_groebner ? kOk : kVerificationFailed;
}

CertificationRoute certification_route(const std::string& s) {
    if (s == "auto") return CertificationRoute::Auto;
    if (s == "direct") return CertificationRoute::Direct;
    if (s == "groebner") return CertificationRoute::Groebner;
    if (s == "none") return CertificationRoute::None;
    throw UsageError("--certify must be auto, direct, groebner or none");
}

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_n(c);
    const EngineConfig cfg = engine_config(c, err, c.n);
    const auto rep = bounds_report(kind_of(c), c.n, cfg, certification_route(c.certify), c.strict);
    out << bounds_json(rep).dump() << '\n';
    return kOk;
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto [a, b] = parse_range(c.range);
    std::vector<BoundsReport> reports;
    for (int n = a; n <= b; ++n) {
        const EngineConfig cfg = engine_config(c, err, n);
        reports.push_back(bounds_report(InvariantKind::Determinant, n, cfg, certification_route(c.certify), c.strict));
    }
    const auto rows = assemble_table(reports);
    if (c.format == "csv") {
        out << table_csv(rows);
    } else if (c.format == "json") {
        out << table_json(rows);
    } else if (c.format == "markdown" || c.format == "table") {
        out << table_markdown(rows);
    } else {
        throw UsageError("table supports --format markdown, csv or json");
    }
    if (c.golden.empty()) return kOk;
    std::ifstream in(c.golden);
    if (!in) throw UsageError("cannot read golden file " + c.golden);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto expected = parse_table_csv(buf.str());
    if (expected == rows) return kOk;
    err << "table differs from " << c.golden << "\nexpected:\n" << table_csv(expected) << "computed:\n" << table_csv(rows);
    return kVerificationFailed;
}

int cmd_contract(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (c.h_text.empty()) throw UsageError("contract needs --op");
    const Polynomial f = form_of(c);
    const Polynomial h = parse_polynomial(c.h_text, Ring::S, f.grid());
    const Polynomial r = contract(h, f);
    if (c.format == "json") {
        Json j;
        j["h"] = format_polynomial(h);
        j["f"] = format_polynomial(f);
        j["result"] = format_polynomial(r);
        out << j.dump() << '\n';
    } else if (c.format == "text-poly" || c.format == "text") {
        out << format_polynomial(r) << '\n';
    } else {
        throw UsageError("contract supports --format json or text-poly");
    }
    return kOk;
}

int cmd_waring(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (c.forms.empty()) throw UsageError("waring needs at least one --form");
    const Polynomial f = form_of(c);
    std::vector<Polynomial> forms;
    for (const auto& s : c.forms) forms.push_back(parse_polynomial(s, Ring::R, f.grid()));
    Json j;
    j["f"] = format_polynomial(f);
    bool ok = false;
    if (!c.coefficients.empty()) {
        std::vector<Rational> coeffs;
        for (const auto& s : c.coefficients) coeffs.push_back(parse_rational(s));
        ok = waring_verify(f, forms, coeffs);
        j["verified"] = ok;
    } else {
        const auto sol = waring_solve(f, forms);
        ok = sol.has_value();
        if (sol) {
            std::vector<std::string> cs;
            for (const auto& q : *sol) cs.push_back(to_string(q));
            j["coefficients"] = cs;
        } else {
            j["coefficients"] = nullptr;
        }
    }
    out << j.dump() << '\n';
    return ok ? kOk : kVerificationFailed;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Apolar ideals of determinants, permanents, Pfaffians and Hafnians"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--invariant", c.invariant, "det, perm, pf or hf")
            ->check(CLI::IsMember({"det", "perm", "pf", "hf"}));
        sub->add_option("--mode", c.mode, "rational or mod-p")->envname("APOLAR_MODE");
        sub->add_option("--prime", c.prime, "prime for mod-p mode");
        sub->add_option("--ceiling", c.ceiling, "maximum monomials in one graded piece")->envname("APOLAR_CEILING");
        sub->add_option("--max-pivots", c.max_pivots, "maximum pivots in one elimination");
        sub->add_option("--threads", c.threads, "worker threads")->envname("APOLAR_THREADS");
        sub->add_option("--seed", c.seed, "seed for randomized checks");
        sub->add_flag("--quiet", c.quiet, "suppress progress on stderr");
    };

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/Ann(F)");
    common(hilbert);
    hilbert->add_option("--n", c.n, "size parameter")->required();
    hilbert->add_option("--format", c.format, "json or csv");
    hilbert->add_flag("--mu", c.mu, "also report minimal generator counts");
    hilbert->add_option("--k-max", c.k_max, "largest degree for --mu");

    auto* verify = app.add_subcommand("verify", "check that the degree-2 candidates generate Ann(F)");
    common(verify);
    verify->add_option("--n", c.n, "size parameter")->required();
    verify->add_option("--route", c.route, "direct, groebner or both");
    verify->add_option("--k-max", c.k_max, "largest degree compared (default deg F + 1)");
    verify->add_option("--drop-candidate", c.drop, "remove the candidate with this index");
    verify->add_flag("--mu", c.mu, "also require minimal generators only in degree 2");
    verify->add_flag("--no-coprime", c.no_coprime, "do not skip pairs with coprime leading terms");

    auto* groebner = app.add_subcommand("groebner", "Buchberger criterion for a generating set");
    common(groebner);
    groebner->add_option("--n", c.n, "size parameter")->required();
    groebner->add_option("--basis", c.basis, "candidates, permanents or ls");
    groebner->add_option("--drop-candidate", c.drop, "remove the candidate with this index");
    groebner->add_flag("--no-coprime", c.no_coprime, "do not skip pairs with coprime leading terms");

    auto* bounds = app.add_subcommand("bounds", "rank bounds for one invariant");
    common(bounds);
    bounds->add_option("--n", c.n, "size parameter")->required();
    bounds->add_option("--certify", c.certify, "auto, direct, groebner or none");
    bounds->add_flag("--strict", c.strict, "refuse an uncertified generating degree");

    auto* table = app.add_subcommand("table", "determinant bounds table");
    common(table);
    table->add_option("--n", c.range, "range A..B");
    table->add_option("--format", c.format, "markdown, csv or json");
    table->add_option("--golden", c.golden, "CSV file the table must match");
    table->add_option("--certify", c.certify, "auto, direct, groebner or none");
    table->add_flag("--strict", c.strict, "refuse an uncertified generating degree");

    auto* contract_cmd = app.add_subcommand("contract", "evaluate h o F");
    common(contract_cmd);
    contract_cmd->add_option("--n", c.n, "size parameter");
    contract_cmd->add_option("--op", c.h_text, "operator h in S")->required();
    contract_cmd->add_option("--f", c.f_text, "form in R (default: the invariant)");
    contract_cmd->add_option("--grid", c.grid_text, "generic:RxC, skew:N or symmetric:N");
    contract_cmd->add_option("--format", c.format, "json or text-poly");

    auto* waring = app.add_subcommand("waring", "check or solve F = sum c_i l_i^d");
    common(waring);
    waring->add_option("--n", c.n, "size parameter");
    waring->add_option("--f", c.f_text, "form in R (default: the invariant)");
    waring->add_option("--grid", c.grid_text, "generic:RxC, skew:N or symmetric:N");
    waring->add_option("--form", c.forms, "linear form l_i (repeatable)");
    waring->add_option("--coeff", c.coefficients, "coefficient c_i (repeatable; omit to solve)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (hilbert->parsed()) return cmd_hilbert(c, out, err);
        if (verify->parsed()) return cmd_verify(c, out, err);
        if (groebner->parsed()) return cmd_groebner(c, out, err);
        if (bounds->parsed()) return cmd_bounds(c, out, err);
        if (table->parsed()) return cmd_table(c, out, err);
        if (contract_cmd->parsed()) return cmd_contract(c, out, err);
        if (waring->parsed()) return cmd_waring(c, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CeilingError& e) {
        err << "ceiling: " << e.what() << '\n';
        return kCeiling;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace apolar::cli
