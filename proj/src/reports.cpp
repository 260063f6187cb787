#include "apolar/reports.hpp"

#include <sstream>

#include "apolar/text_format.hpp"

namespace apolar {

Json generator_json(const GeneratorReport& rep) {
    Json mu = Json::object();
    for (const auto& [k, m] : rep.mu) mu[std::to_string(k)] = m;
    return mu;
}

Json hilbert_json(InvariantKind kind, int n, const HilbertFunction& h, const GeneratorReport* mu) {
    Json j;
    j["invariant"] = short_name(kind);
    j["n"] = n;
    j["hilbert"] = h.values;
    j["length"] = h.length();
    if (mu) j["mu"] = generator_json(*mu);
    j["mode"] = to_string(h.arithmetic);
    return j;
}

std::string hilbert_csv_header() { return "invariant,n,mode,length,hilbert"; }

std::string hilbert_csv_row(InvariantKind kind, int n, const HilbertFunction& h) {
    std::ostringstream os;
    os << short_name(kind) << ',' << n << ',' << to_string(h.arithmetic) << ',' << h.length() << ',';
    for (std::size_t i = 0; i < h.values.size(); ++i) os << (i ? " " : "") << h.values[i];
    return os.str();
}

Json direct_verification_json(const DirectVerificationReport& rep) {
    Json j;
    j["route"] = "direct";
    j["mode"] = to_string(rep.arithmetic);
    j["candidatesAnnihilate"] = rep.candidates_annihilate;
    if (!rep.failing_candidates.empty()) j["failingCandidates"] = rep.failing_candidates;
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back({{"k", d.k}, {"generated", d.generated}, {"annihilator", d.annihilator}, {"equal", d.equal()}});
    }
    j["degrees"] = degrees;
    if (rep.monomials_fill_next_degree) j["monomialsFillNextDegree"] = *rep.monomials_fill_next_degree;
    j["passed"] = rep.passed();
    return j;
}

Json groebner_json(const GroebnerReport& rep) {
    Json j;
    j["generators"] = rep.generators;
    j["pairs"] = rep.pairs;
    j["skipped"] = rep.skipped;
    j["reducedToZero"] = rep.reduced_to_zero;
    Json failures = Json::array();
    for (const auto& f : rep.failures) {
        failures.push_back({{"i", f.i}, {"j", f.j}, {"remainder", format_polynomial(f.remainder)}});
    }
    j["failures"] = failures;
    j["failureCount"] = rep.failure_count;
    j["isGroebner"] = rep.is_groebner;
    j["minimal"] = rep.minimal;
    j["reduced"] = rep.reduced;
    return j;
}

Json groebner_verification_json(const GroebnerVerificationReport& rep) {
    Json j;
    j["route"] = "groebner";
    j["candidatesAnnihilate"] = rep.candidates_annihilate;
    if (!rep.failing_candidates.empty()) j["failingCandidates"] = rep.failing_candidates;
    j["routeAvailable"] = rep.route_available;
    if (rep.candidates_annihilate) j["groebner"] = groebner_json(rep.groebner);
    if (rep.interreduced) j["interreduced"] = groebner_json(*rep.interreduced);
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back({{"k", d.k}, {"standard", d.standard}, {"hilbert", d.hilbert}, {"equal", d.equal()}});
    }
    j["degrees"] = degrees;
    j["passed"] = rep.passed();
    return j;
}

Json bounds_json(const BoundsReport& r) {
    Json j;
    j["invariant"] = short_name(r.invariant);
    j["n"] = r.n;
    j["hilbert"] = r.hilbert.values;
    j["mode"] = to_string(r.hilbert.arithmetic);
    j["generatingDegree"] = {{"degree", r.generating_degree.degree},
                             {"provenance", to_string(r.generating_degree.provenance)},
                             {"detail", r.generating_degree.detail}};
    j["length"] = r.length;
    j["rs_lower"] = r.rs_lower;
    j["lt_lower"] = r.lt_lower ? Json(*r.lt_lower) : Json(nullptr);
    j["rank_upper"] = r.rank_upper ? Json(*r.rank_upper) : Json(nullptr);
    j["l_diff"] = r.l_diff;
    j["cactus_upper"] = r.cactus_upper;
    j["rs_vs_l_diff"] = to_string(r.rs_vs_ldiff);
    j["notes"] = r.notes;
    return j;
}

} // namespace apolar
