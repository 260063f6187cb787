#pragma once

// Machine-readable renderings of the engine results. Key order is fixed so
// that identical runs produce identical bytes.

#include <optional>
#include <string>

#include "json.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/bounds.hpp"
#include "apolar/groebner.hpp"
#include "apolar/invariants.hpp"

namespace apolar {

using Json = nlohmann::ordered_json;

Json hilbert_json(InvariantKind kind, int n, const HilbertFunction& h, const GeneratorReport* mu = nullptr);
std::string hilbert_csv_header();
std::string hilbert_csv_row(InvariantKind kind, int n, const HilbertFunction& h);

Json generator_json(const GeneratorReport& rep);
Json direct_verification_json(const DirectVerificationReport& rep);
Json groebner_json(const GroebnerReport& rep);
Json groebner_verification_json(const GroebnerVerificationReport& rep);
Json bounds_json(const BoundsReport& rep);

} // namespace apolar
