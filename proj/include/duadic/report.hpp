#pragma once

// JSON records for codes, bounds, scans, lemma clauses and certificates.
// Polynomials and words are hex coefficient masks (bit 0 = constant term /
// coordinate 0); defining sets are sorted integer arrays.

#include <json.hpp>

#include "duadic/bounds.hpp"
#include "duadic/cosets.hpp"
#include "duadic/cyclic.hpp"
#include "duadic/distance.hpp"

namespace duadic {

using Json = nlohmann::json;

Json to_json(const BoundReport& report);
Json to_json(const DuadicPair& pair);
Json to_json(const LemmaClause& clause);
Json to_json(const DistanceCertificate& cert);
Json defining_set_json(const DefiningSet& set);

/// {n, k, defining_set_size, generator_hex, properties: {self_dual_extended,
/// doubly_even_extended}}
Json code_record(const CyclicCode& code);

DistanceCertificate certificate_from_json(const Json& j);

/// Re-checks a stored certificate against a code without recomputation:
/// shape, lower <= upper, witness weight and membership.
bool recheck_certificate(const DistanceCertificate& cert, const CyclicCode& code);

}  // namespace duadic
