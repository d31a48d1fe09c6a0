#pragma once

#include <string>

#include <json.hpp>

#include "pap/enumeration.hpp"
#include "pap/operators.hpp"
#include "pap/verify.hpp"

namespace pap {

// JSON serialization. Objects use nlohmann's sorted keys, so output is
// byte-deterministic for fixed inputs.
nlohmann::json to_json(const Triangle& t);
nlohmann::json to_json(const ClassCounts& c);
nlohmann::json to_json(const OrbitRecord& rec);
nlohmann::json to_json(const OrbitCensus& census);
nlohmann::json to_json(const VerificationReport& report);

// CSV serialization, header included, decimal integers throughout.
std::string to_csv(const Triangle& t);                                // n,k,value
std::string class_counts_csv(const std::vector<ClassCounts>& counts); // full census columns
std::string to_csv(const OrbitCensus& census);                        // n,k,side,d,alpha

}  // namespace pap
