#pragma once

#include <json.hpp>

#include "cei/invariants.hpp"
#include "cei/search.hpp"

// JSON forms of the report types. Key order is fixed (nlohmann::ordered_json)
// and timing fields are left out so identical runs serialize identically.
namespace cei {

using Json = nlohmann::ordered_json;

Json to_json(const ClassSpec& spec);
Json to_json(const InvariantSummary& s);
Json to_json(const SearchReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const Lemma1Report& r);

ClassSpec class_spec_from_json(const Json& j);
SearchReport search_report_from_json(const Json& j);
VerificationReport verification_report_from_json(const Json& j);
Lemma1Report lemma1_report_from_json(const Json& j);

}  // namespace cei
