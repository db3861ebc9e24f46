#pragma once

#include "json.hpp"

#include "starcount/bigint.hpp"
#include "starcount/directed.hpp"
#include "starcount/estimator.hpp"
#include "starcount/exact.hpp"
#include "starcount/oracle.hpp"

namespace starcount {

using Json = nlohmann::ordered_json;

// Number when it fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& v);

Json to_json(const QueryLedger& ledger);
Json to_json(const EstimateReport& report);
Json to_json(const Path2Report& report);
Json to_json(const ExactCounts& counts);
Json to_json(const JensenReport& report);

}  // namespace starcount
