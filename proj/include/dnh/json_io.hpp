#pragma once

#include <string>

#include <json.hpp>

#include "dnh/combinatorics.hpp"
#include "dnh/localization.hpp"
#include "dnh/series.hpp"

namespace dnh {

using Json = nlohmann::ordered_json;

Json partition_json(const Partition& p);
Json rpp_json(const Rpp& r);
Json series_json(const QSeries& s, const std::string& var = "q");
Json series_json(const Series<RatFn>& s, const std::string& var = "q");
Json virtual_rep_json(const VirtualRep& v);

/// {schema, operation, inputs, mode, seed, ...} envelope shared by every
/// CLI command so outputs stay byte-stable for a fixed config and seed.
Json report_envelope(const std::string& operation, Json inputs,
                     const std::string& mode, uint64_t seed);

}  // namespace dnh
