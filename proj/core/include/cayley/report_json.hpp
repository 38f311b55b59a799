#pragma once

#include <optional>
#include <string>

#include "cayley/census.hpp"
#include "cayley/graph.hpp"

namespace cayley {

/// {"n":..,"q":..,"rank":..,"method":"formula"|"oracle","count":"<decimal>"}
/// plus "agrees" when given. Compact, keys in that order.
[[nodiscard]] std::string census_record_json(const CensusRecord& record,
                                             std::optional<std::optional<bool>> agrees = std::nullopt);

/// CSV row n,q,rank,method,count,agrees (agrees empty when absent or unknown).
[[nodiscard]] std::string census_record_csv(const CensusRecord& record, std::optional<bool> agrees = std::nullopt);

/// {"n","q","order","degree","lambda","mu_by_rank","is_srg","parameters","witness","note"}
/// with every count as a decimal string.
[[nodiscard]] std::string srg_report_json(const SrgReport& report);

}  // namespace cayley
