#pragma once

#include "sobmult/rule_engine.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace sobmult {

// JSON schema: verdict {query:{...}, status, rule, conditions:[{label, lhs,
// rel, rhs, holds}], notes:[...], tried:[{rule, first_failed}]}. Every
// number is serialized as an exact "num/den" string.

nlohmann::json verdict_to_json(const MultQuery& query, const Verdict& verdict);
nlohmann::json verdict_to_json(const EmbedQuery& query, const Verdict& verdict);

struct ParsedVerdict {
  std::variant<MultQuery, EmbedQuery> query;
  Verdict verdict;
};

ParsedVerdict verdict_from_json(const nlohmann::json& j);

/// Human-readable rendering: status, rule, each condition with its exact
/// sides and truth value, notes, and the attempted rules.
std::string format_verdict(const std::string& query_line, const Verdict& verdict);

std::string query_str(const MultQuery& query);
std::string query_str(const EmbedQuery& query);

} // namespace sobmult
