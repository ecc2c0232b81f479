#pragma once

// JSON and LaTeX forms.
//
//   LogSeries  {"order": "zero"|"generic", "floor": int,
//               "coeffs": [[degree, "p/q"], ...]}      (descending degree)
//   ArtinOp    {"lead": int, "cap": int, "coeffs": [[exponent, "p/q"], ...]}
//   SeqTable   {"rule": name, "parameters": {...}, "order": ..., "depth": int,
//               "rows": [{"a": int, "series": LogSeries}, ...]}

#include "logalg/classic.hpp"
#include "logalg/euler_maclaurin.hpp"
#include "logalg/log_series.hpp"
#include "logalg/operator.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace logalg {

using Json = nlohmann::ordered_json;

Json coeffs_to_json(const std::map<int, Rat>& coeffs);
Json to_json(const LogSeries& p);
Json to_json(const ArtinOp& a);
Json to_json(const SeqTable& table);
Json to_json(const EMReport& report);
Json to_json(const SumReport& report);

/// Throws std::invalid_argument when the document does not match the schema.
LogSeries log_series_from_json(const Json& j);
ArtinOp artin_op_from_json(const Json& j);
Order order_from_string(const std::string& name);

/// "\lambda_{1}^{\alpha}(x) - \lambda_{0}^{\alpha}(x)/2 + ... + \cdots".
std::string latex_series(const LogSeries& p);
/// Symbol for row a of a named table, e.g. "B_{-2}^{\alpha}(x)".
std::string latex_row_symbol(const SeqTable& table, int a);
/// The whole table as a LaTeX array, one "lhs &=& rhs \\" line per row.
std::string latex_table(const SeqTable& table);

}  // namespace logalg
