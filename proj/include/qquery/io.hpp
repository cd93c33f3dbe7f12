#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qquery/boolfn.hpp"
#include "qquery/circuit.hpp"
#include "qquery/measures.hpp"
#include "qquery/multilinear.hpp"
#include "qquery/qsim.hpp"
#include "qquery/univariate.hpp"

namespace qquery {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; parse failures become ValidationError with the
/// file name and the parser's line/column.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<input>");

/// Hex digit k holds entries 4k..4k+3, entry 4k+j in bit j of the digit, so
/// the string reads as the truth table in little-endian nibbles. Tables with
/// fewer than 4 entries use one digit.
std::string truth_table_hex(const TruthTable& f);
TruthTable truth_table_from_hex(int n, const std::string& hex);

/// {"n", "bits"}.
Json truth_table_to_json(const TruthTable& f);
/// Accepts {"n", "bits"} or {"family", "n", "m"?}.
TruthTable truth_table_from_json(const Json& j);

Json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const Json& j);
Json univariate_to_json(const UnivariatePoly& q);
UnivariatePoly univariate_from_json(const Json& j);
/// Coefficients as "a" or "a+b*sqrt2" strings, keyed like poly_to_json.
Json real_poly_to_json(const RealPoly& p);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json circuit_to_json(const Circuit& c);
/// Validates every op; errors name the offending op index.
Circuit circuit_from_json(const Json& j);

Json check_result_to_json(const CheckResult& r);

Json bound_report_to_json(const BoundReport& r);
std::string bound_report_markdown_header();
std::string bound_report_markdown_row(const std::string& name, const BoundReport& r);

/// Enumeration CSV. Columns are append-only: index, n, the measures, the
/// monotone flag, gamma, one 0/1 column per inequality check (empty when the
/// check does not apply), then the truth table in hex.
std::vector<std::string> enumeration_csv_columns();
std::string enumeration_csv_row(std::uint64_t index, const TruthTable& f, const BoundReport& r);

/// "y,t_hat" rows for a counting decoder.
std::string decoder_csv(const std::vector<int>& decoder);

std::string format_double(double v);

}  // namespace qquery
