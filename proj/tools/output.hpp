#pragma once

// Number and table formatting shared by the subcommands.

#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

enum class Format { Text, Json, Csv };

/// 12 significant digits; negative zero printed as 0.
std::string text_number(double x);
/// "re+imi" with text_number for both parts.
std::string text_complex(double re, double im);
/// 17 significant digits (round-trips).
std::string csv_number(double x);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
/// Joins quoted fields with commas and terminates the record with CRLF.
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json complex_json(double re, double im);

/// One JSON document, two-space indented, trailing newline.
std::string json_document(const nlohmann::json& doc);

}  // namespace cli
