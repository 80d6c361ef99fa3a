#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace cli {

namespace {

std::string printf_number(const char* fmt, double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

std::string text_number(double x) { return printf_number("%.12g", x); }

std::string text_complex(double re, double im) {
  std::string s = text_number(re);
  const std::string i = text_number(im);
  s += (i.front() == '-' ? "" : "+") + i + "i";
  return s;
}

std::string csv_number(double x) { return printf_number("%.17g", x); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

nlohmann::json complex_json(double re, double im) {
  return {{"re", re == 0.0 ? 0.0 : re}, {"im", im == 0.0 ? 0.0 : im}};
}

std::string json_document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cli
