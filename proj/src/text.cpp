#include "unicyclic/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view text, std::string_view original) {
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw ParameterError("malformed number '" + std::string(original) + "'");
  }
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  const auto s = trim(text);
  if (s.starts_with("e^")) return std::exp(parse_plain(s.substr(2), text));
  if (s.starts_with("exp(") && s.ends_with(")")) return std::exp(parse_plain(s.substr(4, s.size() - 5), text));
  return parse_plain(s, text);
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_real(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto tok = trim(text.substr(pos, comma - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParameterError("malformed integer '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace unicyclic
