#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace unicyclic {

/// Real number with the extra spellings "e^<x>" and "exp(<x>)" for e^x.
/// Throws ParameterError on malformed input.
double parse_real(std::string_view text);

/// Comma-separated list of reals.
std::vector<double> parse_real_list(std::string_view text);

/// Comma-separated list of integers.
std::vector<int> parse_int_list(std::string_view text);

/// printf "%.12g".
std::string format_real(double value);

}  // namespace unicyclic
