#ifndef CURRMOD_RATIONAL_HPP
#define CURRMOD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace currmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Exact integer value; the caller must have checked is_integer.
long long to_long(const Rat& r);

/// sqrt of a non-negative rational if it is a perfect square.
std::optional<Rat> exact_sqrt(const Rat& r);

std::string join_rats(const std::vector<Rat>& v, char sep);

} // namespace currmod

#endif
