#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinqw/partition.hpp"
#include "spinqw/rational.hpp"
#include "spinqw/report.hpp"

namespace spinqw {

// Textual inputs: "p/q" and integers are exact, anything with a point or exponent is decimal.
enum class InputKind { Integer, Fraction, Decimal };

InputKind classify_input(const std::string& item);
std::vector<std::string> split_list(const std::string& text);

// Keys holding partitions rather than scalars.
bool is_partition_key(const std::string& key);

// Mode implied by the scalar inputs alone; throws UsageError when fractions and decimals are mixed
// or when an explicit exact mode meets decimal input.
Mode implied_mode(const std::map<std::string, std::string>& values, const std::optional<Mode>& requested,
                  Mode fallback);

Rational parse_rational(const std::string& text);
double parse_real(const std::string& text);
Partition parse_partition_arg(const std::string& text);

template <class T>
T parse_scalar(const std::string& text);
template <>
inline Rational parse_scalar<Rational>(const std::string& text)
{
    return parse_rational(text);
}
template <>
inline double parse_scalar<double>(const std::string& text)
{
    return parse_real(text);
}

template <class T>
std::vector<T> parse_scalar_list(const std::string& text)
{
    std::vector<T> out;
    for (const auto& item : split_list(text)) out.push_back(parse_scalar<T>(item));
    return out;
}

} // namespace spinqw
