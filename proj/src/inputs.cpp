#include "spinqw/inputs.hpp"

#include <cctype>

#include "spinqw/errors.hpp"

namespace spinqw {

InputKind classify_input(const std::string& item)
{
    if (item.find('/') != std::string::npos) return InputKind::Fraction;
    for (char c : item)
        if (c == '.' || c == 'e' || c == 'E') return InputKind::Decimal;
    return InputKind::Integer;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    bool any = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        any = true;
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (any) out.push_back(cur);
    for (const auto& item : out)
        if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    return out;
}

bool is_partition_key(const std::string& key)
{
    return key == "lambda" || key == "mu" || key == "nu";
}

Mode implied_mode(const std::map<std::string, std::string>& values, const std::optional<Mode>& requested,
                  Mode fallback)
{
    bool fraction = false, decimal = false;
    for (const auto& [key, text] : values) {
        if (is_partition_key(key)) continue;
        for (const auto& item : split_list(text)) {
            InputKind kind = classify_input(item);
            fraction |= kind == InputKind::Fraction;
            decimal |= kind == InputKind::Decimal;
        }
    }
    if (fraction && decimal) throw UsageError("inputs mix p/q rationals and decimals; use one kind");
    if (requested) {
        if (*requested == Mode::Exact && decimal) throw UsageError("exact mode needs rational inputs, got a decimal");
        return *requested;
    }
    if (decimal) return Mode::Numeric;
    if (fraction) return Mode::Exact;
    return fallback;
}

Rational parse_rational(const std::string& text)
{
    if (classify_input(text) == InputKind::Decimal)
        throw UsageError("exact mode needs rational inputs, got '" + text + "'");
    try {
        return Rational::parse(text);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
}

double parse_real(const std::string& text)
{
    if (classify_input(text) != InputKind::Decimal) return parse_rational(text).to_double();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return value;
}

Partition parse_partition_arg(const std::string& text)
{
    try {
        return Partition::parse(text);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
}

} // namespace spinqw
