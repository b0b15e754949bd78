#ifndef UMLP_VALUE_HPP
#define UMLP_VALUE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace umlp {

/// Scalar value universe of the interchange format and MiniCond literals.
using Value = std::variant<bool, std::int64_t, double, std::string>;

std::string value_to_string(const Value& v);

/// Three-way comparison for MiniCond: numbers compare numerically across
/// int/double, strings lexicographically, bools as false<true. Returns
/// nullopt for mixed non-numeric types.
std::optional<int> compare_values(const Value& a, const Value& b);

}  // namespace umlp

#endif
