#pragma once

#include <cstddef>

#include <json.hpp>

#include "cantor/decimal.hpp"

namespace cantor {

/// {"int": "<signed integer part>", "digits": "<first `digits` fractional digits>"}.
/// A negative value with zero integer part is written with int "-0".
nlohmann::json decimal_to_json(const DecimalStream& s, std::size_t digits);

/// Inverse of decimal_to_json; the digit prefix is followed by an all-0 tail.
/// Throws ParseError or DomainError on malformed fields.
DecimalStream decimal_from_json(const nlohmann::json& j);

}  // namespace cantor
