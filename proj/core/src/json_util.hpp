#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/error.hpp"

#include "json.hpp"

#include <limits>
#include <string>

namespace polyomega::detail {

// Integers that fit in int64 are written as JSON numbers, larger ones as decimal strings.
inline nlohmann::json int_to_json(const BigInt &x) {
    if (x.fits_slong_p() && sizeof(long) >= 8)
        return static_cast<long long>(x.get_si());
    return x.get_str();
}

inline BigInt int_from_json(const nlohmann::json &j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return BigInt(std::to_string(j.get<unsigned long long>()));
        return BigInt(std::to_string(j.get<long long>()));
    }
    if (j.is_string())
        return parse_bigint(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

} // namespace polyomega::detail
