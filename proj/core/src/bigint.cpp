#include "polyomega/bigint.hpp"

#include "polyomega/error.hpp"

#include <cctype>

namespace polyomega {

BigInt parse_bigint(const std::string &text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw ParseError("expected an integer, got '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("expected an integer, got '" + text + "'");
    // GMP rejects a leading '+'.
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

} // namespace polyomega
