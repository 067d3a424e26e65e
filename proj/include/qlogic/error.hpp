#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Malformed textual input. `position` is 1-based (0 when not applicable).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = 0)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(const std::string& context, std::size_t expected, std::size_t got)
        : std::invalid_argument(context + ": dimension mismatch (expected " +
                                std::to_string(expected) + ", got " + std::to_string(got) + ")") {}
};

} // namespace qlogic
