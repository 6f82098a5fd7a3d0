#pragma once

#include <stdexcept>
#include <string>

namespace lya {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructureError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotNijenhuis : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
struct NotMaurerCartan : Error { using Error::Error; };
struct NotRotaBaxter : Error { using Error::Error; };
struct NotVerifiedDeformation : Error { using Error::Error; };
struct ResourceCapExceeded : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace lya
