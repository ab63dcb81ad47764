#pragma once

#include <stdexcept>
#include <string>

namespace ivopt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInterval : Error { using Error::Error; };
struct DivisorContainsZero : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct ZeroDirection : Error { using Error::Error; };
struct DegenerateBracket : Error { using Error::Error; };
struct OracleContractViolation : Error { using Error::Error; };
struct NonFiniteIterate : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace ivopt
