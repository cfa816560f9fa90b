#pragma once

#include <stdexcept>
#include <string>

namespace cluster {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct DivisibilityError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BijectionError : Error { using Error::Error; };
struct StructuralError : Error { using Error::Error; };
struct IncompletenessError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };

}  // namespace cluster
