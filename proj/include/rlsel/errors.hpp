#pragma once

#include <stdexcept>

namespace rlsel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInputError : Error { using Error::Error; };
struct InvalidOrderError : Error { using Error::Error; };
struct TaggerContractViolation : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct CheckpointError : Error { using Error::Error; };
struct InsufficientSamplesError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };
struct CacheError : Error { using Error::Error; };
struct InvalidBatchError : Error { using Error::Error; };
struct InvalidInputError : Error { using Error::Error; };

}  // namespace rlsel
