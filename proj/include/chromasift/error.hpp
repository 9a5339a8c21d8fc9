#pragma once

#include <stdexcept>
#include <string>

namespace chromasift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct DecodeError : Error {
    using Error::Error;
};
struct InvalidStride : Error {
    using Error::Error;
};
struct InsufficientPoints : Error {
    using Error::Error;
};
struct NonFiniteInput : Error {
    using Error::Error;
};
struct TooFewFrames : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct InvalidRecipe : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

} // namespace chromasift
