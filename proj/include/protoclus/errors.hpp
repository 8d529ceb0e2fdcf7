#pragma once

#include <stdexcept>
#include <string>

namespace protoclus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};
struct ZeroVectorError : Error {
  using Error::Error;
};
struct NonFiniteError : Error {
  using Error::Error;
};
struct LabelError : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};
struct SampleCountError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct SplitError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct EvalError : Error {
  using Error::Error;
};

}  // namespace protoclus
