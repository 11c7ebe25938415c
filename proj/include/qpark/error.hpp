#pragma once

#include <stdexcept>
#include <string>

namespace qpark {

enum class Errc {
  NonExactDivision,
  DomainError,
  Unsupported,
  SystemMismatch,
  WrongFamily,
  NotCentral,
  WeightMismatch,
  TooLarge,
  NotClassFunction,
  InconsistentCalibration,
  NonPolynomialResult,
  InvalidInput,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace qpark
