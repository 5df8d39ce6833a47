#pragma once

#include <stdexcept>
#include <string>

namespace nonconv {

enum class Errc {
  NotStochastic,
  NotIrreducible,
  Periodic,
  InvalidModel,
  UnsupportedModel,
  TupleSpaceTooLarge,
  ArityMismatch,
  TrajectoryTooShort,
  InsufficientPath,
  DegenerateVariance,
  TailNotConverged,
  NotPositiveSemidefinite,
  BadGrid,
  TooFewSamples,
  ZeroMassState,
  StateSpaceTooLarge,
  ParameterGateViolated,
  ScheduleTooShort,
  ConfigInvalid,
  UnknownEntity,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace nonconv
