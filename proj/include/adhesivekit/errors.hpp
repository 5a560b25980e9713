#pragma once

#include <stdexcept>
#include <string>

namespace adk {

// Failure conditions surfaced by the library. The CLI maps these to exit
// codes: invalid values / mismatched data -> 2, missing capability or unknown
// category -> 3, everything else is an ordinary negative result (exit 1).
enum class Err {
  DomainMismatch,
  NotSimple,
  NotMono,
  UnknownElement,
  ArityMismatch,
  TargetNotSingleton,
  CapabilityMissing,
  UnknownCategory,
  NotRegularMono,
  NoPushoutWitness,
  InsufficientSignature,
  NonCommuting,
  BudgetExceeded,
  InvalidValue,
  ComponentColimitFailed,
  NoPushout,
  NoComplement,
  Internal,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Err c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace adk
