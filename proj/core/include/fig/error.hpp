#pragma once

#include <stdexcept>
#include <string>

namespace fig {

enum class Errc {
  NonPrime,
  EvenCharacteristic,
  ZeroInput,
  DimensionMismatch,
  DegenerateSubspace,
  AmbientTooSmall,
  UnrealizableHall,
  NotAFlag,
  TypeClash,
  DiagramPreconditionFailed,
  DisconnectedGraph,
  DomainError,
  IndexTooLarge,
  NotRepresentatives,
  HypothesisFailed,
  NotAnAction,
  NotAChamber,
  NotGeometric,
  NotIsomorphic,
  SearchExhausted,
  TransporterNotFound,
  CaseIIEncountered,
  CapExceeded,
  TooLarge,
  ResidueNotVerified,
  ConfigError,
};

const char* errc_name(Errc c);

/// Library-wide exception; carries a machine-checkable code plus a message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fig
