#pragma once

#include <stdexcept>
#include <string>

namespace metcomp {

// Structured failure reasons. Every throw site uses one of these so the CLI
// can report the name and pick the right exit code.
enum class Err {
  MixedRings,
  WrongRing,
  UnsupportedField,
  ProjectiveArgument,
  InjectiveArgument,
  NonIntertwining,
  NotRepresentable,
  NotCountablyGenerated,
  InvalidSchedule,
  UnverifiableWitness,
  WitnessLost,
  UnsupportedStart,
  UnsupportedFamily,
  UnsupportedRing,
  BoundsExceeded,
  ParseError,
  InvalidDescriptor,
  NotSplitOverField,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::MixedRings: return "MixedRings";
    case Err::WrongRing: return "WrongRing";
    case Err::UnsupportedField: return "UnsupportedField";
    case Err::ProjectiveArgument: return "ProjectiveArgument";
    case Err::InjectiveArgument: return "InjectiveArgument";
    case Err::NonIntertwining: return "NonIntertwining";
    case Err::NotRepresentable: return "NotRepresentable";
    case Err::NotCountablyGenerated: return "NotCountablyGenerated";
    case Err::InvalidSchedule: return "InvalidSchedule";
    case Err::UnverifiableWitness: return "UnverifiableWitness";
    case Err::WitnessLost: return "WitnessLost";
    case Err::UnsupportedStart: return "UnsupportedStart";
    case Err::UnsupportedFamily: return "UnsupportedFamily";
    case Err::UnsupportedRing: return "UnsupportedRing";
    case Err::BoundsExceeded: return "BoundsExceeded";
    case Err::ParseError: return "ParseError";
    case Err::InvalidDescriptor: return "InvalidDescriptor";
    case Err::NotSplitOverField: return "NotSplitOverField";
  }
  return "Unknown";
}

class MathError : public std::runtime_error {
 public:
  MathError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& msg) {
  throw MathError(code, msg);
}

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) raise(code, msg);
}

}  // namespace metcomp
