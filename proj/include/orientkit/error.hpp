#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orientkit {

/// Failure categories surfaced by the library. The CLI maps every kind to
/// exit status 2 (precondition / recognition failure).
enum class ErrorKind {
  InvalidGraph,
  InvalidOrientation,
  PreconditionViolated,
  NotChordal,
  NotSplit,
  NotCobipartite,
  NotUniformBlock,
  NotStrip,
  NotApplicable,
  UnsupportedK,
  BadCompensation,
  BadShape,
  BadParams,
  BadK,
  NotCubic,
  NotACover,
  DegreeConditionViolated,
  HypothesisViolated,
  EmptyInput,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidOrientation: return "InvalidOrientation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotCobipartite: return "NotCobipartite";
    case ErrorKind::NotUniformBlock: return "NotUniformBlock";
    case ErrorKind::NotStrip: return "NotStrip";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::BadCompensation: return "BadCompensation";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::DegreeConditionViolated: return "DegreeConditionViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace orientkit
