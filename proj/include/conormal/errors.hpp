#pragma once

#include <stdexcept>
#include <string>

namespace conormal {

enum class Err {
  NotClosed,
  NotAxisAligned,
  CollinearSegments,
  TooFewCorners,
  DegenerateSample,
  ZeroCovector,
  OddCuspImbalance,
  IllegalSite,
  BadN,
  UnknownName,
  BadParams,
  ComponentMismatch,
  UngradableFront,
  CyclicGrading,
  NotAnAugmentation,
  InvalidFront,
};

/// Rejected input: malformed curve/front data, bad CLI parameters, etc.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

/// A broken internal invariant (d^2 != 0, degenerate front event order, ...).
/// Reaching this signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotClosed: return "NotClosed";
    case Err::NotAxisAligned: return "NotAxisAligned";
    case Err::CollinearSegments: return "CollinearSegments";
    case Err::TooFewCorners: return "TooFewCorners";
    case Err::DegenerateSample: return "DegenerateSample";
    case Err::ZeroCovector: return "ZeroCovector";
    case Err::OddCuspImbalance: return "OddCuspImbalance";
    case Err::IllegalSite: return "IllegalSite";
    case Err::BadN: return "BadN";
    case Err::UnknownName: return "UnknownName";
    case Err::BadParams: return "BadParams";
    case Err::ComponentMismatch: return "ComponentMismatch";
    case Err::UngradableFront: return "UngradableFront";
    case Err::CyclicGrading: return "CyclicGrading";
    case Err::NotAnAugmentation: return "NotAnAugmentation";
    case Err::InvalidFront: return "InvalidFront";
  }
  return "Unknown";
}

}  // namespace conormal
