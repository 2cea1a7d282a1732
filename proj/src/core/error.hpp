#pragma once

#include <stdexcept>
#include <string>

namespace convexo {

// Failure categories surfaced through the C API as status codes.
enum class Err {
  Schema,
  Invariant,
  ZeroDirection,
  NumericalDegeneracy,
  DegenerateBody,
  DimensionMismatch,
  BadQuadrature,
  Numeric,
  AtomOutsideQ,
  BadDecomposition,
  NegativeScale,
  UnsupportedDegeneracy,
  NotAlexandrov,
  NoConvergence,
  InfeasibleInput,
  Usage,
};

class CvxError : public std::runtime_error {
 public:
  CvxError(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::Schema: return "SchemaError";
    case Err::Invariant: return "InvariantError";
    case Err::ZeroDirection: return "ZeroDirection";
    case Err::NumericalDegeneracy: return "NumericalDegeneracy";
    case Err::DegenerateBody: return "DegenerateBody";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::BadQuadrature: return "BadQuadrature";
    case Err::Numeric: return "NumericError";
    case Err::AtomOutsideQ: return "AtomOutsideQ";
    case Err::BadDecomposition: return "BadDecomposition";
    case Err::NegativeScale: return "NegativeScale";
    case Err::UnsupportedDegeneracy: return "UnsupportedDegeneracy";
    case Err::NotAlexandrov: return "NotAlexandrov";
    case Err::NoConvergence: return "NoConvergence";
    case Err::InfeasibleInput: return "InfeasibleInput";
    case Err::Usage: return "UsageError";
  }
  return "UnknownError";
}

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw CvxError(kind, msg); }

}  // namespace convexo
