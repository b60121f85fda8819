#pragma once

#include <stdexcept>
#include <string>

namespace flagorbits {

// Domain error codes shared by all modules.  CLI maps DomainError to exit
// code 2; anything else (parse/IO) exits 1.
enum class errc {
  division_by_zero,
  tower_mismatch,
  not_real,
  not_positive,
  ambient_mismatch,
  form_unavailable,
  singular,
  out_of_range,
  unsigned_clan,
  invalid_param,
  not_isotropic,
  classification_inconsistent,
  dimension_mismatch,
  not_in_intersection,
  negative_pivot,
  unaligned_window,
  horizon_exceeded,
  internal
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::tower_mismatch: return "TowerMismatch";
    case errc::not_real: return "NotReal";
    case errc::not_positive: return "NotPositive";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::form_unavailable: return "FormUnavailable";
    case errc::singular: return "Singular";
    case errc::out_of_range: return "OutOfRange";
    case errc::unsigned_clan: return "UnsignedClan";
    case errc::invalid_param: return "InvalidParam";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::classification_inconsistent: return "ClassificationInconsistent";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_in_intersection: return "NotInIntersection";
    case errc::negative_pivot: return "NegativePivot";
    case errc::unaligned_window: return "UnalignedWindow";
    case errc::horizon_exceeded: return "HorizonExceeded";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace flagorbits
