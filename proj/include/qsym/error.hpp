#pragma once

// Error taxonomy for the whole library.  Every failure that a caller can
// meaningfully react to carries one of the codes below; the CLI maps them
// to exit status 1 (domain error) as opposed to 2 (usage/config error).

#include <stdexcept>
#include <string>

namespace qsym {

enum class Err {
  NON_FINITE_TYPE,
  PAIRING_MISMATCH,
  THETA_NOT_INVOLUTION,
  TAU_NOT_DIAGRAM_AUTOMORPHISM,
  NOT_DOMINANT,
  UNKNOWN_GENERATOR,
  UNKNOWN_INDEX,
  SINGULAR_SYSTEM,
  TRIANGULARITY_FAILURE,
  BASIS_NOT_CELL_COMPATIBLE,
  LATTICE_VIOLATION,
  NOT_EQUIVARIANT,
  NOT_SPHERICAL,
  NO_MORPHISM,
  BASIS_SPAN_MISMATCH,
  CORRECTION_NOT_INTEGRAL,
  NOT_BASED,
  TIER_UNSUPPORTED,
  BOUND_TOO_SMALL,
  CHARACTER_MISMATCH,
  CONFIG_INVALID,
  INTERNAL,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, Err code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace qsym
