#include "qsym/error.hpp"

namespace qsym {

const char* err_name(Err e) {
  switch (e) {
    case Err::NON_FINITE_TYPE: return "NON_FINITE_TYPE";
    case Err::PAIRING_MISMATCH: return "PAIRING_MISMATCH";
    case Err::THETA_NOT_INVOLUTION: return "THETA_NOT_INVOLUTION";
    case Err::TAU_NOT_DIAGRAM_AUTOMORPHISM: return "TAU_NOT_DIAGRAM_AUTOMORPHISM";
    case Err::NOT_DOMINANT: return "NOT_DOMINANT";
    case Err::UNKNOWN_GENERATOR: return "UNKNOWN_GENERATOR";
    case Err::UNKNOWN_INDEX: return "UNKNOWN_INDEX";
    case Err::SINGULAR_SYSTEM: return "SINGULAR_SYSTEM";
    case Err::TRIANGULARITY_FAILURE: return "TRIANGULARITY_FAILURE";
    case Err::BASIS_NOT_CELL_COMPATIBLE: return "BASIS_NOT_CELL_COMPATIBLE";
    case Err::LATTICE_VIOLATION: return "LATTICE_VIOLATION";
    case Err::NOT_EQUIVARIANT: return "NOT_EQUIVARIANT";
    case Err::NOT_SPHERICAL: return "NOT_SPHERICAL";
    case Err::NO_MORPHISM: return "NO_MORPHISM";
    case Err::BASIS_SPAN_MISMATCH: return "BASIS_SPAN_MISMATCH";
    case Err::CORRECTION_NOT_INTEGRAL: return "CORRECTION_NOT_INTEGRAL";
    case Err::NOT_BASED: return "NOT_BASED";
    case Err::TIER_UNSUPPORTED: return "TIER_UNSUPPORTED";
    case Err::BOUND_TOO_SMALL: return "BOUND_TOO_SMALL";
    case Err::CHARACTER_MISMATCH: return "CHARACTER_MISMATCH";
    case Err::CONFIG_INVALID: return "CONFIG_INVALID";
    case Err::INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace qsym
