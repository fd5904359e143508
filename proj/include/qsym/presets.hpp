#pragma once

// Shipped ı-root data at desk scale.  All three have I_bullet empty:
//   A1-AI       split rank one (SL2, K = SO2)
//   A1xA1-diag  the diagonal pair (SL2 x SL2, K = SL2)
//   A2-AI       split rank two (SL3, K = SO3)

#include <string>
#include <vector>

#include "qsym/root_datum.hpp"

namespace qsym {

std::vector<std::string> preset_names();
RootDatumDesc preset_desc(const std::string& name);
IRootDatum preset_idatum(const std::string& name);

}  // namespace qsym
