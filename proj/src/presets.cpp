#include "qsym/presets.hpp"

namespace qsym {

std::vector<std::string> preset_names() { return {"A1-AI", "A1xA1-diag", "A2-AI"}; }

RootDatumDesc preset_desc(const std::string& name) {
  RootDatumDesc d;
  if (name == "A1-AI") {
    d.rank = 1;
    d.cartan = {{2}};
    d.pairing = {{1}};
    d.alpha = {{2}};
    d.alpha_vee = {{1}};
    return d;
  }
  if (name == "A1xA1-diag") {
    d.rank = 2;
    d.cartan = {{2, 0}, {0, 2}};
    d.pairing = {{1, 0}, {0, 1}};
    d.alpha = {{2, 0}, {0, 2}};
    d.alpha_vee = {{1, 0}, {0, 1}};
    return d;
  }
  if (name == "A2-AI") {
    // X in fundamental-weight coordinates
    d.rank = 2;
    d.cartan = {{2, -1}, {-1, 2}};
    d.pairing = {{1, 0}, {0, 1}};
    d.alpha = {{2, -1}, {-1, 2}};
    d.alpha_vee = {{1, 0}, {0, 1}};
    return d;
  }
  fail(Err::CONFIG_INVALID, "unknown preset '" + name + "'");
}

IRootDatum preset_idatum(const std::string& name) {
  RootDatum base = RootDatum::validate(preset_desc(name));
  if (name == "A1-AI") return IRootDatum::validate(std::move(base), {}, {0});
  if (name == "A1xA1-diag") return IRootDatum::validate(std::move(base), {}, {1, 0});
  if (name == "A2-AI") return IRootDatum::validate(std::move(base), {}, {0, 1});
  fail(Err::CONFIG_INVALID, "unknown preset '" + name + "'");
}

}  // namespace qsym
