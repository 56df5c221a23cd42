#include "vlaser/model/params.hpp"

#include <cmath>

namespace vlaser {

namespace {
constexpr double two_pi = 2.0 * 3.14159265358979323846;
}

const std::vector<AtomPreset>& presets() {
  static const std::vector<AtomPreset> table = {
      // 1S0 ground, 1P1 broad (461 nm), 3P1 narrow (689 nm)
      AtomPreset{"Sr88", 4266.0, two_pi * 7.5e3, two_pi * 32.0e6, 88.0, 689.0e-9, 461.0e-9,
                 two_pi * 435.0e12},
      // same level scheme in Yb: 1P1 (399 nm) broad, 3P1 (556 nm) narrow
      AtomPreset{"Yb174", 160.0, two_pi * 182.0e3, two_pi * 29.1e6, 174.0, 556.0e-9, 399.0e-9,
                 two_pi * 539.0e12},
  };
  return table;
}

const AtomPreset& preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  raise("unknown preset '", name, "' (known: ", known, ")");
}

}  // namespace vlaser
