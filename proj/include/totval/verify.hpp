// Golden-table checks: the torus census, the commuting-involution group
// list, the h_{4g+2,2g+1} sweep and the centralizer trichotomy.
//
// Each check recomputes its table from the library and compares it with an
// embedded expectation. `diff` holds one line per discrepancy:
//   "- ..." expected but missing, "+ ..." produced but unexpected,
//   "~ ..." present on both sides with a differing field.
#pragma once

#include <string>
#include <vector>

#include "totval/format.hpp"

namespace totval {

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> diff;
  Json json;
  std::string text;
};

VerifyResult verify_brto();
/// companion_g_max bounds the involution-companion search (>= 2).
VerifyResult verify_irr1(Int companion_g_max = 10);
VerifyResult verify_rotation_sweep(Int g_max = 50);
VerifyResult verify_centralizer(Int g_max = 10);

/// Dispatch by name: "brto", "irr1", "lemma-inv", "centralizer". bound <= 0
/// selects the default. Throws ValidationError for an unknown name.
VerifyResult run_verify(const std::string& name, Int bound = 0);

}  // namespace totval
