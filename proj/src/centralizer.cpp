#include <algorithm>
#include <stdexcept>

#include "totval/enumerator.hpp"

namespace totval {

std::string to_string(CentralizerKind kind) {
  switch (kind) {
    case CentralizerKind::Distinct: return "DISTINCT";
    case CentralizerKind::AllEqual: return "ALL_EQUAL";
    case CentralizerKind::Pair: return "PAIR";
  }
  return "?";
}

CentralizerStructure centralizer_structure(const TotalValency& t) {
  if (t.genus() < 1) throw ValidationError("centralizer_structure: genus must be >= 1");
  if (!is_irreducible(t)) {
    throw ValidationError("centralizer_structure: map is not irreducible");
  }
  const Int n = t.order();
  CentralizerStructure out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& v = t.valencies()[i];
    out.numerators[i] = v.theta() * (n / v.lambda());
  }
  auto sorted = out.numerators;
  std::sort(sorted.begin(), sorted.end());
  const bool first_pair = sorted[0] == sorted[1];
  const bool second_pair = sorted[1] == sorted[2];

  if (first_pair && second_pair) {
    // Three equal valencies force 3 theta = n or 2n, hence n = 3 and g = 1.
    if (t.genus() != 1) {
      throw std::logic_error("three equal valencies on a surface of genus " +
                             std::to_string(t.genus()));
    }
    out.kind = CentralizerKind::AllEqual;
    out.enlarged_group = "genus 1, h_{3,1} type";
    return out;
  }
  if (!first_pair && !second_pair) {
    out.kind = CentralizerKind::Distinct;
    out.enlarged_group = "<f>";
    return out;
  }

  // theta_1 = theta_2 != theta_3: f is a coprime power of h_{n,1}.
  out.kind = CentralizerKind::Pair;
  const Int g = t.genus();
  out.parity = n % 2 == 1 ? Parity::Odd : Parity::Even;
  if (n != standard_order_for_genus(g, *out.parity)) {
    throw std::logic_error("repeated valency with order " + std::to_string(n) +
                           " not of the form 2g+1 or 2g+2");
  }
  if (*out.parity == Parity::Odd) {
    out.enlarged_group =
        "<h_{" + std::to_string(4 * g + 2) + "," + std::to_string(2 * g + 1) + "}>";
  } else {
    out.enlarged_group = "<h_{" + std::to_string(2 * g + 2) + ",1}, I>";
  }
  return out;
}

}  // namespace totval
