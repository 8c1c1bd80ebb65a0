#include "totval/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace totval {

namespace {

// A distinguished point and its link: the sectors around it listed
// counterclockwise, as slot indices that the rotation permutes.
struct Point {
  CellKind kind;
  Int representative;
  std::vector<Int> link;
};

[[noreturn]] void oracle_failure(const std::string& what) {
  throw std::logic_error("polygon oracle: " + what);
}

}  // namespace

PolygonSurface PolygonSurface::build(Int n, Int p) {
  if (n < 3) throw ValidationError("polygon surface requires n >= 3");
  if (p < 1 || p > n - 1) throw ValidationError("polygon surface requires 1 <= p <= n - 1");
  PolygonSurface s;
  s.n_ = n;
  s.p_ = p;
  const Int slots = 2 * n;
  s.partner_.assign(static_cast<std::size_t>(slots), -1);
  for (Int i = 0; i < n; ++i) {
    const Int alpha = 2 * i + 1;
    const Int beta = 2 * mod(i - p, n);
    s.partner_[static_cast<std::size_t>(alpha)] = beta;
    s.partner_[static_cast<std::size_t>(beta)] = alpha;
  }
  for (Int e = 0; e < slots; ++e) {
    Int q = s.partner_[static_cast<std::size_t>(e)];
    if (q < 0 || q == e || s.partner_[static_cast<std::size_t>(q)] != e) {
      oracle_failure("edge pairing is not a fixed-point-free involution");
    }
  }

  // Going counterclockwise around a vertex, the sector at corner a is left
  // across edge a-1; the glued edge b starts at the next corner b.
  s.vertex_of_.assign(static_cast<std::size_t>(slots), -1);
  for (Int start = 0; start < slots; ++start) {
    if (s.vertex_of_[static_cast<std::size_t>(start)] >= 0) continue;
    const Int id = static_cast<Int>(s.cycles_.size());
    std::vector<Int> cycle;
    Int a = start;
    do {
      s.vertex_of_[static_cast<std::size_t>(a)] = id;
      cycle.push_back(a);
      a = s.partner_[static_cast<std::size_t>(mod(a - 1, slots))];
    } while (a != start);
    s.cycles_.push_back(std::move(cycle));
  }

  const Int chi = s.euler_characteristic();
  if (chi > 2 || mod(chi, 2) != 0) oracle_failure("Euler characteristic is odd or exceeds 2");
  return s;
}

Json PolygonSurface::dump() const {
  Json pairing = Json::array();
  for (Int e = 0; e < slot_count(); ++e) {
    if (e < edge_partner(e)) {
      Json pair = Json::array({e, edge_partner(e)});
      pairing.push_back(pair);
    }
  }
  return Json{{"n", n_},
              {"p", p_},
              {"euler_characteristic", euler_characteristic()},
              {"genus", genus()},
              {"edge_pairing", pairing},
              {"vertex_cycles", cycles_}};
}

std::vector<CellOrbit> oracle_orbits(const PolygonSurface& s, Int k) {
  if (k < 1 || k >= s.n()) throw ValidationError("oracle power must satisfy 1 <= k < n");
  const Int slots = s.slot_count();
  auto act = [&](Int slot, Int times) { return mod(slot - checked_mul(2 * k, times), slots); };

  // Order of the rotation power, by iterating its action on slots.
  Int order = 1;
  while (act(0, order) != 0) ++order;
  for (Int slot = 0; slot < slots; ++slot) {
    if (act(slot, order) != slot) oracle_failure("slot permutation order mismatch");
  }

  std::vector<Point> points;
  {
    Point face{CellKind::Face, 0, {}};
    for (Int c = 0; c < slots; ++c) face.link.push_back(c);
    points.push_back(std::move(face));
  }
  for (Int v = 0; v < s.vertex_count(); ++v) {
    points.push_back({CellKind::Vertex, v, s.vertex_cycles()[static_cast<std::size_t>(v)]});
  }
  for (Int e = 0; e < slots; ++e) {
    if (e < s.edge_partner(e)) points.push_back({CellKind::EdgeMidpoint, e, {e, s.edge_partner(e)}});
  }

  auto index_of = [&](CellKind kind, Int slot) -> std::size_t {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& pt = points[i];
      if (pt.kind != kind) continue;
      if (std::find(pt.link.begin(), pt.link.end(), slot) != pt.link.end()) return i;
    }
    oracle_failure("slot belongs to no point");
  };
  auto image = [&](std::size_t i, Int times) {
    const auto& pt = points[i];
    return index_of(pt.kind, act(pt.link.front(), times));
  };

  std::vector<bool> seen(points.size(), false);
  std::vector<CellOrbit> orbits;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (seen[i]) continue;
    Int period = 0;
    std::size_t j = i;
    do {
      seen[j] = true;
      j = image(j, 1);
      ++period;
    } while (j != i);
    if (order % period != 0) oracle_failure("orbit period does not divide the order");
    const Int isotropy = order / period;
    CellOrbit orbit{points[i].kind, points[i].representative, period, isotropy, std::nullopt};
    if (isotropy >= 2) {
      // The isotropy generator rotation^period permutes the link cyclically.
      const auto& link = points[i].link;
      const Int len = static_cast<Int>(link.size());
      const auto first = std::find(link.begin(), link.end(), act(link.front(), period));
      if (first == link.end()) oracle_failure("isotropy generator leaves the link");
      const Int shift = first - link.begin();
      for (Int a = 0; a < len; ++a) {
        if (act(link[static_cast<std::size_t>(a)], period) !=
            link[static_cast<std::size_t>(mod(a + shift, len))]) {
          oracle_failure("isotropy generator is not a rotation of the link");
        }
      }
      const Int clockwise = mod(len - shift, len);
      if (checked_mul(clockwise, isotropy) % len != 0) {
        oracle_failure("local rotation is not a multiple of 2pi/isotropy");
      }
      const Int mu = clockwise * isotropy / len;
      if (mu < 1 || gcd(mu, isotropy) != 1) oracle_failure("local rotation numerator is not a unit");
      orbit.valency = Valency::make(inverse_mod(mu, isotropy), isotropy);
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

TotalValency oracle_total_valency(const PolygonSurface& s, Int k) {
  auto orbits = oracle_orbits(s, k);
  std::vector<Valency> vs;
  Int order = 0;
  for (const auto& o : orbits) {
    if (o.kind == CellKind::Face) order = o.period * o.isotropy;
    if (o.valency) vs.push_back(*o.valency);
  }
  return TotalValency::make(s.genus(), order, std::move(vs));
}

}  // namespace totval
