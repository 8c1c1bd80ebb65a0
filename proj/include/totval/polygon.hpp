// Brute-force ground truth for h_{n,p}: the 2n-gon with alpha_i glued to
// beta_j whenever i - j = p (mod n), as a combinatorial cell complex.
//
// Slot layout. The polygon's corners and edges are numbered 0..2n-1
// counterclockwise; edge e runs from corner e to corner e+1. The edges
// alternate beta_0, alpha_0, beta_1, alpha_1, ... so alpha_i = edge 2i+1 and
// beta_j = edge 2j. Paired edges are glued with opposite boundary
// orientation, which makes the surface orientable. The clockwise rotation by
// 2pi/n sends corner (or edge) s to s - 2.
//
// Everything here is recomputed from the slot combinatorics on each call and
// shares no formula with valency.cpp.
#pragma once

#include <optional>
#include <vector>

#include "totval/format.hpp"
#include "totval/valency.hpp"

namespace totval {

class PolygonSurface {
 public:
  /// Requires n >= 3 and 1 <= p <= n - 1.
  static PolygonSurface build(Int n, Int p);

  Int n() const { return n_; }
  Int p() const { return p_; }
  Int slot_count() const { return 2 * n_; }
  /// Fixed-point-free involution on edge slots.
  Int edge_partner(Int edge) const { return partner_[static_cast<std::size_t>(edge)]; }
  /// Vertex classes; each lists its corners in counterclockwise order around the vertex.
  const std::vector<std::vector<Int>>& vertex_cycles() const { return cycles_; }
  Int vertex_of_corner(Int corner) const { return vertex_of_[static_cast<std::size_t>(corner)]; }

  Int vertex_count() const { return static_cast<Int>(cycles_.size()); }
  Int edge_count() const { return n_; }
  Int face_count() const { return 1; }
  Int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
  Int genus() const { return (2 - euler_characteristic()) / 2; }

  /// Debug dump of the pairing and corner cycles.
  Json dump() const;

 private:
  PolygonSurface() = default;
  Int n_ = 0;
  Int p_ = 0;
  std::vector<Int> partner_;
  std::vector<std::vector<Int>> cycles_;
  std::vector<Int> vertex_of_;
};

enum class CellKind { Face, Vertex, EdgeMidpoint };

struct CellOrbit {
  CellKind kind;
  Int representative;  // face: 0, vertex: class index, edge: lowest edge slot
  Int period;
  Int isotropy;
  std::optional<Valency> valency;  // empty for free orbits
};

/// Orbits of the distinguished points (face centre, vertices, edge midpoints)
/// under rotation^k, with local rotation data read off the corner cycles.
/// Requires 1 <= k < n.
std::vector<CellOrbit> oracle_orbits(const PolygonSurface& s, Int k);

TotalValency oracle_total_valency(const PolygonSurface& s, Int k);

}  // namespace totval
