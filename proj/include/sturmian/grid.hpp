#pragma once

#include <cstdint>

#include "sturmian/cf_core.hpp"
#include "sturmian/interval.hpp"

namespace sturmian {

// Exact integer coordinates for the orbit of a rational α = P/Q.
//
// Every orbit point {mα} is g/Q with g = mP mod Q, and every arc the
// targets machinery produces has such endpoints.  A rational x (not
// necessarily on the grid) lies in the arc [s/Q, (s+L)/Q) mod 1 iff
// floor(xQ) lies in the integer arc [s, s+L) mod Q, so sweeps run entirely on
// 128-bit integers without loss of exactness.
using GridInt = __int128;

struct GridArc {
  GridInt start = 0;
  GridInt length = 0;
};

class OrbitGrid {
 public:
  explicit OrbitGrid(const Alpha& alpha);

  GridInt modulus() const { return q_; }
  GridInt step() const { return p_; }

  GridInt reduce(GridInt v) const {
    v %= q_;
    return v < 0 ? v + q_ : v;
  }
  /// Grid index of {mα}.
  GridInt orbit(std::int64_t m) const;
  GridInt orbit(const BigInt& m) const;

  /// floor(xQ) for x in [0,1).
  GridInt floor_index(const Rational& x) const;
  /// Grid index of a rational that must lie exactly on the grid.
  GridInt exact_index(const Rational& x) const;

  bool contains(const GridArc& arc, GridInt g) const {
    GridInt d = g - arc.start;
    if (d < 0) d += q_;
    return d < arc.length;
  }
  GridArc shifted(const GridArc& arc, GridInt by) const { return {reduce(arc.start + by), arc.length}; }

  Rational to_rational(GridInt g) const;
  CircleInterval to_interval(const GridArc& arc) const;
  GridArc from_interval(const CircleInterval& arc) const;

 private:
  GridInt mulmod(GridInt a, GridInt b) const;

  GridInt q_ = 1;
  GridInt p_ = 0;
  BigInt q_big_;
  BigInt p_big_;
};

GridInt to_grid_int(const BigInt& v);
BigInt to_bigint(GridInt v);

/// Overlap length of two grid arcs.
GridInt grid_overlap(const OrbitGrid& grid, const GridArc& a, const GridArc& b);

}  // namespace sturmian
