#pragma once

#include <span>
#include <string>
#include <vector>

#include "sturmian/exact.hpp"

namespace sturmian {

class IntervalSet;

// Half-open arc [left, left + length) on the circle [0,1).  An arc may wrap
// through 0, in which case right() < left().  Length 1 is the whole circle.
class CircleInterval {
 public:
  CircleInterval() = default;
  /// Arc running forward from `left` to `right`; wraps when right < left,
  /// and is empty when they are equal.
  static CircleInterval from_endpoints(const Rational& left, const Rational& right);
  static CircleInterval from_start_length(const Rational& left, const Rational& length);
  static CircleInterval full();

  const Rational& left() const { return left_; }
  Rational right() const;
  const Rational& length() const { return length_; }
  bool wraps() const { return left_ + length_ > 1; }
  bool empty() const { return length_ == 0; }

  bool contains(const Rational& x) const;
  CircleInterval rotated(const Rational& shift) const;
  IntervalSet to_set() const;

  std::string to_string() const;
  friend bool operator==(const CircleInterval& a, const CircleInterval& b);

 private:
  Rational left_{0};
  Rational length_{0};
};

// Finite disjoint union of half-open pieces [lo, hi) of [0,1), kept sorted
// with adjacent pieces merged, so equal sets compare equal.
class IntervalSet {
 public:
  struct Piece {
    Rational lo;
    Rational hi;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  IntervalSet() = default;
  static IntervalSet from_arcs(std::span<const CircleInterval> arcs);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Rational measure() const;
  bool contains(const Rational& x) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  IntervalSet complement() const;
  bool is_subset_of(const IntervalSet& other) const;

  std::string to_string() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  static IntervalSet normalized(std::vector<Piece> pieces);
  std::vector<Piece> pieces_;
};

/// True when no two of the arcs share a point (exact).
bool pairwise_disjoint(std::span<const CircleInterval> arcs);

/// Exact measure of the overlap of two arcs.
Rational overlap(const CircleInterval& a, const CircleInterval& b);

}  // namespace sturmian
