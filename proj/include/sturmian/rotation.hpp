#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sturmian/cf_core.hpp"
#include "sturmian/interval.hpp"

namespace sturmian {

class CirclePoint {
 public:
  CirclePoint() = default;
  /// Reduces mod 1.
  explicit CirclePoint(const Rational& v) : value_(frac(v)) {}

  const Rational& value() const { return value_; }
  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  Rational value_{0};
};

/// 0/1 itinerary; bit i is 0 iff {x + iα} lies in [0, α).
struct Coding {
  std::string bits;

  std::size_t size() const { return bits.size(); }
  friend bool operator==(const Coding&, const Coding&) = default;
  friend auto operator<=>(const Coding&, const Coding&) = default;
};

struct Atom {
  CircleInterval interval;
  Coding coding;
};

// The partition P_j into cylinders of length j+1, in x-coordinates.
// Boundaries are {-iα} for -1 <= i <= j.
struct AtomPartition {
  std::int64_t j = 0;
  std::vector<Rational> boundaries;
  std::vector<Atom> atoms;
};

CirclePoint rotate(const Alpha& alpha, const CirclePoint& x, std::int64_t k);

Coding code(const Alpha& alpha, const CirclePoint& x, std::int64_t len);

AtomPartition atoms(const Alpha& alpha, std::int64_t j);

/// Brute force: the atom of P_j that the next boundary {-(j+1)α} splits.
/// For an exact rational (no tail) the last step q_n - 2 is excluded.
CircleInterval oracle_V(const Alpha& alpha, std::int64_t j);

/// Coding c_0..c_j of the atom returned by oracle_V.
Coding right_special_word(const Alpha& alpha, std::int64_t j);

/// Incremental oracle: keeps the boundary set of P_j in a sorted set so that
/// successive steps cost O(log j) each.
class OracleSweep {
 public:
  explicit OracleSweep(const Alpha& alpha);

  std::int64_t step() const { return step_; }
  std::size_t atom_count() const { return boundaries_.size(); }
  /// V at the current step.
  CircleInterval undetermined() const;
  void advance();

 private:
  Rational alpha_value_;
  std::int64_t horizon_;
  bool periodic_;
  std::int64_t step_ = 0;
  std::set<Rational> boundaries_;
  Rational next_;
};

/// CSV rows j,left_num,left_den,right_num,right_den,coding (with header).
std::string atoms_csv(const AtomPartition& partition);

}  // namespace sturmian
