#include "sturmian/interval.hpp"

#include <algorithm>

namespace sturmian {

// -- CircleInterval ----------------------------------------------------------

CircleInterval CircleInterval::from_endpoints(const Rational& left, const Rational& right) {
  CircleInterval arc;
  arc.left_ = frac(left);
  Rational r = frac(right);
  Rational len = r - arc.left_;
  if (len < 0) len += 1;
  len.canonicalize();
  arc.length_ = len;
  return arc;
}

CircleInterval CircleInterval::from_start_length(const Rational& left, const Rational& length) {
  if (length < 0 || length > 1) throw DomainError("arc length must lie in [0,1]");
  CircleInterval arc;
  arc.left_ = length == 1 ? Rational(0) : frac(left);
  arc.length_ = length;
  return arc;
}

CircleInterval CircleInterval::full() { return from_start_length(Rational(0), Rational(1)); }

Rational CircleInterval::right() const { return frac(left_ + length_); }

bool CircleInterval::contains(const Rational& x) const {
  Rational offset = x - left_;
  if (offset < 0) offset += 1;
  return offset < length_;
}

CircleInterval CircleInterval::rotated(const Rational& shift) const {
  return from_start_length(left_ + shift, length_);
}

IntervalSet CircleInterval::to_set() const {
  CircleInterval self = *this;
  return IntervalSet::from_arcs(std::span<const CircleInterval>(&self, 1));
}

std::string CircleInterval::to_string() const {
  return "[" + sturmian::to_string(left_) + ", " + sturmian::to_string(right()) + ")" +
         (wraps() ? " (wraps)" : "");
}

bool operator==(const CircleInterval& a, const CircleInterval& b) {
  if (a.length_ != b.length_) return false;
  if (a.length_ == 0 || a.length_ == 1) return true;
  return a.left_ == b.left_;
}

// -- IntervalSet -------------------------------------------------------------

IntervalSet IntervalSet::normalized(std::vector<Piece> pieces) {
  std::erase_if(pieces, [](const Piece& p) { return !(p.lo < p.hi); });
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (auto& p : pieces) {
    if (!out.pieces_.empty() && p.lo <= out.pieces_.back().hi) {
      if (out.pieces_.back().hi < p.hi) out.pieces_.back().hi = p.hi;
    } else {
      out.pieces_.push_back(std::move(p));
    }
  }
  return out;
}

IntervalSet IntervalSet::from_arcs(std::span<const CircleInterval> arcs) {
  std::vector<Piece> pieces;
  pieces.reserve(arcs.size() + 1);
  for (const auto& arc : arcs) {
    if (arc.empty()) continue;
    Rational end = arc.left() + arc.length();
    if (end <= 1) {
      pieces.push_back({arc.left(), end});
    } else {
      pieces.push_back({arc.left(), Rational(1)});
      pieces.push_back({Rational(0), end - 1});
    }
  }
  return normalized(std::move(pieces));
}

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const auto& p : pieces_) total += p.hi - p.lo;
  return total;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const Piece& p) { return v < p.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return x < it->hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Piece> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return normalized(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Piece> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const Piece& a = pieces_[i];
    const Piece& b = other.pieces_[j];
    const Rational& lo = a.lo < b.lo ? b.lo : a.lo;
    const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return normalized(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  std::vector<Piece> out;
  Rational cursor(0);
  for (const auto& p : pieces_) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return normalized(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const { return intersect(other.complement()); }

bool IntervalSet::is_subset_of(const IntervalSet& other) const { return subtract(other).empty(); }

std::string IntervalSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " u ";
    out += "[" + sturmian::to_string(pieces_[i].lo) + ", " + sturmian::to_string(pieces_[i].hi) + ")";
  }
  return out + "}";
}

bool pairwise_disjoint(std::span<const CircleInterval> arcs) {
  std::vector<IntervalSet::Piece> pieces;
  for (const auto& arc : arcs) {
    if (arc.empty()) continue;
    Rational end = arc.left() + arc.length();
    if (end <= 1) {
      pieces.push_back({arc.left(), end});
    } else {
      pieces.push_back({arc.left(), Rational(1)});
      pieces.push_back({Rational(0), end - 1});
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo < pieces[i - 1].hi) return false;
  }
  return true;
}

Rational overlap(const CircleInterval& a, const CircleInterval& b) {
  return a.to_set().intersect(b.to_set()).measure();
}

}  // namespace sturmian
