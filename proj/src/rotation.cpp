#include "sturmian/rotation.hpp"

#include <algorithm>
#include <sstream>

namespace sturmian {

namespace {

void require_step(const Alpha& alpha, std::int64_t j, const char* op) {
  if (j < 0) throw DomainError(std::string(op) + ": step must be >= 0");
  if (j + 1 > alpha.horizon_j64()) {
    throw HorizonError(std::string(op) + ": j = " + std::to_string(j) + " needs j + 1 <= horizon_j = " +
                       to_string(alpha.horizon_j()));
  }
}

// An exact rational has period q_n, so at its last step the next boundary
// point repeats an old one and no atom is split.
void require_split(const Alpha& alpha, std::int64_t j, const char* op) {
  require_step(alpha, j, op);
  if (!alpha.tail() && j + 2 > alpha.horizon_j64()) {
    throw HorizonError(std::string(op) + ": j = " + std::to_string(j) + " is the periodic last step of " +
                       alpha.spec());
  }
}

}  // namespace

CirclePoint rotate(const Alpha& alpha, const CirclePoint& x, std::int64_t k) {
  BigInt limit = alpha.horizon_j() + 1;
  if (BigInt(k < 0 ? -k : k) > limit) {
    throw HorizonError("rotate: |k| = " + std::to_string(k) + " exceeds horizon_j + 1");
  }
  return CirclePoint(x.value() + Rational(BigInt(k)) * alpha.value());
}

Coding code(const Alpha& alpha, const CirclePoint& x, std::int64_t len) {
  if (len < 0) throw DomainError("code: negative length");
  if (len > alpha.horizon_j64() + 1) {
    throw HorizonError("code: length " + std::to_string(len) + " exceeds horizon_j + 1 = " +
                       to_string(BigInt(alpha.horizon_j() + 1)));
  }
  Coding out;
  out.bits.reserve(static_cast<std::size_t>(len));
  const Rational& a = alpha.value();
  Rational pos = x.value();
  for (std::int64_t i = 0; i < len; ++i) {
    out.bits.push_back(pos < a ? '0' : '1');
    pos += a;
    if (pos >= 1) pos -= 1;
  }
  return out;
}

AtomPartition atoms(const Alpha& alpha, std::int64_t j) {
  require_step(alpha, j, "atoms");
  AtomPartition out;
  out.j = j;
  const Rational& a = alpha.value();
  Rational point = a;  // {-(-1)α}
  out.boundaries.reserve(static_cast<std::size_t>(j) + 2);
  for (std::int64_t i = -1; i <= j; ++i) {
    out.boundaries.push_back(point);
    point -= a;
    if (point < 0) point += 1;
  }
  std::sort(out.boundaries.begin(), out.boundaries.end());
  out.boundaries.erase(std::unique(out.boundaries.begin(), out.boundaries.end()), out.boundaries.end());
  out.atoms.reserve(out.boundaries.size());
  for (std::size_t i = 0; i < out.boundaries.size(); ++i) {
    const Rational& lo = out.boundaries[i];
    Rational hi = i + 1 < out.boundaries.size() ? out.boundaries[i + 1] : Rational(1);
    out.atoms.push_back({CircleInterval::from_start_length(lo, hi - lo), code(alpha, CirclePoint(lo), j + 1)});
  }
  return out;
}

CircleInterval oracle_V(const Alpha& alpha, std::int64_t j) {
  require_split(alpha, j, "oracle_V");
  const Rational& a = alpha.value();
  std::vector<Rational> bounds;
  bounds.reserve(static_cast<std::size_t>(j) + 2);
  Rational point = a;
  for (std::int64_t i = -1; i <= j; ++i) {
    bounds.push_back(point);
    point -= a;
    if (point < 0) point += 1;
  }
  // point is now {-(j+1)α}
  std::sort(bounds.begin(), bounds.end());
  auto it = std::upper_bound(bounds.begin(), bounds.end(), point);
  Rational right = it == bounds.end() ? Rational(1) : *it;
  const Rational& left = *std::prev(it);
  return CircleInterval::from_start_length(left, right - left);
}

Coding right_special_word(const Alpha& alpha, std::int64_t j) {
  CircleInterval v = oracle_V(alpha, j);
  return code(alpha, CirclePoint(v.left()), j + 1);
}

OracleSweep::OracleSweep(const Alpha& alpha)
    : alpha_value_(alpha.value()), horizon_(alpha.horizon_j64()), periodic_(!alpha.tail()), next_(frac(-alpha.value())) {
  boundaries_.insert(alpha_value_);
  boundaries_.insert(Rational(0));
}

CircleInterval OracleSweep::undetermined() const {
  if (step_ + 1 > horizon_ || (periodic_ && step_ + 2 > horizon_)) {
    throw HorizonError("oracle sweep: step " + std::to_string(step_) + " needs step + 1 <= horizon_j");
  }
  auto it = boundaries_.upper_bound(next_);
  Rational right = it == boundaries_.end() ? Rational(1) : *it;
  const Rational& left = *std::prev(it);
  return CircleInterval::from_start_length(left, right - left);
}

void OracleSweep::advance() {
  boundaries_.insert(next_);
  next_ -= alpha_value_;
  if (next_ < 0) next_ += 1;
  ++step_;
}

std::string atoms_csv(const AtomPartition& partition) {
  std::ostringstream out;
  out << "j,left_num,left_den,right_num,right_den,coding\n";
  for (const auto& atom : partition.atoms) {
    Rational right = atom.interval.left() + atom.interval.length();
    out << partition.j << ',' << atom.interval.left().get_num().get_str() << ','
        << atom.interval.left().get_den().get_str() << ',' << right.get_num().get_str() << ','
        << right.get_den().get_str() << ',' << atom.coding.bits << '\n';
  }
  return out.str();
}

}  // namespace sturmian
