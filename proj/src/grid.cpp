#include "sturmian/grid.hpp"

#include <algorithm>

namespace sturmian {

namespace {
constexpr GridInt kMaxModulus = static_cast<GridInt>(1) << 124;
constexpr GridInt kDirectProductLimit = static_cast<GridInt>(1) << 62;
}  // namespace

GridInt to_grid_int(const BigInt& v) {
  BigInt mag = abs(v);
  if (mpz_sizeinbase(mag.get_mpz_t(), 2) > 126) throw DomainError("value too large for grid arithmetic");
  BigInt lo_part = mag & BigInt("18446744073709551615");
  BigInt hi_part = mag >> 64;
  unsigned __int128 out = static_cast<unsigned __int128>(mpz_get_ui(hi_part.get_mpz_t())) << 64;
  out |= mpz_get_ui(lo_part.get_mpz_t());
  GridInt signed_out = static_cast<GridInt>(out);
  return v < 0 ? -signed_out : signed_out;
}

BigInt to_bigint(GridInt v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += BigInt(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
  return negative ? BigInt(-out) : out;
}

OrbitGrid::OrbitGrid(const Alpha& alpha) {
  q_big_ = alpha.value().get_den();
  p_big_ = alpha.value().get_num();
  if (q_big_ >= to_bigint(kMaxModulus)) {
    throw DomainError("alpha denominator exceeds 2^124; grid sweeps unavailable for " + alpha.spec());
  }
  q_ = to_grid_int(q_big_);
  p_ = to_grid_int(p_big_);
}

GridInt OrbitGrid::mulmod(GridInt a, GridInt b) const {
  a = reduce(a);
  b = reduce(b);
  if (q_ <= kDirectProductLimit) return (a * b) % q_;
  BigInt prod = to_bigint(a) * to_bigint(b);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), q_big_.get_mpz_t());
  return to_grid_int(r);
}

GridInt OrbitGrid::orbit(std::int64_t m) const { return mulmod(reduce(static_cast<GridInt>(m)), p_); }

GridInt OrbitGrid::orbit(const BigInt& m) const {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), q_big_.get_mpz_t());
  return mulmod(to_grid_int(r), p_);
}

GridInt OrbitGrid::floor_index(const Rational& x) const {
  if (x < 0 || x >= 1) throw DomainError("grid index needs x in [0,1)");
  return to_grid_int(floor_of(x * Rational(q_big_)));
}

GridInt OrbitGrid::exact_index(const Rational& x) const {
  Rational scaled = x * Rational(q_big_);
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw DomainError("point " + to_string(x) + " is not on the orbit grid");
  return reduce(to_grid_int(scaled.get_num()));
}

Rational OrbitGrid::to_rational(GridInt g) const { return make_rational(to_bigint(reduce(g)), q_big_); }

CircleInterval OrbitGrid::to_interval(const GridArc& arc) const {
  return CircleInterval::from_start_length(to_rational(arc.start), make_rational(to_bigint(arc.length), q_big_));
}

GridArc OrbitGrid::from_interval(const CircleInterval& arc) const {
  Rational len = arc.length() * Rational(q_big_);
  len.canonicalize();
  if (len.get_den() != 1) throw DomainError("arc length is not on the orbit grid");
  return {exact_index(arc.left()), to_grid_int(len.get_num())};
}

GridInt grid_overlap(const OrbitGrid& grid, const GridArc& a, const GridArc& b) {
  const GridInt q = grid.modulus();
  // Split each arc into at most two non-wrapping pieces of [0, q).
  auto pieces = [q](const GridArc& arc, GridInt out[4]) {
    if (arc.length >= q) {
      out[0] = 0;
      out[1] = q;
      return 1;
    }
    GridInt end = arc.start + arc.length;
    if (end <= q) {
      out[0] = arc.start;
      out[1] = end;
      return 1;
    }
    out[0] = arc.start;
    out[1] = q;
    out[2] = 0;
    out[3] = end - q;
    return 2;
  };
  GridInt pa[4];
  GridInt pb[4];
  int na = pieces(a, pa);
  int nb = pieces(b, pb);
  GridInt total = 0;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      GridInt lo = std::max(pa[2 * i], pb[2 * j]);
      GridInt hi = std::min(pa[2 * i + 1], pb[2 * j + 1]);
      if (lo < hi) total += hi - lo;
    }
  }
  return total;
}

}  // namespace sturmian
