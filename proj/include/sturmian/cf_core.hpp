#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/exact.hpp"

namespace sturmian {

/// Partial quotients a_1..a_n of [0; a_1, ..., a_n].
struct ContinuedFraction {
  std::vector<BigInt> elements;

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct Convergent {
  std::size_t k = 0;
  BigInt p;
  BigInt q;
};

/// Euclid on p/q, 0 < p < q, gcd(p, q) = 1.  The result is canonical: its
/// last element is >= 2 unless the expansion is [0; 1].
ContinuedFraction cf_of_rational(const BigInt& p, const BigInt& q);

/// Exact value of [0; a_1, ..., a_n].
Rational value_of_cf(const ContinuedFraction& cf);

/// p_k / q_k for k = 0..n with p_0 = 0, q_0 = 1, p_1 = 1, q_1 = a_1.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

std::string format_cf(const ContinuedFraction& cf);

inline const BigInt& default_tail() {
  static const BigInt tail(1'000'000);
  return tail;
}

// A rotation number represented exactly by the rational proxy
// [0; a_1, ..., a_n, M].  Every quantity indexed by orbit times below
// q_n depends only on the prefix a_1..a_n, so the proxy stands in for any
// irrational sharing that prefix up to the horizon.  Built from an exact
// rational the value is p_n/q_n itself and there is no tail.
class Alpha {
 public:
  static Alpha from_prefix(std::vector<BigInt> prefix, const BigInt& tail = default_tail());
  static Alpha from_rational(const Rational& value);

  const Rational& value() const { return value_; }
  const ContinuedFraction& cf() const { return cf_; }
  const std::optional<BigInt>& tail() const { return tail_; }

  /// Largest convergent index whose p_k, q_k are prefix-determined (n).
  std::size_t horizon_k() const { return cf_.size(); }
  /// Largest usable orbit time, q_n - 1.
  const BigInt& horizon_j() const { return horizon_j_; }
  /// horizon_j clamped to int64 (sweeps never exceed it anyway).
  std::int64_t horizon_j64() const;

  /// a_i for 1 <= i <= n; a_{n+1} is the tail when one exists.
  const BigInt& a(std::size_t i) const;
  const BigInt& p(std::size_t k) const;
  const BigInt& q(std::size_t k) const;
  /// q_k as an int64; throws DomainError when it does not fit.
  std::int64_t q64(std::size_t k) const;
  const std::vector<Convergent>& convergents() const { return convergents_; }

  /// θ_k = |q_k α - p_k| for 0 <= k <= n.
  const Rational& theta(std::size_t k) const;

  /// Canonical spec string ("cf:...;tail=M" or "rat:p/q").
  std::string spec() const;

 private:
  Alpha() = default;
  void finish();

  Rational value_;
  ContinuedFraction cf_;
  std::optional<BigInt> tail_;
  BigInt horizon_j_;
  std::vector<Convergent> convergents_;
  std::vector<Rational> thetas_;
};

/// Parses "cf:1,1,2" | "rat:3/7" | "preset:golden-40" (also golden-N,
/// silver-N, cycle123-N).  `tail` overrides the proxy tail for cf/preset
/// specs; a trailing ";tail=M" in the text does the same.
Alpha make_alpha(std::string_view spec, std::optional<BigInt> tail = std::nullopt);

/// θ_k, k <= horizon_k.
Rational theta(const Alpha& alpha, std::size_t k);

/// ⟨⟨tα⟩⟩ for 0 <= t <= horizon_j + 1.
Rational nearest_distance(const Alpha& alpha, std::int64_t t);

// -- random rotation numbers -------------------------------------------------

/// Independent deterministic substream for (seed, stream).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform rational u / 2^bits drawn from the (seed, stream) substream,
/// u in [0, 2^bits).
BigInt random_bits(std::uint64_t seed, std::uint64_t stream, std::size_t bits);

/// First n CF elements of a λ-uniform random α.  The draw u/2^B uses
/// B = 64 + 16 n bits and is accepted when Euclid on the 2B-bit refinement
/// gives the same prefix (one retry comparing 2B against 4B).  nullopt means
/// the sample is skipped for lack of precision.
std::optional<ContinuedFraction> sample_cf_prefix(std::uint64_t seed, std::uint64_t stream,
                                                  std::size_t n_elements);

/// Alpha over a sampled prefix (with the default tail), or nullopt if skipped.
std::optional<Alpha> sample_alpha(std::uint64_t seed, std::size_t n_elements,
                                  std::uint64_t stream = 0);

}  // namespace sturmian
