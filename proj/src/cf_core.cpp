#include "sturmian/cf_core.hpp"

#include <random>
#include <sstream>

namespace sturmian {

ContinuedFraction cf_of_rational(const BigInt& p, const BigInt& q) {
  if (p <= 0 || q <= p) throw DomainError("cf_of_rational needs 0 < p < q");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw DomainError("cf_of_rational needs a reduced fraction");

  ContinuedFraction cf;
  BigInt num = p;
  BigInt den = q;
  while (num != 0) {
    BigInt a;
    BigInt r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    cf.elements.push_back(a);
    den = num;
    num = r;
  }
  // Euclid already ends on an element >= 2 unless the value is 1/1, which
  // the precondition rules out; [0;1] cannot occur for p < q.
  return cf;
}

Rational value_of_cf(const ContinuedFraction& cf) {
  if (cf.elements.empty()) throw DomainError("empty continued fraction");
  Rational x(0);
  for (auto it = cf.elements.rbegin(); it != cf.elements.rend(); ++it) {
    Rational d = Rational(*it) + x;
    x = 1 / d;
  }
  x.canonicalize();
  return x;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.size() + 1);
  out.push_back({0, BigInt(0), BigInt(1)});
  if (cf.elements.empty()) return out;
  out.push_back({1, BigInt(1), cf.elements[0]});
  for (std::size_t k = 1; k < cf.size(); ++k) {
    const BigInt& a = cf.elements[k];
    out.push_back({k + 1, a * out[k].p + out[k - 1].p, a * out[k].q + out[k - 1].q});
  }
  return out;
}

std::string format_cf(const ContinuedFraction& cf) {
  std::string out = "[0;";
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i) out += ',';
    out += cf.elements[i].get_str();
  }
  return out + "]";
}

// -- Alpha -------------------------------------------------------------------

Alpha Alpha::from_prefix(std::vector<BigInt> prefix, const BigInt& tail) {
  if (prefix.empty()) throw DomainError("alpha prefix must be nonempty");
  for (const auto& a : prefix) {
    if (a < 1) throw DomainError("continued fraction elements must be >= 1");
  }
  if (tail < 2) throw DomainError("tail element must be >= 2");
  Alpha alpha;
  alpha.cf_.elements = std::move(prefix);
  alpha.tail_ = tail;
  ContinuedFraction full = alpha.cf_;
  full.elements.push_back(tail);
  alpha.value_ = value_of_cf(full);
  alpha.finish();
  return alpha;
}

Alpha Alpha::from_rational(const Rational& value) {
  if (value <= 0 || value >= 1) throw DomainError("rational alpha must lie in (0,1)");
  Alpha alpha;
  alpha.cf_ = cf_of_rational(value.get_num(), value.get_den());
  alpha.value_ = value;
  alpha.finish();
  return alpha;
}

void Alpha::finish() {
  convergents_ = sturmian::convergents(cf_);
  horizon_j_ = convergents_.back().q - 1;
  thetas_.clear();
  thetas_.reserve(convergents_.size());
  for (const auto& c : convergents_) {
    Rational t = Rational(c.q) * value_ - Rational(c.p);
    t.canonicalize();
    thetas_.push_back(abs(t));
  }
}

std::int64_t Alpha::horizon_j64() const {
  if (horizon_j_.fits_slong_p()) return horizon_j_.get_si();
  return INT64_MAX;
}

const BigInt& Alpha::a(std::size_t i) const {
  if (i >= 1 && i <= cf_.size()) return cf_.elements[i - 1];
  if (i == cf_.size() + 1 && tail_) return *tail_;
  throw HorizonError("a_" + std::to_string(i) + " is beyond the prefix of length " +
                     std::to_string(cf_.size()));
}

const BigInt& Alpha::p(std::size_t k) const {
  if (k >= convergents_.size()) {
    throw HorizonError("p_" + std::to_string(k) + " beyond horizon_k = " + std::to_string(horizon_k()));
  }
  return convergents_[k].p;
}

const BigInt& Alpha::q(std::size_t k) const {
  if (k >= convergents_.size()) {
    throw HorizonError("q_" + std::to_string(k) + " beyond horizon_k = " + std::to_string(horizon_k()));
  }
  return convergents_[k].q;
}

std::int64_t Alpha::q64(std::size_t k) const { return to_int64(q(k), "q_k"); }

const Rational& Alpha::theta(std::size_t k) const {
  if (k >= thetas_.size()) {
    throw HorizonError("theta_" + std::to_string(k) + " beyond horizon_k = " +
                       std::to_string(horizon_k()));
  }
  return thetas_[k];
}

std::string Alpha::spec() const {
  if (!tail_) return "rat:" + to_string(value_);
  std::string out = "cf:";
  for (std::size_t i = 0; i < cf_.size(); ++i) {
    if (i) out += ',';
    out += cf_.elements[i].get_str();
  }
  return out + ";tail=" + tail_->get_str();
}

namespace {

std::vector<BigInt> parse_elements(std::string_view body) {
  std::vector<BigInt> out;
  std::string item;
  std::stringstream ss{std::string(body)};
  while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item));
  if (out.empty()) throw ConfigError("empty cf prefix");
  return out;
}

std::vector<BigInt> preset_elements(std::string_view name) {
  auto dash = name.rfind('-');
  if (dash == std::string_view::npos) throw ConfigError("unknown preset '" + std::string(name) + "'");
  std::string family(name.substr(0, dash));
  long count = 0;
  try {
    count = std::stol(std::string(name.substr(dash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("bad preset length in '" + std::string(name) + "'");
  }
  if (count < 1 || count > 100000) throw ConfigError("bad preset length in '" + std::string(name) + "'");
  std::vector<BigInt> out;
  for (long i = 0; i < count; ++i) {
    if (family == "golden") {
      out.emplace_back(1);
    } else if (family == "silver") {
      out.emplace_back(2);
    } else if (family == "cycle123") {
      out.emplace_back(1 + i % 3);
    } else {
      throw ConfigError("unknown preset family '" + family + "'");
    }
  }
  return out;
}

}  // namespace

Alpha make_alpha(std::string_view spec, std::optional<BigInt> tail) {
  std::string text(spec);
  auto semi = text.find(';');
  if (semi != std::string::npos) {
    std::string option = text.substr(semi + 1);
    text.resize(semi);
    if (option.rfind("tail=", 0) != 0) throw ConfigError("unknown alpha option '" + option + "'");
    if (!tail) tail = parse_bigint(option.substr(5));
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("alpha spec needs a kind prefix: '" + text + "'");
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  try {
    if (kind == "cf") return Alpha::from_prefix(parse_elements(body), tail.value_or(default_tail()));
    if (kind == "preset") return Alpha::from_prefix(preset_elements(body), tail.value_or(default_tail()));
    if (kind == "rat") {
      if (tail) throw ConfigError("rat: alphas are exact and take no tail");
      return Alpha::from_rational(parse_rational(body));
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown alpha kind '" + kind + "'");
}

Rational theta(const Alpha& alpha, std::size_t k) { return alpha.theta(k); }

Rational nearest_distance(const Alpha& alpha, std::int64_t t) {
  if (t < 0 || BigInt(t) > alpha.horizon_j() + 1) {
    throw HorizonError("nearest_distance: t = " + std::to_string(t) + " outside [0, horizon_j + 1]");
  }
  return nearest_int_distance(Rational(t) * alpha.value());
}

// -- sampling ----------------------------------------------------------------

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

BigInt random_bits(std::uint64_t seed, std::uint64_t stream, std::size_t bits) {
  std::mt19937_64 gen(substream_seed(seed, stream));
  BigInt u(0);
  std::size_t words = (bits + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t x = gen();
    u <<= 64;
    BigInt part;
    mpz_import(part.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    u += part;
  }
  std::size_t extra = words * 64 - bits;
  if (extra) u >>= static_cast<mp_bitcnt_t>(extra);
  return u;
}

namespace {

// First n elements of u / 2^bits, or nullopt if the expansion terminates early.
std::optional<ContinuedFraction> leading_elements(BigInt num, std::size_t bits, std::size_t n) {
  BigInt den(1);
  den <<= static_cast<mp_bitcnt_t>(bits);
  ContinuedFraction cf;
  while (cf.size() < n) {
    if (num == 0) return std::nullopt;
    BigInt a;
    BigInt r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    cf.elements.push_back(a);
    den = num;
    num = r;
  }
  return cf;
}

}  // namespace

std::optional<ContinuedFraction> sample_cf_prefix(std::uint64_t seed, std::uint64_t stream,
                                                  std::size_t n_elements) {
  if (n_elements < 1) throw DomainError("sample_alpha needs n_elements >= 1");
  const std::size_t base = 64 + 16 * n_elements;
  // One 4B-bit draw; its leading B and 2B bits are the coarser extractions,
  // so every refinement describes the same random point.
  BigInt u4 = random_bits(seed, stream, 4 * base);
  BigInt u1 = u4 >> static_cast<mp_bitcnt_t>(3 * base);
  BigInt u2 = u4 >> static_cast<mp_bitcnt_t>(2 * base);

  auto at_b = leading_elements(u1, base, n_elements);
  auto at_2b = leading_elements(u2, 2 * base, n_elements);
  if (at_b && at_2b && *at_b == *at_2b) return at_b;
  auto at_4b = leading_elements(u4, 4 * base, n_elements);
  if (at_2b && at_4b && *at_2b == *at_4b) return at_2b;
  return std::nullopt;
}

std::optional<Alpha> sample_alpha(std::uint64_t seed, std::size_t n_elements, std::uint64_t stream) {
  auto cf = sample_cf_prefix(seed, stream, n_elements);
  if (!cf) return std::nullopt;
  return Alpha::from_prefix(std::move(cf->elements));
}

}  // namespace sturmian
