#include "sturmian/exact.hpp"

#include <cctype>
#include <cstdio>
#include <memory>

#include <mpfr.h>

namespace sturmian {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& x) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& x) {
  Rational out = x - Rational(floor_of(x));
  out.canonicalize();
  return out;
}

Rational nearest_int_distance(const Rational& x) {
  Rational f = frac(x);
  Rational g = 1 - f;
  return f < g ? f : g;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ConfigError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ConfigError("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ConfigError("malformed integer '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
    return make_rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool negative = !s.empty() && s[0] == '-';
    std::size_t lead = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    std::string whole = s.substr(lead, dot - lead);
    std::string decimals = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (decimals.empty() || !std::isdigit(static_cast<unsigned char>(decimals[0])) ||
        !std::isdigit(static_cast<unsigned char>(whole[0]))) {
      throw ConfigError("malformed decimal '" + s + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals.size());
    Rational mag = Rational(parse_bigint(whole)) + make_rational(parse_bigint(decimals), scale);
    return negative ? Rational(-mag) : mag;
  }
  return Rational(parse_bigint(s));
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

double to_double(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

namespace {

struct MpfrValue {
  mpfr_t v;
  MpfrValue() { mpfr_init2(v, 256); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
};

std::string render(const mpfr_t v, int digits) {
  if (mpfr_zero_p(v)) return "0";
  int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v);
  std::string out(static_cast<std::size_t>(n) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Rg", digits, v);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

void set_log(MpfrValue& out, const Rational& x) {
  if (x <= 0) throw DomainError("logarithm of non-positive value " + to_string(x));
  MpfrValue num;
  MpfrValue den;
  mpfr_set_z(num.v, x.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.v, x.get_den_mpz_t(), MPFR_RNDN);
  mpfr_log(num.v, num.v, MPFR_RNDN);
  mpfr_log(den.v, den.v, MPFR_RNDN);
  mpfr_sub(out.v, num.v, den.v, MPFR_RNDN);
}

}  // namespace

std::string to_decimal(const Rational& x, int digits) {
  MpfrValue v;
  mpfr_set_q(v.v, x.get_mpq_t(), MPFR_RNDN);
  return render(v.v, digits);
}

std::string log_decimal(const Rational& x, int digits) {
  MpfrValue v;
  set_log(v, x);
  return render(v.v, digits);
}

namespace {
void set_log_ratio(MpfrValue& out, const Rational& a, const Rational& b) {
  if (b == 1) throw DomainError("log ratio with log(b) = 0");
  MpfrValue la;
  MpfrValue lb;
  set_log(la, a);
  set_log(lb, b);
  mpfr_div(out.v, la.v, lb.v, MPFR_RNDN);
}
}  // namespace

std::string log_ratio_decimal(const Rational& a, const Rational& b, int digits) {
  MpfrValue v;
  set_log_ratio(v, a, b);
  return render(v.v, digits);
}

double log_ratio(const Rational& a, const Rational& b) {
  MpfrValue v;
  set_log_ratio(v, a, b);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (!x.fits_slong_p()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits: " + x.get_str());
  }
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace sturmian
