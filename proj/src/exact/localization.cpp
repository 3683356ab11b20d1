#include "modlift/exact/localization.hpp"

#include "modlift/error.hpp"

namespace modlift::exact {

BigRational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::SchemaError, "not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw bad();
  BigRational x(n, d);
  x.canonicalize();
  return x;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

long valuation(const BigRational& x, long prime) {
  if (x == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  auto count = [prime](mpz_class z) {
    long v = 0;
    z = abs(z);
    while (mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(prime))) {
      z /= prime;
      ++v;
    }
    return v;
  };
  return count(x.get_num()) - count(x.get_den());
}

mpz_class power(long prime, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(prime), e);
  return r;
}

LocalizedRational::LocalizedRational(BigRational value, long prime) : value_(std::move(value)), prime_(prime) {
  value_.canonicalize();
  if (mpz_divisible_ui_p(value_.get_den().get_mpz_t(), static_cast<unsigned long>(prime)))
    throw Error(ErrorKind::NotWellDefined, to_string(value_) + " is not in the localization at " + std::to_string(prime));
}

bool LocalizedRational::is_unit() const {
  return value_ != 0 && !mpz_divisible_ui_p(value_.get_num().get_mpz_t(), static_cast<unsigned long>(prime_));
}

namespace {
void same_prime(long a, long b) {
  if (a != b) throw Error(ErrorKind::ShapeMismatch, "localizations at different primes");
}
}  // namespace

LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b) {
  same_prime(a.prime_, b.prime_);
  return {a.value_ + b.value_, a.prime_};
}
LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b) {
  same_prime(a.prime_, b.prime_);
  return {a.value_ - b.value_, a.prime_};
}
LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b) {
  same_prime(a.prime_, b.prime_);
  return {a.value_ * b.value_, a.prime_};
}

PrueferElement PrueferElement::from_rational(const BigRational& x, long q) {
  PrueferElement out(q);
  if (x == 0) return out;
  // x = a / (q^n b') with q ∤ b'; the class is (a b'^{-1} mod q^n) / q^n.
  mpz_class den = x.get_den();
  unsigned long n = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(q))) {
    den /= q;
    ++n;
  }
  if (n == 0) return out;
  mpz_class mod = power(q, n), inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class k = x.get_num() * inv;
  mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), mod.get_mpz_t());
  while (n > 0 && k != 0 && mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(q))) {
    k /= q;
    --n;
  }
  if (k == 0) n = 0;
  out.k_ = k;
  out.n_ = n;
  return out;
}

BigRational PrueferElement::representative() const {
  BigRational r(k_, power(q_, n_));
  r.canonicalize();
  return r;
}

PrueferElement operator+(const PrueferElement& a, const PrueferElement& b) {
  same_prime(a.q_, b.q_);
  return PrueferElement::from_rational(a.representative() + b.representative(), a.q_);
}
PrueferElement operator-(const PrueferElement& a, const PrueferElement& b) {
  same_prime(a.q_, b.q_);
  return PrueferElement::from_rational(a.representative() - b.representative(), a.q_);
}
PrueferElement PrueferElement::operator-() const { return from_rational(-representative(), q_); }
PrueferElement operator*(const LocalizedRational& c, const PrueferElement& b) {
  same_prime(c.prime(), b.q_);
  return PrueferElement::from_rational(c.value() * b.representative(), b.q_);
}

RElement operator*(const RElement& x, const RElement& y) {
  return {x.a * y.a, x.a.value() * y.b + x.b * y.c.value(), x.c * y.c};
}
RElement operator+(const RElement& x, const RElement& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }

UElement u_action(const UElement& u, const RElement& r) {
  return {u.a * r.a, PrueferElement::from_rational(u.a.value() * r.b, u.beta.prime()) + r.c * u.beta};
}

std::string to_string(const PrueferElement& b) {
  if (b.is_zero()) return "0";
  return "[" + to_string(b.representative()) + "]";
}
std::string to_string(const UElement& u) { return "(" + to_string(u.a.value()) + ", " + to_string(u.beta) + ")"; }
std::string to_string(const RElement& r) {
  return "(" + to_string(r.a.value()) + ", " + to_string(r.b) + ", " + to_string(r.c.value()) + ")";
}

}  // namespace modlift::exact
