#pragma once

#include <gmpxx.h>

#include <string>

namespace modlift::exact {

/// Reduced fraction with positive denominator.
using BigRational = mpq_class;

/// Parses "num/den" or "num". Throws SchemaError.
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& x);

/// Exponent of `prime` in x (negative allowed). Throws ZeroInput for x = 0.
long valuation(const BigRational& x, long prime);
/// prime^e for e ≥ 0.
mpz_class power(long prime, unsigned long e);

/// Element of Z_(prime): a rational whose denominator is prime to `prime`.
class LocalizedRational {
 public:
  /// Throws NotWellDefined when prime divides the denominator.
  LocalizedRational(BigRational value, long prime);
  static LocalizedRational zero(long prime) { return {BigRational(0), prime}; }
  static LocalizedRational one(long prime) { return {BigRational(1), prime}; }

  const BigRational& value() const noexcept { return value_; }
  long prime() const noexcept { return prime_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const;

  friend LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b);
  friend LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b);
  friend LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b);
  LocalizedRational operator-() const { return {-value_, prime_}; }
  friend bool operator==(const LocalizedRational& a, const LocalizedRational& b) {
    return a.prime_ == b.prime_ && a.value_ == b.value_;
  }

 private:
  BigRational value_;
  long prime_;
};

/// Class of a rational in Q/Z_(q), stored as k/q^n with 0 ≤ k < q^n and
/// q ∤ k unless k = 0 (then n = 0).
class PrueferElement {
 public:
  explicit PrueferElement(long q) : q_(q) {}
  /// Class of x modulo Z_(q).
  static PrueferElement from_rational(const BigRational& x, long q);

  long prime() const noexcept { return q_; }
  const mpz_class& numerator() const noexcept { return k_; }
  unsigned long exponent() const noexcept { return n_; }
  bool is_zero() const { return k_ == 0; }
  /// The representative k/q^n.
  BigRational representative() const;

  friend PrueferElement operator+(const PrueferElement& a, const PrueferElement& b);
  friend PrueferElement operator-(const PrueferElement& a, const PrueferElement& b);
  PrueferElement operator-() const;
  /// c·β for c ∈ Z_(q).
  friend PrueferElement operator*(const LocalizedRational& c, const PrueferElement& b);
  friend bool operator==(const PrueferElement& a, const PrueferElement& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  long q_;
  mpz_class k_ = 0;
  unsigned long n_ = 0;
};

/// Upper-triangular [[a, b], [0, c]] with a ∈ Z_(p), b ∈ Q, c ∈ Z_(q).
struct RElement {
  LocalizedRational a;
  BigRational b;
  LocalizedRational c;

  static RElement one(long p, long q) { return {LocalizedRational::one(p), 0, LocalizedRational::one(q)}; }
  friend RElement operator*(const RElement& x, const RElement& y);
  friend RElement operator+(const RElement& x, const RElement& y);
  friend bool operator==(const RElement& x, const RElement& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

/// Coset of L in R, written (a, β) with a ∈ Z_(p) and β ∈ Q/Z_(q).
struct UElement {
  LocalizedRational a;
  PrueferElement beta;

  /// The generator ē = (1, 0).
  static UElement generator(long p, long q) { return {LocalizedRational::one(p), PrueferElement(q)}; }
  static UElement zero(long p, long q) { return {LocalizedRational::zero(p), PrueferElement(q)}; }
  bool is_zero() const { return a.is_zero() && beta.is_zero(); }

  friend UElement operator+(const UElement& x, const UElement& y) { return {x.a + y.a, x.beta + y.beta}; }
  friend UElement operator-(const UElement& x, const UElement& y) { return {x.a - y.a, x.beta - y.beta}; }
  friend bool operator==(const UElement& x, const UElement& y) { return x.a == y.a && x.beta == y.beta; }
};

/// (a, β)·(a', b', c') = (a a', [a b'] + β c').
UElement u_action(const UElement& u, const RElement& r);

std::string to_string(const PrueferElement& b);
std::string to_string(const UElement& u);
std::string to_string(const RElement& r);

}  // namespace modlift::exact
