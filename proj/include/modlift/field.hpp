#pragma once

#include <cstdint>

namespace modlift {

/// Arithmetic in Z/pZ for a machine-range prime p (< 2^31). Elements are
/// canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// Throws Error{NonPrime} unless 2 <= p < 2^31 and p is prime.
  explicit PrimeField(std::int64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  /// Multiplicative inverse; `a` must be nonzero.
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t v) const noexcept;
  /// Representative in (-p/2, p/2], handy for printing.
  std::int64_t to_signed(Elem a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::int64_t n);

PrimeField make_prime_field(std::int64_t p);

}  // namespace modlift
