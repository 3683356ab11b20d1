#include "modlift/field.hpp"

#include <string>

#include "modlift/error.hpp"

namespace modlift {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::NonPrime, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorKind::ZeroInput, "inverse of zero in F_" + std::to_string(p_));
  return from_int(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

std::int64_t PrimeField::to_signed(Elem a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

PrimeField make_prime_field(std::int64_t p) { return PrimeField(p); }

}  // namespace modlift
