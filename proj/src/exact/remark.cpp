#include "modlift/exact/remark.hpp"

#include <cstdlib>

#include "modlift/error.hpp"

namespace modlift::exact {

RemarkResult remark_z_checker(long a, long b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "a and b must be nonzero");
  RemarkResult r;
  r.a = a;
  r.b = b;
  r.i_holds = b % a == 0;
  r.ii_holds = a % b == 0;
  if (r.i_holds) {
    r.i_witness = b / a;
    r.i_certificate = "h(1) = " + std::to_string(b / a) + " gives h(" + std::to_string(a) + "n) = " +
                      std::to_string(b) + "n";
  } else {
    r.i_certificate = "h(1)*" + std::to_string(a) + " = " + std::to_string(b) + " has no integer solution since " +
                      std::to_string(a) + " does not divide " + std::to_string(b);
  }
  if (r.ii_holds) {
    r.ii_witness = a / b;
    r.ii_certificate = "K = 0 and h(1) = " + std::to_string(a / b);
  } else {
    r.ii_certificate = "Z/K is torsion for K != 0, so K = 0 and h(1)*" + std::to_string(b) + " = " +
                       std::to_string(a) + " has no integer solution since " + std::to_string(b) +
                       " does not divide " + std::to_string(a);
  }
  return r;
}

RemarkResult remark_z_bruteforce(long a, long b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "a and b must be nonzero");
  RemarkResult r;
  r.a = a;
  r.b = b;
  const long bound = std::labs(a * b);
  for (long k = -bound; k <= bound; ++k) {
    if (!r.i_holds && k * a == b) {
      r.i_holds = true;
      r.i_witness = k;
    }
    if (!r.ii_holds && k != 0 && k * b == a) {
      r.ii_holds = true;
      r.ii_witness = k;
    }
  }
  r.i_certificate = "search over |h(1)| <= " + std::to_string(bound);
  r.ii_certificate = r.i_certificate;
  return r;
}

}  // namespace modlift::exact
