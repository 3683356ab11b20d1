#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modlift/exact/localization.hpp"

namespace modlift::exact {

/// Deterministic sample policy for identities over the infinite module.
struct SampleOptions {
  std::size_t size = 32;
  std::uint64_t seed = 1;
};

/// Elements spread over a range of p- and q-valuations.
std::vector<UElement> sample_elements(long p, long q, const SampleOptions& options = {});
std::vector<RElement> sample_ring_elements(long p, long q, const SampleOptions& options = {});

struct Certificate {
  std::string name;
  std::string detail;
  bool holds = false;
};

/// A solve that would need a division the localization does not allow.
struct Unresolved {
  std::string equation;
};

/// x = p^m q^{-n} t/s with p, q ∤ s, t and s > 0.
struct Decomposed {
  long m = 0;
  long n = 0;
  mpz_class t;
  mpz_class s;
};

/// Throws WrongBranch unless v_p(x) ≥ 0 > v_q(x).
Decomposed decompose_x(const BigRational& x, long p, long q);

/// u ↦ x·u on both components.
class MultEndo {
 public:
  MultEndo(BigRational x, long p, long q) : x_(std::move(x)), p_(p), q_(q) {}
  const BigRational& multiplier() const noexcept { return x_; }
  long p() const noexcept { return p_; }
  long q() const noexcept { return q_; }
  UElement operator()(const UElement& u) const;
  /// Number of (element, ring element) pairs on which linearity was checked.
  std::size_t linearity_checks = 0;

 private:
  BigRational x_;
  long p_;
  long q_;
};

/// Throws NotWellDefined when v_p(x) < 0 or v_q(x) < 0; CertificateFailed if
/// the sampled linearity check fails.
MultEndo mult_endo(const BigRational& x, long p, long q, const SampleOptions& options = {});

struct UnitReport {
  bool unit = false;
  /// Set when v_p(x) > 0: ē has no preimage.
  std::optional<UElement> no_preimage;
  /// Set when v_q(x) > 0: nonzero element sent to 0.
  std::optional<UElement> kernel_element;
  std::vector<Certificate> certificates;
};

UnitReport endo_is_unit(const MultEndo& e);

struct NonlocalWitness {
  BigRational x;
  BigRational y;
  UnitReport x_report;
  UnitReport y_report;
  std::size_t sum_checks = 0;
  bool sum_is_identity = false;
};

/// x = p·a, y = q·b with x + y = 1 from the extended Euclidean algorithm.
NonlocalWitness nonlocal_witness(long p, long q, const SampleOptions& options = {});

struct Membership {
  enum class Status { Member, NotMember, Unresolved };
  Status status = Status::NotMember;
  /// For Member: u = generators[generator]·witness.
  std::size_t generator = 0;
  std::optional<RElement> witness;
  std::string detail;
};

/// Submodule of U generated by finitely many elements. A generator (a, β)
/// with a ≠ 0 generates a·Z_(p) × Q/Z_(q); one with a = 0 generates the
/// cyclic group spanned by β.
class GeneratedSubmodule {
 public:
  GeneratedSubmodule(std::vector<UElement> generators, long p, long q);
  const std::vector<UElement>& generators() const noexcept { return gens_; }
  Membership contains(const UElement& u) const;

 private:
  std::vector<UElement> gens_;
  long p_;
  long q_;
};

/// Generating family of the right annihilator of g in R.
std::vector<RElement> annihilator_generators(const UElement& g);

/// Homomorphism (p^m ē)R → U determined by the image of p^m ē.
struct PartialHom {
  long m = 0;
  UElement image_of_generator;
  long p = 2;
  long q = 3;

  UElement source_generator() const;
  /// Image of an element of the source; nullopt if it is not in the source.
  std::optional<UElement> operator()(const UElement& n) const;
  /// Annihilator inclusion on the generating family.
  Certificate well_defined() const;
};

struct ExactReport {
  std::string check;
  BigRational x;
  long p = 2;
  long q = 3;
  bool passed = false;
  std::size_t samples = 0;
  std::vector<Certificate> certificates;
  std::vector<Unresolved> unresolved;
};

/// f(ē) = xē + X and h = mult_endo(x); verifies πh = f. The default X is pē·R.
/// Throws WrongBranch unless x ∈ Z_(p) ∩ Z_(q); NotWellDefined if f is not.
ExactReport verify_example_case_i(const BigRational& x, long p, long q,
                                  const std::optional<std::vector<UElement>>& x_generators = std::nullopt,
                                  const SampleOptions& options = {});

/// N = (p^m ē)R and h(p^m ē) = q^n (s/t) ē; verifies f h = π|_N. The default
/// X is the cyclic group of order q^n, the smallest choice for which f is
/// well defined. Throws WrongBranch, NotWellDefined.
ExactReport verify_example_case_ii(const BigRational& x, long p, long q,
                                   const std::optional<std::vector<UElement>>& x_generators = std::nullopt,
                                   const SampleOptions& options = {});

/// The case-ii map h1 on N1 ≤ U1 and its coordinate swap h2 on N2 ≤ U2:
/// checks the decomposition identity u1 + u2 ∈ <h1> + <h2> on sampled pairs
/// and that sampled nonzero elements of <h1> avoid <h2>. Needs m ≥ 1 (a
/// proper source); throws WrongBranch otherwise.
ExactReport graph_lemma_exact(const BigRational& x, long p, long q, const SampleOptions& options = {});

struct FiepVerdict {
  long p = 2;
  long q = 3;
  NonlocalWitness premise;
  bool premise_verified = false;
  std::string verdict;
  std::string label;
  std::string citation;
};

/// Verified premise (End(U) not local) plus the cited implication.
FiepVerdict fiep_verdict_exact(long p, long q, const SampleOptions& options = {});

}  // namespace modlift::exact
