#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlift/module.hpp"

namespace modlift {

/// Which of the two equivalent second conditions to test.
enum class Variant { B, C };
enum class Clause { I, II };

/// One canonical test triple and how it was satisfied.
///
/// Lifting sweep: X = U/K with g the projection, `object` = K, f : U → U/K.
/// Extending sweep: X ≤ U with g the inclusion, `object` = X, f : X → U.
/// `auxiliary` is the lattice index of N (lifting b, extending c) or of the
/// quotient kernel (lifting c, extending b) used by clause II.
struct TripleWitness {
  std::size_t object = 0;
  Matrix f;
  Clause clause = Clause::I;
  std::optional<std::size_t> auxiliary;
  Matrix h;
};

struct TheoremResult {
  bool holds = true;
  std::uint64_t triples = 0;
  std::vector<TripleWitness> witnesses;
  /// First triple satisfying neither clause (h left empty).
  std::optional<TripleWitness> violation;
};

/// Sweeps K ≤ U and every f : U → U/K; each triple must satisfy
///   (i)  f = π h for some h : U → U, or
///   (ii) b: an epimorphism h : N → U (N ≤ U) with π|_N = f h,
///        c: a monomorphism h : U → U/K' (K' ≤ K) with g' h = f.
/// Any module X with an epimorphism U → X is isomorphic to some U/K with the
/// epimorphism becoming the projection, so these triples cover the general
/// quantifier. Errors: NotHollowUniform, TooLarge.
TheoremResult thm_lifting_condition(const ModulePtr& u, Variant variant, const Limits& limits = {});

/// Sweeps X ≤ U and every f : X → U; each triple must satisfy
///   (i)  f = h|_X for some h : U → U, or
///   (ii) b: a monomorphism h : U → U/K (K ≤ U) with h f = π|_X,
///        c: an epimorphism h : N → U (X ≤ N ≤ U) with f = h|_X.
/// A monomorphism X → U identifies X with its image, so submodules with the
/// inclusion cover the general quantifier. Errors: NotHollowUniform, TooLarge.
TheoremResult thm_extending_condition(const ModulePtr& u, Variant variant, const Limits& limits = {});

}  // namespace modlift
