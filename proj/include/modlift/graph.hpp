#pragma once

#include <optional>

#include "modlift/module.hpp"

namespace modlift {

enum class GraphDirection { FirstToSecond, SecondToFirst };

/// Graph {a + h(a) : a ∈ N} inside M = A ⊕ B, where N is a submodule of the
/// source summand and `h` maps N (in its canonical coordinates) into the
/// other summand. Throws ShapeMismatch on size errors and NotWellDefined if
/// `h` is not a module map.
Submodule graph_of(const DirectSum& ds, const Submodule& source, const Matrix& h,
                   GraphDirection direction = GraphDirection::FirstToSecond);
/// Graph of a total map h : A → B.
Submodule graph_of(const DirectSum& ds, const ModuleHom& h);

struct GraphComplement {
  DirectSum square;
  Submodule graph;
  Submodule complement;
  /// U1, which is also a complement once h1 is injective.
  std::optional<Submodule> alternative;
};

/// For U hollow and uniform, M = U ⊕ U and an epimorphism h1 from N1 ≤ U1
/// onto U2, returns a complement of the graph of h1. In finite dimension an
/// epimorphism from a proper N1 onto U2 cannot exist, so a proper N1 raises
/// CardinalityVacuous; that branch is exercised by the exact backend.
/// Errors: NotHollowUniform, CardinalityVacuous, NotEpi, NotWellDefined.
GraphComplement graph_complement(const ModulePtr& u, const Submodule& n1, const Matrix& h1,
                                 const Limits& limits = {});

}  // namespace modlift
