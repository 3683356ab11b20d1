#include "modlift/graph.hpp"

#include "modlift/error.hpp"
#include "modlift/properties.hpp"

namespace modlift {

Submodule graph_of(const DirectSum& ds, const Submodule& source, const Matrix& h, GraphDirection direction) {
  const bool forward = direction == GraphDirection::FirstToSecond;
  const RepModule& from = forward ? ds.proj1.target() : ds.proj2.target();
  const RepModule& to = forward ? ds.proj2.target() : ds.proj1.target();
  if (source.ambient_dim() != from.dim() || h.rows() != source.dim() || h.cols() != to.dim())
    throw Error(ErrorKind::ShapeMismatch, "graph_of: map must go from a submodule of one summand to the other");
  if (!commutes(as_module(from, source), to, h))
    throw Error(ErrorKind::NotWellDefined, "graph_of: map does not commute with the action");
  const PrimeField& f = ds.module->field();
  const std::size_t n = ds.module->dim();
  if (source.dim() == 0) return Submodule::zero(n);
  const Matrix& into_from = forward ? ds.inj1.matrix() : ds.inj2.matrix();
  const Matrix& into_to = forward ? ds.inj2.matrix() : ds.inj1.matrix();
  Matrix rows = add(f, multiply(f, source.basis(), into_from), multiply(f, h, into_to));
  return Submodule(rref(f, rows));
}

Submodule graph_of(const DirectSum& ds, const ModuleHom& h) {
  if (!(h.source() == ds.proj1.target()) || !(h.target() == ds.proj2.target()))
    throw Error(ErrorKind::ShapeMismatch, "graph_of: h must map the first summand to the second");
  return graph_of(ds, Submodule::whole(h.source().dim()), h.matrix());
}

GraphComplement graph_complement(const ModulePtr& u, const Submodule& n1, const Matrix& h1, const Limits& limits) {
  Analysis au(u, limits);
  bool hollow_uniform = false;
  if (au.dim() > 0) hollow_uniform = is_hollow(au) && is_uniform(au);
  if (!hollow_uniform) throw Error(ErrorKind::NotHollowUniform, "graph_complement needs a hollow and uniform U");
  if (n1.ambient_dim() != u->dim() || h1.rows() != n1.dim() || h1.cols() != u->dim())
    throw Error(ErrorKind::ShapeMismatch, "graph_complement: h1 must map N1 ≤ U1 into U2");
  if (!commutes(as_module(*u, n1), *u, h1)) throw Error(ErrorKind::NotWellDefined, "h1 is not a module map");
  if (!n1.is_whole()) {
    throw Error(ErrorKind::CardinalityVacuous,
                "N1 has dimension " + std::to_string(n1.dim()) + " < dim U = " + std::to_string(u->dim()) +
                    ", so no epimorphism N1 -> U2 exists over a finite field");
  }
  const PrimeField& f = u->field();
  if (rank(f, h1) != u->dim()) throw Error(ErrorKind::NotEpi, "h1 is not onto U2");

  DirectSum square = direct_sum(u, u);
  Submodule graph = graph_of(square, n1, h1);
  Submodule complement = square.second();
  GraphComplement out{square, graph, complement, std::nullopt};
  if (!is_internal_direct_sum(f, out.graph, out.complement))
    throw Error(ErrorKind::CertificateFailed, "graph and U2 do not form a direct sum");
  // Epi from U1 onto U2 in finite dimension is injective too.
  if (rank(f, h1) == n1.dim()) {
    Submodule u1 = out.square.first();
    if (is_internal_direct_sum(f, out.graph, u1)) out.alternative = u1;
  }
  return out;
}

}  // namespace modlift
