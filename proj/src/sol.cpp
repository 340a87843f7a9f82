#include "sol.hpp"

#include <cstdlib>

#include "errors.hpp"

namespace ord3 {

GL2Z::GL2Z(long a, long b, long c, long d) : a_(a), b_(b), c_(c), d_(d) {
  const long det = a * d - b * c;
  if (det != 1 && det != -1) throw InvalidInput("matrix is not in GL(2, Z): determinant must be +-1");
}

GL2Z GL2Z::inverse() const {
  const long e = det();
  return {e * d_, -e * b_, -e * c_, e * a_};
}

GL2Z operator*(const GL2Z& x, const GL2Z& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

bool is_sol_monodromy(const GL2Z& A) {
  const long t = A.trace();
  // det -1: tr(A^2) = t^2 + 2 exceeds 2 iff t != 0.
  return A.det() == 1 ? std::labs(t) > 2 : t != 0;
}

SolManifold SolManifold::torus_bundle(const GL2Z& A) {
  if (!is_sol_monodromy(A)) throw InvalidInput("torus bundle monodromy is not Anosov");
  return {SolVariant::TorusBundle, A, BoundaryKind::Ball};
}

SolManifold SolManifold::klein_bottle_bundle() { return {SolVariant::KleinBottleBundle, std::nullopt, BoundaryKind::Ball}; }

SolManifold SolManifold::union_torus_glue(const GL2Z& A) {
  if (!is_sol_monodromy(A)) throw InvalidInput("gluing matrix does not give a Sol manifold");
  return {SolVariant::UnionTorusGlue, A, BoundaryKind::Ball};
}

SolManifold SolManifold::union_klein_glue() { return {SolVariant::UnionKleinGlue, std::nullopt, BoundaryKind::Ball}; }

SolManifold SolManifold::boundary(BoundaryKind kind) { return {SolVariant::Boundary, std::nullopt, kind}; }

Verdict sol_is_left_orderable(const SolManifold& m) {
  switch (m.variant()) {
    case SolVariant::Boundary: return {Answer::Yes, Reason::NonemptyBoundary, std::nullopt};
    case SolVariant::TorusBundle:
      return {Answer::Yes, m.monodromy()->det() == 1 ? Reason::TorusBundle : Reason::NonOrientable,
              std::nullopt};
    case SolVariant::KleinBottleBundle: return {Answer::Yes, Reason::BundleOverCircle, std::nullopt};
    case SolVariant::UnionKleinGlue: return {Answer::Yes, Reason::NonOrientable, std::nullopt};
    case SolVariant::UnionTorusGlue:
      return {Answer::No, Reason::OrientableUnionOfTwistedIBundles, std::nullopt};
  }
  throw Error("unknown Sol variant");
}

Verdict sol_is_biorderable(const SolManifold& m) {
  switch (m.variant()) {
    case SolVariant::Boundary:
      if (m.boundary_kind() == BoundaryKind::TwistedIBundleOverK)
        return {Answer::No, Reason::TwistedIBundleOverKleinBottle, std::nullopt};
      return {Answer::Yes, Reason::NonemptyBoundary, std::nullopt};
    case SolVariant::TorusBundle: {
      const GL2Z& A = *m.monodromy();
      // det -1: eigenvalues l and -1/l, one is positive. det 1: both share the
      // sign of the trace.
      if (A.det() == -1 || A.trace() > 2) return {Answer::Yes, Reason::PositiveEigenvalue, std::nullopt};
      return {Answer::No, Reason::NegativeEigenvalues, std::nullopt};
    }
    case SolVariant::KleinBottleBundle:
    case SolVariant::UnionKleinGlue:
    case SolVariant::UnionTorusGlue:
      return {Answer::No, Reason::KleinBottleSubgroup, std::nullopt};
  }
  throw Error("unknown Sol variant");
}

Verdict sol_is_virtually_biorderable(const SolManifold&) {
  return {Answer::Yes, Reason::VirtuallyBiorderable, std::nullopt};
}

}  // namespace ord3
