#pragma once

// Closed and bounded Sol manifolds, described by the data the orderability
// verdicts depend on.

#include <optional>

#include "verdict.hpp"

namespace ord3 {

class GL2Z {
 public:
  // Throws InvalidInput unless ad - bc = +-1.
  GL2Z(long a, long b, long c, long d);

  long a() const noexcept { return a_; }
  long b() const noexcept { return b_; }
  long c() const noexcept { return c_; }
  long d() const noexcept { return d_; }
  long det() const noexcept { return a_ * d_ - b_ * c_; }
  long trace() const noexcept { return a_ + d_; }

  GL2Z inverse() const;
  friend GL2Z operator*(const GL2Z& x, const GL2Z& y);
  friend bool operator==(const GL2Z&, const GL2Z&) = default;

 private:
  long a_, b_, c_, d_;
};

bool is_sol_monodromy(const GL2Z& A);

enum class SolVariant {
  TorusBundle,
  KleinBottleBundle,
  UnionTorusGlue,  // orientable union of two twisted I-bundles over K
  UnionKleinGlue,  // non-orientable union of two twisted I-bundles over K
  Boundary,
};

enum class BoundaryKind { Ball, SolidTorus, SolidKlein, TorusXInterval, TwistedIBundleOverK };

class SolManifold {
 public:
  static SolManifold torus_bundle(const GL2Z& A);
  static SolManifold klein_bottle_bundle();
  static SolManifold union_torus_glue(const GL2Z& A);
  static SolManifold union_klein_glue();
  static SolManifold boundary(BoundaryKind kind);

  SolVariant variant() const noexcept { return variant_; }
  const std::optional<GL2Z>& monodromy() const noexcept { return monodromy_; }
  BoundaryKind boundary_kind() const noexcept { return boundary_; }

 private:
  SolManifold(SolVariant v, std::optional<GL2Z> A, BoundaryKind k)
      : variant_(v), monodromy_(A), boundary_(k) {}
  SolVariant variant_;
  std::optional<GL2Z> monodromy_;
  BoundaryKind boundary_;
};

Verdict sol_is_left_orderable(const SolManifold& m);
Verdict sol_is_biorderable(const SolManifold& m);
Verdict sol_is_virtually_biorderable(const SolManifold& m);

}  // namespace ord3
