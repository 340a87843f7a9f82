#pragma once

// The one-parameter family phi_s of SL(2, R) representations of the
// figure-eight knot group <x, y | w x = y w>, w = x y^-1 x^-1 y, defined for
// s >= (1 + sqrt 5) / 2, and the Dehn-filling slopes it realizes.

#include <utility>
#include <vector>

#include "words.hpp"

namespace ord3 {

inline constexpr double kGoldenRatio = 1.6180339887498948482;

struct Mat2R {
  double a = 1, b = 0, c = 0, d = 1;

  static Mat2R identity() { return {}; }
  double det() const { return a * d - b * c; }
  Mat2R inverse() const;
  double frobenius() const;
  friend Mat2R operator*(const Mat2R& x, const Mat2R& y);
  friend Mat2R operator-(const Mat2R& x, const Mat2R& y);
};

// Throws DomainError for s below the golden ratio.
double t_of_s(double s);

struct Fig8Matrices {
  Mat2R x;
  Mat2R y;
};
Fig8Matrices phi_matrices(double s);

// Image of a word over x = 0, y = 1.
Mat2R evaluate(const Word& w, const Fig8Matrices& m);
const Word& fig8_w();
const Word& fig8_longitude();

// Frobenius norm of phi(w) phi(x) - phi(y) phi(w).
double relation_residual(double s);
// Frobenius norm of A B A^-1 B^-1 - I for A = phi(meridian), B = phi(longitude).
double commutator_residual(double s);

struct ZetaValues {
  double zeta_a;
  double zeta_b;
};
// Closed forms for the (1,1) entries of the meridian and longitude images.
ZetaValues zeta_values(double s);

// -ln|zeta_b| / ln|zeta_a|, with value 0 at the golden ratio.
double g_of_s(double s);

// True when phi(x) and phi(y) have a common eigenvector, to tolerance tol.
bool shares_eigenvector(double s, double tol = 1e-6);

struct SlopeOptions {
  double grid = 1e-3;
  double s_max = 50.0;
  double tolerance = 1e-12;
};

struct SlopeRoot {
  double s;
  double g;
  long p;  // realized slope p/q
  long q;
};

// Roots s of g(s) = -|p/q|, sorted ascending. g maps onto (-4, 0], so each
// root realizes the slope -|p/q|; |p/q| itself follows by amphicheirality.
// Throws DomainError unless |p/q| < 4, InvalidInput unless q > 0.
std::vector<SlopeRoot> solve_slope(long p, long q, const SlopeOptions& opts = {});

// |zeta_a^p zeta_b^q| at s.
double filling_value(double s, long p, long q);

}  // namespace ord3
