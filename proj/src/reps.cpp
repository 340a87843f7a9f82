#include "reps.hpp"

#include <cmath>
#include <cstdlib>

#include <gmpxx.h>

namespace ord3 {

Mat2R Mat2R::inverse() const {
  const double e = det();
  return {d / e, -b / e, -c / e, a / e};
}

double Mat2R::frobenius() const { return std::sqrt(a * a + b * b + c * c + d * d); }

Mat2R operator*(const Mat2R& x, const Mat2R& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2R operator-(const Mat2R& x, const Mat2R& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

namespace {

// Internal evaluation runs at 256 bits: the radicands have a simple zero at
// the golden ratio and the longitude image has entries of order s^4, so
// residuals computed in double lose all their digits.
constexpr mp_bitcnt_t kBits = 256;
using HP = mpf_class;

HP hp(double v) { return HP(v, kBits); }

// get_d truncates; pick the nearer of the two neighbours.
double nearest(const HP& x) {
  const double d = x.get_d();
  if (!std::isfinite(d)) return d;
  const double other = std::nextafter(d, x > d ? HUGE_VAL : -HUGE_VAL);
  const HP e1 = abs(x - hp(d)), e2 = abs(x - hp(other));
  return e2 < e1 ? other : d;
}

struct M2 {
  HP a{0, kBits}, b{0, kBits}, c{0, kBits}, d{0, kBits};

  static M2 identity() {
    M2 m;
    m.a = 1;
    m.d = 1;
    return m;
  }
  M2 inverse() const {
    const HP e = a * d - b * c;
    M2 r;
    r.a = d / e;
    r.b = -b / e;
    r.c = -c / e;
    r.d = a / e;
    return r;
  }
  friend M2 operator*(const M2& x, const M2& y) {
    M2 r;
    r.a = x.a * y.a + x.b * y.c;
    r.b = x.a * y.b + x.b * y.d;
    r.c = x.c * y.a + x.d * y.c;
    r.d = x.c * y.b + x.d * y.d;
    return r;
  }
  friend M2 operator-(const M2& x, const M2& y) {
    M2 r;
    r.a = x.a - y.a;
    r.b = x.b - y.b;
    r.c = x.c - y.c;
    r.d = x.d - y.d;
    return r;
  }
  double frobenius() const {
    const HP n = sqrt(a * a + b * b + c * c + d * d);
    return nearest(n);
  }
  Mat2R to_double() const { return {nearest(a), nearest(b), nearest(c), nearest(d)}; }
};

struct Rep {
  HP s{0, kBits};
  HP t{0, kBits};
  M2 x, y;
};

void check_domain(double s) {
  if (!(s >= kGoldenRatio - 1e-12) || !std::isfinite(s))
    throw DomainError("s must be at least (1 + sqrt 5) / 2");
}

HP golden() {
  HP five(5, kBits);
  HP g = (1 + sqrt(five)) / 2;
  return g;
}

HP t_radicand(const HP& s) {
  const HP u = s - 1 / s;
  HP r = u * u * u * u + 2 * u * u - 3;
  return r;
}

// The parameter actually used: within rounding distance of the endpoint
// (|radicand| < 1e-12) it is the golden ratio itself.
HP effective_s(double s) {
  check_domain(s);
  HP v = hp(s);
  const HP rad = t_radicand(v);
  if (abs(rad) < 1e-12) return golden();
  if (rad < 0) throw DomainError("s must be at least (1 + sqrt 5) / 2");
  return v;
}

Rep representation(double s_in) {
  Rep r;
  r.s = effective_s(s_in);
  const HP& s = r.s;
  HP rad = t_radicand(s);
  if (rad < 0) rad = 0;
  const HP u = s - 1 / s;
  r.t = (1 + sqrt(rad)) / (2 * u);
  const HP plus = (s + 1 / s) / 2, minus = (s - 1 / s) / 2;
  r.x.a = s;
  r.x.d = 1 / s;
  r.y.a = plus + r.t;
  r.y.b = minus + r.t;
  r.y.c = minus - r.t;
  r.y.d = plus - r.t;
  return r;
}

M2 evaluate_hp(const Word& w, const Rep& rep) {
  M2 out = M2::identity();
  const M2 xi = rep.x.inverse(), yi = rep.y.inverse();
  for (const auto& syl : w.syllables()) {
    const M2& f = syl.gen == 0 ? (syl.exp > 0 ? rep.x : xi) : (syl.exp > 0 ? rep.y : yi);
    for (long k = 0; k < std::labs(syl.exp); ++k) out = out * f;
  }
  return out;
}

// zeta_B - 1, so that g keeps its digits near the endpoint.
HP zeta_b_minus_one(const HP& s) {
  const HP s2 = s * s, s4 = s2 * s2, s6 = s4 * s2, s8 = s4 * s4;
  HP rad = s8 - 2 * s6 - s4 - 2 * s2 + 1;
  if (rad < 0) rad = 0;
  HP z = ((s8 - s6 - 2 * s4 - s2 + 1) + (s4 - 1) * sqrt(rad)) / (2 * s4) - 1;
  return z;
}

const std::vector<std::string>& xy() {
  static const std::vector<std::string> g{"x", "y"};
  return g;
}

}  // namespace

double t_of_s(double s) { return nearest(representation(s).t); }

Fig8Matrices phi_matrices(double s) {
  const Rep r = representation(s);
  return {r.x.to_double(), r.y.to_double()};
}

Mat2R evaluate(const Word& w, const Fig8Matrices& m) {
  Mat2R out;
  const Mat2R xi = m.x.inverse(), yi = m.y.inverse();
  for (const auto& syl : w.syllables()) {
    const Mat2R& f = syl.gen == 0 ? (syl.exp > 0 ? m.x : xi) : (syl.exp > 0 ? m.y : yi);
    for (long k = 0; k < std::labs(syl.exp); ++k) out = out * f;
  }
  return out;
}

const Word& fig8_w() {
  static const Word w = parse_word("x*y^-1*x^-1*y", xy());
  return w;
}

const Word& fig8_longitude() {
  static const Word w = parse_word("y*x^-1*y^-1*x^2*y^-1*x^-1*y", xy());
  return w;
}

double relation_residual(double s) {
  const Rep r = representation(s);
  const M2 w = evaluate_hp(fig8_w(), r);
  return (w * r.x - r.y * w).frobenius();
}

double commutator_residual(double s) {
  const Rep r = representation(s);
  const M2 A = r.x, B = evaluate_hp(fig8_longitude(), r);
  return (A * B * A.inverse() * B.inverse() - M2::identity()).frobenius();
}

ZetaValues zeta_values(double s) {
  const HP e = effective_s(s);
  const HP zb = zeta_b_minus_one(e) + 1;
  return {nearest(e), nearest(zb)};
}

double g_of_s(double s) {
  const HP e = effective_s(s);
  if (e <= golden()) return 0.0;
  const double num = std::log1p(nearest(zeta_b_minus_one(e)));
  return -num / std::log(nearest(e));
}

bool shares_eigenvector(double s, double tol) {
  const auto m = phi_matrices(s);
  // phi(x) is diagonal with distinct eigenvalues, so a common eigenvector is
  // a coordinate axis.
  return std::fabs(m.y.c) < tol || std::fabs(m.y.b) < tol;
}

double filling_value(double s, long p, long q) {
  const HP e = effective_s(s);
  return std::exp(static_cast<double>(p) * std::log(nearest(e)) +
                  static_cast<double>(q) * std::log1p(nearest(zeta_b_minus_one(e))));
}

std::vector<SlopeRoot> solve_slope(long p, long q, const SlopeOptions& opts) {
  if (q <= 0) throw InvalidInput("slope denominator must be positive");
  if (std::labs(p) >= 4 * q) throw DomainError("slope must lie strictly between -4 and 4");
  if (!(opts.grid > 0) || !(opts.s_max > kGoldenRatio) || !(opts.tolerance > 0))
    throw InvalidInput("invalid grid, s_max or tolerance");
  const double target = -static_cast<double>(std::labs(p)) / static_cast<double>(q);
  const long rp = -std::labs(p);
  const auto f = [&](double s) { return g_of_s(s) - target; };

  std::vector<SlopeRoot> roots;
  const auto push = [&](double s) { roots.push_back({s, g_of_s(s), rp, q}); };

  const long steps = static_cast<long>(std::ceil((opts.s_max - kGoldenRatio) / opts.grid));
  double lo = kGoldenRatio, flo = f(lo);
  if (flo == 0) push(lo);
  for (long k = 1; k <= steps; ++k) {
    const double hi = std::min(kGoldenRatio + static_cast<double>(k) * opts.grid, opts.s_max);
    const double fhi = f(hi);
    if (fhi == 0) {
      push(hi);
    } else if (flo != 0 && (flo < 0) != (fhi < 0)) {
      double a = lo, b = hi, fa = flo;
      while (b - a > opts.tolerance) {
        const double mid = a + (b - a) / 2;
        const double fm = f(mid);
        if (fm == 0) {
          a = b = mid;
          break;
        }
        if ((fa < 0) == (fm < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      push(a + (b - a) / 2);
    }
    lo = hi;
    flo = fhi;
  }
  return roots;
}

}  // namespace ord3
