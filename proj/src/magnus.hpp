#pragma once

// Truncated Magnus expansion into noncommutative integer power series and the
// bi-ordering of free groups it induces.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <variant>
#include <vector>

#include "words.hpp"

namespace ord3 {

struct Lattice {
  long i = 0;
  long j = 0;
  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;
};

// Plain indices order by value, lattice pairs lexicographically.
using VarId = std::variant<long, Lattice>;
using Monomial = std::vector<VarId>;

// Degree first, then lexicographic in the VarId order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class SeriesOrder { Less, EqualAtTruncation, Greater };

class MagnusSeries {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialLess>;

  // The constant series 1.
  explicit MagnusSeries(int degree);

  // Series of x^e where x maps to `var`: (1 + X)^e truncated.
  static MagnusSeries power(const VarId& var, long e, int degree);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  mpz_class coefficient(const Monomial& m) const;

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  Terms terms_;
};

// Compare by the coefficient of the first monomial at which the two series
// differ. Throws InvalidInput on a truncation-degree mismatch.
SeriesOrder series_compare(const MagnusSeries& a, const MagnusSeries& b);

template <typename Gen, typename VarMap>
MagnusSeries magnus_embed(const BasicWord<Gen>& w, int degree, VarMap&& var_of) {
  MagnusSeries out(degree);
  for (const auto& s : w.syllables()) out = out * MagnusSeries::power(var_of(s.gen), s.exp, degree);
  return out;
}

// Free words: generator g maps to the plain variable `rank[g]` (identity when
// `rank` is empty).
MagnusSeries magnus_embed(const Word& w, int degree, const std::vector<long>& rank = {});

// Doubles the truncation degree until the series differ; the loop ends
// because the Magnus map is injective on the free group.
template <typename Gen, typename VarMap>
std::strong_ordering magnus_compare(const BasicWord<Gen>& w1, const BasicWord<Gen>& w2,
                                    VarMap&& var_of) {
  if (w1 == w2) return std::strong_ordering::equal;
  for (int degree = 2;; degree *= 2) {
    const SeriesOrder o =
        series_compare(magnus_embed(w1, degree, var_of), magnus_embed(w2, degree, var_of));
    if (o == SeriesOrder::Less) return std::strong_ordering::less;
    if (o == SeriesOrder::Greater) return std::strong_ordering::greater;
  }
}

std::strong_ordering magnus_compare(const Word& w1, const Word& w2,
                                    const std::vector<long>& rank = {});

}  // namespace ord3
