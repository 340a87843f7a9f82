#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "words.hpp"

namespace ord3 {

// Row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Exact determinant (square matrices only), fraction-free elimination.
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

// U * A * V = D. Pivot is the smallest nonzero |entry|, ties broken by
// row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

struct AbelianInvariants {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // each >= 2, each divides the next
};

// Rows are relators, columns generators, entries exponent sums.
IntMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

enum class BettiVerdict { LeftOrderableIfP2Irreducible, Inconclusive };

// b1 > 0 suffices for left-orderability of a compact connected prime
// 3-manifold group; the topological hypothesis is the caller's.
BettiVerdict lo_via_betti(const Presentation& p);

}  // namespace ord3
