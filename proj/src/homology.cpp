#include "homology.hpp"

#include <algorithm>
#include <utility>

namespace ord3 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (entries.size() != rows * cols) throw InvalidInput("IntMatrix: entry count != rows * cols");
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = entries[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_block(t)) break;
      if (sgn(d_(t, t)) < 0) negate_row(t);
    }
    return {std::move(d_), std::move(u_), std::move(v_)};
  }

 private:
  // Leaves d(t,t) dividing every entry of the trailing block, with row t and
  // column t otherwise zero. Returns false when the trailing block is zero.
  bool reduce_block(std::size_t t) {
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (sgn(d_(i, t)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (sgn(d_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(t, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (sgn(d_(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < d_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (sgn(d_(i, j)) == 0) continue;
        mpz_class mag = abs(d_(i, j));
        if (!found || mag < best) {
          best = mag;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += k * d_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += k * d_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix d_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& s : p.relators[r].syllables()) {
      if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= p.generators.size())
        throw InvalidInput("relator uses an undeclared generator");
      m(r, static_cast<std::size_t>(s.gen)) += s.exp;
    }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const SmithForm snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::size_t rank = 0;
  const std::size_t diag = std::min(snf.d.rows(), snf.d.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    const mpz_class& di = snf.d(i, i);
    if (sgn(di) == 0) continue;
    ++rank;
    if (di > 1) inv.torsion.push_back(di);
  }
  inv.betti = p.generators.size() - rank;
  return inv;
}

BettiVerdict lo_via_betti(const Presentation& p) {
  return abelianization(p).betti >= 1 ? BettiVerdict::LeftOrderableIfP2Irreducible
                                      : BettiVerdict::Inconclusive;
}

}  // namespace ord3
