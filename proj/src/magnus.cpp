#include "magnus.hpp"

#include <cstdlib>

namespace ord3 {

MagnusSeries::MagnusSeries(int degree) : degree_(degree) {
  if (degree < 1) throw InvalidInput("truncation degree must be >= 1");
  terms_.emplace(Monomial{}, 1);
}

MagnusSeries MagnusSeries::power(const VarId& var, long e, int degree) {
  MagnusSeries s(degree);
  if (e == 0) return s;
  // (1 + X)^e = sum_k binom(e, k) X^k, with binom(-n, k) = (-1)^k binom(n + k - 1, k).
  const unsigned long n = static_cast<unsigned long>(std::labs(e));
  Monomial mono;
  for (int k = 1; k <= degree; ++k) {
    if (e > 0 && static_cast<unsigned long>(k) > n) break;
    mono.push_back(var);
    mpz_class c;
    if (e > 0) {
      mpz_bin_uiui(c.get_mpz_t(), n, static_cast<unsigned long>(k));
    } else {
      mpz_bin_uiui(c.get_mpz_t(), n + static_cast<unsigned long>(k) - 1,
                   static_cast<unsigned long>(k));
      if (k % 2) c = -c;
    }
    s.terms_.emplace(mono, std::move(c));
  }
  return s;
}

mpz_class MagnusSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.degree_ != b.degree_) throw InvalidInput("series degree mismatch");
  MagnusSeries out(a.degree_);
  out.terms_.clear();
  for (const auto& [ma, ca] : a.terms_) {
    const std::size_t room = static_cast<std::size_t>(a.degree_) - ma.size();
    for (const auto& [mb, cb] : b.terms_) {
      if (mb.size() > room) break;  // terms are sorted by degree
      Monomial m;
      m.reserve(ma.size() + mb.size());
      m.insert(m.end(), ma.begin(), ma.end());
      m.insert(m.end(), mb.begin(), mb.end());
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), 0);
      it->second += ca * cb;
      if (sgn(it->second) == 0) out.terms_.erase(it);
    }
  }
  return out;
}

SeriesOrder series_compare(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.degree() != b.degree()) throw InvalidInput("series_compare: truncation degree mismatch");
  const MonomialLess less;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const auto ea = a.terms().end(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    // A monomial missing from one side has coefficient zero there.
    if (ib == eb || (ia != ea && less(ia->first, ib->first)))
      return sgn(ia->second) > 0 ? SeriesOrder::Greater : SeriesOrder::Less;
    if (ia == ea || less(ib->first, ia->first))
      return sgn(ib->second) > 0 ? SeriesOrder::Less : SeriesOrder::Greater;
    const int c = cmp(ia->second, ib->second);
    if (c != 0) return c > 0 ? SeriesOrder::Greater : SeriesOrder::Less;
    ++ia;
    ++ib;
  }
  return SeriesOrder::EqualAtTruncation;
}

MagnusSeries magnus_embed(const Word& w, int degree, const std::vector<long>& rank) {
  return magnus_embed(w, degree, [&](int g) -> VarId {
    return rank.empty() ? static_cast<long>(g) : rank.at(static_cast<std::size_t>(g));
  });
}

std::strong_ordering magnus_compare(const Word& w1, const Word& w2, const std::vector<long>& rank) {
  return magnus_compare(w1, w2, [&](int g) -> VarId {
    return rank.empty() ? static_cast<long>(g) : rank.at(static_cast<std::size_t>(g));
  });
}

}  // namespace ord3
