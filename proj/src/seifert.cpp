#include "seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homology.hpp"

namespace ord3 {

void SeifertInvariants::validate() const {
  for (const auto& c : cones) {
    if (c.alpha < 2) throw InvalidInput("cone order alpha must be >= 2");
    if (c.beta <= 0 || c.beta >= c.alpha) throw InvalidInput("cone invariant needs 0 < beta < alpha");
    if (std::gcd(c.alpha, c.beta) != 1) throw InvalidInput("cone invariant needs gcd(alpha, beta) = 1");
  }
}

mpq_class chi_orb(const SeifertInvariants& inv) {
  mpq_class chi = inv.g >= 0 ? mpq_class(2 - 2 * inv.g) : mpq_class(2 + inv.g);
  for (const auto& c : inv.cones) chi -= 1 - mpq_class(1, c.alpha);
  chi.canonicalize();
  return chi;
}

mpq_class euler_number(const SeifertInvariants& inv) {
  mpq_class s = inv.b;
  for (const auto& c : inv.cones) s += mpq_class(c.beta, c.alpha);
  s.canonicalize();
  return -s;
}

Presentation seifert_presentation(const SeifertInvariants& inv) {
  inv.validate();
  Presentation p;
  const long k = std::labs(inv.g);
  const long n = static_cast<long>(inv.cones.size());
  if (inv.g >= 0) {
    for (long i = 1; i <= k; ++i) {
      p.generators.push_back("a" + std::to_string(i));
      p.generators.push_back("b" + std::to_string(i));
    }
  } else {
    for (long i = 1; i <= k; ++i) p.generators.push_back("a" + std::to_string(i));
  }
  const int first_cone = static_cast<int>(p.generators.size());
  for (long j = 1; j <= n; ++j) p.generators.push_back("c" + std::to_string(j));
  const int h = static_cast<int>(p.generators.size());
  p.generators.push_back("h");

  const auto L = [](int g, long e = 1) { return Word::letter(g, e); };

  // Fibre relations: commutators with h, or h inverted by the cross-cap loops.
  for (int x = 0; x < h; ++x) {
    const bool flips = inv.g < 0 && x < first_cone;
    p.relators.push_back(L(x) * L(h) * L(x, -1) * L(h, flips ? 1 : -1));
  }
  for (long j = 0; j < n; ++j) {
    const auto& c = inv.cones[static_cast<std::size_t>(j)];
    p.relators.push_back(L(first_cone + static_cast<int>(j), c.alpha) * L(h, c.beta));
  }
  Word product;
  if (inv.g >= 0) {
    for (long i = 0; i < k; ++i) {
      const int a = static_cast<int>(2 * i), b = a + 1;
      product *= L(a) * L(b) * L(a, -1) * L(b, -1);
    }
  } else {
    for (long i = 0; i < k; ++i) product *= L(static_cast<int>(i), 2);
  }
  for (long j = 0; j < n; ++j) product *= L(first_cone + static_cast<int>(j));
  product *= L(h, -inv.b);
  p.relators.push_back(product);
  return p;
}

bool pi1_is_finite(const SeifertInvariants& inv) {
  inv.validate();
  return sgn(chi_orb(inv)) > 0 && sgn(euler_number(inv)) != 0;
}

namespace {

struct ConeSearch {
  const std::vector<Cone>& cones;

  // beta / alpha < num / m
  static bool below(const Cone& c, long num, long m) { return c.beta * m < num * c.alpha; }

  std::optional<FoliationWitness> run() const {
    const std::size_t n = cones.size();
    long max_alpha = 0;
    for (const auto& c : cones) max_alpha = std::max(max_alpha, c.alpha);
    for (long m = 2; m <= max_alpha; ++m) {
      for (long a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            FoliationWitness w{a, m, std::vector<long>(n, 1)};
            w.numerators[i] = a;
            w.numerators[j] = m - a;
            bool ok = true;
            for (std::size_t t = 0; t < n && ok; ++t) ok = below(cones[t], w.numerators[t], m);
            if (ok) return w;
          }
        }
      }
    }
    return std::nullopt;
  }
};

std::vector<Cone> reversed_cones(const std::vector<Cone>& cones) {
  std::vector<Cone> out;
  out.reserve(cones.size());
  for (const auto& c : cones) out.push_back({c.alpha, c.alpha - c.beta});
  return out;
}

}  // namespace

bool check_foliation_witness(const std::vector<Cone>& cones, const FoliationWitness& w) {
  const std::size_t n = cones.size();
  if (w.m < 2 || w.a <= 0 || w.a >= w.m || std::gcd(w.a, w.m) != 1) return false;
  if (w.numerators.size() != n || n < 2) return false;
  std::vector<long> expect(n, 1), got = w.numerators;
  expect[0] = w.a;
  expect[1] = w.m - w.a;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect != got) return false;
  for (std::size_t t = 0; t < n; ++t) {
    const mpq_class lhs(cones[t].beta, cones[t].alpha), rhs(w.numerators[t], w.m);
    if (!(lhs < rhs)) return false;
  }
  return true;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& inv) {
  if (inv.g != 0) throw InvalidInput("orientation reversal is only provided for g = 0");
  return {0, -static_cast<long>(inv.cones.size()) - inv.b, reversed_cones(inv.cones)};
}

Verdict has_horizontal_foliation(const SeifertInvariants& inv) {
  inv.validate();
  const long n = static_cast<long>(inv.cones.size());
  if (inv.g != 0 || n < 3) throw InvalidInput("horizontal foliation criterion needs g = 0 and n >= 3");
  if (-(n - 2) <= inv.b && inv.b <= -2) return {Answer::Yes, Reason::FoliationClause1, std::nullopt};
  if (inv.b == -1) {
    if (auto w = ConeSearch{inv.cones}.run()) return {Answer::Yes, Reason::FoliationClause2, w};
  } else if (inv.b == -(n - 1)) {
    const auto rev = reversed_cones(inv.cones);
    if (auto w = ConeSearch{rev}.run()) return {Answer::Yes, Reason::FoliationClause3, w};
  }
  return {Answer::No, Reason::FoliationNoClause, std::nullopt};
}

namespace {

bool trivial_group(const AbelianInvariants& h) { return h.betti == 0 && h.torsion.empty(); }

Verdict lo_invariants(const SeifertInvariants& inv) {
  inv.validate();
  const auto h1 = abelianization(seifert_presentation(inv));
  if (pi1_is_finite(inv)) {
    // Over S^2 with at most two cone points the space is a lens space, which
    // is S^3 exactly when H_1 vanishes.
    if (inv.g == 0 && inv.cones.size() <= 2 && trivial_group(h1))
      return {Answer::Yes, Reason::S3, std::nullopt};
    return {Answer::No, Reason::FiniteNontrivialPi1, std::nullopt};
  }
  if (h1.betti > 0) return {Answer::Yes, Reason::B1Positive, std::nullopt};
  if (inv.g != 0) return {Answer::No, Reason::BaseNotSphere, std::nullopt};
  if (inv.cones.size() < 3)
    throw Error("infinite rational homology sphere over S^2 with fewer than three cone points");
  auto f = has_horizontal_foliation(inv);
  if (f.yes()) return {Answer::Yes, Reason::HorizontalFoliation, f.witness};
  return {Answer::No, Reason::NoHorizontalFoliation, std::nullopt};
}

Verdict lo_special(const SpecialSeifert& s) {
  switch (s.kind) {
    case SpecialKind::S3:
      return {Answer::Yes, Reason::S3, std::nullopt};
    case SpecialKind::S1xS2:
    case SpecialKind::S1twistS2:
    case SpecialKind::SolidTorus:
    case SpecialKind::SolidKleinBottle:
      return {Answer::Yes, Reason::B1Positive, std::nullopt};
    case SpecialKind::P2xS1:
      return {Answer::No, Reason::P2xS1, std::nullopt};
    case SpecialKind::OrientableCircleBundle:
      if (s.base_genus >= 0) return lo_invariants({s.base_genus, -s.euler, {}});
      // Over a non-orientable base the Euler class lives in Z/2; the trivial
      // bundle over P^2 is P^2 x S^1, every other case has b1 > 0.
      if (s.base_genus == -1 && s.euler % 2 == 0) return {Answer::No, Reason::P2xS1, std::nullopt};
      return {Answer::Yes, Reason::B1Positive, std::nullopt};
    case SpecialKind::BoundedSeifert:
      if (s.b1_positive) return {Answer::Yes, Reason::B1Positive, std::nullopt};
      return {Answer::No, Reason::BoundedB1Zero, std::nullopt};
  }
  throw Error("unknown special Seifert descriptor");
}

Verdict bo_invariants(const SeifertInvariants& inv) {
  inv.validate();
  if (!inv.cones.empty()) return {Answer::No, Reason::ExceptionalFibres, std::nullopt};
  if (inv.g >= 1) return {Answer::Yes, Reason::CircleBundle, std::nullopt};
  if (inv.g < 0) return {Answer::No, Reason::FibreReversed, std::nullopt};
  if (inv.b == 0) return {Answer::Yes, Reason::S1xS2, std::nullopt};
  if (inv.b == 1 || inv.b == -1) return {Answer::Yes, Reason::S3, std::nullopt};
  return {Answer::No, Reason::ExcludedBase, std::nullopt};
}

Verdict bo_special(const SpecialSeifert& s) {
  switch (s.kind) {
    case SpecialKind::S3: return {Answer::Yes, Reason::S3, std::nullopt};
    case SpecialKind::S1xS2: return {Answer::Yes, Reason::S1xS2, std::nullopt};
    case SpecialKind::S1twistS2: return {Answer::Yes, Reason::S1TwistedS2, std::nullopt};
    case SpecialKind::SolidTorus: return {Answer::Yes, Reason::SolidTorus, std::nullopt};
    case SpecialKind::SolidKleinBottle: return {Answer::Yes, Reason::SolidKleinBottle, std::nullopt};
    case SpecialKind::P2xS1: return {Answer::No, Reason::ExcludedBase, std::nullopt};
    case SpecialKind::OrientableCircleBundle:
      // Over S^2 only |e| <= 1 survives: S^1 x S^2 and S^3.
      if (s.base_genus == 0) {
        if (s.euler == 0) return {Answer::Yes, Reason::S1xS2, std::nullopt};
        if (s.euler == 1 || s.euler == -1) return {Answer::Yes, Reason::S3, std::nullopt};
        return {Answer::No, Reason::ExcludedBase, std::nullopt};
      }
      if (s.base_genus == -1 || s.base_genus == -2) return {Answer::No, Reason::ExcludedBase, std::nullopt};
      return {Answer::Yes, Reason::CircleBundle, std::nullopt};
    case SpecialKind::BoundedSeifert:
      return {Answer::No, Reason::NotListed, std::nullopt};
  }
  throw Error("unknown special Seifert descriptor");
}

}  // namespace

Verdict is_left_orderable(const SeifertDescriptor& m) {
  return std::visit(
      [](const auto& d) -> Verdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, SeifertInvariants>) return lo_invariants(d);
        else return lo_special(d);
      },
      m);
}

Verdict is_biorderable(const SeifertDescriptor& m) {
  return std::visit(
      [](const auto& d) -> Verdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, SeifertInvariants>) return bo_invariants(d);
        else return bo_special(d);
      },
      m);
}

Verdict is_virtually_biorderable(const SeifertDescriptor& m) {
  if (const auto* inv = std::get_if<SeifertInvariants>(&m)) inv->validate();
  return {Answer::Yes, Reason::VirtuallyBiorderable, std::nullopt};
}

}  // namespace ord3
