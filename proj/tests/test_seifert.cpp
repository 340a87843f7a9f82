#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "homology.hpp"
#include "seifert.hpp"

using namespace ord3;

namespace {

SeifertInvariants M(long g, long b, std::vector<Cone> cones = {}) { return {g, b, std::move(cones)}; }
SpecialSeifert special(SpecialKind k) { return SpecialSeifert{k, 0, 0, true}; }

// Clause (2) by brute force over a wider range of m than the library uses.
bool clause2_brute(const std::vector<Cone>& cones) {
  long max_alpha = 0;
  for (const auto& c : cones) max_alpha = std::max(max_alpha, c.alpha);
  const std::size_t n = cones.size();
  for (long m = 2; m <= 2 * max_alpha + 2; ++m)
    for (long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          bool ok = true;
          for (std::size_t k = 0; k < n && ok; ++k) {
            const long num = k == i ? a : (k == j ? m - a : 1);
            ok = mpq_class(cones[k].beta, cones[k].alpha) < mpq_class(num, m);
          }
          if (ok) return true;
        }
    }
  return false;
}

bool foliation_brute(const SeifertInvariants& inv) {
  const long n = static_cast<long>(inv.cones.size());
  if (-(n - 2) <= inv.b && inv.b <= -2) return true;
  if (inv.b == -1 && clause2_brute(inv.cones)) return true;
  if (inv.b == -(n - 1)) {
    std::vector<Cone> rev;
    for (const auto& c : inv.cones) rev.push_back({c.alpha, c.alpha - c.beta});
    if (clause2_brute(rev)) return true;
  }
  return false;
}

SeifertInvariants random_g0(std::mt19937& rng, int min_n, int max_n, int max_alpha) {
  std::uniform_int_distribution<int> nd(min_n, max_n);
  std::uniform_int_distribution<long> ad(2, max_alpha);
  SeifertInvariants inv;
  const int n = nd(rng);
  while (static_cast<int>(inv.cones.size()) < n) {
    const long alpha = ad(rng);
    const long beta = 1 + static_cast<long>(rng() % static_cast<unsigned long>(alpha - 1));
    if (std::gcd(alpha, beta) == 1) inv.cones.push_back({alpha, beta});
  }
  std::uniform_int_distribution<long> bd(-n, 1);
  inv.b = bd(rng);
  return inv;
}

struct GoldenRow {
  SeifertInvariants inv;
  const char* chi;
  const char* euler;
};

// chi and e frozen from an independent rational computation.
const std::vector<GoldenRow> kGolden = {
    {M(0, -1, {{2, 1}, {3, 1}, {5, 1}}), "1/30", "-1/30"},
    {M(0, -1, {{2, 1}, {3, 1}, {7, 1}}), "-1/42", "1/42"},
    {M(0, -2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}), "0", "0"},
    {M(0, 0), "2", "0"},
    {M(0, -1), "2", "1"},
    {M(0, 3), "2", "-3"},
    {M(1, 0), "0", "0"},
    {M(2, 5), "-2", "-5"},
    {M(-1, 0), "1", "0"},
    {M(-2, 1), "0", "-1"},
    {M(0, -1, {{2, 1}, {3, 2}, {5, 4}}), "1/30", "-29/30"},
    {M(0, -2, {{3, 1}, {3, 1}, {3, 2}}), "0", "2/3"},
    {M(0, -1, {{2, 1}, {4, 1}, {4, 1}}), "0", "0"},
    {M(0, -1, {{3, 1}, {3, 1}, {3, 1}}), "0", "0"},
    {M(1, -1, {{2, 1}}), "-1/2", "1/2"},
    {M(0, -2, {{2, 1}, {2, 1}, {5, 3}}), "1/5", "2/5"},
    {M(-1, -1, {{2, 1}, {3, 1}}), "-1/6", "1/6"},
    {M(0, -3, {{5, 2}, {7, 3}, {4, 1}, {9, 5}}), "-1633/1260", "1721/1260"},
    {M(3, 2, {{7, 6}}), "-34/7", "-20/7"},
    {M(0, -1, {{2, 1}, {3, 1}, {6, 1}}), "0", "0"},
    {M(0, -1, {{2, 1}, {2, 1}, {7, 3}}), "1/7", "-3/7"},
    {M(0, 1, {{3, 1}, {5, 2}}), "8/15", "-26/15"},
};

bool abelianization_trivial(const SeifertInvariants& inv) {
  const auto a = abelianization(seifert_presentation(inv));
  return a.betti == 0 && a.torsion.empty();
}

std::string rel(const Presentation& p, std::size_t i) { return render_word(p.relators[i], p.generators); }

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(M(0, 0, {{2, 2}}).validate(), InvalidInput);
    CHECK_THROWS_AS(M(0, 0, {{1, 0}}).validate(), InvalidInput);
    CHECK_THROWS_AS(M(0, 0, {{4, 2}}).validate(), InvalidInput);
    CHECK_THROWS_AS(M(0, 0, {{3, 0}}).validate(), InvalidInput);
    CHECK_NOTHROW(M(0, 0, {{3, 2}}).validate());
  }

  TEST_CASE("golden orbifold arithmetic") {
    for (const auto& row : kGolden) {
      CAPTURE(row.chi);
      CHECK(chi_orb(row.inv) == mpq_class(row.chi));
      CHECK(euler_number(row.inv) == mpq_class(row.euler));
    }
  }

  TEST_CASE("presentations") {
    Presentation lens = seifert_presentation(M(0, 3));
    CHECK(lens.generators == std::vector<std::string>{"h"});
    REQUIRE(lens.relators.size() == 1);
    CHECK(rel(lens, 0) == "h^-3");

    Presentation p = seifert_presentation(M(0, -1, {{2, 1}, {3, 1}, {5, 1}}));
    CHECK(p.generators == std::vector<std::string>{"c1", "c2", "c3", "h"});
    REQUIRE(p.relators.size() == 7);
    CHECK(rel(p, 0) == "c1*h*c1^-1*h^-1");
    CHECK(rel(p, 3) == "c1^2*h");
    CHECK(rel(p, 4) == "c2^3*h");
    CHECK(rel(p, 5) == "c3^5*h");
    CHECK(rel(p, 6) == "c1*c2*c3*h");

    Presentation t = seifert_presentation(M(1, 0));
    CHECK(t.generators == std::vector<std::string>{"a1", "b1", "h"});
    REQUIRE(t.relators.size() == 3);
    CHECK(rel(t, 0) == "a1*h*a1^-1*h^-1");
    CHECK(rel(t, 1) == "b1*h*b1^-1*h^-1");
    CHECK(rel(t, 2) == "a1*b1*a1^-1*b1^-1");

    Presentation k = seifert_presentation(M(-2, 1));
    CHECK(k.generators == std::vector<std::string>{"a1", "a2", "h"});
    CHECK(rel(k, 0) == "a1*h*a1^-1*h");
    CHECK(rel(k, 2) == "a1^2*a2^2*h^-1");

    // Poincare sphere is a homology sphere; M(0;0) has H1 = Z.
    CHECK(abelianization_trivial(M(0, -1, {{2, 1}, {3, 1}, {5, 1}})));
    CHECK(abelianization(seifert_presentation(M(0, 0))).betti == 1);
    // |H1| = |e| * prod alpha for a spherical base
    auto h = abelianization(seifert_presentation(M(0, -2, {{2, 1}, {2, 1}, {5, 3}})));
    CHECK(h.betti == 0);
    mpz_class order = 1;
    for (auto& d : h.torsion) order *= d;
    CHECK(order == 8);
  }

  TEST_CASE("finite fundamental group") {
    CHECK(pi1_is_finite(M(0, -1, {{2, 1}, {3, 1}, {5, 1}})));
    CHECK_FALSE(pi1_is_finite(M(0, -1, {{2, 1}, {3, 1}, {7, 1}})));
    CHECK_FALSE(pi1_is_finite(M(0, 0)));
    CHECK(pi1_is_finite(M(0, 3)));
    CHECK(pi1_is_finite(M(-1, 1)));
    CHECK_FALSE(pi1_is_finite(M(-1, 0)));
    CHECK_FALSE(pi1_is_finite(M(0, -1, {{2, 1}, {3, 1}, {6, 1}})));
  }

  TEST_CASE("horizontal foliation examples") {
    Verdict v1 = has_horizontal_foliation(M(0, -2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}));
    CHECK(v1.yes());
    CHECK(v1.reason == Reason::FoliationClause1);

    Verdict v2 = has_horizontal_foliation(M(0, -1, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK(v2.yes());
    CHECK(v2.reason == Reason::FoliationClause2);
    REQUIRE(v2.witness.has_value());
    CHECK(v2.witness->m == 5);
    CHECK(v2.witness->a == 2);
    CHECK(v2.witness->numerators == std::vector<long>{3, 2, 1});
    CHECK(render_witness(*v2.witness) == "m=5 a=2 bounds=3/5,2/5,1/5");
    CHECK(check_foliation_witness({{2, 1}, {3, 1}, {7, 1}}, *v2.witness));

    Verdict v3 = has_horizontal_foliation(M(0, -1, {{2, 1}, {3, 1}, {5, 1}}));
    CHECK_FALSE(v3.yes());
    CHECK(v3.reason == Reason::FoliationNoClause);

    Verdict v4 = has_horizontal_foliation(reverse_orientation(M(0, -1, {{2, 1}, {3, 1}, {7, 1}})));
    CHECK(v4.yes());
    CHECK(v4.reason == Reason::FoliationClause3);

    CHECK_THROWS_AS(has_horizontal_foliation(M(0, -1, {{2, 1}, {3, 1}})), InvalidInput);
    CHECK_THROWS_AS(has_horizontal_foliation(M(1, -1, {{2, 1}, {3, 1}, {5, 1}})), InvalidInput);
  }

  TEST_CASE("witness replay rejects bad witnesses") {
    const std::vector<Cone> cones{{2, 1}, {3, 1}, {7, 1}};
    CHECK_FALSE(check_foliation_witness(cones, {2, 5, {2, 3, 1}}));
    CHECK_FALSE(check_foliation_witness(cones, {2, 4, {2, 2, 1}}));
    CHECK_FALSE(check_foliation_witness(cones, {2, 5, {3, 2}}));
    CHECK_FALSE(check_foliation_witness(cones, {2, 5, {3, 2, 2}}));
  }

  TEST_CASE("foliation decider agrees with brute force") {
    std::mt19937 rng(61);
    for (int t = 0; t < 600; ++t) {
      SeifertInvariants inv = random_g0(rng, 3, 5, 9);
      const Verdict v = has_horizontal_foliation(inv);
      CAPTURE(inv.b);
      CHECK(v.yes() == foliation_brute(inv));
      if (v.witness) {
        const auto& cones = v.reason == Reason::FoliationClause3 ? reverse_orientation(inv).cones : inv.cones;
        CHECK(check_foliation_witness(cones, *v.witness));
      }
    }
  }

  TEST_CASE("foliation is invariant under permuting cones") {
    std::mt19937 rng(62);
    for (int t = 0; t < 300; ++t) {
      SeifertInvariants inv = random_g0(rng, 3, 5, 9);
      SeifertInvariants perm = inv;
      std::shuffle(perm.cones.begin(), perm.cones.end(), rng);
      const Verdict a = has_horizontal_foliation(inv), b = has_horizontal_foliation(perm);
      CHECK(a.yes() == b.yes());
      CHECK(a.reason == b.reason);
    }
  }

  TEST_CASE("orientation reversal swaps clauses 2 and 3") {
    std::mt19937 rng(63);
    int swapped = 0;
    for (int t = 0; t < 400; ++t) {
      SeifertInvariants inv = random_g0(rng, 3, 5, 9);
      inv.b = -1;
      const SeifertInvariants rev = reverse_orientation(inv);
      CHECK(rev.b == -static_cast<long>(inv.cones.size()) + 1);
      CHECK(reverse_orientation(rev) == inv);
      const Verdict a = has_horizontal_foliation(inv), b = has_horizontal_foliation(rev);
      CHECK(a.yes() == b.yes());
      if (a.yes()) {
        ++swapped;
        CHECK(a.reason == Reason::FoliationClause2);
        CHECK(b.reason == Reason::FoliationClause3);
        CHECK(a.witness == b.witness);
      }
    }
    CHECK(swapped > 20);
  }

  TEST_CASE("left-orderability examples") {
    Verdict p = is_left_orderable(M(0, -1, {{2, 1}, {3, 1}, {5, 1}}));
    CHECK_FALSE(p.yes());
    CHECK(p.reason == Reason::FiniteNontrivialPi1);
    Verdict b = is_left_orderable(M(0, -1, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK(b.yes());
    CHECK(b.reason == Reason::HorizontalFoliation);
    Verdict r = is_left_orderable(special(SpecialKind::P2xS1));
    CHECK_FALSE(r.yes());
    CHECK(r.reason == Reason::P2xS1);

    CHECK(is_left_orderable(M(0, -1)).reason == Reason::S3);
    CHECK(is_left_orderable(M(0, -1)).yes());
    CHECK(is_left_orderable(special(SpecialKind::S3)).yes());
    CHECK(is_left_orderable(M(0, 0)).reason == Reason::B1Positive);
    CHECK(is_left_orderable(M(1, 0)).yes());
    CHECK_FALSE(is_left_orderable(M(0, 5)).yes());
    // RP^3 # RP^3 style base: non-orientable base, b1 = 0, infinite group
    Verdict np = is_left_orderable(M(-1, -1, {{2, 1}, {3, 1}}));
    CHECK(np.reason == Reason::BaseNotSphere);
    CHECK_FALSE(np.yes());
    SpecialSeifert bounded{SpecialKind::BoundedSeifert, 0, 0, false};
    CHECK_FALSE(is_left_orderable(bounded).yes());
    bounded.b1_positive = true;
    CHECK(is_left_orderable(bounded).yes());
    for (auto k : {SpecialKind::S1xS2, SpecialKind::S1twistS2, SpecialKind::SolidTorus,
                   SpecialKind::SolidKleinBottle})
      CHECK(is_left_orderable(special(k)).yes());
  }

  TEST_CASE("left-orderability is consistent with finiteness and foliations") {
    for (const auto& row : kGolden) {
      const SeifertInvariants& inv = row.inv;
      const Verdict lo = is_left_orderable(inv);
      if (pi1_is_finite(inv) && !abelianization_trivial(inv)) CHECK_FALSE(lo.yes());
      const auto h1 = abelianization(seifert_presentation(inv));
      if (h1.betti > 0) CHECK(lo.yes());
      if (inv.g == 0 && h1.betti == 0 && !pi1_is_finite(inv) && inv.cones.size() >= 3)
        CHECK(lo.yes() == has_horizontal_foliation(inv).yes());
    }
    std::mt19937 rng(64);
    for (int t = 0; t < 300; ++t) {
      SeifertInvariants inv = random_g0(rng, 3, 4, 7);
      const auto h1 = abelianization(seifert_presentation(inv));
      const Verdict lo = is_left_orderable(inv);
      if (pi1_is_finite(inv)) {
        CHECK_FALSE(lo.yes());
      } else if (h1.betti > 0) {
        CHECK(lo.yes());
      } else {
        CHECK(lo.yes() == foliation_brute(inv));
      }
    }
  }

  TEST_CASE("bi-orderability examples") {
    Verdict a = is_biorderable(M(2, 5));
    CHECK(a.yes());
    CHECK(a.reason == Reason::CircleBundle);
    Verdict b = is_biorderable(M(0, -1, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK_FALSE(b.yes());
    CHECK(b.reason == Reason::ExceptionalFibres);
    Verdict c = is_biorderable(M(-2, 1));
    CHECK_FALSE(c.yes());
    CHECK(c.reason == Reason::FibreReversed);
    CHECK(is_biorderable(M(0, 0)).yes());
    CHECK(is_biorderable(M(0, 1)).yes());
    CHECK(is_biorderable(M(0, -1)).yes());
    CHECK_FALSE(is_biorderable(M(0, 2)).yes());
    for (auto k : {SpecialKind::S3, SpecialKind::S1xS2, SpecialKind::S1twistS2, SpecialKind::SolidTorus,
                   SpecialKind::SolidKleinBottle})
      CHECK(is_biorderable(special(k)).yes());
    CHECK_FALSE(is_biorderable(special(SpecialKind::P2xS1)).yes());
    CHECK(is_biorderable(SpecialSeifert{SpecialKind::OrientableCircleBundle, 3, 7, true}).yes());
    CHECK_FALSE(is_biorderable(SpecialSeifert{SpecialKind::OrientableCircleBundle, -1, 0, true}).yes());
    CHECK_FALSE(is_biorderable(SpecialSeifert{SpecialKind::OrientableCircleBundle, -2, 0, true}).yes());
    CHECK(is_biorderable(SpecialSeifert{SpecialKind::OrientableCircleBundle, -3, 0, true}).yes());
  }

  TEST_CASE("bi-orderable implies left-orderable") {
    for (const auto& row : kGolden)
      if (is_biorderable(row.inv).yes()) CHECK(is_left_orderable(row.inv).yes());
  }

  TEST_CASE("virtual bi-orderability") {
    CHECK(is_virtually_biorderable(M(0, -1, {{2, 1}, {3, 1}, {5, 1}})).yes());
    CHECK(is_virtually_biorderable(special(SpecialKind::P2xS1)).yes());
    CHECK(is_virtually_biorderable(special(SpecialKind::S3)).yes());
    for (const auto& row : kGolden) CHECK(is_virtually_biorderable(row.inv).yes());
  }
}
