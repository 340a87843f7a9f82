#include "doctest.h"

#include <set>

#include "conesearch.hpp"

using namespace ord3;

namespace {

// Elements of a ball counted without the library: distinct normal forms of
// all words of length <= r.
std::size_t count_klein(int r) {
  std::set<std::pair<long, long>> seen;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      if (std::labs(a) + std::labs(b) <= r) seen.insert({a, b});
  return seen.size();
}

std::size_t count_free(int rank, int r) {
  std::size_t total = 1, layer = 2 * static_cast<std::size_t>(rank);
  for (int k = 1; k <= r; ++k) {
    total += layer;
    layer *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

ConeCertificate run(const EqualityOracle& o, int r, OrderMode mode) {
  return search_cone(build_ball(o, {}, r), mode);
}

}  // namespace

TEST_SUITE("conesearch") {
  TEST_CASE("ball sizes") {
    CHECK(build_ball(EqualityOracle::free(2), {}, 2).size() == 17);
    CHECK(build_ball(EqualityOracle::free_abelian(1), {}, 3).size() == 7);
    CHECK(build_ball(EqualityOracle::klein_bottle(), {}, 2).size() == 13);
    for (int r = 1; r <= 5; ++r) {
      CHECK(build_ball(EqualityOracle::klein_bottle(), {}, r).size() == count_klein(r));
      CHECK(build_ball(EqualityOracle::free(2), {}, r).size() == count_free(2, r));
    }
    CHECK(build_ball(EqualityOracle::free_abelian(2), {}, 2).size() == 13);
    CHECK(build_ball(EqualityOracle::free_abelian(1, 5), {}, 4).size() == 5);
  }

  TEST_CASE("ball structure") {
    GroupBall b = build_ball(EqualityOracle::klein_bottle(), {}, 4);
    CHECK(b.word(0).empty());
    for (int e = 0; e < static_cast<int>(b.size()); ++e) {
      CHECK(b.inverse(b.inverse(e)) == e);
      CHECK(b.find(b.word(e)) == e);
      CHECK(b.length(e) <= 4);
      if (e > 0) CHECK(b.length(e - 1) <= b.length(e));
    }
    const int m = b.find(Word::letter(0)), l = b.find(Word::letter(1));
    CHECK(b.product(m, l) == b.find(Word::letter(0) * Word::letter(1)));
    CHECK(b.conjugate(l, m) == b.inverse(m));
    CHECK(b.find(Word::letter(0, 5)) == -1);
    CHECK_THROWS_AS(build_ball(EqualityOracle::klein_bottle(), {"q"}, 2), InvalidInput);
    CHECK_THROWS_AS(build_ball(EqualityOracle::klein_bottle(), {}, 0), InvalidInput);
  }

  TEST_CASE("torsion") {
    GroupBall b = build_ball(EqualityOracle::free_abelian(1, 2), {}, 2);
    REQUIRE(b.torsion().has_value());
    CHECK(b.torsion()->order == 2);
    ConeCertificate c = search_cone(b, OrderMode::LeftOrder);
    REQUIRE(c.refuted());
    CHECK(verify_certificate(b, c));
    const auto& trace = std::get<Refutation>(c.result).trace;
    REQUIRE(trace.size() == 1);
    CHECK(std::holds_alternative<TorsionStep>(trace[0]));
    CHECK(render_certificate(b, c).find("torsion a order 2") != std::string::npos);

    GroupBall b3 = build_ball(EqualityOracle::free_abelian(1, 3), {}, 3);
    REQUIRE(b3.torsion().has_value());
    CHECK(b3.torsion()->order == 3);
    CHECK(search_cone(b3, OrderMode::LeftOrder).refuted());
    // a^2 = a^-1 already forces a^3 = 1 at radius 2
    CHECK(build_ball(EqualityOracle::free_abelian(1, 3), {}, 2).torsion().has_value());
    CHECK_FALSE(build_ball(EqualityOracle::free_abelian(1, 3), {}, 1).torsion().has_value());
  }

  TEST_CASE("klein bottle bi-order refutation") {
    GroupBall b = build_ball(EqualityOracle::klein_bottle(), {}, 3);
    ConeCertificate c = search_cone(b, OrderMode::BiOrder);
    REQUIRE(c.refuted());
    CHECK(verify_certificate(b, c));
    // some step cites l m l^-1 = m^-1
    const int m = b.find(Word::letter(0)), l = b.find(Word::letter(1));
    bool cites = false;
    for (const auto& step : std::get<Refutation>(c.result).trace) {
      std::optional<Citation> by;
      if (auto* d = std::get_if<DeriveStep>(&step)) by = d->by;
      if (auto* k = std::get_if<ConflictStep>(&step)) by = k->by;
      if (by && by->kind == Citation::Kind::Conj && b.conjugate(by->a, by->b) == b.inverse(by->b)) {
        cites = true;
        CHECK(((by->a == l || by->a == b.inverse(l)) && (by->b == m || by->b == b.inverse(m))));
      }
    }
    CHECK(cites);
    // Radius 2 cannot see the conjugate.
    CHECK_FALSE(run(EqualityOracle::klein_bottle(), 2, OrderMode::BiOrder).refuted());
  }

  TEST_CASE("klein bottle left orders are not refuted") {
    for (int r = 3; r <= 6; ++r) {
      GroupBall b = build_ball(EqualityOracle::klein_bottle(), {}, r);
      ConeCertificate c = search_cone(b, OrderMode::LeftOrder);
      CHECK_FALSE(c.refuted());
      CHECK(verify_certificate(b, c));
    }
  }

  TEST_CASE("orderable groups are not refuted") {
    for (int r = 1; r <= 3; ++r) {
      for (auto mode : {OrderMode::LeftOrder, OrderMode::BiOrder}) {
        GroupBall f = build_ball(EqualityOracle::free(2), {}, r);
        ConeCertificate cf = search_cone(f, mode);
        CHECK_FALSE(cf.refuted());
        CHECK(verify_certificate(f, cf));
        GroupBall z = build_ball(EqualityOracle::free_abelian(2), {}, r + 1);
        CHECK_FALSE(search_cone(z, mode).refuted());
      }
      GroupBall t = build_ball(EqualityOracle::torus_knot_23(), {}, r + 2);
      ConeCertificate ct = search_cone(t, OrderMode::LeftOrder);
      CHECK_FALSE(ct.refuted());
      CHECK(verify_certificate(t, ct));
    }
  }

  TEST_CASE("bsw refutation radius") {
    // frozen: first refuting radius for left orders
    constexpr int kBswRadius = 3;
    for (int r = 1; r < kBswRadius; ++r) CHECK_FALSE(run(EqualityOracle::bsw_amalgam(), r, OrderMode::LeftOrder).refuted());
    GroupBall b = build_ball(EqualityOracle::bsw_amalgam(), {}, kBswRadius);
    ConeCertificate c = search_cone(b, OrderMode::LeftOrder);
    REQUIRE(c.refuted());
    CHECK(verify_certificate(b, c));
    CHECK(b.size() == 253);
  }

  TEST_CASE("tampered certificates are rejected") {
    GroupBall b = build_ball(EqualityOracle::klein_bottle(), {}, 3);
    ConeCertificate c = search_cone(b, OrderMode::LeftOrder);
    REQUIRE_FALSE(c.refuted());
    auto& sign = std::get<ConsistentCone>(c.result).sign;
    const int m = b.find(Word::letter(0));
    ConeCertificate flipped = c;
    std::get<ConsistentCone>(flipped.result).sign[static_cast<std::size_t>(m)] *= -1;
    CHECK_FALSE(verify_certificate(b, flipped));
    ConeCertificate zeroed = c;
    std::get<ConsistentCone>(zeroed.result).sign[static_cast<std::size_t>(m)] = 0;
    CHECK_FALSE(verify_certificate(b, zeroed));
    ConeCertificate short_cone = c;
    std::get<ConsistentCone>(short_cone.result).sign.pop_back();
    CHECK_FALSE(verify_certificate(b, short_cone));
    CHECK(sign.size() == b.size());

    ConeCertificate r = search_cone(b, OrderMode::BiOrder);
    REQUIRE(r.refuted());
    auto& trace = std::get<Refutation>(r.result).trace;
    ConeCertificate absent = r;
    auto& atrace = std::get<Refutation>(absent.result).trace;
    bool replaced = false;
    const int far = static_cast<int>(b.size()) - 1;
    for (auto& step : atrace)
      if (auto* d = std::get_if<DeriveStep>(&step)) {
        d->by = Citation{Citation::Kind::Product, far, far};
        replaced = true;
        break;
      }
    if (!replaced)
      for (auto& step : atrace)
        if (auto* k = std::get_if<ConflictStep>(&step)) {
          k->by = Citation{Citation::Kind::Product, far, far};
          replaced = true;
        }
    REQUIRE(replaced);
    CHECK_FALSE(verify_certificate(b, absent));

    ConeCertificate truncated = r;
    std::get<Refutation>(truncated.result).trace.pop_back();
    CHECK_FALSE(verify_certificate(b, truncated));
    ConeCertificate wrong_mode = r;
    wrong_mode.mode = OrderMode::LeftOrder;
    CHECK_FALSE(verify_certificate(b, wrong_mode));
    CHECK_FALSE(trace.empty());
  }

  TEST_CASE("refutations persist at larger radii") {
    for (int r = 3; r <= 5; ++r) {
      GroupBall b = build_ball(EqualityOracle::klein_bottle(), {}, r);
      ConeCertificate c = search_cone(b, OrderMode::BiOrder);
      CHECK(c.refuted());
      CHECK(verify_certificate(b, c));
    }
    for (int r = 2; r <= 4; ++r) CHECK(run(EqualityOracle::free_abelian(1, 2), r, OrderMode::LeftOrder).refuted());
    GroupBall b4 = build_ball(EqualityOracle::bsw_amalgam(), {}, 4);
    ConeCertificate c4 = search_cone(b4, OrderMode::LeftOrder);
    CHECK(c4.refuted());
    CHECK(verify_certificate(b4, c4));
  }

  TEST_CASE("determinism") {
    GroupBall b1 = build_ball(EqualityOracle::bsw_amalgam(), {}, 3);
    GroupBall b2 = build_ball(EqualityOracle::bsw_amalgam(), {}, 3);
    CHECK(render_certificate(b1, search_cone(b1, OrderMode::LeftOrder)) ==
          render_certificate(b2, search_cone(b2, OrderMode::LeftOrder)));
    GroupBall k = build_ball(EqualityOracle::klein_bottle(), {}, 5);
    CHECK(render_certificate(k, search_cone(k, OrderMode::LeftOrder)) ==
          render_certificate(k, search_cone(k, OrderMode::LeftOrder)));
  }
}
