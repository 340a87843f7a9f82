#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "support.hpp"
#include "words.hpp"

using namespace ord3;
using testing_support::random_word;

namespace {

const std::vector<std::string> kGens{"x1", "y1", "x2", "y2"};
Word W(std::string_view s) { return parse_word(s, kGens); }

// Homomorphisms of the amalgam onto subgroups of S_5, found by brute force.
// Equal elements must have equal images under all of them.
using Perm = std::array<int, 5>;

Perm compose(const Perm& p, const Perm& q) {  // p then q
  Perm r{};
  for (int i = 0; i < 5; ++i) r[i] = q[p[i]];
  return r;
}
Perm inverse(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 5; ++i) r[p[i]] = i;
  return r;
}
Perm power(Perm p, int n) {
  if (n < 0) {
    p = inverse(p);
    n = -n;
  }
  Perm r{0, 1, 2, 3, 4};
  for (int i = 0; i < n; ++i) r = compose(r, p);
  return r;
}

using Hom = std::array<Perm, 4>;

Perm image(const Hom& h, const Word& w) {
  Perm r{0, 1, 2, 3, 4};
  for (const auto& s : w.syllables()) r = compose(r, power(h[s.gen], static_cast<int>(s.exp)));
  return r;
}

std::vector<Hom> find_homs(std::size_t limit) {
  std::vector<Perm> all;
  Perm p{0, 1, 2, 3, 4};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Perm id{0, 1, 2, 3, 4};
  std::vector<Hom> out;
  for (const Perm& x1 : all)
    for (const Perm& y1 : all) {
      if (power(x1, 2) != power(y1, 3)) continue;
      if (x1 == id && y1 == id) continue;
      const Perm c1 = compose(x1, inverse(y1));
      for (const Perm& x2 : all) {
        if (power(x2, 2) != c1) continue;
        // x1^2 = x2 y2^-1  =>  y2 = x1^-2 x2
        const Perm y2 = compose(power(x1, -2), x2);
        if (power(x2, 2) != power(y2, 3)) continue;
        out.push_back({x1, y1, x2, y2});
        if (out.size() >= limit) return out;
      }
    }
  return out;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("amalgam examples") {
    CHECK(amalgam_equal(W("x1^2"), W("x2*y2^-1")));
    CHECK(amalgam_equal(W("x2^2"), W("x1*y1^-1")));
    CHECK(amalgam_equal(W("x1"), W("x1")));
    CHECK_FALSE(amalgam_equal(W("x1"), W("y1")));
    CHECK_FALSE(amalgam_equal(W("x1"), W("x2")));
    for (const Word& r : bsw_presentation().relators) CHECK(amalgam_nf(r) == AmalgamNF{});
  }

  TEST_CASE("amalgam normal form structure") {
    std::mt19937 rng(21);
    for (int t = 0; t < 300; ++t) {
      AmalgamNF nf = amalgam_nf(random_word(rng, 4, 8));
      for (std::size_t i = 0; i + 1 < nf.reps.size(); ++i) CHECK(nf.reps[i].side != nf.reps[i + 1].side);
      for (const auto& r : nf.reps) {
        CHECK_FALSE(r.word.empty());
        TorusKnotNF local{0, r.word};
        CHECK_FALSE(bsw_edge_membership(local, r.side).has_value());
      }
    }
  }

  TEST_CASE("amalgam equality is an equivalence and left invariant") {
    std::mt19937 rng(22);
    const auto rels = bsw_presentation().relators;
    std::vector<Word> words;
    for (int t = 0; t < 200; ++t) words.push_back(random_word(rng, 4, 6));
    // Add equal pairs by inserting conjugated relators.
    std::uniform_int_distribution<int> rel_d(0, 3), pick(0, 199);
    std::vector<int> source;
    for (int t = 0; t < 100; ++t) {
      source.push_back(pick(rng));
      const Word u = words[source.back()];
      Word g = random_word(rng, 4, 3);
      Word r = rels[rel_d(rng)];
      words.push_back(u * g * (rel_d(rng) % 2 ? r : r.inverse()) * g.inverse());
    }
    std::vector<AmalgamNF> nfs;
    for (const Word& w : words) nfs.push_back(amalgam_nf(w));
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(amalgam_equal(words[i], words[i]));
    }
    int equal_pairs = 0;
    for (int t = 0; t < 2000; ++t) {
      const std::size_t i = rng() % words.size(), j = rng() % words.size(), k = rng() % words.size();
      const bool ij = amalgam_equal(words[i], words[j]);
      CHECK(ij == amalgam_equal(words[j], words[i]));
      if (ij && amalgam_equal(words[j], words[k])) CHECK(amalgam_equal(words[i], words[k]));
      if (ij) {
        ++equal_pairs;
        Word g = random_word(rng, 4, 5);
        CHECK(amalgam_equal(g * words[i], g * words[j]));
      }
    }
    for (int t = 0; t < 100; ++t) CHECK(nfs[200 + t] == nfs[source[t]]);
    CHECK(equal_pairs > 0);
  }

  TEST_CASE("relator insertion preserves the normal form") {
    std::mt19937 rng(23);
    const auto rels = bsw_presentation().relators;
    for (int t = 0; t < 400; ++t) {
      Word u = random_word(rng, 4, 6), v = random_word(rng, 4, 6), g = random_word(rng, 4, 4);
      Word r = rels[t % 4];
      CHECK(amalgam_nf(u * v) == amalgam_nf(u * g * r * g.inverse() * v));
      CHECK(amalgam_nf(u * v) == amalgam_nf(u * g * r.inverse() * g.inverse() * v));
    }
  }

  TEST_CASE("finite quotients agree with the normal form") {
    const std::vector<Hom> homs = find_homs(40);
    REQUIRE(homs.size() >= 5);
    std::mt19937 rng(24);
    const auto rels = bsw_presentation().relators;
    for (const Hom& h : homs)
      for (const Word& r : rels) CHECK(image(h, r) == Perm{0, 1, 2, 3, 4});
    int separated = 0;
    for (int t = 0; t < 400; ++t) {
      Word u = random_word(rng, 4, 6), v = random_word(rng, 4, 6);
      bool images_equal = true;
      for (const Hom& h : homs) images_equal = images_equal && image(h, u) == image(h, v);
      if (amalgam_equal(u, v)) CHECK(images_equal);
      if (!images_equal) {
        CHECK_FALSE(amalgam_equal(u, v));
        ++separated;
      }
    }
    CHECK(separated > 100);
  }

  TEST_CASE("equality oracles") {
    EqualityOracle f = EqualityOracle::free(2);
    CHECK(f.equal(parse_word("a*b*b^-1", f.generators()), parse_word("a", f.generators())));
    CHECK_FALSE(f.equal(parse_word("a*b", f.generators()), parse_word("b*a", f.generators())));
    EqualityOracle z = EqualityOracle::free_abelian(2);
    CHECK(z.equal(parse_word("a*b", z.generators()), parse_word("b*a", z.generators())));
    EqualityOracle z3 = EqualityOracle::free_abelian(1, 3);
    CHECK(z3.equal(parse_word("a^3", z3.generators()), Word{}));
    CHECK(z3.equal(parse_word("a^-1", z3.generators()), parse_word("a^2", z3.generators())));
    CHECK_THROWS_AS(EqualityOracle::free_abelian(1, 1), InvalidInput);
    CHECK_THROWS_AS(EqualityOracle::free(0), InvalidInput);
    EqualityOracle k = EqualityOracle::klein_bottle();
    CHECK(k.equal(parse_word("l*m*l^-1", k.generators()), parse_word("m^-1", k.generators())));
    EqualityOracle t = EqualityOracle::torus_knot_23();
    CHECK(t.equal(parse_word("x^2", t.generators()), parse_word("y^3", t.generators())));
    EqualityOracle b = EqualityOracle::bsw_amalgam();
    CHECK(b.generators() == kGens);
    CHECK(b.equal(W("x1^2"), W("x2*y2^-1")));
    CHECK_THROWS_AS(f.canonical(Word::letter(5)), InvalidInput);
  }
}
