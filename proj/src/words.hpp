#pragma once

// Words, presentations and exact equality oracles for the group families
// used by the cone search.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ord3 {

template <typename Gen>
struct Syllable {
  Gen gen{};
  long exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word: adjacent syllables have distinct generators and no
// exponent is zero. Every mutating operation re-establishes this.
template <typename Gen>
class BasicWord {
 public:
  using Gen_type = Gen;
  using syllable_type = Syllable<Gen>;

  BasicWord() = default;
  explicit BasicWord(const std::vector<syllable_type>& raw) {
    for (const auto& s : raw) append(s.gen, s.exp);
  }

  static BasicWord letter(Gen g, long e = 1) {
    BasicWord w;
    w.append(g, e);
    return w;
  }

  const std::vector<syllable_type>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }

  // Number of letters, i.e. the sum of |exponent|.
  long length() const noexcept {
    long n = 0;
    for (const auto& s : syl_) n += std::labs(s.exp);
    return n;
  }

  void append(Gen g, long e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({g, e});
  }

  BasicWord& operator*=(const BasicWord& rhs) {
    for (const auto& s : rhs.syl_) append(s.gen, s.exp);
    return *this;
  }
  friend BasicWord operator*(BasicWord lhs, const BasicWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  BasicWord inverse() const {
    BasicWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  BasicWord pow(long n) const {
    BasicWord base = n < 0 ? inverse() : *this;
    BasicWord out;
    for (long i = 0; i < std::labs(n); ++i) out *= base;
    return out;
  }

  // Exponent sum of one generator.
  long exponent_sum(const Gen& g) const {
    long n = 0;
    for (const auto& s : syl_)
      if (s.gen == g) n += s.exp;
    return n;
  }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;
  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;

 private:
  std::vector<syllable_type> syl_;
};

using Word = BasicWord<int>;

// Reduces an arbitrary syllable sequence (zero exponents allowed).
Word free_reduce(const std::vector<Syllable<int>>& raw);
inline Word free_reduce(const Word& w) { return w; }

// Grammar: term ("*" term)*, term = gen | gen "^" int. The literal "1" is
// accepted as the identity term. Generator ids index into `generators`.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);
std::string render_word(const Word& w, const std::vector<std::string>& generators);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// File format: "gens: a, b" then any number of "rel: <word>" lines.
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

// Three-relator presentation of the Dehn fillings M(p,q,m) of the punctured
// torus bundle with monodromy [[m,1],[-1,0]]. Emitter only.
Presentation rss_presentation(long p, long q, long m);

// ---------------------------------------------------------------------------
// Klein bottle  <m, l | l m l^-1 = m^-1>, elements m^a l^b.

struct KleinNF {
  long a = 0;
  long b = 0;
  friend bool operator==(const KleinNF&, const KleinNF&) = default;
};

// Generator ids: m = 0, l = 1.
KleinNF klein_nf(const Word& w);
KleinNF klein_mul(KleinNF lhs, KleinNF rhs);

// ---------------------------------------------------------------------------
// Trefoil group <x, y | x^2 = y^3>, h = x^2 central. Elements are h^k times an
// alternating lift word over {x, y, y^2}.

enum class TorusLetter : std::uint8_t { X = 0, Y = 1, Y2 = 2 };

struct TorusKnotNF {
  long h_exponent = 0;
  std::vector<TorusLetter> word;
  friend bool operator==(const TorusKnotNF&, const TorusKnotNF&) = default;
};

TorusKnotNF torus_knot_nf(const Word& w, int x_gen = 0, int y_gen = 1);
// The group element h^k * word written back as a word over (x_gen, y_gen).
Word torus_knot_word(const TorusKnotNF& nf, int x_gen = 0, int y_gen = 1);

// Edge subgroup <h, c> with c = x y^-1. Returns (p, q) with element h^p c^q.
// `side` only selects which vertex group of the amalgam the caller means and
// must be 1 or 2; the coordinates are local to that vertex group.
std::optional<std::pair<long, long>> bsw_edge_membership(const TorusKnotNF& nf, int side);

// ---------------------------------------------------------------------------
// Amalgam G1 *_{Z^2} G2 of two trefoil groups, h1 = c2 and c1 = h2.
// Generator ids: x1 = 0, y1 = 1, x2 = 2, y2 = 3.

struct AmalgamNF {
  struct Rep {
    int side = 1;
    std::vector<TorusLetter> word;
    friend bool operator==(const Rep&, const Rep&) = default;
  };
  std::vector<Rep> reps;
  // Edge element h1^p c1^q (= c2^p h2^q), flushed to the right.
  long p = 0;
  long q = 0;
  friend bool operator==(const AmalgamNF&, const AmalgamNF&) = default;
};

AmalgamNF amalgam_nf(const Word& w);
bool amalgam_equal(const Word& w1, const Word& w2);
Presentation bsw_presentation();

// ---------------------------------------------------------------------------

enum class Family { Free, FreeAbelian, KleinBottle, TorusKnot23, BswAmalgam };

// Exact decision procedure for equality in one of a closed list of groups.
// `canonical` maps a word to a key; equal keys iff equal group elements.
class EqualityOracle {
 public:
  using Key = std::vector<long>;

  static EqualityOracle free(int rank);
  // modulus 0 gives Z^rank, otherwise (Z/modulus)^rank.
  static EqualityOracle free_abelian(int rank, long modulus = 0);
  static EqualityOracle klein_bottle();
  static EqualityOracle torus_knot_23();
  static EqualityOracle bsw_amalgam();

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return static_cast<int>(generators_.size()); }
  long modulus() const noexcept { return modulus_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::string describe() const;

  Key canonical(const Word& w) const;
  bool equal(const Word& w1, const Word& w2) const {
    return canonical(w1) == canonical(w2);
  }

 private:
  EqualityOracle(Family f, std::vector<std::string> gens, long modulus)
      : family_(f), generators_(std::move(gens)), modulus_(modulus) {}

  Family family_;
  std::vector<std::string> generators_;
  long modulus_ = 0;
};

}  // namespace ord3
