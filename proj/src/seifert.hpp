#pragma once

// Closed oriented Seifert fibred spaces M(g; b, beta_1/alpha_1, ..., beta_n/alpha_n)
// and a handful of named manifolds outside that notation.
//
// g >= 0 is an orientable base of genus g; g = -k is the connected sum of k
// projective planes.

#include <gmpxx.h>

#include <variant>
#include <vector>

#include "verdict.hpp"
#include "words.hpp"

namespace ord3 {

struct Cone {
  long alpha = 2;
  long beta = 1;
  friend bool operator==(const Cone&, const Cone&) = default;
};

struct SeifertInvariants {
  long g = 0;
  long b = 0;
  std::vector<Cone> cones;

  // Throws InvalidInput unless alpha >= 2, 0 < beta < alpha, gcd = 1.
  void validate() const;
  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

enum class SpecialKind {
  S3,
  S1xS2,
  S1twistS2,
  SolidTorus,
  SolidKleinBottle,
  P2xS1,
  OrientableCircleBundle,  // uses base_genus, euler
  BoundedSeifert,          // uses b1_positive
};

struct SpecialSeifert {
  SpecialKind kind = SpecialKind::S3;
  long base_genus = 0;  // same convention as SeifertInvariants::g
  long euler = 0;
  bool b1_positive = true;
};

using SeifertDescriptor = std::variant<SeifertInvariants, SpecialSeifert>;

mpq_class chi_orb(const SeifertInvariants& inv);
mpq_class euler_number(const SeifertInvariants& inv);

// Generators a1, b1, ..., (or a1, ... for g < 0), c1..cn for the cone
// fibres, h for the regular fibre.
Presentation seifert_presentation(const SeifertInvariants& inv);

bool pi1_is_finite(const SeifertInvariants& inv);

// Requires g = 0 and n >= 3.
Verdict has_horizontal_foliation(const SeifertInvariants& inv);

// Replays a witness against the cones in exact arithmetic: the numerators
// are a permutation of (a, m - a, 1, ...), gcd(a, m) = 1, and every
// beta_j / alpha_j < numerators[j] / m.
bool check_foliation_witness(const std::vector<Cone>& cones, const FoliationWitness& w);

// M(0; b, ...) with reversed orientation: M(0; -n - b, (alpha - beta)/alpha, ...).
SeifertInvariants reverse_orientation(const SeifertInvariants& inv);

Verdict is_left_orderable(const SeifertDescriptor& m);
Verdict is_biorderable(const SeifertDescriptor& m);
Verdict is_virtually_biorderable(const SeifertDescriptor& m);

}  // namespace ord3
