#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ord3 {

enum class Answer { Yes, No };

// Clause tags. Every verdict names the theorem clause that decided it; the
// strings returned by reason_tag are stable CLI output.
enum class Reason {
  // left-orderability of Seifert fibred spaces
  S3,
  B1Positive,
  FiniteNontrivialPi1,
  HorizontalFoliation,
  NoHorizontalFoliation,
  BaseNotSphere,
  P2xS1,
  BoundedB1Zero,
  // horizontal foliations of M(0; b, ...)
  FoliationClause1,
  FoliationClause2,
  FoliationClause3,
  FoliationNoClause,
  // bi-orderability of Seifert fibred spaces
  S1xS2,
  S1TwistedS2,
  SolidTorus,
  SolidKleinBottle,
  CircleBundle,
  ExceptionalFibres,
  FibreReversed,
  ExcludedBase,
  NotListed,
  // Sol manifolds
  NonemptyBoundary,
  NonOrientable,
  TorusBundle,
  BundleOverCircle,
  OrientableUnionOfTwistedIBundles,
  PositiveEigenvalue,
  NegativeEigenvalues,
  TwistedIBundleOverKleinBottle,
  KleinBottleSubgroup,
  SolMonodromy,
  NotSolMonodromy,
  // virtual bi-orderability (Seifert and Sol)
  VirtuallyBiorderable,
};

const char* reason_tag(Reason r) noexcept;

// Witness for clauses (2)/(3) of the horizontal-foliation criterion:
// bound j is numerators[j] / m with numerators a permutation of
// (a, m - a, 1, ..., 1), and beta_j / alpha_j < numerators[j] / m.
struct FoliationWitness {
  long a = 0;
  long m = 0;
  std::vector<long> numerators;
  friend bool operator==(const FoliationWitness&, const FoliationWitness&) = default;
};

std::string render_witness(const FoliationWitness& w);

struct Verdict {
  Answer answer = Answer::No;
  Reason reason = Reason::NotListed;
  std::optional<FoliationWitness> witness;

  bool yes() const noexcept { return answer == Answer::Yes; }
};

}  // namespace ord3
