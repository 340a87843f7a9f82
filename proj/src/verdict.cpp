#include "verdict.hpp"

namespace ord3 {

const char* reason_tag(Reason r) noexcept {
  switch (r) {
    case Reason::S3: return "s3";
    case Reason::B1Positive: return "b1-positive";
    case Reason::FiniteNontrivialPi1: return "finite-nontrivial-pi1";
    case Reason::HorizontalFoliation: return "horizontal-foliation";
    case Reason::NoHorizontalFoliation: return "no-horizontal-foliation";
    case Reason::BaseNotSphere: return "base-not-s2";
    case Reason::P2xS1: return "p2xs1";
    case Reason::BoundedB1Zero: return "bounded-b1-zero";
    case Reason::FoliationClause1: return "clause-1";
    case Reason::FoliationClause2: return "clause-2";
    case Reason::FoliationClause3: return "clause-3";
    case Reason::FoliationNoClause: return "no-clause";
    case Reason::S1xS2: return "s1xs2";
    case Reason::S1TwistedS2: return "s1-twisted-s2";
    case Reason::SolidTorus: return "solid-torus";
    case Reason::SolidKleinBottle: return "solid-klein-bottle";
    case Reason::CircleBundle: return "circle-bundle";
    case Reason::ExceptionalFibres: return "exceptional-fibres";
    case Reason::FibreReversed: return "fibre-reversed";
    case Reason::ExcludedBase: return "base-s2-p2-k";
    case Reason::NotListed: return "not-listed";
    case Reason::NonemptyBoundary: return "nonempty-boundary";
    case Reason::NonOrientable: return "non-orientable";
    case Reason::TorusBundle: return "torus-bundle";
    case Reason::BundleOverCircle: return "bundle-over-circle";
    case Reason::OrientableUnionOfTwistedIBundles: return "orientable-union-twisted-i-bundles";
    case Reason::PositiveEigenvalue: return "positive-eigenvalue";
    case Reason::NegativeEigenvalues: return "negative-eigenvalues";
    case Reason::TwistedIBundleOverKleinBottle: return "twisted-i-bundle-over-klein-bottle";
    case Reason::KleinBottleSubgroup: return "klein-bottle-subgroup";
    case Reason::SolMonodromy: return "sol-monodromy";
    case Reason::NotSolMonodromy: return "not-sol-monodromy";
    case Reason::VirtuallyBiorderable: return "virtually-biorderable";
  }
  return "?";
}

std::string render_witness(const FoliationWitness& w) {
  std::string out = "m=" + std::to_string(w.m) + " a=" + std::to_string(w.a) + " bounds=";
  for (std::size_t i = 0; i < w.numerators.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.numerators[i]) + '/' + std::to_string(w.m);
  }
  return out;
}

}  // namespace ord3
