#pragma once

// Bi-ordering of G = <a, b, c | a b a^-1 b^-1 = c^2>, the group of the
// connected sum of three projective planes. G is an extension of Z^2 (exponent
// sums in a and b) by the free group F on x_{i,j} = a^i b^j c b^-j a^-i; the
// order is lex on Z^2 pulled back, with the Magnus order on F.

#include <compare>
#include <string_view>
#include <utility>
#include <vector>

#include "magnus.hpp"
#include "words.hpp"

namespace ord3 {

// Words over a = 0, b = 1, c = 2.
using SurfaceElement = Word;
using KernelWord = BasicWord<Lattice>;

const std::vector<std::string>& surface_generators();
SurfaceElement parse_surface_word(std::string_view text);

// Exponent sums in a and b.
std::pair<long, long> psi(const SurfaceElement& g);

// Reidemeister-Schreier rewrite of an element of the kernel of psi in the
// free basis x_{i,j}. Throws InvalidInput when psi(g) != (0, 0).
KernelWord schreier_rewrite(const SurfaceElement& g);

// The word a^i b^j c b^-j a^-i.
SurfaceElement kernel_generator(long i, long j);

struct SurfaceNormalForm {
  KernelWord kernel;
  std::pair<long, long> exponents;  // g = kernel * a^m b^n
  friend bool operator==(const SurfaceNormalForm&, const SurfaceNormalForm&) = default;
};

SurfaceNormalForm surface_normal_form(const SurfaceElement& g);

// Ordering of g1 relative to g2.
std::strong_ordering surface_compare(const SurfaceElement& g1, const SurfaceElement& g2);

}  // namespace ord3
