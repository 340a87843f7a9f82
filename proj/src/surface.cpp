#include "surface.hpp"

namespace ord3 {

namespace {

constexpr int kA = 0, kB = 1, kC = 2;

// Schreier generator of the a-edge from (i, j) to (i + 1, j), using the tree
// of all b-edges plus the a-edges on the row j = 0. Solving the rewritten
// relator at every vertex gives
//   j > 0:  x_{i,j-1}^-2 ... x_{i,0}^-2
//   j < 0:  x_{i,j}^2 ... x_{i,-1}^2
KernelWord a_edge(long i, long j) {
  KernelWord w;
  if (j > 0) {
    for (long k = j - 1; k >= 0; --k) w.append({i, k}, -2);
  } else {
    for (long k = j; k < 0; ++k) w.append({i, k}, 2);
  }
  return w;
}

}  // namespace

const std::vector<std::string>& surface_generators() {
  static const std::vector<std::string> gens{"a", "b", "c"};
  return gens;
}

SurfaceElement parse_surface_word(std::string_view text) {
  return parse_word(text, surface_generators());
}

std::pair<long, long> psi(const SurfaceElement& g) {
  long m = 0, n = 0;
  for (const auto& s : g.syllables()) {
    if (s.gen == kA) m += s.exp;
    else if (s.gen == kB) n += s.exp;
    else if (s.gen != kC) throw InvalidInput("surface word uses a generator outside {a, b, c}");
  }
  return {m, n};
}

SurfaceElement kernel_generator(long i, long j) {
  return Word::letter(kA, i) * Word::letter(kB, j) * Word::letter(kC, 1) * Word::letter(kB, -j) *
         Word::letter(kA, -i);
}

KernelWord schreier_rewrite(const SurfaceElement& g) {
  if (psi(g) != std::pair<long, long>{0, 0})
    throw InvalidInput("schreier_rewrite: exponent sums in a and b must vanish");
  KernelWord out;
  long i = 0, j = 0;
  for (const auto& s : g.syllables()) {
    switch (s.gen) {
      case kC:
        out.append({i, j}, s.exp);
        break;
      case kB:
        j += s.exp;
        break;
      case kA:
        for (long step = 0; step < std::labs(s.exp); ++step) {
          if (s.exp > 0) {
            out *= a_edge(i, j);
            ++i;
          } else {
            --i;
            out *= a_edge(i, j).inverse();
          }
        }
        break;
    }
  }
  return out;
}

SurfaceNormalForm surface_normal_form(const SurfaceElement& g) {
  const auto [m, n] = psi(g);
  const SurfaceElement f = g * Word::letter(kB, -n) * Word::letter(kA, -m);
  return {schreier_rewrite(f), {m, n}};
}

std::strong_ordering surface_compare(const SurfaceElement& g1, const SurfaceElement& g2) {
  const SurfaceElement d = g1.inverse() * g2;
  const auto [m, n] = psi(d);
  // g1 < g2 iff d is positive.
  if (m != 0) return m > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (n != 0) return n > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const KernelWord k = schreier_rewrite(d);
  const auto sign = magnus_compare(k, KernelWord{}, [](const Lattice& x) -> VarId { return x; });
  if (sign == std::strong_ordering::equal) return std::strong_ordering::equal;
  return sign == std::strong_ordering::greater ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
}

}  // namespace ord3
