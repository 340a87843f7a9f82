#include "words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace ord3 {

Word free_reduce(const std::vector<Syllable<int>>& raw) { return Word(raw); }

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& gens)
      : text_(text), gens_(gens) {}

  Word parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty word", pos_);
    Word w;
    term(w);
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '*') throw ParseError("expected '*'", pos_);
      ++pos_;
      skip_space();
      term(w);
      skip_space();
    }
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void term(Word& w) {
    if (pos_ >= text_.size()) throw ParseError("expected generator", pos_);
    if (text_[pos_] == '1' &&
        (pos_ + 1 == text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return;
    }
    if (!is_ident_start(text_[pos_])) throw ParseError("expected generator", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end())
      throw ParseError("unknown generator '" + std::string(name) + "'", start);
    const int gen = static_cast<int>(it - gens_.begin());
    long exp = 1;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      exp = exponent();
    }
    w.append(gen, exp);
  }

  long exponent() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("malformed exponent", start);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const long digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - digit) / 10)
        throw ParseError("exponent out of range", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return WordParser(text, generators).parse();
}

std::string render_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += generators.at(static_cast<std::size_t>(s.gen));
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = trim(text.substr(line_start, line_end - line_start));
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (line.empty() || line.front() == '#') continue;

    if (!have_gens) {
      if (line.substr(0, 5) != "gens:") throw ParseError("expected 'gens:' line", offset);
      std::string_view rest = line.substr(5);
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view name = trim(rest.substr(0, comma));
        if (name.empty() || !is_ident_start(name.front()) ||
            !std::all_of(name.begin(), name.end(), is_ident_char))
          throw ParseError("malformed generator name", offset);
        if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
          throw ParseError("duplicate generator '" + std::string(name) + "'", offset);
        p.generators.emplace_back(name);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      have_gens = true;
      continue;
    }
    if (line.substr(0, 4) != "rel:") throw ParseError("expected 'rel:' line", offset);
    try {
      p.relators.push_back(parse_word(line.substr(4), p.generators));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in relator: ") + e.what(), offset);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 0);
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += '\n';
  for (const auto& r : p.relators) out += "rel: " + render_word(r, p.generators) + '\n';
  return out;
}

Presentation rss_presentation(long p, long q, long m) {
  if (p < 1 || q < 1) throw InvalidInput("p and q must be positive");
  if (std::gcd(p, q) != 1) throw InvalidInput("p and q must be relatively prime");
  if (!(p > q)) throw InvalidInput("p must exceed q");
  if (m % 2 == 0 || m >= -2) throw InvalidInput("m must be an odd integer < -2");

  enum { T = 0, A = 1, B = 2 };
  Presentation pres{{"t", "a", "b"}, {}};
  auto letter = [](int g, long e) { return Word::letter(g, e); };
  // t^-1 a t = a b a^(m-1)
  pres.relators.push_back(letter(T, -1) * letter(A, 1) * letter(T, 1) *
                          (letter(A, 1) * letter(B, 1) * letter(A, m - 1)).inverse());
  // t^-1 b t = a^-1
  pres.relators.push_back(letter(T, -1) * letter(B, 1) * letter(T, 1) * letter(A, 1));
  // t^-p = (a b a^-1 b^-1)^q
  const Word commutator = letter(A, 1) * letter(B, 1) * letter(A, -1) * letter(B, -1);
  pres.relators.push_back(letter(T, -p) * commutator.pow(q).inverse());
  return pres;
}

// ---------------------------------------------------------------------------

KleinNF klein_mul(KleinNF lhs, KleinNF rhs) {
  // l^b m^a' = m^((-1)^b a') l^b
  const long sign = (lhs.b % 2 == 0) ? 1 : -1;
  return {lhs.a + sign * rhs.a, lhs.b + rhs.b};
}

KleinNF klein_nf(const Word& w) {
  KleinNF nf;
  for (const auto& s : w.syllables()) {
    if (s.gen == 0)
      nf = klein_mul(nf, {s.exp, 0});
    else if (s.gen == 1)
      nf = klein_mul(nf, {0, s.exp});
    else
      throw InvalidInput("klein_nf: generator outside {m, l}");
  }
  return nf;
}

// ---------------------------------------------------------------------------

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

// Right multiplication in <x,y | x^2 = y^3> tracking the central h = x^2.
class TorusAccumulator {
 public:
  void push_x(long e) {
    h_ += floor_div(e, 2);
    if (floor_mod(e, 2) == 1) push_letter(TorusLetter::X);
  }
  void push_y(long e) {
    h_ += floor_div(e, 3);
    const long r = floor_mod(e, 3);
    if (r == 1) push_letter(TorusLetter::Y);
    if (r == 2) push_letter(TorusLetter::Y2);
  }
  void push_h(long e) { h_ += e; }

  void push_letter(TorusLetter l) {
    if (word_.empty()) {
      word_.push_back(l);
      return;
    }
    const TorusLetter top = word_.back();
    if (l == TorusLetter::X) {
      if (top == TorusLetter::X) {
        word_.pop_back();
        ++h_;
      } else {
        word_.push_back(l);
      }
      return;
    }
    if (top == TorusLetter::X) {
      word_.push_back(l);
      return;
    }
    const int total = static_cast<int>(top) + static_cast<int>(l);  // 2, 3 or 4
    word_.pop_back();
    if (total == 2) {
      word_.push_back(TorusLetter::Y2);
    } else if (total == 3) {
      ++h_;
    } else {
      ++h_;
      word_.push_back(TorusLetter::Y);
    }
  }

  TorusKnotNF result() const { return {h_, word_}; }

 private:
  long h_ = 0;
  std::vector<TorusLetter> word_;
};

// Reduction in Z/2 * Z/3, i.e. modulo the central h.
std::vector<TorusLetter> quotient_reduce(const std::vector<TorusLetter>& letters) {
  TorusAccumulator acc;
  for (auto l : letters) acc.push_letter(l);
  return acc.result().word;
}

}  // namespace

TorusKnotNF torus_knot_nf(const Word& w, int x_gen, int y_gen) {
  TorusAccumulator acc;
  for (const auto& s : w.syllables()) {
    if (s.gen == x_gen)
      acc.push_x(s.exp);
    else if (s.gen == y_gen)
      acc.push_y(s.exp);
    else
      throw InvalidInput("torus_knot_nf: generator outside {x, y}");
  }
  return acc.result();
}

Word torus_knot_word(const TorusKnotNF& nf, int x_gen, int y_gen) {
  Word w = Word::letter(x_gen, 2 * nf.h_exponent);
  for (auto l : nf.word) {
    if (l == TorusLetter::X) w.append(x_gen, 1);
    if (l == TorusLetter::Y) w.append(y_gen, 1);
    if (l == TorusLetter::Y2) w.append(y_gen, 2);
  }
  return w;
}

std::optional<std::pair<long, long>> bsw_edge_membership(const TorusKnotNF& nf, int side) {
  if (side != 1 && side != 2) throw InvalidInput("bsw_edge_membership: side must be 1 or 2");
  // c^q = h^-q (x y^2)^q and c^-q = h^-q (y x)^q for q >= 0.
  const auto& w = nf.word;
  if (w.empty()) return std::pair<long, long>{nf.h_exponent, 0};
  if (w.size() % 2 != 0) return std::nullopt;
  const long n = static_cast<long>(w.size() / 2);
  auto matches = [&](TorusLetter first, TorusLetter second) {
    for (std::size_t i = 0; i < w.size(); i += 2)
      if (w[i] != first || w[i + 1] != second) return false;
    return true;
  };
  if (matches(TorusLetter::X, TorusLetter::Y2)) return std::pair<long, long>{nf.h_exponent + n, n};
  if (matches(TorusLetter::Y, TorusLetter::X)) return std::pair<long, long>{nf.h_exponent + n, -n};
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kX1 = 0, kY1 = 1, kX2 = 2, kY2 = 3;

int side_of(int gen) {
  if (gen == kX1 || gen == kY1) return 1;
  if (gen == kX2 || gen == kY2) return 2;
  throw InvalidInput("amalgam: generator outside {x1, y1, x2, y2}");
}

// Vertex-group words below use the local ids x = 0, y = 1.
Word local_letter(int gen, long e) { return Word::letter(gen % 2, e); }

Word local_c_power(long q) {
  const Word c = Word::letter(0, 1) * Word::letter(1, -1);
  return c.pow(q);
}

// Edge element h1^p c1^q written in vertex group `side`.
Word edge_in_side(long p, long q, int side) {
  if (side == 1) return Word::letter(0, 2 * p) * local_c_power(q);
  // side 2: h1 -> c2, c1 -> h2
  return local_c_power(p) * Word::letter(0, 2 * q);
}

bool rep_less(const std::vector<TorusLetter>& a, const std::vector<TorusLetter>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Splits u = t * e with t the chosen transversal lift of the coset u<h,c>
// and e in the edge subgroup (local coordinates).
std::pair<std::vector<TorusLetter>, std::pair<long, long>> split_coset(const TorusKnotNF& u) {
  static const std::vector<TorusLetter> c_bar = {TorusLetter::X, TorusLetter::Y2};
  static const std::vector<TorusLetter> c_bar_inv = {TorusLetter::Y, TorusLetter::X};

  const long bound = static_cast<long>(u.word.size()) + 2;
  std::vector<TorusLetter> best;
  bool have_best = false;
  for (long q = -bound; q <= bound; ++q) {
    std::vector<TorusLetter> cand = u.word;
    const auto& step = q >= 0 ? c_bar : c_bar_inv;
    for (long i = 0; i < std::labs(q); ++i) cand.insert(cand.end(), step.begin(), step.end());
    cand = quotient_reduce(cand);
    if (!have_best || rep_less(cand, best)) {
      best = std::move(cand);
      have_best = true;
    }
  }
  const Word t = torus_knot_word({0, best});
  const TorusKnotNF e = torus_knot_nf(t.inverse() * torus_knot_word(u));
  const auto coords = bsw_edge_membership(e, 1);
  if (!coords) throw Error("amalgam: coset decomposition failed");
  return {best, *coords};
}

}  // namespace

AmalgamNF amalgam_nf(const Word& w) {
  AmalgamNF nf;
  for (const auto& s : w.syllables()) {
    const int side = side_of(s.gen);
    Word u = edge_in_side(nf.p, nf.q, side) * local_letter(s.gen, s.exp);
    if (!nf.reps.empty() && nf.reps.back().side == side) {
      u = torus_knot_word({0, nf.reps.back().word}) * u;
      nf.reps.pop_back();
    }
    auto [rep, local] = split_coset(torus_knot_nf(u));
    if (!rep.empty()) nf.reps.push_back({side, std::move(rep)});
    if (side == 1) {
      nf.p = local.first;
      nf.q = local.second;
    } else {
      // h2^a c2^b = h1^b c1^a
      nf.p = local.second;
      nf.q = local.first;
    }
  }
  return nf;
}

bool amalgam_equal(const Word& w1, const Word& w2) { return amalgam_nf(w1) == amalgam_nf(w2); }

Presentation bsw_presentation() {
  Presentation p{{"x1", "y1", "x2", "y2"}, {}};
  auto l = [](int g, long e) { return Word::letter(g, e); };
  p.relators.push_back(l(kX1, 2) * l(kY1, -3));
  p.relators.push_back(l(kX2, 2) * l(kY2, -3));
  p.relators.push_back(l(kX1, 2) * (l(kX2, 1) * l(kY2, -1)).inverse());
  p.relators.push_back(l(kX2, 2) * (l(kX1, 1) * l(kY1, -1)).inverse());
  return p;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<std::string> letter_names(int rank) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}
}  // namespace

EqualityOracle EqualityOracle::free(int rank) {
  if (rank < 1 || rank > 26) throw InvalidInput("free group rank must be in [1, 26]");
  return {Family::Free, letter_names(rank), 0};
}

EqualityOracle EqualityOracle::free_abelian(int rank, long modulus) {
  if (rank < 1 || rank > 26) throw InvalidInput("free abelian rank must be in [1, 26]");
  if (modulus < 0 || modulus == 1) throw InvalidInput("modulus must be 0 or >= 2");
  return {Family::FreeAbelian, letter_names(rank), modulus};
}

EqualityOracle EqualityOracle::klein_bottle() { return {Family::KleinBottle, {"m", "l"}, 0}; }
EqualityOracle EqualityOracle::torus_knot_23() { return {Family::TorusKnot23, {"x", "y"}, 0}; }
EqualityOracle EqualityOracle::bsw_amalgam() {
  return {Family::BswAmalgam, {"x1", "y1", "x2", "y2"}, 0};
}

std::string EqualityOracle::describe() const {
  switch (family_) {
    case Family::Free:
      return "free(" + std::to_string(rank()) + ")";
    case Family::FreeAbelian:
      return modulus_ ? "abelian(" + std::to_string(rank()) + ",mod " + std::to_string(modulus_) + ")"
                      : "abelian(" + std::to_string(rank()) + ")";
    case Family::KleinBottle:
      return "klein";
    case Family::TorusKnot23:
      return "trefoil";
    case Family::BswAmalgam:
      return "bsw";
  }
  return "?";
}

EqualityOracle::Key EqualityOracle::canonical(const Word& w) const {
  for (const auto& s : w.syllables())
    if (s.gen < 0 || s.gen >= rank()) throw InvalidInput("word uses a generator outside the oracle");
  Key key;
  switch (family_) {
    case Family::Free:
      for (const auto& s : w.syllables()) {
        key.push_back(s.gen);
        key.push_back(s.exp);
      }
      break;
    case Family::FreeAbelian:
      key.assign(static_cast<std::size_t>(rank()), 0);
      for (const auto& s : w.syllables()) key[static_cast<std::size_t>(s.gen)] += s.exp;
      if (modulus_)
        for (auto& k : key) k = floor_mod(k, modulus_);
      break;
    case Family::KleinBottle: {
      const KleinNF nf = klein_nf(w);
      key = {nf.a, nf.b};
      break;
    }
    case Family::TorusKnot23: {
      const TorusKnotNF nf = torus_knot_nf(w);
      key.push_back(nf.h_exponent);
      for (auto l : nf.word) key.push_back(static_cast<long>(l));
      break;
    }
    case Family::BswAmalgam: {
      const AmalgamNF nf = amalgam_nf(w);
      for (const auto& r : nf.reps) {
        key.push_back(r.side);
        key.push_back(static_cast<long>(r.word.size()));
        for (auto l : r.word) key.push_back(static_cast<long>(l));
      }
      key.push_back(nf.p);
      key.push_back(nf.q);
      break;
    }
  }
  return key;
}

}  // namespace ord3
