#include "conesearch.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ord3 {

namespace {

struct Letter {
  int gen;
  int exp;  // +1 or -1
};

std::vector<Letter> letters_of(const std::vector<int>& gens) {
  std::vector<Letter> out;
  for (int g : gens) {
    out.push_back({g, 1});
    out.push_back({g, -1});
  }
  return out;
}

}  // namespace

int GroupBall::find(const Word& w) const {
  const auto it = index_.find(oracle_.canonical(w));
  return it == index_.end() ? -1 : it->second;
}

int GroupBall::product(int i, int j) const {
  if (length(i) + length(j) > radius_) return -1;
  return find(word(i) * word(j));
}

int GroupBall::conjugate(int h, int g) const {
  if (2 * length(h) + length(g) > radius_) return -1;
  return find(word(h) * word(g) * word(h).inverse());
}

std::string GroupBall::render(int e) const { return render_word(word(e), oracle_.generators()); }

GroupBall build_ball(const EqualityOracle& oracle, const std::vector<std::string>& generators, int radius) {
  if (radius < 1) throw InvalidInput("ball radius must be >= 1");
  GroupBall ball(oracle);
  ball.radius_ = radius;
  const auto& names = oracle.generators();
  if (generators.empty()) {
    for (int g = 0; g < oracle.rank(); ++g) ball.gens_.push_back(g);
  } else {
    for (const auto& name : generators) {
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw InvalidInput("generator '" + name + "' is not in " + oracle.describe());
      ball.gens_.push_back(static_cast<int>(it - names.begin()));
    }
  }
  const auto letters = letters_of(ball.gens_);

  ball.words_.push_back(Word{});
  ball.index_.emplace(oracle.canonical(Word{}), 0);
  // Breadth-first in (length, lex) order: the first word reaching an element
  // is its canonical geodesic.
  std::size_t layer_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    const std::size_t layer_end = ball.words_.size();
    for (std::size_t e = layer_begin; e < layer_end; ++e) {
      for (const auto& l : letters) {
        Word w = ball.words_[e] * Word::letter(l.gen, l.exp);
        if (w.length() != len) continue;
        auto [it, inserted] = ball.index_.try_emplace(oracle.canonical(w), static_cast<int>(ball.words_.size()));
        if (inserted) ball.words_.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }

  ball.inverse_.resize(ball.words_.size());
  for (std::size_t e = 0; e < ball.words_.size(); ++e) {
    const int inv = ball.find(ball.words_[e].inverse());
    if (inv < 0) throw Error("ball is not closed under inversion");
    ball.inverse_[e] = inv;
  }

  for (int e = 1; e < static_cast<int>(ball.size()) && !ball.torsion_; ++e) {
    if (ball.inverse(e) == e) {
      ball.torsion_ = GroupBall::Torsion{e, 2};
      break;
    }
    int p = e;
    for (int n = 2; p > 0; ++n) {
      p = ball.product(p, e);
      if (p == 0) {
        ball.torsion_ = GroupBall::Torsion{e, n};
        break;
      }
    }
  }
  return ball;
}

namespace {

// ---------------------------------------------------------------------------
// Clause database and DPLL with two watched literals. Variable v stands for
// "representative v is positive"; literal 2v is that, 2v + 1 its negation.

struct Clause {
  int lits[3];
  int size;
  Citation cite;
};

class Solver {
 public:
  Solver(const GroupBall& ball, OrderMode mode) : ball_(ball) {
    const int n = static_cast<int>(ball.size());
    var_of_.assign(static_cast<std::size_t>(n), -1);
    for (int e = 1; e < n; ++e) {
      if (ball.inverse(e) > e) {
        var_of_[static_cast<std::size_t>(e)] = static_cast<int>(reps_.size());
        reps_.push_back(e);
      }
    }
    assign_.assign(reps_.size(), 0);
    reason_.assign(reps_.size(), -1);
    watches_.resize(2 * reps_.size());
    build_clauses(mode);
  }

  std::size_t variables() const { return reps_.size(); }
  std::size_t clauses() const { return clauses_.size(); }
  std::size_t decisions() const { return decisions_; }

  ConeCertificate run(OrderMode mode) {
    ConeCertificate cert{mode, ball_.radius(), Refutation{}};
    auto& trace = std::get<Refutation>(cert.result).trace;

    for (int c : units_) {
      const int lit = clauses_[static_cast<std::size_t>(c)].lits[0];
      if (value(lit) == 1) continue;
      if (value(lit) == -1) {
        trace.push_back(ConflictStep{clauses_[static_cast<std::size_t>(c)].cite});
        return cert;
      }
      enqueue(lit, c, trace);
    }
    if (int c = propagate(trace); c >= 0) {
      trace.push_back(ConflictStep{clauses_[static_cast<std::size_t>(c)].cite});
      return cert;
    }

    struct Frame {
      std::size_t trail_start;
      int var;
      bool flipped;
    };
    std::vector<Frame> frames;
    while (true) {
      const int v = next_unassigned();
      if (v < 0) break;
      ++decisions_;
      frames.push_back({trail_.size(), v, false});
      trace.push_back(DecideStep{reps_[static_cast<std::size_t>(v)], 1});
      enqueue(2 * v, -1, trace, false);
      int conflict = propagate(trace);
      while (conflict >= 0) {
        trace.push_back(ConflictStep{clauses_[static_cast<std::size_t>(conflict)].cite});
        while (!frames.empty() && frames.back().flipped) {
          undo_to(frames.back().trail_start);
          frames.pop_back();
        }
        if (frames.empty()) return cert;
        Frame& f = frames.back();
        undo_to(f.trail_start);
        f.flipped = true;
        trace.push_back(DecideStep{reps_[static_cast<std::size_t>(f.var)], -1});
        enqueue(2 * f.var + 1, -1, trace, false);
        conflict = propagate(trace);
      }
    }

    ConsistentCone cone;
    cone.sign.assign(ball_.size(), 0);
    for (std::size_t v = 0; v < reps_.size(); ++v) {
      const int e = reps_[v];
      cone.sign[static_cast<std::size_t>(e)] = assign_[v];
      cone.sign[static_cast<std::size_t>(ball_.inverse(e))] = -assign_[v];
    }
    cert.result = std::move(cone);
    return cert;
  }

 private:
  int lit_positive(int e) const {
    const int v = var_of_[static_cast<std::size_t>(e)];
    return v >= 0 ? 2 * v : 2 * var_of_[static_cast<std::size_t>(ball_.inverse(e))] + 1;
  }

  // +1 true, -1 false, 0 unassigned
  int value(int lit) const {
    const int a = assign_[static_cast<std::size_t>(lit >> 1)];
    return (lit & 1) ? -a : a;
  }

  void add_clause(std::vector<int> lits, Citation cite) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if ((lits[i] ^ 1) == lits[i + 1]) return;  // tautology
    std::array<int, 3> key{-1, -1, -1};
    std::copy(lits.begin(), lits.end(), key.begin());
    if (!seen_.insert(key).second) return;
    Clause c{{0, 0, 0}, static_cast<int>(lits.size()), cite};
    for (std::size_t i = 0; i < lits.size(); ++i) c.lits[i] = lits[i];
    const int idx = static_cast<int>(clauses_.size());
    clauses_.push_back(c);
    if (c.size == 1) {
      units_.push_back(idx);
    } else {
      watches_[static_cast<std::size_t>(c.lits[0])].push_back(idx);
      watches_[static_cast<std::size_t>(c.lits[1])].push_back(idx);
    }
  }

  void build_clauses(OrderMode mode) {
    const int n = static_cast<int>(ball_.size());
    const int r = ball_.radius();
    // Rows of the product table come from right-multiplication by letters,
    // which the ball records implicitly through canonical prefixes.
    std::vector<int> prefix(static_cast<std::size_t>(n), -1);
    std::vector<Word> last(static_cast<std::size_t>(n));
    for (int e = 1; e < n; ++e) {
      const auto& syl = ball_.word(e).syllables();
      const auto& tail = syl.back();
      const long step = tail.exp > 0 ? 1 : -1;
      last[static_cast<std::size_t>(e)] = Word::letter(tail.gen, step);
      prefix[static_cast<std::size_t>(e)] = ball_.find(ball_.word(e) * Word::letter(tail.gen, -step));
    }
    std::vector<std::vector<int>> right(static_cast<std::size_t>(n));
    const auto letters = letters_of(ball_.generators());
    std::vector<Word> letter_words;
    for (const auto& l : letters) letter_words.push_back(Word::letter(l.gen, l.exp));
    for (int e = 0; e < n; ++e) {
      if (ball_.length(e) >= r) continue;
      auto& row = right[static_cast<std::size_t>(e)];
      for (const auto& lw : letter_words) row.push_back(ball_.find(ball_.word(e) * lw));
    }
    std::vector<int> letter_index(static_cast<std::size_t>(n), -1);
    for (int e = 1; e < n; ++e)
      for (std::size_t li = 0; li < letter_words.size(); ++li)
        if (last[static_cast<std::size_t>(e)] == letter_words[li]) letter_index[static_cast<std::size_t>(e)] = static_cast<int>(li);

    std::vector<int> row(static_cast<std::size_t>(n), -1);
    auto fill_row = [&](int i) {
      row[0] = i;
      for (int j = 1; j < n; ++j) {
        if (ball_.length(i) + ball_.length(j) > r) {
          row[static_cast<std::size_t>(j)] = -1;
          continue;
        }
        const int base = row[static_cast<std::size_t>(prefix[static_cast<std::size_t>(j)])];
        row[static_cast<std::size_t>(j)] =
            right[static_cast<std::size_t>(base)][static_cast<std::size_t>(letter_index[static_cast<std::size_t>(j)])];
      }
    };

    for (int i = 1; i < n; ++i) {
      fill_row(i);
      for (int j = 1; j < n; ++j) {
        const int k = row[static_cast<std::size_t>(j)];
        if (k < 0 || k == 0) continue;
        add_clause({lit_positive(i) ^ 1, lit_positive(j) ^ 1, lit_positive(k)},
                   {Citation::Kind::Product, i, j});
      }
      if (mode == OrderMode::BiOrder) {
        const int hinv = ball_.inverse(i);
        for (int g = 1; g < n; ++g) {
          if (var_of_[static_cast<std::size_t>(g)] < 0) continue;
          if (2 * ball_.length(i) + ball_.length(g) > r) continue;
          const int hg = row[static_cast<std::size_t>(g)];
          const int k = ball_.product(hg, hinv);
          if (k < 0) throw Error("conjugate escaped the ball");
          const Citation cite{Citation::Kind::Conj, i, g};
          add_clause({lit_positive(g) ^ 1, lit_positive(k)}, cite);
          add_clause({lit_positive(g), lit_positive(k) ^ 1}, cite);
        }
      }
    }
  }

  void enqueue(int lit, int reason, std::vector<TraceStep>& trace, bool record = true) {
    const int v = lit >> 1;
    assign_[static_cast<std::size_t>(v)] = (lit & 1) ? -1 : 1;
    reason_[static_cast<std::size_t>(v)] = reason;
    trail_.push_back(lit);
    if (record)
      trace.push_back(DeriveStep{reps_[static_cast<std::size_t>(v)], assign_[static_cast<std::size_t>(v)],
                                 clauses_[static_cast<std::size_t>(reason)].cite});
  }

  // Returns a falsified clause or -1.
  int propagate(std::vector<TraceStep>& trace) {
    while (qhead_ < trail_.size()) {
      const int falsified = trail_[qhead_++] ^ 1;
      auto& ws = watches_[static_cast<std::size_t>(falsified)];
      std::size_t keep = 0;
      for (std::size_t w = 0; w < ws.size(); ++w) {
        const int ci = ws[w];
        Clause& c = clauses_[static_cast<std::size_t>(ci)];
        if (c.lits[0] == falsified) std::swap(c.lits[0], c.lits[1]);
        if (value(c.lits[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (int t = 2; t < c.size; ++t) {
          if (value(c.lits[t]) != -1) {
            std::swap(c.lits[1], c.lits[t]);
            watches_[static_cast<std::size_t>(c.lits[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (value(c.lits[0]) == -1) {
          for (++w; w < ws.size(); ++w) ws[keep++] = ws[w];
          ws.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c.lits[0], ci, trace);
      }
      ws.resize(keep);
    }
    return -1;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      const int v = trail_.back() >> 1;
      assign_[static_cast<std::size_t>(v)] = 0;
      reason_[static_cast<std::size_t>(v)] = -1;
      trail_.pop_back();
    }
    qhead_ = trail_.size();
  }

  int next_unassigned() const {
    for (std::size_t v = 0; v < assign_.size(); ++v)
      if (assign_[v] == 0) return static_cast<int>(v);
    return -1;
  }

  const GroupBall& ball_;
  std::vector<int> var_of_;
  std::vector<int> reps_;
  std::vector<Clause> clauses_;
  std::vector<int> units_;
  std::set<std::array<int, 3>> seen_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> assign_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::size_t qhead_ = 0;
  std::size_t decisions_ = 0;
};

// ---------------------------------------------------------------------------
// Verification. A clause is a list of (element, sign) literals: "element has
// this sign". (e, s) and (e^-1, -s) are the same literal.

struct Lit {
  int element;
  int sign;
};

using ClauseLits = std::vector<Lit>;

// Clauses named by a citation, recomputed from the oracle. Empty result means
// the citation does not name a constraint of this ball.
std::vector<ClauseLits> clauses_for(const GroupBall& ball, const Citation& c, OrderMode mode) {
  const int n = static_cast<int>(ball.size());
  if (c.a <= 0 || c.a >= n || c.b <= 0 || c.b >= n) return {};
  if (c.kind == Citation::Kind::Product) {
    const int k = ball.product(c.a, c.b);
    if (k < 0) return {};
    ClauseLits cl{{c.a, -1}, {c.b, -1}};
    if (k != 0) cl.push_back({k, 1});
    return {cl};
  }
  if (mode != OrderMode::BiOrder) return {};
  const int k = ball.conjugate(c.a, c.b);
  if (k <= 0) return {};
  return {{{c.b, -1}, {k, 1}}, {{c.b, 1}, {k, -1}}};
}

class Replay {
 public:
  explicit Replay(const GroupBall& ball) : ball_(ball), sign_(ball.size(), 0) {}

  int sign(int e) const { return sign_[static_cast<std::size_t>(e)]; }
  int lit_value(const Lit& l) const {
    const int s = sign(l.element);
    return s == 0 ? 0 : (s == l.sign ? 1 : -1);
  }
  void set(int e, int s) {
    sign_[static_cast<std::size_t>(e)] = s;
    sign_[static_cast<std::size_t>(ball_.inverse(e))] = -s;
    trail_.push_back(e);
  }
  std::size_t mark() const { return trail_.size(); }
  void undo_to(std::size_t m) {
    while (trail_.size() > m) {
      const int e = trail_.back();
      sign_[static_cast<std::size_t>(e)] = 0;
      sign_[static_cast<std::size_t>(ball_.inverse(e))] = 0;
      trail_.pop_back();
    }
  }
  bool same_literal(const Lit& x, const Lit& y) const {
    return (x.element == y.element && x.sign == y.sign) ||
           (x.element == ball_.inverse(y.element) && x.sign == -y.sign);
  }

 private:
  const GroupBall& ball_;
  std::vector<int> sign_;
  std::vector<int> trail_;
};

bool verify_refutation(const GroupBall& ball, OrderMode mode, const Refutation& ref) {
  const int n = static_cast<int>(ball.size());
  const auto valid = [&](int e) { return e > 0 && e < n; };
  const auto& trace = ref.trace;
  if (trace.empty()) return false;

  if (const auto* t = std::get_if<TorsionStep>(&trace.front())) {
    if (trace.size() != 1 || !valid(t->element) || t->order < 2) return false;
    const auto& oracle = ball.oracle();
    return oracle.equal(ball.word(t->element).pow(t->order), Word{});
  }

  struct Frame {
    std::size_t mark;
    Lit decision;
    bool flipped;
  };
  Replay st(ball);
  std::vector<Frame> frames;
  Lit pending{0, 0};
  bool has_pending = false;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& step = trace[i];
    if (has_pending && !std::holds_alternative<DecideStep>(step)) return false;
    if (const auto* d = std::get_if<DecideStep>(&step)) {
      if (!valid(d->element) || (d->sign != 1 && d->sign != -1)) return false;
      if (st.sign(d->element) != 0) return false;
      const Lit lit{d->element, d->sign};
      bool flipped = false;
      if (has_pending) {
        if (!st.same_literal(lit, {pending.element, -pending.sign})) return false;
        flipped = true;
        has_pending = false;
      }
      frames.push_back({st.mark(), lit, flipped});
      st.set(d->element, d->sign);
    } else if (const auto* dv = std::get_if<DeriveStep>(&step)) {
      if (!valid(dv->element) || (dv->sign != 1 && dv->sign != -1)) return false;
      if (st.sign(dv->element) != 0) return false;
      const Lit target{dv->element, dv->sign};
      bool justified = false;
      for (const auto& cl : clauses_for(ball, dv->by, mode)) {
        bool others_false = true, has_target = false;
        for (const auto& l : cl) {
          if (st.same_literal(l, target)) has_target = true;
          else if (st.lit_value(l) != -1) others_false = false;
        }
        if (has_target && others_false) justified = true;
      }
      if (!justified) return false;
      st.set(dv->element, dv->sign);
    } else if (const auto* c = std::get_if<ConflictStep>(&step)) {
      bool violated = false;
      for (const auto& cl : clauses_for(ball, c->by, mode)) {
        bool all_false = true;
        for (const auto& l : cl) all_false = all_false && st.lit_value(l) == -1;
        if (all_false) violated = true;
      }
      if (!violated) return false;
      while (!frames.empty() && frames.back().flipped) {
        st.undo_to(frames.back().mark);
        frames.pop_back();
      }
      if (frames.empty()) return i + 1 == trace.size();
      pending = frames.back().decision;
      has_pending = true;
      st.undo_to(frames.back().mark);
      frames.pop_back();
    } else {
      return false;  // torsion only as the sole step
    }
  }
  return false;
}

bool verify_cone(const GroupBall& ball, OrderMode mode, const ConsistentCone& cone) {
  const int n = static_cast<int>(ball.size());
  if (cone.sign.size() != ball.size() || cone.sign[0] != 0) return false;
  const auto s = [&](int e) { return cone.sign[static_cast<std::size_t>(e)]; };
  for (int e = 1; e < n; ++e) {
    if (s(e) != 1 && s(e) != -1) return false;
    if (s(ball.inverse(e)) != -s(e)) return false;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (s(i) != 1 || s(j) != 1) continue;
      const int k = ball.product(i, j);
      if (k == 0) return false;
      if (k > 0 && s(k) != 1) return false;
    }
  }
  if (mode == OrderMode::BiOrder) {
    for (int h = 1; h < n; ++h) {
      for (int g = 1; g < n; ++g) {
        const int k = ball.conjugate(h, g);
        if (k > 0 && s(k) != s(g)) return false;
      }
    }
  }
  return true;
}

std::string render_citation(const GroupBall& ball, const Citation& c) {
  return std::string(c.kind == Citation::Kind::Product ? "product " : "conj ") + ball.render(c.a) + ' ' +
         ball.render(c.b);
}

const char* sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

ConeCertificate search_cone(const GroupBall& ball, OrderMode mode, SearchStats* stats) {
  if (const auto& t = ball.torsion()) {
    return {mode, ball.radius(), Refutation{{TorsionStep{t->element, t->order}}}};
  }
  Solver solver(ball, mode);
  ConeCertificate cert = solver.run(mode);
  if (stats) *stats = {solver.variables(), solver.clauses(), solver.decisions()};
  return cert;
}

bool verify_certificate(const GroupBall& ball, const ConeCertificate& cert) {
  if (cert.radius != ball.radius()) return false;
  if (const auto* ref = std::get_if<Refutation>(&cert.result)) return verify_refutation(ball, cert.mode, *ref);
  return verify_cone(ball, cert.mode, std::get<ConsistentCone>(cert.result));
}

std::string render_certificate(const GroupBall& ball, const ConeCertificate& cert) {
  std::string out;
  out += std::string("mode: ") + (cert.mode == OrderMode::LeftOrder ? "left" : "bi") + '\n';
  out += "radius: " + std::to_string(cert.radius) + '\n';
  out += "elements: " + std::to_string(ball.size()) + '\n';
  if (const auto* ref = std::get_if<Refutation>(&cert.result)) {
    out += "result: refutation\n";
    for (const auto& step : ref->trace) {
      if (const auto* t = std::get_if<TorsionStep>(&step)) {
        out += "torsion " + ball.render(t->element) + " order " + std::to_string(t->order) + '\n';
      } else if (const auto* d = std::get_if<DecideStep>(&step)) {
        out += "decide " + ball.render(d->element) + ' ' + sign_char(d->sign) + '\n';
      } else if (const auto* dv = std::get_if<DeriveStep>(&step)) {
        out += "derive " + ball.render(dv->element) + ' ' + sign_char(dv->sign) + " by " +
               render_citation(ball, dv->by) + '\n';
      } else if (const auto* c = std::get_if<ConflictStep>(&step)) {
        out += "conflict " + render_citation(ball, c->by) + '\n';
      }
    }
  } else {
    out += "result: no obstruction at radius " + std::to_string(cert.radius) + '\n';
    const auto& cone = std::get<ConsistentCone>(cert.result);
    for (int e = 1; e < static_cast<int>(ball.size()); ++e)
      if (ball.inverse(e) > e) out += "sign " + ball.render(e) + ' ' + sign_char(cone.sign[static_cast<std::size_t>(e)]) + '\n';
  }
  return out;
}

}  // namespace ord3
