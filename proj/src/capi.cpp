#include "ord3/ord3.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conesearch.hpp"
#include "homology.hpp"
#include "magnus.hpp"
#include "reps.hpp"
#include "seifert.hpp"
#include "sol.hpp"
#include "surface.hpp"

struct ord3_result {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string attachment;
  bool inconclusive = false;

  void add(std::string k, std::string v) { entries.emplace_back(std::move(k), std::move(v)); }
};

struct ord3_seifert {
  ord3::SeifertDescriptor descriptor;
};

struct ord3_sol {
  ord3::SolManifold manifold;
};

struct ord3_presentation {
  ord3::Presentation presentation;
};

namespace {

thread_local std::string g_last_error;

class IoError : public ord3::Error {
 public:
  using Error::Error;
};

ord3_status fail(ord3_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
ord3_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return ORD3_OK;
  } catch (const ord3::ParseError& e) {
    return fail(ORD3_E_PARSE, e.what());
  } catch (const ord3::InvalidInput& e) {
    return fail(ORD3_E_INVALID_ARGUMENT, e.what());
  } catch (const ord3::DomainError& e) {
    return fail(ORD3_E_DOMAIN, e.what());
  } catch (const IoError& e) {
    return fail(ORD3_E_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORD3_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ORD3_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ORD3_E_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw ord3::InvalidInput(msg);
}

std::string fmt_double(double x, const char* format = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

void add_verdict(ord3_result& r, const ord3::Verdict& v) {
  r.add("verdict", v.yes() ? "yes" : "no");
  r.add("reason", ord3::reason_tag(v.reason));
  if (v.witness) r.add("witness", ord3::render_witness(*v.witness));
}

ord3_result* release(std::unique_ptr<ord3_result>& r) { return r.release(); }

const std::vector<std::string>& free_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (char c = 'a'; c <= 'z'; ++c) n.emplace_back(1, c);
    return n;
  }();
  return names;
}

int to_cmp(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  return o == std::strong_ordering::greater ? 1 : 0;
}

}  // namespace

extern "C" {

const char* ord3_last_error(void) { return g_last_error.c_str(); }
const char* ord3_version(void) { return "1.0.0"; }

size_t ord3_result_size(const ord3_result* r) { return r ? r->entries.size() : 0; }

const char* ord3_result_key(const ord3_result* r, size_t i) {
  return r && i < r->entries.size() ? r->entries[i].first.c_str() : nullptr;
}

const char* ord3_result_value(const ord3_result* r, size_t i) {
  return r && i < r->entries.size() ? r->entries[i].second.c_str() : nullptr;
}

const char* ord3_result_get(const ord3_result* r, const char* key) {
  if (!r || !key) return nullptr;
  for (const auto& [k, v] : r->entries)
    if (k == key) return v.c_str();
  return nullptr;
}

int ord3_result_inconclusive(const ord3_result* r) { return r && r->inconclusive ? 1 : 0; }
const char* ord3_result_attachment(const ord3_result* r) { return r ? r->attachment.c_str() : ""; }
void ord3_result_free(ord3_result* r) { delete r; }

// ---------------------------------------------------------------------------

ord3_status ord3_seifert_new(long g, long b, const long* alpha, const long* beta, size_t n, ord3_seifert** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    require(n == 0 || (alpha && beta), "cone arrays are NULL");
    ord3::SeifertInvariants inv{g, b, {}};
    for (size_t i = 0; i < n; ++i) inv.cones.push_back({alpha[i], beta[i]});
    inv.validate();
    *out = new ord3_seifert{inv};
  });
}

ord3_status ord3_seifert_special(ord3_special_kind kind, long base_genus, long euler, int b1_positive,
                                 ord3_seifert** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    require(kind >= ORD3_SPECIAL_S3 && kind <= ORD3_SPECIAL_BOUNDED, "unknown special descriptor");
    ord3::SpecialSeifert s;
    s.kind = static_cast<ord3::SpecialKind>(kind);
    s.base_genus = base_genus;
    s.euler = euler;
    s.b1_positive = b1_positive != 0;
    *out = new ord3_seifert{s};
  });
}

void ord3_seifert_free(ord3_seifert* m) { delete m; }

ord3_status ord3_seifert_query(const ord3_seifert* m, ord3_question q, ord3_result** out) {
  return guarded([&] {
    require(m && out, "NULL argument");
    auto r = std::make_unique<ord3_result>();
    switch (q) {
      case ORD3_Q_LEFT_ORDERABLE: add_verdict(*r, ord3::is_left_orderable(m->descriptor)); break;
      case ORD3_Q_BIORDERABLE: add_verdict(*r, ord3::is_biorderable(m->descriptor)); break;
      case ORD3_Q_VIRTUALLY_BIORDERABLE: add_verdict(*r, ord3::is_virtually_biorderable(m->descriptor)); break;
      case ORD3_Q_HORIZONTAL_FOLIATION: {
        const auto* inv = std::get_if<ord3::SeifertInvariants>(&m->descriptor);
        require(inv != nullptr, "foliation question needs Seifert invariants");
        add_verdict(*r, ord3::has_horizontal_foliation(*inv));
        break;
      }
      default: throw ord3::InvalidInput("question does not apply to Seifert fibred spaces");
    }
    *out = release(r);
  });
}

ord3_status ord3_seifert_describe(const ord3_seifert* m, ord3_result** out) {
  return guarded([&] {
    require(m && out, "NULL argument");
    const auto* inv = std::get_if<ord3::SeifertInvariants>(&m->descriptor);
    require(inv != nullptr, "special descriptors carry no invariants");
    auto r = std::make_unique<ord3_result>();
    r->add("chi-orb", ord3::chi_orb(*inv).get_str());
    r->add("euler", ord3::euler_number(*inv).get_str());
    r->add("pi1-finite", ord3::pi1_is_finite(*inv) ? "yes" : "no");
    r->attachment = ord3::render_presentation(ord3::seifert_presentation(*inv));
    *out = release(r);
  });
}

// ---------------------------------------------------------------------------

ord3_status ord3_sol_new(ord3_sol_variant v, const long* matrix, ord3_boundary_kind boundary, ord3_sol** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    const auto mat = [&] {
      require(matrix != nullptr, "this Sol variant needs a matrix");
      return ord3::GL2Z(matrix[0], matrix[1], matrix[2], matrix[3]);
    };
    switch (v) {
      case ORD3_SOL_TORUS_BUNDLE: *out = new ord3_sol{ord3::SolManifold::torus_bundle(mat())}; break;
      case ORD3_SOL_KLEIN_BOTTLE_BUNDLE: *out = new ord3_sol{ord3::SolManifold::klein_bottle_bundle()}; break;
      case ORD3_SOL_UNION_TORUS_GLUE: *out = new ord3_sol{ord3::SolManifold::union_torus_glue(mat())}; break;
      case ORD3_SOL_UNION_KLEIN_GLUE: *out = new ord3_sol{ord3::SolManifold::union_klein_glue()}; break;
      case ORD3_SOL_BOUNDARY:
        require(boundary >= ORD3_BOUNDARY_BALL && boundary <= ORD3_BOUNDARY_TWISTED_I_BUNDLE_OVER_K,
                "unknown boundary kind");
        *out = new ord3_sol{ord3::SolManifold::boundary(static_cast<ord3::BoundaryKind>(boundary))};
        break;
      default: throw ord3::InvalidInput("unknown Sol variant");
    }
  });
}

void ord3_sol_free(ord3_sol* m) { delete m; }

ord3_status ord3_sol_query(const ord3_sol* m, ord3_question q, ord3_result** out) {
  return guarded([&] {
    require(m && out, "NULL argument");
    auto r = std::make_unique<ord3_result>();
    switch (q) {
      case ORD3_Q_LEFT_ORDERABLE: add_verdict(*r, ord3::sol_is_left_orderable(m->manifold)); break;
      case ORD3_Q_BIORDERABLE: add_verdict(*r, ord3::sol_is_biorderable(m->manifold)); break;
      case ORD3_Q_VIRTUALLY_BIORDERABLE: add_verdict(*r, ord3::sol_is_virtually_biorderable(m->manifold)); break;
      default: throw ord3::InvalidInput("question does not apply to Sol manifolds");
    }
    *out = release(r);
  });
}

ord3_status ord3_sol_monodromy(const long* matrix, ord3_result** out) {
  return guarded([&] {
    require(matrix && out, "NULL argument");
    const ord3::GL2Z A(matrix[0], matrix[1], matrix[2], matrix[3]);
    auto r = std::make_unique<ord3_result>();
    const bool sol = ord3::is_sol_monodromy(A);
    r->add("verdict", sol ? "yes" : "no");
    r->add("reason", ord3::reason_tag(sol ? ord3::Reason::SolMonodromy : ord3::Reason::NotSolMonodromy));
    r->add("det", std::to_string(A.det()));
    r->add("trace", std::to_string(A.trace()));
    *out = release(r);
  });
}

// ---------------------------------------------------------------------------

ord3_status ord3_presentation_parse(const char* text, ord3_presentation** out) {
  return guarded([&] {
    require(text && out, "NULL argument");
    *out = new ord3_presentation{ord3::parse_presentation(text)};
  });
}

ord3_status ord3_presentation_load(const char* path, ord3_presentation** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new ord3_presentation{ord3::parse_presentation(buf.str())};
  });
}

ord3_status ord3_rss_presentation(long p, long q, long m, ord3_presentation** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    *out = new ord3_presentation{ord3::rss_presentation(p, q, m)};
  });
}

ord3_status ord3_seifert_presentation(const ord3_seifert* m, ord3_presentation** out) {
  return guarded([&] {
    require(m && out, "NULL argument");
    const auto* inv = std::get_if<ord3::SeifertInvariants>(&m->descriptor);
    require(inv != nullptr, "special descriptors carry no presentation");
    *out = new ord3_presentation{ord3::seifert_presentation(*inv)};
  });
}

void ord3_presentation_free(ord3_presentation* p) { delete p; }

ord3_status ord3_presentation_render(const ord3_presentation* p, char** out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    const std::string s = ord3::render_presentation(p->presentation);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void ord3_string_free(char* s) { std::free(s); }

ord3_status ord3_homology(const ord3_presentation* p, ord3_result** out) {
  return guarded([&] {
    require(p && out, "NULL argument");
    const auto h = ord3::abelianization(p->presentation);
    auto r = std::make_unique<ord3_result>();
    r->add("betti", std::to_string(h.betti));
    std::string torsion = "[";
    for (std::size_t i = 0; i < h.torsion.size(); ++i) torsion += (i ? ", " : "") + h.torsion[i].get_str();
    r->add("torsion", torsion + "]");
    const bool lo = ord3::lo_via_betti(p->presentation) == ord3::BettiVerdict::LeftOrderableIfP2Irreducible;
    r->add("lo-via-betti", lo ? "left-orderable-if-p2-irreducible" : "inconclusive");
    r->inconclusive = !lo;
    *out = release(r);
  });
}

// ---------------------------------------------------------------------------

ord3_status ord3_compare_free(const char* w1, const char* w2, int rank, int* cmp) {
  return guarded([&] {
    require(w1 && w2 && cmp, "NULL argument");
    require(rank >= 1 && rank <= 26, "rank must be between 1 and 26");
    const std::vector<std::string> gens(free_names().begin(), free_names().begin() + rank);
    *cmp = to_cmp(ord3::magnus_compare(ord3::parse_word(w1, gens), ord3::parse_word(w2, gens)));
  });
}

ord3_status ord3_compare_surface(const char* w1, const char* w2, int* cmp) {
  return guarded([&] {
    require(w1 && w2 && cmp, "NULL argument");
    *cmp = to_cmp(ord3::surface_compare(ord3::parse_surface_word(w1), ord3::parse_surface_word(w2)));
  });
}

// ---------------------------------------------------------------------------

void ord3_cone_options_init(ord3_cone_options* opts) {
  if (!opts) return;
  opts->family = ORD3_FAMILY_KLEIN;
  opts->mode = ORD3_MODE_LEFT;
  opts->radius = 3;
  opts->radius_cap = 10;
  opts->grow = 0;
  opts->rank = 2;
  opts->modulus = 0;
}

ord3_status ord3_cone_search(const ord3_cone_options* opts, ord3_result** out) {
  return guarded([&] {
    require(opts && out, "NULL argument");
    require(opts->radius >= 1, "radius must be >= 1");
    const auto oracle = [&] {
      switch (opts->family) {
        case ORD3_FAMILY_FREE: return ord3::EqualityOracle::free(opts->rank);
        case ORD3_FAMILY_FREE_ABELIAN: return ord3::EqualityOracle::free_abelian(opts->rank, opts->modulus);
        case ORD3_FAMILY_KLEIN: return ord3::EqualityOracle::klein_bottle();
        case ORD3_FAMILY_TREFOIL: return ord3::EqualityOracle::torus_knot_23();
        case ORD3_FAMILY_BSW: return ord3::EqualityOracle::bsw_amalgam();
      }
      throw ord3::InvalidInput("unknown group family");
    }();
    require(opts->mode == ORD3_MODE_LEFT || opts->mode == ORD3_MODE_BI, "unknown order mode");
    const auto mode = opts->mode == ORD3_MODE_BI ? ord3::OrderMode::BiOrder : ord3::OrderMode::LeftOrder;
    const int last = opts->grow ? opts->radius_cap : opts->radius;
    require(last >= opts->radius, "radius cap is below the starting radius");

    auto r = std::make_unique<ord3_result>();
    for (int radius = opts->radius; radius <= last; ++radius) {
      const auto ball = ord3::build_ball(oracle, {}, radius);
      const auto cert = ord3::search_cone(ball, mode);
      if (!cert.refuted() && radius < last) continue;
      const bool ok = ord3::verify_certificate(ball, cert);
      if (!ok) throw ord3::Error("search produced a certificate that does not verify");
      r->add("certificate", cert.refuted() ? "refutation" : "consistent");
      r->add("radius", std::to_string(radius));
      r->add("elements", std::to_string(ball.size()));
      if (cert.refuted()) {
        r->add("steps", std::to_string(std::get<ord3::Refutation>(cert.result).trace.size()));
      } else {
        r->add("status", "no obstruction at radius " + std::to_string(radius));
      }
      r->add("verified", "yes");
      r->attachment = ord3::render_certificate(ball, cert);
      r->inconclusive = !cert.refuted();
      break;
    }
    *out = release(r);
  });
}

// ---------------------------------------------------------------------------

ord3_status ord3_fig8_solve(long p, long q, double grid, double s_max, ord3_result** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    ord3::SlopeOptions o;
    if (grid > 0) o.grid = grid;
    if (s_max > 0) o.s_max = s_max;
    const auto roots = ord3::solve_slope(p, q, o);
    auto r = std::make_unique<ord3_result>();
    r->add("roots", std::to_string(roots.size()));
    for (const auto& root : roots) {
      const long d = std::gcd(root.p, root.q);
      r->add("s", fmt_double(root.s));
      r->add("g(s)", fmt_double(root.g));
      r->add("residual", fmt_double(ord3::relation_residual(root.s), "%.2e"));
      r->add("slope", std::to_string(root.p / (d ? d : 1)) + "/" + std::to_string(root.q / (d ? d : 1)));
    }
    r->inconclusive = roots.empty();
    *out = release(r);
  });
}

}  // extern "C"
