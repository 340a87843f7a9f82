// ord3: command-line front end over the C API.
//
// Exit codes: 0 result computed, 1 usage or input error, 2 inconclusive.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ord3/ord3.h"

namespace {

enum class Format { Text, JsonLines };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ord3_status s) {
  if (s != ORD3_OK) throw ApiFailure(ord3_last_error());
}

struct ResultPtr {
  ord3_result* r = nullptr;
  ~ResultPtr() { ord3_result_free(r); }
  ord3_result** out() { return &r; }
};

// Text: "key: value" lines (or "key = value" when sep is " = ").
// JSON lines: one object per line; a repeated key starts the next object.
void emit(const ord3_result* r, Format fmt, const char* sep = ": ") {
  const size_t n = ord3_result_size(r);
  if (fmt == Format::Text) {
    for (size_t i = 0; i < n; ++i) std::cout << ord3_result_key(r, i) << sep << ord3_result_value(r, i) << '\n';
    return;
  }
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (size_t i = 0; i < n; ++i) {
    const std::string k = ord3_result_key(r, i);
    if (obj.contains(k)) {
      std::cout << obj.dump() << '\n';
      obj = nlohmann::ordered_json::object();
    }
    obj[k] = ord3_result_value(r, i);
  }
  if (!obj.empty()) std::cout << obj.dump() << '\n';
}

int exit_for(const ord3_result* r) { return ord3_result_inconclusive(r) ? 2 : 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

long to_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Usage(std::string("malformed ") + what + ": '" + s + "'");
  }
}

// "a1/b1,a2/b2" as (alpha, beta) pairs.
void parse_cones(const std::string& text, std::vector<long>& alpha, std::vector<long>& beta) {
  if (text.empty()) return;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, '/');
    if (parts.size() != 2) throw Usage("cone '" + item + "' is not alpha/beta");
    alpha.push_back(to_long(parts[0], "cone order"));
    beta.push_back(to_long(parts[1], "cone invariant"));
  }
}

template <typename T>
T lookup(const std::map<std::string, T>& table, const std::string& key, const char* what) {
  const auto it = table.find(key);
  if (it == table.end()) throw Usage(std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

std::vector<std::string> keys_of(const auto& table) {
  std::vector<std::string> out;
  for (const auto& [k, v] : table) out.push_back(k);
  return out;
}

const std::map<std::string, ord3_question> kSeifertQuestions{
    {"lo", ORD3_Q_LEFT_ORDERABLE},
    {"biorder", ORD3_Q_BIORDERABLE},
    {"virtual", ORD3_Q_VIRTUALLY_BIORDERABLE},
    {"foliation", ORD3_Q_HORIZONTAL_FOLIATION},
};

const std::map<std::string, ord3_question> kSolQuestions{
    {"lo", ORD3_Q_LEFT_ORDERABLE},
    {"biorder", ORD3_Q_BIORDERABLE},
    {"virtual", ORD3_Q_VIRTUALLY_BIORDERABLE},
    {"sol", ORD3_Q_SOL_MONODROMY},
};

const std::map<std::string, ord3_special_kind> kSpecials{
    {"s3", ORD3_SPECIAL_S3},
    {"s1xs2", ORD3_SPECIAL_S1XS2},
    {"s1-twisted-s2", ORD3_SPECIAL_S1TWISTS2},
    {"solid-torus", ORD3_SPECIAL_SOLID_TORUS},
    {"solid-klein-bottle", ORD3_SPECIAL_SOLID_KLEIN_BOTTLE},
    {"p2xs1", ORD3_SPECIAL_P2XS1},
    {"circle-bundle", ORD3_SPECIAL_CIRCLE_BUNDLE},
    {"bounded", ORD3_SPECIAL_BOUNDED},
};

const std::map<std::string, ord3_sol_variant> kSolVariants{
    {"torus-bundle", ORD3_SOL_TORUS_BUNDLE},
    {"klein-bottle-bundle", ORD3_SOL_KLEIN_BOTTLE_BUNDLE},
    {"union-torus-glue", ORD3_SOL_UNION_TORUS_GLUE},
    {"union-klein-glue", ORD3_SOL_UNION_KLEIN_GLUE},
    {"boundary", ORD3_SOL_BOUNDARY},
};

const std::map<std::string, ord3_boundary_kind> kBoundaries{
    {"ball", ORD3_BOUNDARY_BALL},
    {"solid-torus", ORD3_BOUNDARY_SOLID_TORUS},
    {"solid-klein", ORD3_BOUNDARY_SOLID_KLEIN},
    {"torus-x-interval", ORD3_BOUNDARY_TORUS_X_INTERVAL},
    {"twisted-i-bundle-over-k", ORD3_BOUNDARY_TWISTED_I_BUNDLE_OVER_K},
};

const std::map<std::string, ord3_family> kFamilies{
    {"free", ORD3_FAMILY_FREE},   {"zn", ORD3_FAMILY_FREE_ABELIAN}, {"klein", ORD3_FAMILY_KLEIN},
    {"trefoil", ORD3_FAMILY_TREFOIL}, {"bsw", ORD3_FAMILY_BSW},
};

struct Options {
  std::string format = "text";

  // classify seifert / emit seifert
  long g = 0, b = 0;
  std::string cones, special, question = "lo";
  long base_genus = 0, euler = 0;
  std::string b1 = "positive";

  // classify sol
  std::string variant = "torus-bundle", matrix, boundary = "ball";

  // homology
  std::string file;

  // order
  std::string word1, word2;
  int rank = 2;

  // cone search
  std::string family = "klein", mode = "left", certificate;
  int radius = 3, cap = 10;
  bool grow = false;
  long modulus = 0;
  std::optional<int> zn_rank;

  // rep fig8
  std::string slope;
  double grid = 1e-3, smax = 50;

  // emit rss
  long p = 2, q = 1, m = -3;
};

ord3_seifert* make_seifert(const Options& o) {
  ord3_seifert* h = nullptr;
  if (!o.special.empty()) {
    const auto kind = lookup(kSpecials, o.special, "special descriptor");
    if (o.b1 != "positive" && o.b1 != "zero") throw Usage("--b1 must be positive or zero");
    check(ord3_seifert_special(kind, o.base_genus, o.euler, o.b1 == "positive", &h));
    return h;
  }
  std::vector<long> alpha, beta;
  parse_cones(o.cones, alpha, beta);
  check(ord3_seifert_new(o.g, o.b, alpha.data(), beta.data(), alpha.size(), &h));
  return h;
}

std::vector<long> parse_matrix(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Usage("--matrix needs four comma-separated integers a,b,c,d");
  std::vector<long> out;
  for (const auto& p : parts) out.push_back(to_long(p, "matrix entry"));
  return out;
}

int run_classify_seifert(const Options& o, Format fmt) {
  ord3_seifert* h = make_seifert(o);
  ResultPtr r;
  ord3_status s;
  if (o.question == "describe") {
    s = ord3_seifert_describe(h, r.out());
  } else {
    ord3_question q;
    try {
      q = lookup(kSeifertQuestions, o.question, "question");
    } catch (...) {
      ord3_seifert_free(h);
      throw;
    }
    s = ord3_seifert_query(h, q, r.out());
  }
  ord3_seifert_free(h);
  check(s);
  emit(r.r, fmt);
  return exit_for(r.r);
}

int run_classify_sol(const Options& o, Format fmt) {
  ResultPtr r;
  const auto q = lookup(kSolQuestions, o.question, "question");
  std::vector<long> mat;
  if (!o.matrix.empty()) mat = parse_matrix(o.matrix);
  if (q == ORD3_Q_SOL_MONODROMY) {
    if (mat.empty()) throw Usage("--question sol needs --matrix");
    check(ord3_sol_monodromy(mat.data(), r.out()));
  } else {
    ord3_sol* h = nullptr;
    check(ord3_sol_new(lookup(kSolVariants, o.variant, "Sol variant"), mat.empty() ? nullptr : mat.data(),
                       lookup(kBoundaries, o.boundary, "boundary kind"), &h));
    const ord3_status s = ord3_sol_query(h, q, r.out());
    ord3_sol_free(h);
    check(s);
  }
  emit(r.r, fmt);
  return exit_for(r.r);
}

int run_homology(const Options& o, Format fmt) {
  ord3_presentation* p = nullptr;
  check(ord3_presentation_load(o.file.c_str(), &p));
  ResultPtr r;
  const ord3_status s = ord3_homology(p, r.out());
  ord3_presentation_free(p);
  check(s);
  emit(r.r, fmt);
  return exit_for(r.r);
}

void emit_compare(int cmp, Format fmt) {
  const char* word = cmp < 0 ? "lt" : (cmp > 0 ? "gt" : "eq");
  if (fmt == Format::Text) std::cout << "result: " << word << '\n';
  else std::cout << nlohmann::ordered_json{{"result", word}}.dump() << '\n';
}

int run_compare_free(const Options& o, Format fmt) {
  int cmp = 0;
  check(ord3_compare_free(o.word1.c_str(), o.word2.c_str(), o.rank, &cmp));
  emit_compare(cmp, fmt);
  return 0;
}

int run_compare_surface(const Options& o, Format fmt) {
  int cmp = 0;
  check(ord3_compare_surface(o.word1.c_str(), o.word2.c_str(), &cmp));
  emit_compare(cmp, fmt);
  return 0;
}

int run_cone_search(const Options& o, Format fmt) {
  ord3_cone_options opts;
  ord3_cone_options_init(&opts);
  opts.family = lookup(kFamilies, o.family, "group family");
  if (o.mode != "left" && o.mode != "bi") throw Usage("--mode must be left or bi");
  opts.mode = o.mode == "bi" ? ORD3_MODE_BI : ORD3_MODE_LEFT;
  opts.radius = o.radius;
  opts.grow = o.grow ? 1 : 0;
  opts.radius_cap = o.cap;
  opts.rank = o.family == "zn" ? o.zn_rank.value_or(1) : o.zn_rank.value_or(o.rank);
  opts.modulus = o.modulus;
  ResultPtr r;
  check(ord3_cone_search(&opts, r.out()));
  emit(r.r, fmt);
  if (o.certificate == "-") {
    std::cout << ord3_result_attachment(r.r);
  } else if (!o.certificate.empty()) {
    std::ofstream out(o.certificate, std::ios::binary);
    if (!out) throw ApiFailure("cannot write " + o.certificate);
    out << ord3_result_attachment(r.r);
  }
  return exit_for(r.r);
}

int run_fig8(const Options& o, Format fmt) {
  const auto parts = split(o.slope, '/');
  if (parts.empty() || parts.size() > 2) throw Usage("--slope must be p/q");
  const long p = to_long(parts[0], "slope numerator");
  const long q = parts.size() == 2 ? to_long(parts[1], "slope denominator") : 1;
  ResultPtr r;
  check(ord3_fig8_solve(p, q, o.grid, o.smax, r.out()));
  emit(r.r, fmt, " = ");
  return exit_for(r.r);
}

void print_presentation(ord3_presentation* p, Format fmt) {
  char* text = nullptr;
  const ord3_status s = ord3_presentation_render(p, &text);
  ord3_presentation_free(p);
  check(s);
  if (fmt == Format::Text) std::cout << text;
  else std::cout << nlohmann::ordered_json{{"presentation", text}}.dump() << '\n';
  ord3_string_free(text);
}

int run_emit_rss(const Options& o, Format fmt) {
  ord3_presentation* p = nullptr;
  check(ord3_rss_presentation(o.p, o.q, o.m, &p));
  print_presentation(p, fmt);
  return 0;
}

int run_emit_seifert(const Options& o, Format fmt) {
  ord3_seifert* h = make_seifert(o);
  ord3_presentation* p = nullptr;
  const ord3_status s = ord3_seifert_presentation(h, &p);
  ord3_seifert_free(h);
  check(s);
  print_presentation(p, fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orderability of 3-manifold groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ord3_version()));
  Options o;
  app.add_option("--format", o.format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  auto add_seifert_flags = [&](CLI::App* c) {
    c->add_option("--g", o.g, "base genus; -k for k cross-caps");
    c->add_option("--b", o.b, "obstruction b");
    c->add_option("--cones", o.cones, "alpha/beta,alpha/beta,...");
    c->add_option("--special", o.special, "named manifold")->check(CLI::IsMember(keys_of(kSpecials)));
    c->add_option("--base-genus", o.base_genus, "circle-bundle base (same convention as --g)");
    c->add_option("--euler", o.euler, "circle-bundle Euler number");
    c->add_option("--b1", o.b1, "bounded: positive or zero");
  };

  auto* classify = app.add_subcommand("classify", "orderability verdicts");
  classify->require_subcommand(1);
  auto* cseifert = classify->add_subcommand("seifert", "Seifert fibred spaces");
  add_seifert_flags(cseifert);
  cseifert->add_option("--question", o.question, "lo, biorder, virtual, foliation or describe");
  auto* csol = classify->add_subcommand("sol", "Sol manifolds");
  csol->add_option("--variant", o.variant)->check(CLI::IsMember(keys_of(kSolVariants)));
  csol->add_option("--matrix", o.matrix, "a,b,c,d");
  csol->add_option("--boundary", o.boundary)->check(CLI::IsMember(keys_of(kBoundaries)));
  csol->add_option("--question", o.question, "lo, biorder, virtual or sol");

  auto* homology = app.add_subcommand("homology", "abelianization of a presentation file");
  homology->add_option("file", o.file)->required();

  auto* order = app.add_subcommand("order", "explicit bi-orders");
  order->require_subcommand(1);
  auto* cfree = order->add_subcommand("compare-free", "Magnus order on a free group");
  cfree->add_option("--word1", o.word1)->required();
  cfree->add_option("--word2", o.word2)->required();
  cfree->add_option("--rank", o.rank)->capture_default_str();
  auto* csurf = order->add_subcommand("compare-surface", "order on <a,b,c | [a,b] = c^2>");
  csurf->add_option("--word1", o.word1)->required();
  csurf->add_option("--word2", o.word2)->required();

  auto* cone = app.add_subcommand("cone", "positive-cone search");
  cone->require_subcommand(1);
  auto* search = cone->add_subcommand("search", "search a Cayley ball for an obstruction");
  search->add_option("--family", o.family)->check(CLI::IsMember(keys_of(kFamilies)))->capture_default_str();
  search->add_option("--mode", o.mode, "left or bi")->capture_default_str();
  search->add_option("--radius", o.radius)->capture_default_str();
  search->add_flag("--auto", o.grow, "grow the radius until a refutation or --cap");
  search->add_option("--cap", o.cap)->capture_default_str();
  search->add_option("--rank", o.zn_rank, "rank for free and zn");
  search->add_option("--modulus", o.modulus, "zn: 0 for Z^n, else (Z/modulus)^n");
  search->add_option("--certificate", o.certificate, "write the certificate to this file (- for stdout)");

  auto* rep = app.add_subcommand("rep", "representation numerics");
  rep->require_subcommand(1);
  auto* fig8 = rep->add_subcommand("fig8", "figure-eight knot fillings");
  fig8->add_option("--slope", o.slope, "p/q")->required();
  fig8->add_option("--grid", o.grid)->capture_default_str();
  fig8->add_option("--smax", o.smax)->capture_default_str();

  auto* emitc = app.add_subcommand("emit", "print presentations");
  emitc->require_subcommand(1);
  auto* ers = emitc->add_subcommand("rss", "Dehn fillings M(p, q, m)");
  ers->add_option("--p", o.p)->capture_default_str();
  ers->add_option("--q", o.q)->capture_default_str();
  ers->add_option("--m", o.m)->capture_default_str();
  auto* ese = emitc->add_subcommand("seifert", "Seifert fibred space");
  add_seifert_flags(ese);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Format fmt = o.format == "json-lines" ? Format::JsonLines : Format::Text;
  try {
    if (*cseifert) return run_classify_seifert(o, fmt);
    if (*csol) return run_classify_sol(o, fmt);
    if (*homology) return run_homology(o, fmt);
    if (*cfree) return run_compare_free(o, fmt);
    if (*csurf) return run_compare_surface(o, fmt);
    if (*search) return run_cone_search(o, fmt);
    if (*fig8) return run_fig8(o, fmt);
    if (*ers) return run_emit_rss(o, fmt);
    if (*ese) return run_emit_seifert(o, fmt);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
