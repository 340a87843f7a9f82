#pragma once

// Finite positive-cone search. A ball of radius r in the Cayley graph carries
// the constraints a positive cone must satisfy there: exactly one of g, g^-1
// is positive, products of positives are positive and (for bi-orders)
// conjugates of positives are positive. If no sign assignment satisfies them,
// restricting any order of the group to the ball gives a contradiction, so
// the group is not orderable. A satisfiable ball proves nothing.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "words.hpp"

namespace ord3 {

enum class OrderMode { LeftOrder, BiOrder };

class GroupBall {
 public:
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return words_.size(); }
  const EqualityOracle& oracle() const noexcept { return oracle_; }
  // Generator ids used to build the ball, in letter order.
  const std::vector<int>& generators() const noexcept { return gens_; }

  // Element 0 is the identity; elements are sorted by (length, lex) of their
  // canonical word, letters ordered g1, g1^-1, g2, g2^-1, ...
  const Word& word(int e) const { return words_.at(static_cast<std::size_t>(e)); }
  long length(int e) const { return word(e).length(); }
  int inverse(int e) const { return inverse_.at(static_cast<std::size_t>(e)); }
  // Index of the element represented by w, or -1 if it is outside the ball.
  int find(const Word& w) const;

  // Some g != 1 with g^n = 1 inside the ball.
  struct Torsion {
    int element;
    int order;
  };
  const std::optional<Torsion>& torsion() const noexcept { return torsion_; }

  // Product g_i g_j when |g_i| + |g_j| <= radius, else -1. Uses the oracle.
  int product(int i, int j) const;
  // h g h^-1 when 2|h| + |g| <= radius, else -1. Uses the oracle.
  int conjugate(int h, int g) const;

  std::string render(int e) const;

 private:
  friend GroupBall build_ball(const EqualityOracle&, const std::vector<std::string>&, int);
  explicit GroupBall(EqualityOracle oracle) : oracle_(std::move(oracle)) {}

  EqualityOracle oracle_;
  int radius_ = 0;
  std::vector<int> gens_;
  std::vector<Word> words_;
  std::vector<int> inverse_;
  std::map<EqualityOracle::Key, int> index_;
  std::optional<Torsion> torsion_;
};

// Empty `generators` means all generators of the oracle.
GroupBall build_ball(const EqualityOracle& oracle, const std::vector<std::string>& generators, int radius);

// A cited constraint. Product(a, b): g_a, g_b > 1 imply g_a g_b > 1.
// Conj(a, b): g_b and g_a g_b g_a^-1 have the same sign.
struct Citation {
  enum class Kind { Product, Conj } kind = Kind::Product;
  int a = 0;
  int b = 0;
  friend bool operator==(const Citation&, const Citation&) = default;
};

// sign is +1 or -1 and always refers to `element`.
struct TorsionStep { int element; int order; };
struct DecideStep { int element; int sign; };
struct DeriveStep { int element; int sign; Citation by; };
struct ConflictStep { Citation by; };
using TraceStep = std::variant<TorsionStep, DecideStep, DeriveStep, ConflictStep>;

struct ConsistentCone {
  // Per element: 0 for the identity, otherwise +1 or -1.
  std::vector<int> sign;
};

struct Refutation {
  std::vector<TraceStep> trace;
};

struct ConeCertificate {
  OrderMode mode = OrderMode::LeftOrder;
  int radius = 0;
  std::variant<ConsistentCone, Refutation> result;

  bool refuted() const noexcept { return std::holds_alternative<Refutation>(result); }
};

struct SearchStats {
  std::size_t variables = 0;
  std::size_t clauses = 0;
  std::size_t decisions = 0;
};

ConeCertificate search_cone(const GroupBall& ball, OrderMode mode, SearchStats* stats = nullptr);

// Checks the certificate against the ball using only the oracle.
bool verify_certificate(const GroupBall& ball, const ConeCertificate& cert);

// One line per sign or trace step.
std::string render_certificate(const GroupBall& ball, const ConeCertificate& cert);

}  // namespace ord3
