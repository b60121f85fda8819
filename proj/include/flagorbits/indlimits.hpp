#pragma once

#include <optional>
#include <string>

#include "flagorbits/classify.hpp"

namespace flagorbits {

// Order specification sigma: a bijection from the index set onto a totally
// ordered set, given by a family of exact rational keys composed with a
// finite prefix permutation.
//   NAT            l -> l                      (ascending chain)
//   TWOSIDED       l -> (-1)^l / l             (chain indexed by {1/n : n in Z*})
//   DENSE          l -> a fixed bijection onto Q (Calkin-Wilf interleave)
//   ISO_TWOSIDED   iota-pair (a, a*) -> (-k, +k), a single iota-fixed
//                  middle index -> 0; satisfies sigma iota = iota_A sigma
//                  for iota_A = negation
enum class OrderFamily { NAT, TWOSIDED, DENSE, ISO_TWOSIDED };

const char* order_family_name(OrderFamily f);
std::optional<OrderFamily> order_family_from_name(const std::string& s);

struct OrderSpec {
  OrderFamily family = OrderFamily::NAT;
  std::vector<int> prefix_perm;  // permutation of 1..m applied before keying
};

// Ambient ind-structure: explicit leading blocks/signs followed by
// eventually-periodic tails, plus the order spec.
struct IndSetup {
  TypeTag type;
  std::vector<int> omega_prefix;  // leading block sizes; empty for A3
  int omega_tail = 0;             // repeated block size (1 or 2); 0 for A3
  std::string signs_prefix;       // leading signs over {+,-}; empty for A1/A2
  std::string signs_tail;         // nonempty repeated period over {+,-}
  OrderSpec order;
  int horizon = 64;
  TowerPtr tower;

  static IndSetup make(TypeTag type, std::vector<int> omega_prefix, int omega_tail,
                       std::string signs_prefix, std::string signs_tail, OrderSpec order,
                       int horizon = 64);

  bool has_signs() const { return type != TypeTag::A1 && type != TypeTag::A2; }
  bool has_blocks() const { return type != TypeTag::A3; }
  int iota(int l) const;
  int sign_of(int l) const;  // +1/-1
  bool aligned(int n) const;
  int next_aligned(int n) const;
  mpq_class key(int l) const;  // exact order key; throws HorizonExceeded
  SpaceSetup window(int n) const;

  // min(|N+|, |N-|) when finite (one sign absent from the tail period)
  std::optional<long> finite_defect() const;
};

// tau^(n): the sequence tau_1..tau_n with sigma(tau_1) < ... < sigma(tau_n).
std::vector<int> tau_perm(const IndSetup& setup, int n);

enum class TailRule { Iota, IdSigns };

// Finite-window description of an infinite parameter: a clan on {1..window}
// continued by the tail rule (w = iota beyond the window in types A1/A2;
// w = id with N±-signs in types A3, B, C, D).
struct IndParam {
  int window = 0;
  Clan core;
  TailRule tail = TailRule::IdSigns;
  Family family = Family::K_side;
  TypeTag type = TypeTag::A1;
};

TailRule tail_rule_for(TypeTag type);

// j_n: conjugate the window clan by tau^(n) and continue by the tail rule.
// The result is canonicalized (smallest block-aligned window).
IndParam embed_param(const Clan& c, const IndSetup& setup, int n, Family family);

IndParam canonicalize(const IndParam& p, const IndSetup& setup);
IndParam widen(const IndParam& p, const IndSetup& setup, int target_window);
bool ind_param_equal(const IndParam& a, const IndParam& b, const IndSetup& setup);

// Iterated insertion of e_{n+1}, ..., e_{target_n} at the sigma-determined
// positions.
Flag embed_flag(const Flag& f, const IndSetup& setup, int target_n);

// Classify a window flag and embed the window parameter.
IndParam ind_classify(const Flag& f, const IndSetup& setup, Family family);

enum class Verdict { No, Yes, InfinitelyMany, Undecidable };
const char* verdict_name(Verdict v);

struct CriterionResult {
  Verdict verdict;
  std::string clause;  // which clause decided: a1 / a2 / a'12 / a3 / bcd
  std::string reason;
};

// Existence of open/closed orbits on the ind-variety, clause by clause.
// G0-side answers are obtained from the K-side by duality (open K-orbits
// correspond to closed G0-orbits and vice versa).
CriterionResult has_open_orbit(const IndSetup& setup, Family family);
CriterionResult has_closed_orbit(const IndSetup& setup, Family family);

}  // namespace flagorbits
