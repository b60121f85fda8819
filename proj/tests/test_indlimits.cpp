#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagorbits/indlimits.hpp"
#include "testutil.hpp"

using namespace flagorbits;
using namespace flagorbits::testutil;

namespace {

IndSetup ind_a1(int tail, OrderSpec order = {}) {
  return IndSetup::make(TypeTag::A1, {}, tail, "", "", std::move(order));
}

IndSetup ind_a2(OrderSpec order) {
  return IndSetup::make(TypeTag::A2, {}, 2, "", "", std::move(order));
}

IndSetup ind_a3(std::string prefix, std::string tail, OrderSpec order) {
  return IndSetup::make(TypeTag::A3, {}, 0, std::move(prefix), std::move(tail),
                        std::move(order));
}

IndSetup ind_bcd(TypeTag type, std::string sprefix, std::string stail) {
  return IndSetup::make(type, {}, 2, std::move(sprefix), std::move(stail),
                        {OrderFamily::ISO_TWOSIDED, {}});
}

}  // namespace

TEST_CASE("tau_perm") {
  CHECK(tau_perm(ind_a1(1), 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(tau_perm(ind_a1(1, {OrderFamily::TWOSIDED, {}}), 4) == std::vector<int>{1, 3, 4, 2});
  CHECK(tau_perm(ind_a1(1, {OrderFamily::NAT, {2, 1}}), 3) == std::vector<int>{2, 1, 3});
  CHECK_THROWS_AS(tau_perm(ind_a1(1), 100), DomainError);
  // ISO keys sort the window symmetrically: tau = (n-1, n-3, ..., 1, 2, ..., n)
  CHECK(tau_perm(ind_bcd(TypeTag::C1, "", "+-"), 6) == std::vector<int>{5, 3, 1, 2, 4, 6});
}

TEST_CASE("ind setup validation") {
  CHECK_THROWS_AS(IndSetup::make(TypeTag::A2, {}, 1, "", "", {}), DomainError);
  CHECK_THROWS_AS(IndSetup::make(TypeTag::C1, {}, 2, "", "+-", {OrderFamily::NAT, {}}),
                  DomainError);  // isotropic types need ISO_TWOSIDED
  CHECK_THROWS_AS(IndSetup::make(TypeTag::A3, {}, 0, "", "+-", {OrderFamily::ISO_TWOSIDED, {}}),
                  DomainError);  // no iota in A3
  CHECK_THROWS_AS(IndSetup::make(TypeTag::C2, {}, 2, "+-", "+", {OrderFamily::ISO_TWOSIDED, {}}),
                  DomainError);  // signs must be iota-stable
  CHECK_NOTHROW(IndSetup::make(TypeTag::C2, {}, 2, "--", "+", {OrderFamily::ISO_TWOSIDED, {}}));
  CHECK_NOTHROW(IndSetup::make(TypeTag::BD1, {2, 1}, 2, "", "+",
                               {OrderFamily::ISO_TWOSIDED, {}}));  // one B1 middle allowed
  CHECK_THROWS_AS(IndSetup::make(TypeTag::BD1, {1, 1}, 2, "", "+",
                                 {OrderFamily::ISO_TWOSIDED, {}}),
                  DomainError);  // two iota-fixed points
}

TEST_CASE("embed_param") {
  {
    // A3, NAT: arc(1,2) keeps its core; tail fixed points signed by N±
    IndSetup s = ind_a3("+-", "+", {});
    Clan arc;
    arc.n = 2;
    arc.arcs = {{1, 2}};
    IndParam p = embed_param(arc, s, 2, Family::K_side);
    CHECK(p.window == 2);
    CHECK(p.core.arcs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(p.tail == TailRule::IdSigns);
    // widening and re-canonicalizing is the identity
    CHECK(ind_param_equal(p, widen(p, s, 6), s));
    CHECK(canonicalize(widen(p, s, 6), s).window == 2);
  }
  {
    // A1 with all-B1 tail: the identity parameter is the pure tail
    IndSetup s = ind_a1(1);
    IndParam p = embed_param(identity_clan(2), s, 2, Family::K_side);
    CHECK(p.window == 0);
    IndParam q = embed_param(identity_clan(4), s, 4, Family::K_side);
    CHECK(ind_param_equal(p, q, s));
    // the reversal involution is not tail-shaped
    IndParam r = embed_param(reversal_involution(4), s, 4, Family::K_side);
    CHECK(r.window == 4);
    CHECK_FALSE(ind_param_equal(p, r, s));
  }
  {
    // A1 with B2 tail: TAIL_IOTA absorbs the pairing involution
    IndSetup s = ind_a1(2);
    IndParam p = embed_param(pairing_involution(4), s, 4, Family::K_side);
    CHECK(p.window == 0);
  }
  {
    IndSetup s = ind_a3("+-", "+", {OrderFamily::TWOSIDED, {}});
    // the clan matching N± on its whole window is the pure tail parameter
    Clan base;
    base.n = 2;
    base.signs = {{1, 1}, {2, -1}};
    CHECK(embed_param(base, s, 2, Family::K_side).window == 0);
    // n=4: tau = (1,3,4,2) moves the window signs (-,+,+,+) to (-,+,+,+)
    // read off along tau, leaving a canonical window of 2
    Clan c;
    c.n = 4;
    c.signs = {{1, -1}, {2, 1}, {3, 1}, {4, 1}};
    IndParam p = embed_param(c, s, 4, Family::K_side);
    CHECK(p.window == 2);
    CHECK(p.core.signs == std::map<int, int>{{1, -1}, {2, 1}});
    CHECK_THROWS_AS(embed_param(base, s, 4, Family::K_side), DomainError);
  }
  CHECK_THROWS_AS(embed_param(identity_clan(3), ind_a2({OrderFamily::NAT, {}}), 3,
                              Family::K_side),
                  DomainError);  // unaligned window
}

TEST_CASE("embed_flag") {
  {
    // NAT appends at the end
    IndSetup s = ind_a1(1);
    SpaceSetup w1 = s.window(1);
    Flag f(Matrix::identity(1, s.tower));
    Flag g = embed_flag(f, s, 2);
    CHECK(g.basis() == Matrix::identity(2, s.tower));
    (void)w1;
  }
  {
    // TWOSIDED: key(2) = 1/2 is larger than key(1) = -1, so e2 goes after e1
    IndSetup s = ind_a1(1, {OrderFamily::TWOSIDED, {}});
    Flag f(Matrix::identity(1, s.tower));
    Flag g = embed_flag(f, s, 2);
    CHECK(g.basis() == Matrix::identity(2, s.tower));
    // but e3 (key -1/3) is inserted between them
    Flag h = embed_flag(g, s, 3);
    CHECK(h.basis().column(1) == s.window(3).basis_vector(3));
  }
  {
    // ISO insertion preserves isotropy
    IndSetup s = ind_bcd(TypeTag::C1, "", "+-");
    SpaceSetup w2 = s.window(2);
    Flag rep = build_representative(
        OrbitParam{enumerate_params(w2).front(), Family::K_side, TypeTag::C1}, w2);
    Flag emb = embed_flag(rep, s, 4);
    CHECK(flag_is_isotropic(emb, s.window(4)));
  }
}

TEST_CASE("commuting square") {
  std::vector<IndSetup> setups;
  for (OrderFamily fam : {OrderFamily::NAT, OrderFamily::TWOSIDED}) {
    setups.push_back(ind_a1(1, {fam, {}}));
    setups.push_back(ind_a1(2, {fam, {}}));
    setups.push_back(ind_a2({fam, {}}));
    setups.push_back(ind_a3("+-", "+", {fam, {}}));
    setups.push_back(ind_a3("", "+-", {fam, {}}));
  }
  setups.push_back(ind_bcd(TypeTag::BD1, "", "+"));
  setups.push_back(ind_bcd(TypeTag::C2, "--", "+"));
  setups.push_back(ind_bcd(TypeTag::C1, "", "+-"));
  setups.push_back(ind_bcd(TypeTag::D3, "", "+-"));

  for (const IndSetup& s : setups) {
    for (int n = 1; n <= 4; ++n) {
      if (!s.aligned(n)) continue;
      SpaceSetup wn = s.window(n);
      int wide = s.next_aligned(n);
      for (const Clan& c : enumerate_params(wn)) {
        INFO(type_name(s.type) << " " << order_family_name(s.order.family) << " n=" << n
                               << " clan " << c.to_string());
        for (Family fam : {Family::K_side, Family::G0_side}) {
          Flag rep = build_representative(OrbitParam{c, fam, s.type}, wn);
          IndParam lhs = embed_param(c, s, n, fam);
          IndParam rhs = ind_classify(embed_flag(rep, s, wide), s, fam);
          CHECK(ind_param_equal(lhs, rhs, s));
        }
      }
    }
  }
}

TEST_CASE("window counts grow strictly (parameter sets are infinite)") {
  std::vector<IndSetup> setups = {ind_a1(1),
                                  ind_a1(2),
                                  ind_a2({OrderFamily::NAT, {}}),
                                  ind_a3("+-", "+", {}),
                                  ind_bcd(TypeTag::BD1, "--", "+"),
                                  ind_bcd(TypeTag::C2, "--", "+"),
                                  ind_bcd(TypeTag::C1, "", "+-"),
                                  ind_bcd(TypeTag::D3, "", "+-")};
  for (const IndSetup& s : setups) {
    long prev = -1;
    for (int n = 1; n <= 8; ++n) {
      if (!s.aligned(n)) continue;
      long count = count_params(s.window(n));
      INFO(type_name(s.type) << " n=" << n);
      CHECK(count > prev);
      prev = count;
    }
  }
}

TEST_CASE("corollary criteria fixtures") {
  auto check = [](const IndSetup& s, Verdict open_k, Verdict closed_k, const char* clause_open,
                  const char* clause_closed) {
    CriterionResult o = has_open_orbit(s, Family::K_side);
    CriterionResult c = has_closed_orbit(s, Family::K_side);
    INFO(type_name(s.type) << " " << order_family_name(s.order.family) << " open=" << o.reason
                           << " closed=" << c.reason);
    CHECK(o.verdict == open_k);
    CHECK(o.clause == clause_open);
    CHECK(c.verdict == closed_k);
    CHECK(c.clause == clause_closed);
    // duality consistency
    CHECK(has_closed_orbit(s, Family::G0_side).verdict == o.verdict);
    CHECK(has_open_orbit(s, Family::G0_side).verdict == c.verdict);
  };

  check(ind_a1(1), Verdict::Yes, Verdict::No, "a1", "a'12");
  check(ind_a1(2), Verdict::No, Verdict::No, "a1", "a'12");
  check(ind_a1(2, {OrderFamily::TWOSIDED, {}}), Verdict::No, Verdict::Yes, "a1", "a'12");
  check(ind_a1(2, {OrderFamily::ISO_TWOSIDED, {}}), Verdict::No, Verdict::Yes, "a1", "a'12");
  // one leading B1 block shifts the two-sided pairing off the unique
  // antiautomorphism
  check(IndSetup::make(TypeTag::A1, {1}, 2, "", "", {OrderFamily::TWOSIDED, {}}), Verdict::No,
        Verdict::No, "a1", "a'12");

  check(ind_a2({OrderFamily::NAT, {}}), Verdict::Yes, Verdict::No, "a2", "a'12");
  check(ind_a2({OrderFamily::TWOSIDED, {}}), Verdict::No, Verdict::Yes, "a2", "a'12");
  check(ind_a2({OrderFamily::ISO_TWOSIDED, {}}), Verdict::No, Verdict::Yes, "a2", "a'12");

  check(ind_a3("--", "+", {OrderFamily::NAT, {}}), Verdict::No, Verdict::InfinitelyMany, "a3",
        "a3");
  check(ind_a3("", "+-", {OrderFamily::NAT, {}}), Verdict::No, Verdict::InfinitelyMany, "a3",
        "a3");
  check(ind_a3("--", "+", {OrderFamily::TWOSIDED, {}}), Verdict::Yes, Verdict::InfinitelyMany,
        "a3", "a3");
  check(ind_a3("", "+-", {OrderFamily::TWOSIDED, {}}), Verdict::No, Verdict::InfinitelyMany,
        "a3", "a3");
  check(ind_a3("--", "+", {OrderFamily::DENSE, {}}), Verdict::No, Verdict::InfinitelyMany, "a3",
        "a3");

  check(ind_bcd(TypeTag::C1, "", "+-"), Verdict::No, Verdict::InfinitelyMany, "bcd", "bcd");
  check(ind_bcd(TypeTag::D3, "", "+-"), Verdict::No, Verdict::InfinitelyMany, "bcd", "bcd");
  check(ind_bcd(TypeTag::BD1, "--", "+"), Verdict::Yes, Verdict::InfinitelyMany, "bcd", "bcd");
  check(ind_bcd(TypeTag::BD1, "", "++--"), Verdict::No, Verdict::InfinitelyMany, "bcd", "bcd");
  check(ind_bcd(TypeTag::C2, "--", "+"), Verdict::Yes, Verdict::InfinitelyMany, "bcd", "bcd");
  check(ind_bcd(TypeTag::C2, "", "++--"), Verdict::No, Verdict::InfinitelyMany, "bcd", "bcd");
}
