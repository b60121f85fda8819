#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "flagorbits/classify.hpp"
#include "testutil.hpp"

using namespace flagorbits;
using namespace flagorbits::testutil;

namespace {

Flag flag_from_cols(const SpaceSetup& s, const std::vector<std::vector<Scalar>>& cols) {
  return Flag(Matrix::from_columns(cols, s.tower));
}

}  // namespace

TEST_CASE("relative position") {
  SpaceSetup s = canonical_setup(TypeTag::A1, 3);
  std::mt19937_64 rng(17);
  Flag f = random_flag(s, rng);
  CHECK(relative_position(f, f).perm == std::vector<int>{1, 2, 3});

  // F = F(e1, e2), F' = F(e1+e2, e1)  ->  w = (1;2)
  SpaceSetup s2 = canonical_setup(TypeTag::A1, 2);
  Flag a = flag_from_cols(s2, {s2.basis_vector(1), s2.basis_vector(2)});
  std::vector<Scalar> e12 = s2.basis_vector(1);
  e12[1] = s2.tower->integer(1);
  Flag b = flag_from_cols(s2, {e12, s2.basis_vector(1)});
  CHECK(relative_position(a, b).perm == std::vector<int>{2, 1});

  // permuted basis realizes w; swapped arguments give the inverse
  SpaceSetup s4 = canonical_setup(TypeTag::A1, 4);
  for (int trial = 0; trial < 12; ++trial) {
    Flag f1 = random_flag(s4, rng);
    std::vector<int> w{2, 4, 1, 3};  // w as sequence w_1..w_4
    std::vector<std::vector<Scalar>> cols;
    for (int j = 0; j < 4; ++j) cols.push_back(f1.basis().column(w[j] - 1));
    Flag f2 = flag_from_cols(s4, cols);
    CHECK(relative_position(f1, f2).perm == w);

    Flag g = random_flag(s4, rng);
    std::vector<int> fwd = relative_position(f1, g).perm;
    std::vector<int> bwd = relative_position(g, f1).perm;
    for (int j = 1; j <= 4; ++j) CHECK(bwd[fwd[j - 1] - 1] == j);
  }
}

TEST_CASE("classify examples") {
  {
    // A1 blocks [B1,B1]: the line e1 + i e2 is omega-isotropic, so the perp
    // flag equals the flag, w(F^perp, F) = id, and the K-side parameter is
    // w0 (the closed orbit); no id-dual basis can span an isotropic line.
    SpaceSetup s = canonical_setup(TypeTag::A1, 2);
    std::vector<Scalar> v1 = s.basis_vector(1);
    v1[1] = s.tower->imaginary_unit();
    Flag f = flag_from_cols(s, {v1, s.basis_vector(1)});
    OrbitParam param = classify(f, s, Family::K_side);
    CHECK(param.clan == reversal_involution(2));
    CHECK(is_closed_param(param.clan, s));
    // non-isotropic line: the open parameter id
    Flag g = flag_from_cols(s, {s.basis_vector(1), s.basis_vector(2)});
    CHECK(classify(g, s, Family::K_side).clan == identity_clan(2));
    CHECK(is_open_param(identity_clan(2), s));
  }
  {
    // A3 Phi = diag(1,-1): F(e1, e2) -> fixed points with signs (+,-)
    SpaceSetup s = canonical_setup(TypeTag::A3, 2, 1);
    Flag f = flag_from_cols(s, {s.basis_vector(1), s.basis_vector(2)});
    OrbitParam param = classify(f, s, Family::K_side);
    CHECK(param.clan.arcs.empty());
    CHECK(param.clan.signs == std::map<int, int>{{1, 1}, {2, -1}});

    // F(e1+e2, e1) -> arc (1,2)
    std::vector<Scalar> e12 = s.basis_vector(1);
    e12[1] = s.tower->integer(1);
    Flag g = flag_from_cols(s, {e12, s.basis_vector(1)});
    OrbitParam pg = classify(g, s, Family::K_side);
    CHECK(pg.clan.arcs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(pg.clan.signs.empty());
  }
  {
    // non-isotropic flag rejected in type BD1
    SpaceSetup s = canonical_setup(TypeTag::BD1, 2, 1);
    Flag f = flag_from_cols(s, {s.basis_vector(1), s.basis_vector(2)});
    CHECK_THROWS_AS(classify(f, s, Family::K_side), DomainError);
  }
}

TEST_CASE("representatives: examples") {
  {
    // A1 blocks [B1,B1], w = id -> basis (e1, e2)
    SpaceSetup s = canonical_setup(TypeTag::A1, 2);
    Flag f = build_representative(OrbitParam{identity_clan(2), Family::K_side, TypeTag::A1}, s);
    CHECK(f.basis() == Matrix::identity(2, s.tower));
  }
  {
    // A2 blocks [B2,B2], w = (1;2)(3;4) -> basis (e1..e4)
    SpaceSetup s = canonical_setup(TypeTag::A2, 4);
    Flag f =
        build_representative(OrbitParam{pairing_involution(4), Family::K_side, TypeTag::A2}, s);
    CHECK(f.basis() == Matrix::identity(4, s.tower));
  }
  {
    // A3 diag(1,-1), arc(1,2): v1 = (e1+e2)/sqrt2, v2 = (e1-e2)/sqrt2
    SpaceSetup s = canonical_setup(TypeTag::A3, 2, 1);
    Clan arc;
    arc.n = 2;
    arc.arcs = {{1, 2}};
    Flag f = build_representative(OrbitParam{arc, Family::K_side, TypeTag::A3}, s);
    Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
    CHECK(f.basis().at(0, 0) == inv_s2);
    CHECK(f.basis().at(1, 0) == inv_s2);
    CHECK(f.basis().at(0, 1) == inv_s2);
    CHECK(f.basis().at(1, 1) == -inv_s2);
  }
}

TEST_CASE("representatives satisfy both conditions and classify back") {
  std::vector<SpaceSetup> setups;
  for (TypeTag type : all_types())
    for (SpaceSetup& s : standard_setups(type, 4)) setups.push_back(std::move(s));
  // a couple of mixed-block windows
  setups.push_back(SpaceSetup::make(TypeTag::A1, 3, {2, 1}, {}));
  setups.push_back(SpaceSetup::make(TypeTag::A1, 5, {1, 2, 2}, {}));
  setups.push_back(SpaceSetup::make(TypeTag::BD1, 4, {2, 1, 1}, {1, 1, 1, -1}));
  setups.push_back(SpaceSetup::make(TypeTag::BD1, 5, {1, 2, 2}, {-1, 1, 1, -1, -1}));

  for (const SpaceSetup& s : setups) {
    std::set<Clan> seen;  // distinct parameters classify distinctly
    std::vector<Clan> params = enumerate_params(s);
    for (const Clan& c : params) {
      INFO(type_name(s.type) << " n=" << s.n << " clan " << c.to_string());
      Flag rep = build_representative(OrbitParam{c, Family::K_side, s.type}, s);
      CHECK(is_dual_basis(rep.basis(), c, s));
      CHECK(is_conjugate_basis(rep.basis(), c, s));
      if (s.has_omega() && s.has_phi()) {
        CHECK(satisfies_isotropic_pairing(rep.basis(), c, s));
        CHECK(flag_is_isotropic(rep, s));
      }
      for (Family fam : {Family::K_side, Family::G0_side}) {
        OrbitParam back = classify(rep, s, fam);
        CHECK(back.clan == c);
      }
      seen.insert(classify(rep, s, Family::K_side).clan);
    }
    CHECK(seen.size() == params.size());
  }
}

TEST_CASE("matsuki dual") {
  SpaceSetup s = canonical_setup(TypeTag::A1, 3);
  OrbitParam p{identity_clan(3), Family::K_side, TypeTag::A1};
  OrbitParam d = matsuki_dual(p);
  CHECK(d.family == Family::G0_side);
  CHECK(d.clan == p.clan);
  CHECK(matsuki_dual(d) == p);

  // open K parameter is the closed G0 parameter and vice versa (same clan)
  SpaceSetup a2 = canonical_setup(TypeTag::A2, 4);
  Clan v0 = pairing_involution(4);
  CHECK(is_open_param(v0, a2));
  // dual family carries the same clan; on the G0 side openness swaps with
  // closedness through the duality of the parameterizations
  CHECK(matsuki_dual(OrbitParam{v0, Family::K_side, TypeTag::A2}).clan == v0);
}

TEST_CASE("group invariance of classification") {
  std::mt19937_64 rng(23);
  for (TypeTag type : all_types()) {
    SpaceSetup s = canonical_setup(type, type == TypeTag::A3 ? 3 : 4,
                                   type == TypeTag::A3 ? 2 : 2);
    auto kpool = group_generators(s, Group::K);
    auto gpool = group_generators(s, Group::G0);
    INFO(type_name(type) << ": K pool " << kpool.size() << ", G0 pool " << gpool.size());
    CHECK(kpool.size() >= 2);
    CHECK(gpool.size() >= 2);
    for (int trial = 0; trial < 5; ++trial) {
      Flag f = random_flag(s, rng);
      OrbitParam pk = classify(f, s, Family::K_side);
      OrbitParam pg = classify(f, s, Family::G0_side);
      for (int w = 0; w < 5; ++w) {
        Flag fk(random_word(kpool, s, rng) * f.basis());
        CHECK(classify(fk, s, Family::K_side) == pk);
        Flag fg(random_word(gpool, s, rng) * f.basis());
        CHECK(classify(fg, s, Family::G0_side) == pg);
      }
    }
  }
}

TEST_CASE("special representative lies in both orbits; K∩G0 preserves them") {
  std::mt19937_64 rng(29);
  for (TypeTag type : all_types()) {
    SpaceSetup s = canonical_setup(type, type == TypeTag::A3 ? 3 : 4,
                                   type == TypeTag::A3 ? 1 : 2);
    auto pool = group_generators(s, Group::KG0);
    CHECK(pool.size() >= 2);
    for (const Clan& c : enumerate_params(s)) {
      Flag rep = build_representative(OrbitParam{c, Family::K_side, s.type}, s);
      CHECK(classify(rep, s, Family::K_side).clan == c);
      CHECK(classify(rep, s, Family::G0_side).clan == c);
      for (int w = 0; w < 3; ++w) {
        Flag moved(random_word(pool, s, rng) * rep.basis());
        CHECK(classify(moved, s, Family::K_side).clan == c);
        CHECK(classify(moved, s, Family::G0_side).clan == c);
      }
    }
  }
}

TEST_CASE("normalize_to_special") {
  std::mt19937_64 rng(31);
  {
    // n=1 example: basis (2 e1) rescales to (e1)
    SpaceSetup s = canonical_setup(TypeTag::A1, 1);
    Matrix b(1, 1, s.tower);
    b.at(0, 0) = s.tower->integer(2);
    Flag f(b);
    OrbitParam p{identity_clan(1), Family::K_side, TypeTag::A1};
    Matrix out = normalize_to_special(f, b, p, s);
    CHECK(out.at(0, 0) == s.tower->integer(1));
  }
  for (TypeTag type : all_types()) {
    SpaceSetup s = canonical_setup(type, type == TypeTag::A3 ? 3 : 4,
                                   type == TypeTag::A3 ? 2 : 2);
    auto pool = group_generators(s, Group::KG0);
    for (const Clan& c : enumerate_params(s)) {
      INFO(type_name(type) << " clan " << c.to_string());
      OrbitParam param{c, Family::K_side, s.type};
      Flag rep = build_representative(param, s);
      for (int trial = 0; trial < 2; ++trial) {
        Matrix g = random_word(pool, s, rng);
        Matrix moved = g * rep.basis();
        Flag f(moved);
        int radicals_before = s.tower->radical_count();
        Matrix special = normalize_to_special(f, moved, param, s);
        CHECK(is_dual_basis(special, c, s));
        CHECK(is_conjugate_basis(special, c, s));
        CHECK(same_flag(Flag(special), f));
        CHECK(s.tower->radical_count() - radicals_before <= s.n);
      }
    }
  }
  {
    // flag outside the intersection is rejected
    SpaceSetup s = canonical_setup(TypeTag::A1, 2);
    Flag f = build_representative(OrbitParam{identity_clan(2), Family::K_side, TypeTag::A1}, s);
    Clan other;
    other.n = 2;
    other.arcs = {{1, 2}};
    CHECK_THROWS_AS(
        normalize_to_special(f, f.basis(), OrbitParam{other, Family::K_side, TypeTag::A1}, s),
        DomainError);
  }
  {
    // i*e1 spans the same flag but has pivot -1: NegativePivot
    SpaceSetup s = canonical_setup(TypeTag::A1, 1);
    Matrix b(1, 1, s.tower);
    b.at(0, 0) = s.tower->imaginary_unit();
    OrbitParam p{identity_clan(1), Family::K_side, TypeTag::A1};
    try {
      normalize_to_special(Flag(b), b, p, s);
      CHECK(false);
    } catch (const DomainError& e) {
      CHECK(e.code() == errc::negative_pivot);
    }
  }
  {
    // a basis violating the off-diagonal dual pattern is rejected
    SpaceSetup s = canonical_setup(TypeTag::A1, 2);
    Clan w0 = reversal_involution(2);
    OrbitParam p{w0, Family::K_side, TypeTag::A1};
    Flag rep = build_representative(p, s);
    Matrix bad = rep.basis();
    for (int i = 0; i < 2; ++i) bad.at(i, 1) = bad.at(i, 1) * s.tower->integer(3);
    try {
      normalize_to_special(Flag(bad), bad, p, s);
      CHECK(false);
    } catch (const DomainError& e) {
      CHECK(e.code() == errc::not_in_intersection);
    }
  }
}

TEST_CASE("D3 component switch exchanges the two open orbits") {
  for (int n : {4, 6}) {
    SpaceSetup s = canonical_setup(TypeTag::D3, n);
    std::vector<Clan> open;
    for (const Clan& c : enumerate_params(s))
      if (is_open_param(c, s)) open.push_back(c);
    REQUIRE(open.size() == 2);
    CHECK(switch_middle_clan(open[0]) == open[1]);

    Flag rep = build_representative(OrbitParam{open[0], Family::K_side, TypeTag::D3}, s);
    Flag switched = switch_middle_vectors(rep);
    CHECK(flag_is_isotropic(switched, s));
    CHECK(classify(switched, s, Family::K_side).clan == open[1]);
  }
}
