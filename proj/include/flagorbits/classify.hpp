#pragma once

#include "flagorbits/clans.hpp"

namespace flagorbits {

// Relative position of an ordered pair of complete flags: the unique
// permutation w with dim F_k ∩ F'_l = |{j <= l : w_j <= k}|.
struct RelPos {
  std::vector<int> perm;  // 1-based, perm[j-1] = w_j
  bool operator==(const RelPos& o) const { return perm == o.perm; }
};

RelPos relative_position(const Flag& f, const Flag& g);

// Unique orbit parameter whose defining conditions the flag satisfies.
// K-side uses (F^perp, F) in types A1/A2 and (delta F, F) plus V±-jumps in
// types A3/B/C/D; the G0-side swaps the roles (gamma resp. dagger + phi
// signature jumps).  For B/C/D the flag must be omega-isotropic.
OrbitParam classify(const Flag& f, const SpaceSetup& setup, Family family);

// Explicit basis that is simultaneously dual and conjugate for the
// parameter (hence a special representative of both orbits), satisfying
// the isotropic pairing table in types B/C/D.
Flag build_representative(const OrbitParam& param, const SpaceSetup& setup);

// The inductive three-case normalization: given a flag in the intersection
// of the dual K-orbit and G0-orbit of `param` together with a dual basis
// spanning it, produce a basis of the same flag that is both dual and
// conjugate.  New square roots of the positive real pivots are adjoined to
// the setup's tower as needed.
Matrix normalize_to_special(const Flag& f, const Matrix& dual_basis, const OrbitParam& param,
                            const SpaceSetup& setup);

// Matsuki duality on parameters: same clan, family flipped.
OrbitParam matsuki_dual(const OrbitParam& param);

// Direct Gram / conjugation condition checks (the verbatim definitions).
bool is_dual_basis(const Matrix& basis, const Clan& c, const SpaceSetup& setup);
bool is_conjugate_basis(const Matrix& basis, const Clan& c, const SpaceSetup& setup);
// omega-pairing table for isotropic types: nonzero exactly on the
// antidiagonal, with values 1 / eps / eta / eta*eps by arc position.
bool satisfies_isotropic_pairing(const Matrix& basis, const Clan& c, const SpaceSetup& setup);

bool flag_is_isotropic(const Flag& f, const SpaceSetup& setup);

// Automorphism switching the two middle vectors (the component swap of an
// even orthogonal isotropic flag variety); used by the D3 two-open-orbit
// tests.
Flag switch_middle_vectors(const Flag& f);
Clan switch_middle_clan(const Clan& c);

}  // namespace flagorbits
