#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagorbits/flaglin.hpp"

namespace flagorbits {

// The seven classical symmetric-pair types.
enum class TypeTag { A1, A2, A3, BD1, C1, C2, D3 };

const char* type_name(TypeTag t);
std::optional<TypeTag> type_from_name(const std::string& s);

// A finite model of the ambient structures: the bilinear form omega as a
// block matrix (blocks of size 1 or 2 on the diagonal), the hermitian form
// phi given by a sign per index, the conjugations gamma(x) = Omega conj(x)
// and delta(x) = Phi x, and the block pairing iota.
//
// Indices are 1-based throughout, matching the usual conventions for
// permutations and link patterns.
struct SpaceSetup {
  TypeTag type;
  int n = 0;
  std::vector<int> blocks;  // sizes in {1,2}; empty for A3
  std::vector<int> signs;   // +1/-1 per index; empty for A1/A2
  TowerPtr tower;

  // Validates all type constraints; adjoins sqrt(2) so that r1 is fixed in
  // this setup's tower regardless of later adjunctions.  Windows of one
  // ind-setup pass a shared tower so their scalars interoperate.
  static SpaceSetup make(TypeTag type, int n, std::vector<int> blocks, std::vector<int> signs,
                         TowerPtr tower = nullptr);

  bool has_omega() const { return type != TypeTag::A3; }
  bool has_phi() const { return type != TypeTag::A1 && type != TypeTag::A2; }
  int eps_form() const;  // +1 if omega symmetric, -1 if symplectic
  int eta() const;       // iota-stability sign of N± (types B, C, D)

  int iota(int l) const;  // the pairing l -> l*, 1-based; throws OutOfRange
  int p() const;          // |N+ ∩ {1..n}|
  int q() const;

  const Matrix& omega() const;  // throws FormUnavailable
  const Matrix& phi() const;

  Scalar omega_pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  Scalar phi_pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  std::vector<Scalar> apply_gamma(const std::vector<Scalar>& v) const;
  std::vector<Scalar> apply_delta(const std::vector<Scalar>& v) const;

  std::vector<Scalar> basis_vector(int l) const;  // e_l, 1-based
  Scalar sqrt2() const;
  Scalar half_sqrt2() const;  // 1/sqrt(2)

 private:
  mutable std::optional<Matrix> omega_, phi_;
};

enum class FlagMap { gamma, delta, perp_omega, dagger_phi };

// Image of a complete flag under gamma/delta (memberwise) or under the
// orthogonality involutions (chain reversed and re-read as a flag).
Flag flag_image(const SpaceSetup& setup, const Flag& f, FlagMap map);

enum class Group { G, K, G0, KG0 };

// Exact membership predicate per the type's defining conditions.
bool is_in_group(const Matrix& g, const SpaceSetup& setup, Group group);

struct GroupElement {
  Matrix matrix;
  Group claimed_group;
  static GroupElement make(Matrix m, const SpaceSetup& setup, Group g);
};

}  // namespace flagorbits
