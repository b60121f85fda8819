#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagorbits/spaces.hpp"

namespace flagorbits {

// Involution of {1..n} with optional +/- signs on fixed points.  An empty
// sign map on an involution with fixed points is a plain involution (the
// parameter sets of types A1, A2); a fully signed one is a clan.
struct Clan {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (a, b) with a < b, sorted by a, disjoint
  std::map<int, int> signs;               // fixed point -> +1/-1

  int image(int k) const;  // w(k)
  bool is_fixed(int k) const { return image(k) == k; }
  std::vector<int> fixed_points() const;
  bool fully_signed() const;
  int sign_at(int k) const;  // throws UnsignedClan if k is unsigned

  void validate() const;  // arc disjointness and ranges

  bool operator==(const Clan& o) const { return n == o.n && arcs == o.arcs && signs == o.signs; }
  bool operator!=(const Clan& o) const { return !(*this == o); }
  bool operator<(const Clan& o) const;  // lexicographic by arcs, then signs

  std::string to_string() const;
};

Clan identity_clan(int n);                              // no arcs, unsigned
Clan reversal_involution(int n);                        // w0: arcs (k, n+1-k)
Clan pairing_involution(int n);                         // v0 = (1;2)(3;4)...
Clan conjugated_clan(const Clan& c, const std::vector<int>& perm);  // perm∘w∘perm^{-1}

using SignatureSeq = std::vector<std::pair<int, int>>;

// Entry l counts (+ signs, - signs) among the first l vertices, each arc
// contributing to both coordinates at its closing vertex.
SignatureSeq signature(const Clan& c);

// (eta, eps)-symmetry: w commutes with w0, signs satisfy eps_{w0 k} = eta eps_k,
// and for eta != eps the pattern has no symmetric arc (k, n+1-k).
bool is_symmetric_clan(const Clan& c, int eta, int eps);

// Parameter-set membership for the setup's type.
bool is_valid_param(const Clan& c, const SpaceSetup& setup);

std::vector<Clan> all_involutions(int n);
std::vector<Clan> all_fpf_involutions(int n);
std::vector<Clan> all_signed_clans(int n, int p, int q);

// The parameter set of the setup, in canonical (lexicographic) order.
std::vector<Clan> enumerate_params(const SpaceSetup& setup);
long count_params(const SpaceSetup& setup);

// Closed-orbit count per type: A1/A2: 1; A3: C(n,p); BD1/C2:
// C(floor(p/2)+floor(q/2), floor(p/2)); C1/D3: 2^{n/2}.
long count_closed(const SpaceSetup& setup);

bool is_open_param(const Clan& c, const SpaceSetup& setup);
bool is_closed_param(const Clan& c, const SpaceSetup& setup);

enum class Family { K_side, G0_side };
const char* family_name(Family f);

struct OrbitParam {
  Clan clan;
  Family family;
  TypeTag type;
  bool operator==(const OrbitParam& o) const {
    return clan == o.clan && family == o.family && type == o.type;
  }
};

OrbitParam make_orbit_param(Clan c, Family f, const SpaceSetup& setup);  // validates

// Link pattern rendering: vertices 1..n left to right, arcs above, signs below.
std::string render_link_pattern_ascii(const Clan& c);
std::string render_link_pattern_dot(const Clan& c);

}  // namespace flagorbits
