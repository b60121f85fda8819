#include "flagorbits/spaces.hpp"

#include <algorithm>

namespace flagorbits {

const char* type_name(TypeTag t) {
  switch (t) {
    case TypeTag::A1: return "A1";
    case TypeTag::A2: return "A2";
    case TypeTag::A3: return "A3";
    case TypeTag::BD1: return "BD1";
    case TypeTag::C1: return "C1";
    case TypeTag::C2: return "C2";
    case TypeTag::D3: return "D3";
  }
  return "?";
}

std::optional<TypeTag> type_from_name(const std::string& s) {
  for (TypeTag t : {TypeTag::A1, TypeTag::A2, TypeTag::A3, TypeTag::BD1, TypeTag::C1,
                    TypeTag::C2, TypeTag::D3})
    if (s == type_name(t)) return t;
  return std::nullopt;
}

int SpaceSetup::eps_form() const {
  switch (type) {
    case TypeTag::A1:
    case TypeTag::BD1:
    case TypeTag::D3: return 1;
    case TypeTag::A2:
    case TypeTag::C1:
    case TypeTag::C2: return -1;
    case TypeTag::A3: fail(errc::form_unavailable, "type A3 has no bilinear form");
  }
  return 0;
}

int SpaceSetup::eta() const {
  switch (type) {
    case TypeTag::BD1:
    case TypeTag::C2: return 1;
    case TypeTag::C1:
    case TypeTag::D3: return -1;
    default: fail(errc::form_unavailable, "eta is defined for types B, C, D only");
  }
}

int SpaceSetup::iota(int l) const {
  if (l < 1 || l > n) fail(errc::out_of_range, "iota index");
  if (!has_omega()) fail(errc::form_unavailable, "setup has no omega pairing");
  int pos = 1;
  for (int b : blocks) {
    if (l < pos + b) return b == 1 ? l : (l == pos ? pos + 1 : pos);
    pos += b;
  }
  fail(errc::internal, "blocks do not cover index");
}

int SpaceSetup::p() const {
  if (signs.empty()) fail(errc::form_unavailable, "setup has no sign pattern");
  return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

int SpaceSetup::q() const { return n - p(); }

SpaceSetup SpaceSetup::make(TypeTag type, int n, std::vector<int> blocks, std::vector<int> signs,
                            TowerPtr tower) {
  SpaceSetup s;
  s.type = type;
  s.n = n;
  s.blocks = std::move(blocks);
  s.signs = std::move(signs);
  if (n < 1) fail(errc::out_of_range, "dimension must be positive");

  bool want_omega = type != TypeTag::A3;
  bool want_signs = type != TypeTag::A1 && type != TypeTag::A2;
  if (want_omega) {
    int sum = 0;
    for (int b : s.blocks) {
      if (b != 1 && b != 2) fail(errc::invalid_param, "block sizes must be 1 or 2");
      sum += b;
    }
    if (sum != n) fail(errc::unaligned_window, "block sizes must sum to n");
    bool all_b2 = std::all_of(s.blocks.begin(), s.blocks.end(), [](int b) { return b == 2; });
    if ((type == TypeTag::A2 || type == TypeTag::C1 || type == TypeTag::C2 ||
         type == TypeTag::D3) &&
        !all_b2)
      fail(errc::invalid_param, std::string(type_name(type)) + " requires all blocks of size 2");
  } else if (!s.blocks.empty()) {
    fail(errc::invalid_param, "type A3 takes no omega blocks");
  }
  if (want_signs) {
    if (static_cast<int>(s.signs.size()) != n)
      fail(errc::invalid_param, "sign pattern must cover 1..n");
    for (int v : s.signs)
      if (v != 1 && v != -1) fail(errc::invalid_param, "signs must be +1/-1");
    if (type == TypeTag::BD1 || type == TypeTag::C2) {
      for (int l = 1; l <= n; ++l)
        if (s.signs[s.iota(l) - 1] != s.signs[l - 1])
          fail(errc::invalid_param, "N± must be iota-stable in types BD1, C2");
    }
    if (type == TypeTag::C1 || type == TypeTag::D3) {
      for (int l = 1; l <= n; ++l)
        if (s.signs[s.iota(l) - 1] != -s.signs[l - 1])
          fail(errc::invalid_param, "iota must swap N+ and N- in types C1, D3");
    }
  } else if (!s.signs.empty()) {
    fail(errc::invalid_param, "types A1, A2 take no sign pattern");
  }

  if (tower) {
    s.tower = std::move(tower);
  } else {
    s.tower = Tower::make();
    s.tower->adjoin_sqrt(s.tower->integer(2));  // r1 = sqrt(2), fixed by convention
  }
  return s;
}

const Matrix& SpaceSetup::omega() const {
  if (!has_omega()) fail(errc::form_unavailable, "setup has no omega form");
  if (!omega_) {
    Matrix m(n, n, tower);
    int eps = eps_form();
    int pos = 0;  // 0-based start of current block
    for (int b : blocks) {
      if (b == 1) {
        m.at(pos, pos) = tower->integer(1);
      } else {
        m.at(pos, pos + 1) = tower->integer(1);
        m.at(pos + 1, pos) = tower->integer(eps);
      }
      pos += b;
    }
    omega_ = std::move(m);
  }
  return *omega_;
}

const Matrix& SpaceSetup::phi() const {
  if (!has_phi()) fail(errc::form_unavailable, "setup has no hermitian form");
  if (!phi_) {
    Matrix m(n, n, tower);
    for (int l = 0; l < n; ++l) m.at(l, l) = tower->integer(signs[l]);
    phi_ = std::move(m);
  }
  return *phi_;
}

Scalar SpaceSetup::omega_pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const Matrix& f = omega();
  std::vector<Scalar> fy = mat_vec(f, y);
  Scalar acc = tower->zero();
  for (int i = 0; i < n; ++i)
    if (!x[i].is_zero() && !fy[i].is_zero()) acc += x[i] * fy[i];
  return acc;
}

Scalar SpaceSetup::phi_pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const Matrix& f = phi();
  Scalar acc = tower->zero();
  for (int i = 0; i < n; ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i].conj() * f.at(i, i) * y[i];
  return acc;
}

std::vector<Scalar> SpaceSetup::apply_gamma(const std::vector<Scalar>& v) const {
  std::vector<Scalar> c(v);
  for (Scalar& s : c) s = s.conj();
  return mat_vec(omega(), c);
}

std::vector<Scalar> SpaceSetup::apply_delta(const std::vector<Scalar>& v) const {
  return mat_vec(phi(), v);
}

std::vector<Scalar> SpaceSetup::basis_vector(int l) const {
  if (l < 1 || l > n) fail(errc::out_of_range, "basis vector index");
  std::vector<Scalar> v(n, tower->zero());
  v[l - 1] = tower->integer(1);
  return v;
}

Scalar SpaceSetup::sqrt2() const { return tower->radical(1); }

Scalar SpaceSetup::half_sqrt2() const { return tower->radical(1) / tower->integer(2); }

// ---------------------------------------------------------------------------

Flag flag_image(const SpaceSetup& setup, const Flag& f, FlagMap map) {
  if (f.n() != setup.n) fail(errc::dimension_mismatch, "flag does not match the setup");
  switch (map) {
    case FlagMap::gamma:
      return Flag(setup.omega() * f.basis().conjugated());
    case FlagMap::delta:
      return Flag(setup.phi() * f.basis());
    case FlagMap::perp_omega:
    case FlagMap::dagger_phi: {
      // Member k of the reversed chain is (F_{n-k})^perp.  In coordinates
      // c with x = B c, the condition omega(x, b_j) = 0 for j <= n-k reads
      // (tG c)_j = 0 with G the Gram matrix of the form on the basis B, so
      // an adapted basis of the whole chain is B (tG)^{-1} with columns
      // reversed (conjugate G for the hermitian form).
      const Matrix& b = f.basis();
      Matrix gram = (map == FlagMap::perp_omega)
                        ? b.transposed() * setup.omega() * b
                        : b.transposed() * setup.phi() * b.conjugated();
      Matrix adapted = b * inverse(gram.transposed());
      int n = setup.n;
      Matrix rev(n, n, f.tower());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rev.at(i, j) = adapted.at(i, n - 1 - j);
      return Flag(std::move(rev));
    }
  }
  fail(errc::internal, "unknown flag map");
}

// ---------------------------------------------------------------------------

namespace {

bool preserves_omega(const Matrix& g, const SpaceSetup& s) {
  return g.transposed() * s.omega() * g == s.omega();
}

bool commutes_with_gamma(const Matrix& g, const SpaceSetup& s) {
  // gamma(gx) = g gamma(x)  <=>  Omega conj(g) = g Omega
  return s.omega() * g.conjugated() == g * s.omega();
}

bool commutes_with_delta(const Matrix& g, const SpaceSetup& s) {
  return s.phi() * g == g * s.phi();
}

bool preserves_phi(const Matrix& g, const SpaceSetup& s) {
  return g.conjugated().transposed() * s.phi() * g == s.phi();
}

}  // namespace

bool is_in_group(const Matrix& g, const SpaceSetup& setup, Group group) {
  if (g.rows() != setup.n || g.cols() != setup.n)
    fail(errc::dimension_mismatch, "group element size");
  if (!is_invertible(g)) fail(errc::singular, "group element must be invertible");
  bool in_g = true;
  switch (setup.type) {
    case TypeTag::A1:
    case TypeTag::A2:
      switch (group) {
        case Group::G: return true;
        case Group::K: return preserves_omega(g, setup);
        case Group::G0: return commutes_with_gamma(g, setup);
        case Group::KG0: return preserves_omega(g, setup) && commutes_with_gamma(g, setup);
      }
      break;
    case TypeTag::A3:
      switch (group) {
        case Group::G: return true;
        case Group::K: return commutes_with_delta(g, setup);
        case Group::G0: return preserves_phi(g, setup);
        case Group::KG0: return commutes_with_delta(g, setup) && preserves_phi(g, setup);
      }
      break;
    default:
      in_g = preserves_omega(g, setup);
      switch (group) {
        case Group::G: return in_g;
        case Group::K: return in_g && commutes_with_delta(g, setup);
        case Group::G0: return in_g && preserves_phi(g, setup);
        case Group::KG0:
          return in_g && commutes_with_delta(g, setup) && preserves_phi(g, setup);
      }
  }
  fail(errc::internal, "unknown group");
}

GroupElement GroupElement::make(Matrix m, const SpaceSetup& setup, Group g) {
  if (!is_in_group(m, setup, g)) fail(errc::invalid_param, "matrix is not in the claimed group");
  return GroupElement{std::move(m), g};
}

}  // namespace flagorbits
