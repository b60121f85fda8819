#include "flagorbits/classify.hpp"

#include <algorithm>

namespace flagorbits {

namespace {

using Vec = std::vector<Scalar>;

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vscale(const Scalar& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Relative position

RelPos relative_position(const Flag& f, const Flag& g) {
  if (f.n() != g.n()) fail(errc::dimension_mismatch, "flags of different dimension");
  const int n = f.n();
  // express g's basis in f's basis and column-reduce with pivots chosen as
  // the lowest nonzero row; pivot rows read off the permutation
  Matrix m = solve(f.basis(), g.basis());
  std::vector<int> w(n, 0);
  for (int j = 0; j < n; ++j) {
    int piv = -1;
    for (int i = n - 1; i >= 0; --i)
      if (!m.at(i, j).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(errc::internal, "zero column in relative position");
    w[j] = piv + 1;
    Scalar inv = m.at(piv, j).inverse();
    for (int j2 = j + 1; j2 < n; ++j2) {
      if (m.at(piv, j2).is_zero()) continue;
      Scalar c = m.at(piv, j2) * inv;
      for (int i = 0; i <= piv; ++i) m.at(i, j2) -= c * m.at(i, j);
    }
  }
  return RelPos{std::move(w)};
}

// ---------------------------------------------------------------------------
// Classification

namespace {

std::vector<int> compose_w0(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) out[j] = n + 1 - w[j];
  return out;
}

Clan involution_to_clan(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  Clan c;
  c.n = n;
  for (int k = 1; k <= n; ++k) {
    int img = w[k - 1];
    if (img < 1 || img > n || w[img - 1] != k)
      fail(errc::classification_inconsistent, "extracted permutation is not an involution");
    if (img > k) c.arcs.emplace_back(k, img);
  }
  return c;
}

// dim(F_l ∩ V_side) for l = 0..n, side = +1/-1
std::vector<int> v_side_dims(const Flag& f, const SpaceSetup& setup, int side) {
  const int n = setup.n;
  std::vector<int> rows;
  for (int i = 0; i < n; ++i)
    if (setup.signs[i] != side) rows.push_back(i);
  Matrix proj(static_cast<int>(rows.size()), n, setup.tower);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) proj.at(static_cast<int>(r), j) = f.basis().at(rows[r], j);
  std::vector<int> dims(n + 1, 0);
  for (int l = 1; l <= n; ++l) dims[l] = l - rank(proj.prefix_columns(l));
  return dims;
}

void attach_signs_from_jumps(Clan& c, const std::vector<int>& plus_dims,
                             const std::vector<int>& minus_dims) {
  for (int k : c.fixed_points()) {
    int dp = plus_dims[k] - plus_dims[k - 1];
    int dm = minus_dims[k] - minus_dims[k - 1];
    if (dp == 1 && dm == 0)
      c.signs[k] = 1;
    else if (dp == 0 && dm == 1)
      c.signs[k] = -1;
    else
      fail(errc::classification_inconsistent, "no clean V± jump at a fixed point");
  }
}

}  // namespace

bool flag_is_isotropic(const Flag& f, const SpaceSetup& setup) {
  const int n = setup.n;
  Matrix gram = f.basis().transposed() * setup.omega() * f.basis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + i + 2 <= n; ++j)
      if (!gram.at(i, j).is_zero()) return false;
  return true;
}

OrbitParam classify(const Flag& f, const SpaceSetup& setup, Family family) {
  if (f.n() != setup.n) fail(errc::dimension_mismatch, "flag does not match setup");
  const bool isotropic_type = setup.type != TypeTag::A1 && setup.type != TypeTag::A2 &&
                              setup.type != TypeTag::A3;
  if (isotropic_type && !flag_is_isotropic(f, setup))
    fail(errc::not_isotropic, "flag is not omega-isotropic");

  Clan c;
  switch (setup.type) {
    case TypeTag::A1:
    case TypeTag::A2: {
      if (family == Family::K_side) {
        Flag fp = flag_image(setup, f, FlagMap::perp_omega);
        c = involution_to_clan(compose_w0(relative_position(fp, f).perm));
      } else {
        Flag fg = flag_image(setup, f, FlagMap::gamma);
        c = involution_to_clan(relative_position(fg, f).perm);
      }
      break;
    }
    default: {
      if (family == Family::K_side) {
        Flag fd = flag_image(setup, f, FlagMap::delta);
        c = involution_to_clan(relative_position(fd, f).perm);
        attach_signs_from_jumps(c, v_side_dims(f, setup, 1), v_side_dims(f, setup, -1));
      } else {
        Flag fd = flag_image(setup, f, FlagMap::dagger_phi);
        c = involution_to_clan(compose_w0(relative_position(fd, f).perm));
        std::vector<int> pd(setup.n + 1, 0), qd(setup.n + 1, 0);
        for (int l = 1; l <= setup.n; ++l) {
          auto sig = hermitian_signature(f.subspace(l), setup);
          pd[l] = sig.first;
          qd[l] = sig.second;
        }
        attach_signs_from_jumps(c, pd, qd);
      }
      break;
    }
  }
  if (!is_valid_param(c, setup))
    fail(errc::classification_inconsistent, "extracted data is not a valid parameter");
  return OrbitParam{std::move(c), family, setup.type};
}

// ---------------------------------------------------------------------------
// Representatives

namespace {

// identity-dual and identity-conjugate base vectors for a type A1 window:
// per B1 block e_l; per B2 block (e_l+e_{l+1})/sqrt2 and (e_l-e_{l+1})/(i sqrt2)
std::vector<Vec> a1_unit_base(const SpaceSetup& s) {
  std::vector<Vec> base;
  Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
  Scalar inv_is2 = s.tower->integer(1) / (s.tower->imaginary_unit() * s.sqrt2());
  int pos = 1;
  for (int b : s.blocks) {
    if (b == 1) {
      base.push_back(s.basis_vector(pos));
    } else {
      base.push_back(vscale(inv_s2, vadd(s.basis_vector(pos), s.basis_vector(pos + 1))));
      base.push_back(vscale(inv_is2, vsub(s.basis_vector(pos), s.basis_vector(pos + 1))));
    }
    pos += b;
  }
  return base;
}

std::vector<Vec> build_a1a2(const Clan& c, const SpaceSetup& s) {
  const int n = s.n;
  std::vector<Vec> v(n + 1);
  if (s.type == TypeTag::A2) {
    // (e_1,...,e_n) is v0-dual and v0-conjugate; arcs take consecutive pairs
    for (size_t l = 0; l < c.arcs.size(); ++l) {
      v[c.arcs[l].first] = s.basis_vector(2 * static_cast<int>(l) + 1);
      v[c.arcs[l].second] = s.basis_vector(2 * static_cast<int>(l) + 2);
    }
    return v;
  }
  std::vector<Vec> base = a1_unit_base(s);
  Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
  Scalar i = s.tower->imaginary_unit();
  int m = static_cast<int>(c.arcs.size());
  for (int l = 0; l < m; ++l) {
    const Vec &x = base[2 * l], &y = base[2 * l + 1];
    v[c.arcs[l].first] = vscale(inv_s2, vadd(x, vscale(i, y)));
    v[c.arcs[l].second] = vscale(inv_s2, vsub(x, vscale(i, y)));
  }
  std::vector<int> fixed = c.fixed_points();
  for (size_t k = 0; k < fixed.size(); ++k) v[fixed[k]] = base[2 * m + k];
  return v;
}

std::vector<Vec> build_a3(const Clan& c, const SpaceSetup& s) {
  const int n = s.n;
  std::vector<int> plus, minus;
  for (int l = 1; l <= n; ++l) (s.signs[l - 1] > 0 ? plus : minus).push_back(l);
  Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
  std::vector<Vec> v(n + 1);
  int m = static_cast<int>(c.arcs.size());
  for (int l = 0; l < m; ++l) {
    Vec x = s.basis_vector(plus[l]), y = s.basis_vector(minus[l]);
    v[c.arcs[l].first] = vscale(inv_s2, vadd(x, y));
    v[c.arcs[l].second] = vscale(inv_s2, vsub(x, y));
  }
  int pi = m, mi = m;
  for (int k : c.fixed_points())
    v[k] = s.basis_vector(c.sign_at(k) > 0 ? plus[pi++] : minus[mi++]);
  return v;
}

// shape of an (eta,eps)-symmetric clan: symmetric arcs, mirror pairs of
// arcs (quadruples keyed by their minimal endpoint), and signed fixed points
struct BcdShape {
  std::vector<std::pair<int, int>> sym_arcs;  // (d, d*)
  struct Quad {
    int c, cp, cps, cs;  // c < cp, cps, cs = n+1-c; cp = w(c)
  };
  std::vector<Quad> quads;
  std::vector<int> plus_fixed, minus_fixed;
};

BcdShape bcd_shape(const Clan& c) {
  BcdShape sh;
  const int n = c.n;
  for (const auto& [a, b] : c.arcs) {
    if (b == n + 1 - a) {
      sh.sym_arcs.emplace_back(a, b);
      continue;
    }
    // mirror pair {(a,b), (n+1-b, n+1-a)}; keep the arc whose left endpoint
    // is the minimum of the quadruple, so c' and c'* lie inside (c, c*)
    int mb = n + 1 - b, ma = n + 1 - a;
    if (a < mb) sh.quads.push_back({a, b, mb, ma});
  }
  std::sort(sh.quads.begin(), sh.quads.end(), [](const auto& x, const auto& y) { return x.c < y.c; });
  for (int k : c.fixed_points()) (c.sign_at(k) > 0 ? sh.plus_fixed : sh.minus_fixed).push_back(k);
  return sh;
}

struct SidePieces {
  std::vector<Vec> xs;                      // phi-unit, omega(x,x)=1
  std::vector<std::pair<Vec, Vec>> ypairs;  // omega(u,v)=1, omega(v,u)=eps, isotropic
};

// Pieces of V_side for types BD1/C2 assembled block-locally.
SidePieces build_side_pieces(const SpaceSetup& s, int side, int need_x, int need_y) {
  std::vector<int> singles;                 // B1 block index
  std::vector<int> doubles;                 // B2 block start index
  int pos = 1;
  for (int b : s.blocks) {
    if (s.signs[pos - 1] == side) (b == 1 ? singles : doubles).push_back(pos);
    pos += b;
  }
  SidePieces out;
  Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
  Scalar inv_is2 = s.tower->integer(1) / (s.tower->imaginary_unit() * s.sqrt2());
  Scalar i = s.tower->imaginary_unit();
  size_t si = 0, di = 0;
  if (static_cast<int>(singles.size()) <= need_x) {
    while (si < singles.size()) out.xs.push_back(s.basis_vector(singles[si++]));
    while (static_cast<int>(out.xs.size()) < need_x) {
      if (di >= doubles.size()) fail(errc::internal, "block resources exhausted (x)");
      int l = doubles[di++];
      out.xs.push_back(vscale(inv_s2, vadd(s.basis_vector(l), s.basis_vector(l + 1))));
      out.xs.push_back(vscale(inv_is2, vsub(s.basis_vector(l), s.basis_vector(l + 1))));
    }
  } else {
    while (static_cast<int>(out.xs.size()) < need_x) out.xs.push_back(s.basis_vector(singles[si++]));
    while (singles.size() - si >= 2) {
      Vec ea = s.basis_vector(singles[si]), eb = s.basis_vector(singles[si + 1]);
      si += 2;
      out.ypairs.emplace_back(vscale(inv_s2, vadd(ea, vscale(i, eb))),
                              vscale(inv_s2, vsub(ea, vscale(i, eb))));
    }
    if (si != singles.size()) fail(errc::internal, "odd leftover B1 blocks");
  }
  while (di < doubles.size()) {
    int l = doubles[di++];
    out.ypairs.emplace_back(s.basis_vector(l), s.basis_vector(l + 1));
  }
  if (static_cast<int>(out.xs.size()) != need_x || static_cast<int>(out.ypairs.size()) != need_y)
    fail(errc::internal, "piece counts do not match the clan shape");
  return out;
}

std::vector<Vec> build_bcd(const Clan& c, const SpaceSetup& s) {
  const int n = s.n;
  BcdShape sh = bcd_shape(c);
  const int t = static_cast<int>(sh.sym_arcs.size());
  const int sq = static_cast<int>(sh.quads.size());
  const int eps = s.eps_form();
  Scalar inv_s2 = s.tower->integer(1) / s.sqrt2();
  Scalar i = s.tower->imaginary_unit();

  // x_j / y_j / y*_j / z_j families per side, then the common assembly
  std::vector<Vec> xp(t + 1), xm(t + 1);
  std::vector<Vec> yp(sq), ypst(sq), ym(sq), ymst(sq);
  std::vector<Vec> zp, zm;

  if (s.type == TypeTag::BD1 || s.type == TypeTag::C2) {
    const int pp = static_cast<int>(sh.plus_fixed.size());
    const int pm = static_cast<int>(sh.minus_fixed.size());
    SidePieces plus = build_side_pieces(s, 1, t + (pp & 1), sq + pp / 2);
    SidePieces minus = build_side_pieces(s, -1, t + (pm & 1), sq + pm / 2);
    for (int j = 0; j < t; ++j) {
      xp[j] = plus.xs[j];
      xm[j] = minus.xs[j];
    }
    for (int j = 0; j < sq; ++j) {
      yp[j] = plus.ypairs[j].first;
      ypst[j] = plus.ypairs[j].second;
      ym[j] = minus.ypairs[j].first;
      ymst[j] = minus.ypairs[j].second;
    }
    auto fill_z = [&](std::vector<Vec>& z, const SidePieces& side, int count) {
      z.assign(count, Vec());
      for (int j = 1; 2 * j <= count; ++j) {
        z[j - 1] = side.ypairs[sq + j - 1].first;
        z[count - j] = side.ypairs[sq + j - 1].second;
      }
      if (count & 1) z[count / 2] = side.xs[t];
    };
    fill_z(zp, plus, pp);
    fill_z(zm, minus, pm);
  } else {
    // C1/D3: every block holds one + and one - index; allocate blocks to
    // symmetric arcs, quadruple pairs, and fixed pairs in order
    std::vector<std::pair<int, int>> blocks;  // (plus index, minus index)
    int pos = 1;
    for (int b : s.blocks) {
      (void)b;
      int a = pos, bb = pos + 1;
      if (s.signs[a - 1] > 0)
        blocks.emplace_back(a, bb);
      else
        blocks.emplace_back(bb, a);
      pos += 2;
    }
    size_t bi = 0;
    auto omega_e = [&](int a, int b) {
      return s.omega_pair(s.basis_vector(a), s.basis_vector(b));
    };
    for (int j = 0; j < t; ++j) {
      auto [lp, lm] = blocks[bi++];
      xp[j] = s.basis_vector(lp);
      xm[j] = vscale(i / omega_e(lp, lm), s.basis_vector(lm));
    }
    for (int j = 0; j < sq; ++j) {
      auto [lpA, lmA] = blocks[bi++];
      auto [lpB, lmB] = blocks[bi++];
      yp[j] = s.basis_vector(lpA);
      ymst[j] = vscale(s.tower->integer(1) / omega_e(lpA, lmA), s.basis_vector(lmA));
      ypst[j] = s.basis_vector(lpB);
      ym[j] = vscale(s.tower->integer(1) / omega_e(lmB, lpB), s.basis_vector(lmB));
    }
    const int pp = static_cast<int>(sh.plus_fixed.size());
    zp.assign(pp, Vec());
    zm.assign(pp, Vec());
    for (int j = 1; j <= pp; ++j) {
      int jt = pp + 1 - j;
      auto [lp, lm] = blocks[bi++];
      zp[j - 1] = s.basis_vector(lp);
      int want = sh.plus_fixed[j - 1] < sh.minus_fixed[jt - 1] ? 1 : eps;
      zm[jt - 1] = vscale(s.tower->integer(want) / omega_e(lp, lm), s.basis_vector(lm));
    }
  }

  std::vector<Vec> v(n + 1);
  for (int j = 0; j < t; ++j) {
    v[sh.sym_arcs[j].first] = vscale(inv_s2, vadd(xp[j], vscale(i, xm[j])));
    v[sh.sym_arcs[j].second] = vscale(inv_s2, vsub(xp[j], vscale(i, xm[j])));
  }
  for (int j = 0; j < sq; ++j) {
    const auto& qd = sh.quads[j];
    v[qd.c] = vscale(inv_s2, vadd(yp[j], ym[j]));
    v[qd.cp] = vscale(inv_s2, vsub(yp[j], ym[j]));
    v[qd.cs] = vscale(inv_s2, vadd(ypst[j], ymst[j]));
    v[qd.cps] = vscale(inv_s2, vsub(ypst[j], ymst[j]));
  }
  for (size_t j = 0; j < sh.plus_fixed.size(); ++j) v[sh.plus_fixed[j]] = zp[j];
  for (size_t j = 0; j < sh.minus_fixed.size(); ++j) v[sh.minus_fixed[j]] = zm[j];
  return v;
}

}  // namespace

Flag build_representative(const OrbitParam& param, const SpaceSetup& setup) {
  if (param.type != setup.type) fail(errc::invalid_param, "parameter type does not match setup");
  if (!is_valid_param(param.clan, setup))
    fail(errc::invalid_param, "clan is not a parameter for this setup");
  std::vector<Vec> v;
  switch (setup.type) {
    case TypeTag::A1:
    case TypeTag::A2: v = build_a1a2(param.clan, setup); break;
    case TypeTag::A3: v = build_a3(param.clan, setup); break;
    default: v = build_bcd(param.clan, setup); break;
  }
  std::vector<std::vector<Scalar>> cols;
  for (int k = 1; k <= setup.n; ++k) {
    if (v[k].empty()) fail(errc::internal, "unassigned representative vector");
    cols.push_back(std::move(v[k]));
  }
  return Flag(Matrix::from_columns(cols, setup.tower));
}

// ---------------------------------------------------------------------------
// Condition checks

namespace {

bool uses_phi(const SpaceSetup& s) { return s.type != TypeTag::A1 && s.type != TypeTag::A2; }

}  // namespace

bool is_dual_basis(const Matrix& basis, const Clan& c, const SpaceSetup& setup) {
  const int n = setup.n;
  if (basis.cols() != n || c.n != n) return false;
  for (int k = 1; k <= n; ++k) {
    int wk = c.image(k);
    for (int l = 1; l <= n; ++l) {
      Scalar val = uses_phi(setup) ? setup.phi_pair(basis.column(k - 1), basis.column(l - 1))
                                   : setup.omega_pair(basis.column(k - 1), basis.column(l - 1));
      Scalar expect = setup.tower->zero();
      if (uses_phi(setup)) {
        if (l == wk) expect = setup.tower->integer(wk == k ? c.sign_at(k) : 1);
      } else {
        if (l == wk) expect = setup.tower->integer(wk >= k ? 1 : setup.eps_form());
      }
      if (val != expect) return false;
    }
  }
  return true;
}

bool is_conjugate_basis(const Matrix& basis, const Clan& c, const SpaceSetup& setup) {
  const int n = setup.n;
  if (basis.cols() != n || c.n != n) return false;
  for (int k = 1; k <= n; ++k) {
    int wk = c.image(k);
    Vec img = uses_phi(setup) ? setup.apply_delta(basis.column(k - 1))
                              : setup.apply_gamma(basis.column(k - 1));
    Scalar factor = setup.tower->integer(1);
    if (uses_phi(setup)) {
      if (wk == k) factor = setup.tower->integer(c.sign_at(k));
    } else {
      if (wk >= k) factor = setup.tower->integer(setup.eps_form());
    }
    Vec expect = vscale(factor, basis.column(wk - 1));
    for (int idx = 0; idx < n; ++idx)
      if (img[idx] != expect[idx]) return false;
  }
  return true;
}

bool satisfies_isotropic_pairing(const Matrix& basis, const Clan& c, const SpaceSetup& setup) {
  const int n = setup.n;
  const int eps = setup.eps_form(), eta = setup.eta();
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      Scalar val = setup.omega_pair(basis.column(k - 1), basis.column(l - 1));
      if (l != n + 1 - k) {
        if (!val.is_zero()) return false;
        continue;
      }
      int wk = c.image(k), wl = c.image(l);
      int lo = std::min(k, l), hi = std::max(k, l);
      int expect;
      if (wk >= lo && wk <= hi && wl >= lo && wl <= hi) {
        expect = k <= l ? 1 : eps;
      } else if (wk < lo && wl > hi) {
        expect = eta;
      } else if (wl < lo && wk > hi) {
        expect = eta * eps;
      } else {
        return false;  // not a symmetric clan shape
      }
      if (val != setup.tower->integer(expect)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Normalization

Matrix normalize_to_special(const Flag& f, const Matrix& dual_basis, const OrbitParam& param,
                            const SpaceSetup& setup) {
  const int n = setup.n;
  const Clan& c = param.clan;
  if (!is_valid_param(c, setup)) fail(errc::invalid_param, "invalid parameter");
  if (dual_basis.rows() != n || dual_basis.cols() != n)
    fail(errc::dimension_mismatch, "dual basis shape");
  if (!same_flag(f, Flag(dual_basis)))
    fail(errc::not_in_intersection, "dual basis does not span the flag");
  if (classify(f, setup, Family::K_side).clan != c ||
      classify(f, setup, Family::G0_side).clan != c)
    fail(errc::not_in_intersection, "flag is not in the intersection of the dual orbits");

  const bool phi_case = uses_phi(setup);
  const int eps = phi_case ? 0 : setup.eps_form();
  auto pair = [&](const Vec& x, const Vec& y) {
    return phi_case ? setup.phi_pair(x, y) : setup.omega_pair(x, y);
  };
  auto conj_map = [&](const Vec& x) {
    return phi_case ? setup.apply_delta(x) : setup.apply_gamma(x);
  };

  std::vector<Vec> v(n + 1);
  for (int k = 1; k <= n; ++k) v[k] = dual_basis.column(k - 1);

  // dual condition on the input, exact except at fixed-point diagonals,
  // which may carry a positive real scale (removed below)
  for (int k = 1; k <= n; ++k) {
    int wk = c.image(k);
    for (int l = 1; l <= n; ++l) {
      Scalar val = pair(v[k], v[l]);
      if (l == k && wk == k) {
        if (phi_case) val = setup.tower->integer(c.sign_at(k)) * val;
        if (!val.is_real() || val.sign_of_real() <= 0)
          fail(errc::negative_pivot, "fixed-point pivot is not positive real");
        continue;
      }
      Scalar expect = setup.tower->zero();
      if (l == wk)
        expect = setup.tower->integer(phi_case ? 1 : (wk >= k ? 1 : setup.eps_form()));
      if (val != expect) fail(errc::not_in_intersection, "input basis is not a dual basis");
    }
  }

  for (int l = 1; l <= n; ++l) {
    int wl = c.image(l);
    if (wl < l) continue;  // handled when its partner was reached
    if (wl == l) {
      // conjugation-fixed line; rescale so the dual diagonal is exact
      Scalar diag = pair(v[l], v[l]);
      if (phi_case) diag = setup.tower->integer(c.sign_at(l)) * diag;
      if (!diag.is_real() || diag.sign_of_real() <= 0)
        fail(errc::negative_pivot, "fixed-point pivot is not positive real");
      if (diag != setup.tower->integer(1)) {
        Scalar root = setup.tower->adjoin_sqrt(diag);
        v[l] = vscale(root.inverse(), v[l]);
      }
      continue;
    }
    // Case w(l) > l: rotate the partner onto the conjugate image
    Vec g = conj_map(v[l]);
    Scalar pivot = pair(v[l], g);  // = eps * alpha (bilinear) or alpha (hermitian)
    Scalar alpha = phi_case ? pivot : setup.tower->integer(eps) * pivot;
    if (!alpha.is_real() || alpha.sign_of_real() <= 0)
      fail(errc::negative_pivot, "arc pivot is not positive real");
    for (int k = l + 1; k <= n; ++k) {
      if (k == wl || c.image(k) < l) continue;
      Scalar coef = pair(v[k], g) / pivot;
      if (!coef.is_zero()) v[k] = vsub(v[k], vscale(coef, v[l]));
    }
    Scalar root = setup.tower->adjoin_sqrt(alpha);
    Scalar inv_root = root.inverse();
    v[wl] = vscale(phi_case ? inv_root : setup.tower->integer(eps) * inv_root, g);
    v[l] = vscale(inv_root, v[l]);
  }

  std::vector<std::vector<Scalar>> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(std::move(v[k]));
  return Matrix::from_columns(cols, setup.tower);
}

OrbitParam matsuki_dual(const OrbitParam& param) {
  OrbitParam out = param;
  out.family = param.family == Family::K_side ? Family::G0_side : Family::K_side;
  return out;
}

Flag switch_middle_vectors(const Flag& f) {
  const int n = f.n();
  if (n % 2 != 0) fail(errc::invalid_param, "middle switch needs even dimension");
  Matrix b = f.basis();
  for (int i = 0; i < n; ++i) std::swap(b.at(i, n / 2 - 1), b.at(i, n / 2));
  return Flag(std::move(b));
}

Clan switch_middle_clan(const Clan& c) {
  if (c.n % 2 != 0) fail(errc::invalid_param, "middle switch needs even dimension");
  std::vector<int> perm(c.n);
  for (int k = 1; k <= c.n; ++k) perm[k - 1] = k;
  std::swap(perm[c.n / 2 - 1], perm[c.n / 2]);
  return conjugated_clan(c, perm);
}

}  // namespace flagorbits
