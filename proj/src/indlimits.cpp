#include "flagorbits/indlimits.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flagorbits {

const char* order_family_name(OrderFamily f) {
  switch (f) {
    case OrderFamily::NAT: return "NAT";
    case OrderFamily::TWOSIDED: return "TWOSIDED";
    case OrderFamily::DENSE: return "DENSE";
    case OrderFamily::ISO_TWOSIDED: return "ISO_TWOSIDED";
  }
  return "?";
}

std::optional<OrderFamily> order_family_from_name(const std::string& s) {
  for (OrderFamily f : {OrderFamily::NAT, OrderFamily::TWOSIDED, OrderFamily::DENSE,
                        OrderFamily::ISO_TWOSIDED})
    if (s == order_family_name(f)) return f;
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::InfinitelyMany: return "infinitely_many";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// IndSetup

namespace {

int prefix_block_sum(const IndSetup& s) {
  return std::accumulate(s.omega_prefix.begin(), s.omega_prefix.end(), 0);
}

// first index strictly beyond every explicit prefix datum, block-aligned
int tail_start(const IndSetup& s) {
  int start = std::max(static_cast<int>(s.signs_prefix.size()),
                       static_cast<int>(s.order.prefix_perm.size()));
  if (s.has_blocks()) {
    start = std::max(start, prefix_block_sum(s));
    while (!s.aligned(start)) ++start;
  }
  return start;  // indices > start follow all tail rules
}

// Calkin-Wilf enumeration of the positive rationals
mpq_class calkin_wilf(long k) {
  std::vector<int> bits;
  for (long v = k; v > 1; v /= 2) bits.push_back(static_cast<int>(v & 1));
  mpq_class x(1);
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it)
      x = x + 1;
    else
      x = x / (x + 1);
  }
  return x;
}

mpq_class dense_key(long l) {
  if (l == 1) return mpq_class(0);
  if (l % 2 == 0) return calkin_wilf(l / 2);
  return mpq_class(-calkin_wilf((l - 1) / 2));
}

}  // namespace

int IndSetup::iota(int l) const {
  if (!has_blocks()) fail(errc::form_unavailable, "setup has no omega pairing");
  if (l < 1) fail(errc::out_of_range, "iota index");
  int pos = 1;
  for (int b : omega_prefix) {
    if (l < pos + b) return b == 1 ? l : (l == pos ? pos + 1 : pos);
    pos += b;
  }
  if (omega_tail == 1) return l;
  return (l - pos) % 2 == 0 ? l + 1 : l - 1;
}

int IndSetup::sign_of(int l) const {
  if (!has_signs()) fail(errc::form_unavailable, "setup has no sign pattern");
  if (l < 1) fail(errc::out_of_range, "sign index");
  if (l <= static_cast<int>(signs_prefix.size())) return signs_prefix[l - 1] == '+' ? 1 : -1;
  int off = (l - static_cast<int>(signs_prefix.size()) - 1) %
            static_cast<int>(signs_tail.size());
  return signs_tail[off] == '+' ? 1 : -1;
}

bool IndSetup::aligned(int n) const {
  if (n < 0) return false;
  if (!has_blocks()) return true;
  int pos = 0;
  for (int b : omega_prefix) {
    if (n == pos) return true;
    pos += b;
  }
  return n >= pos && (n - pos) % omega_tail == 0;
}

int IndSetup::next_aligned(int n) const {
  for (int m = n + 1; m <= n + 2; ++m)
    if (aligned(m)) return m;
  fail(errc::internal, "no aligned window within one block");
}

mpq_class IndSetup::key(int l) const {
  if (l < 1 || l > horizon) fail(errc::horizon_exceeded, "order key beyond horizon");
  int base = l;
  if (l <= static_cast<int>(order.prefix_perm.size())) base = order.prefix_perm[l - 1];
  switch (order.family) {
    case OrderFamily::NAT: return mpq_class(base);
    case OrderFamily::TWOSIDED: {
      mpq_class k(1, base);
      return base % 2 == 0 ? k : mpq_class(-k);
    }
    case OrderFamily::DENSE: return dense_key(base);
    case OrderFamily::ISO_TWOSIDED: {
      // block ordinal, negated on the first index of the pair
      int pos = 1, ord = 0;
      for (int b : omega_prefix) {
        ++ord;
        if (base < pos + b) return b == 1 ? mpq_class(0) : mpq_class(base == pos ? -ord : ord);
        pos += b;
      }
      ord += (base - pos) / 2 + 1;
      return mpq_class((base - pos) % 2 == 0 ? -ord : ord);
    }
  }
  fail(errc::internal, "unknown order family");
}

SpaceSetup IndSetup::window(int n) const {
  if (!aligned(n) || n < 1) fail(errc::unaligned_window, "window is not block-aligned");
  std::vector<int> blocks;
  if (has_blocks()) {
    int pos = 0;
    for (int b : omega_prefix) {
      if (pos >= n) break;
      blocks.push_back(b);
      pos += b;
    }
    while (pos < n) {
      blocks.push_back(omega_tail);
      pos += omega_tail;
    }
  }
  std::vector<int> signs;
  if (has_signs())
    for (int l = 1; l <= n; ++l) signs.push_back(sign_of(l));
  return SpaceSetup::make(type, n, std::move(blocks), std::move(signs), tower);
}

std::optional<long> IndSetup::finite_defect() const {
  if (!has_signs()) return std::nullopt;
  bool tail_plus = signs_tail.find('+') != std::string::npos;
  bool tail_minus = signs_tail.find('-') != std::string::npos;
  if (tail_plus && tail_minus) return std::nullopt;  // both sides infinite
  char rare = tail_plus ? '-' : '+';
  return static_cast<long>(std::count(signs_prefix.begin(), signs_prefix.end(), rare));
}

IndSetup IndSetup::make(TypeTag type, std::vector<int> omega_prefix, int omega_tail,
                        std::string signs_prefix, std::string signs_tail, OrderSpec order,
                        int horizon) {
  IndSetup s;
  s.type = type;
  s.omega_prefix = std::move(omega_prefix);
  s.omega_tail = omega_tail;
  s.signs_prefix = std::move(signs_prefix);
  s.signs_tail = std::move(signs_tail);
  s.order = std::move(order);
  s.horizon = horizon;

  if (s.has_blocks()) {
    if (s.omega_tail != 1 && s.omega_tail != 2)
      fail(errc::invalid_param, "omega tail block must be of size 1 or 2");
    for (int b : s.omega_prefix)
      if (b != 1 && b != 2) fail(errc::invalid_param, "block sizes must be 1 or 2");
    bool needs_b2 = type == TypeTag::A2 || type == TypeTag::C1 || type == TypeTag::C2 ||
                    type == TypeTag::D3;
    if (needs_b2) {
      if (s.omega_tail != 2)
        fail(errc::invalid_param, std::string(type_name(type)) + " requires a B2 tail");
      for (int b : s.omega_prefix)
        if (b != 2) fail(errc::invalid_param, std::string(type_name(type)) + " requires B2 blocks");
    }
  } else {
    if (!s.omega_prefix.empty() || s.omega_tail != 0)
      fail(errc::invalid_param, "type A3 takes no omega blocks");
  }
  if (s.has_signs()) {
    if (s.signs_tail.empty()) fail(errc::invalid_param, "sign tail period must be nonempty");
    for (char c : s.signs_prefix + s.signs_tail)
      if (c != '+' && c != '-') fail(errc::invalid_param, "signs must be over {+,-}");
  } else {
    if (!s.signs_prefix.empty() || !s.signs_tail.empty())
      fail(errc::invalid_param, "types A1, A2 take no sign pattern");
  }
  if (!s.order.prefix_perm.empty()) {
    std::vector<int> sorted = s.order.prefix_perm;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1)
        fail(errc::invalid_param, "order prefix must be a permutation of 1..m");
  }

  const bool isotropic_type = type == TypeTag::BD1 || type == TypeTag::C1 ||
                              type == TypeTag::C2 || type == TypeTag::D3;
  if (s.order.family == OrderFamily::ISO_TWOSIDED) {
    if (type == TypeTag::A3)
      fail(errc::invalid_param, "ISO_TWOSIDED needs an omega pairing (not available in A3)");
    if (s.omega_tail != 2)
      fail(errc::invalid_param, "ISO_TWOSIDED requires a B2 tail (iota almost fixed-point-free)");
    int b1_count = static_cast<int>(std::count(s.omega_prefix.begin(), s.omega_prefix.end(), 1));
    if (b1_count > 1)
      fail(errc::invalid_param, "an order-reversing involution fixes at most one point");
  } else if (isotropic_type) {
    fail(errc::invalid_param,
         "types B, C, D require the isotropic order family ISO_TWOSIDED");
  }

  // window sign constraints must hold everywhere they are sampled; iota
  // stays within l±1, so stop one short of the horizon
  if (s.has_signs() && s.has_blocks()) {
    for (int l = 1; l < s.horizon; ++l) {
      int want = (type == TypeTag::C1 || type == TypeTag::D3) ? -s.sign_of(l) : s.sign_of(l);
      if (s.sign_of(s.iota(l)) != want)
        fail(errc::invalid_param, "sign pattern incompatible with iota for this type");
    }
  }
  // isotropic orders must satisfy sigma iota = iota_A sigma exactly
  if (isotropic_type) {
    for (int l = 1; l < s.horizon; ++l)
      if (s.key(s.iota(l)) != -s.key(l))
        fail(errc::invalid_param, "order prefix breaks sigma iota = iota_A sigma");
  }

  s.tower = Tower::make();
  s.tower->adjoin_sqrt(s.tower->integer(2));
  return s;
}

std::vector<int> tau_perm(const IndSetup& setup, int n) {
  if (n > setup.horizon) fail(errc::horizon_exceeded, "tau window beyond horizon");
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 1);
  std::sort(tau.begin(), tau.end(), [&](int a, int b) { return setup.key(a) < setup.key(b); });
  return tau;
}

// ---------------------------------------------------------------------------
// Parameter embedding and canonical windows

TailRule tail_rule_for(TypeTag type) {
  return (type == TypeTag::A1 || type == TypeTag::A2) ? TailRule::Iota : TailRule::IdSigns;
}

namespace {

// block covering index l (start, size) for aligned windows
std::pair<int, int> block_at(const IndSetup& s, int l) {
  int pos = 1;
  for (int b : s.omega_prefix) {
    if (l < pos + b) return {pos, b};
    pos += b;
  }
  int off = (l - pos) / s.omega_tail;
  return {pos + off * s.omega_tail, s.omega_tail};
}

bool tail_matches_at_block(const IndParam& p, const IndSetup& s, int start, int size) {
  const Clan& c = p.core;
  if (p.tail == TailRule::Iota) {
    if (size == 1) return c.is_fixed(start) && !c.signs.count(start);
    bool has_arc = false;
    for (const auto& [a, b] : c.arcs)
      if (a == start && b == start + 1) has_arc = true;
    return has_arc;
  }
  for (int l = start; l < start + size; ++l) {
    if (!c.is_fixed(l)) return false;
    auto it = c.signs.find(l);
    if (it == c.signs.end() || it->second != s.sign_of(l)) return false;
  }
  return true;
}

Clan restrict_clan(const Clan& c, int m) {
  Clan out;
  out.n = m;
  for (const auto& [a, b] : c.arcs)
    if (b <= m) out.arcs.emplace_back(a, b);
  for (const auto& [k, sgn] : c.signs)
    if (k <= m) out.signs[k] = sgn;
  return out;
}

}  // namespace

IndParam canonicalize(const IndParam& p, const IndSetup& setup) {
  IndParam out = p;
  while (out.window > 0) {
    int size = 1, start = out.window;
    if (setup.has_blocks()) {
      auto [bs, bsize] = block_at(setup, out.window);
      if (bs + bsize - 1 != out.window) fail(errc::internal, "window not aligned");
      start = bs;
      size = bsize;
    }
    bool crossing = false;
    for (const auto& [a, b] : out.core.arcs)
      if (a < start && b >= start) crossing = true;
    if (crossing || !tail_matches_at_block(out, setup, start, size)) break;
    out.core = restrict_clan(out.core, start - 1);
    out.window = start - 1;
  }
  return out;
}

IndParam widen(const IndParam& p, const IndSetup& setup, int target_window) {
  if (!setup.aligned(target_window) || target_window < p.window)
    fail(errc::unaligned_window, "widen target misaligned");
  IndParam out = p;
  out.core.n = target_window;
  int l = p.window + 1;
  while (l <= target_window) {
    if (out.tail == TailRule::Iota) {
      auto [start, size] = block_at(setup, l);
      if (size == 2) out.core.arcs.emplace_back(start, start + 1);
      l = start + size;
    } else {
      out.core.signs[l] = setup.sign_of(l);
      ++l;
    }
  }
  std::sort(out.core.arcs.begin(), out.core.arcs.end());
  out.window = target_window;
  return out;
}

bool ind_param_equal(const IndParam& a, const IndParam& b, const IndSetup& setup) {
  IndParam ca = canonicalize(a, setup), cb = canonicalize(b, setup);
  return ca.window == cb.window && ca.core == cb.core && ca.tail == cb.tail &&
         ca.family == cb.family && ca.type == cb.type;
}

IndParam embed_param(const Clan& c, const IndSetup& setup, int n, Family family) {
  if (!setup.aligned(n)) fail(errc::unaligned_window, "parameter window is not aligned");
  if (c.n != n) fail(errc::invalid_param, "clan does not match the window");
  if (n >= 1 && !is_valid_param(c, setup.window(n)))
    fail(errc::invalid_param, "clan is not a parameter of the window setup");
  IndParam p;
  p.window = n;
  p.core = conjugated_clan(c, tau_perm(setup, n));
  p.core.n = n;
  p.tail = tail_rule_for(setup.type);
  p.family = family;
  p.type = setup.type;
  return canonicalize(p, setup);
}

Flag embed_flag(const Flag& f, const IndSetup& setup, int target_n) {
  int n = f.n();
  if (!setup.aligned(n) || !setup.aligned(target_n) || target_n < n)
    fail(errc::unaligned_window, "flag windows must be block-aligned");
  if (target_n > setup.horizon) fail(errc::horizon_exceeded, "target window beyond horizon");
  Matrix basis = f.basis();
  for (int nn = n + 1; nn <= target_n; ++nn) {
    int r = 1;
    for (int l = 1; l < nn; ++l)
      if (setup.key(l) < setup.key(nn)) ++r;
    Matrix next(nn, nn, setup.tower);
    for (int j = 0; j < nn; ++j) {
      if (j == r - 1) {
        next.at(nn - 1, j) = setup.tower->integer(1);
        continue;
      }
      int src = j < r - 1 ? j : j - 1;
      for (int i = 0; i < nn - 1; ++i) next.at(i, j) = basis.at(i, src);
    }
    basis = std::move(next);
  }
  return Flag(std::move(basis));
}

IndParam ind_classify(const Flag& f, const IndSetup& setup, Family family) {
  OrbitParam p = classify(f, setup.window(f.n()), family);
  return embed_param(p.clan, setup, f.n(), family);
}

// ---------------------------------------------------------------------------
// Corollary criteria

namespace {

CriterionResult yes(std::string clause, std::string reason) {
  return {Verdict::Yes, std::move(clause), std::move(reason)};
}
CriterionResult no(std::string clause, std::string reason) {
  return {Verdict::No, std::move(clause), std::move(reason)};
}

// mirror of a value in the TWOSIDED image {(-1)^l / l}: the k-th smallest
// element -1/(2k-1) pairs with the k-th largest 1/(2k)
mpq_class twosided_mirror(const mpq_class& v) {
  mpz_class den = v.get_den();
  long d = den.get_si();
  return v < 0 ? mpq_class(1, d + 1) : mpq_class(-1, d - 1);
}

// (a'12): existence of an involutive antiautomorphism iota_A of the image
// order with iota_A sigma = sigma iota cofinally
CriterionResult closed_orbit_a12(const IndSetup& s) {
  switch (s.order.family) {
    case OrderFamily::NAT:
      return no("a'12", "the image chain has order type omega, which admits no "
                        "order-reversing involution");
    case OrderFamily::ISO_TWOSIDED:
      return yes("a'12", "key negation is an involutive antiautomorphism with "
                         "sigma iota = iota_A sigma; the closed K-orbit is unique");
    case OrderFamily::TWOSIDED: {
      // the order-reversing involution of omega + omega* is unique; check one
      // full period of the tail against it
      int start = tail_start(s);
      for (int l = start + 1; l <= std::min(start + 8, s.horizon - 1); ++l) {
        if (s.key(s.iota(l)) != twosided_mirror(s.key(l)))
          return no("a'12", "sigma iota differs cofinally from the unique "
                            "antiautomorphism of the two-sided chain");
      }
      return yes("a'12", "sigma iota agrees with the unique antiautomorphism of "
                         "the two-sided chain; the closed K-orbit is unique");
    }
    case OrderFamily::DENSE: {
      // a violation pair is a certificate of nonexistence; otherwise the
      // general decision problem for (A, <) is out of scope
      int start = tail_start(s);
      std::vector<int> primaries;
      int fixed_seen = 0;
      for (int l = start + 1; l <= s.horizon; ++l) {
        int il = s.iota(l);
        if (il == l) {
          if (++fixed_seen >= 2)
            return no("a'12", "two iota-fixed tail indices would both be fixed by "
                              "an order-reversing involution");
        } else if (il > l && il <= s.horizon) {
          primaries.push_back(l);
        }
      }
      for (size_t a = 0; a < primaries.size(); ++a)
        for (size_t b = a + 1; b < primaries.size(); ++b) {
          bool lt = s.key(primaries[a]) < s.key(primaries[b]);
          bool mirror_gt = s.key(s.iota(primaries[a])) > s.key(s.iota(primaries[b]));
          if (lt != mirror_gt)
            return no("a'12", "certificate pair violates order reversal of iota_A");
        }
      return {Verdict::Undecidable, "a'12",
              "no violation certificate within the horizon; existence of an "
              "antiautomorphism of a dense order is not decided"};
    }
  }
  fail(errc::internal, "unknown order family");
}

CriterionResult open_K(const IndSetup& s) {
  switch (s.type) {
    case TypeTag::A1:
      return s.omega_tail == 1
                 ? yes("a1", "Omega has finitely many blocks of size 2: iota(l) = l "
                             "for all large l")
                 : no("a1", "Omega has infinitely many blocks of size 2");
    case TypeTag::A2:
      return s.order.family == OrderFamily::NAT
                 ? yes("a2", "sigma(2l-1), sigma(2l) are consecutive and the count "
                             "below sigma(2l-1) is even for all large l")
                 : no("a2", "sigma(2l-1), sigma(2l) fail to be consecutive in the "
                            "image order for infinitely many l");
    case TypeTag::A3: {
      auto d = s.finite_defect();
      if (!d) return no("a3", "both |N+| and |N-| are infinite");
      bool has_dim = s.order.family == OrderFamily::NAT ||
                     s.order.family == OrderFamily::TWOSIDED ||
                     s.order.family == OrderFamily::ISO_TWOSIDED;
      bool has_codim = s.order.family == OrderFamily::TWOSIDED ||
                       s.order.family == OrderFamily::ISO_TWOSIDED;
      if (has_dim && has_codim)
        return yes("a3", "d = " + std::to_string(*d) + " is finite and the flag has a "
                         "d-dimensional and a d-codimensional member");
      return no("a3", "the flag lacks a d-dimensional or a d-codimensional member "
                      "(d = " + std::to_string(*d) + ")");
    }
    case TypeTag::C1:
    case TypeTag::D3:
      return no("bcd", "types C1 and D3 never have an open K-orbit");
    case TypeTag::BD1:
    case TypeTag::C2: {
      auto d = s.finite_defect();
      if (!d) return no("bcd", "both |N+| and |N-| are infinite");
      return yes("bcd", "d = " + std::to_string(*d) + " is finite and the isotropic "
                        "flag has a d-dimensional member");
    }
  }
  fail(errc::internal, "unknown type");
}

CriterionResult closed_K(const IndSetup& s) {
  switch (s.type) {
    case TypeTag::A1:
    case TypeTag::A2:
      return closed_orbit_a12(s);
    case TypeTag::A3:
      return {Verdict::InfinitelyMany, "a3", "type A3 always has infinitely many closed K-orbits"};
    default:
      return {Verdict::InfinitelyMany, "bcd",
              "types B, C, D always have infinitely many closed K-orbits"};
  }
}

}  // namespace

CriterionResult has_open_orbit(const IndSetup& setup, Family family) {
  if (family == Family::K_side) return open_K(setup);
  CriterionResult r = closed_K(setup);
  r.reason += "; open G0-orbits correspond to closed K-orbits under duality";
  return r;
}

CriterionResult has_closed_orbit(const IndSetup& setup, Family family) {
  if (family == Family::K_side) return closed_K(setup);
  CriterionResult r = open_K(setup);
  r.reason += "; closed G0-orbits correspond to open K-orbits under duality";
  return r;
}

}  // namespace flagorbits
