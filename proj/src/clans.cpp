#include "flagorbits/clans.hpp"

#include <algorithm>
#include <sstream>

namespace flagorbits {

int Clan::image(int k) const {
  if (k < 1 || k > n) fail(errc::out_of_range, "clan index");
  for (const auto& [a, b] : arcs) {
    if (a == k) return b;
    if (b == k) return a;
  }
  return k;
}

std::vector<int> Clan::fixed_points() const {
  std::vector<bool> in_arc(n + 1, false);
  for (const auto& [a, b] : arcs) in_arc[a] = in_arc[b] = true;
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (!in_arc[k]) out.push_back(k);
  return out;
}

bool Clan::fully_signed() const {
  for (int k : fixed_points())
    if (!signs.count(k)) return false;
  return true;
}

int Clan::sign_at(int k) const {
  auto it = signs.find(k);
  if (it == signs.end()) fail(errc::unsigned_clan, "fixed point has no sign");
  return it->second;
}

void Clan::validate() const {
  std::vector<bool> seen(n + 1, false);
  int prev_a = 0;
  for (const auto& [a, b] : arcs) {
    if (a < 1 || b < 1 || a > n || b > n) fail(errc::out_of_range, "arc endpoint out of range");
    if (a >= b) fail(errc::invalid_param, "arc endpoints must satisfy a < b");
    if (a < prev_a) fail(errc::invalid_param, "arcs must be sorted by left endpoint");
    if (seen[a] || seen[b]) fail(errc::invalid_param, "arcs must be disjoint");
    seen[a] = seen[b] = true;
    prev_a = a;
  }
  for (const auto& [k, s] : signs) {
    if (k < 1 || k > n) fail(errc::out_of_range, "signed vertex out of range");
    if (seen[k]) fail(errc::invalid_param, "arc endpoint cannot carry a sign");
    if (s != 1 && s != -1) fail(errc::invalid_param, "signs must be +1/-1");
  }
}

bool Clan::operator<(const Clan& o) const {
  if (n != o.n) return n < o.n;
  if (arcs != o.arcs) return arcs < o.arcs;
  return std::vector<std::pair<int, int>>(signs.begin(), signs.end()) <
         std::vector<std::pair<int, int>>(o.signs.begin(), o.signs.end());
}

std::string Clan::to_string() const {
  std::ostringstream os;
  for (const auto& [a, b] : arcs) os << "(" << a << ";" << b << ")";
  if (arcs.empty()) os << "id";
  if (!signs.empty()) {
    os << " ";
    for (int k : fixed_points()) {
      auto it = signs.find(k);
      os << (it == signs.end() ? '?' : (it->second > 0 ? '+' : '-'));
    }
  }
  os << " [n=" << n << "]";
  return os.str();
}

Clan identity_clan(int n) {
  Clan c;
  c.n = n;
  return c;
}

Clan reversal_involution(int n) {
  Clan c;
  c.n = n;
  for (int k = 1; 2 * k <= n; ++k) c.arcs.emplace_back(k, n + 1 - k);
  return c;
}

Clan pairing_involution(int n) {
  Clan c;
  c.n = n;
  for (int k = 1; 2 * k <= n; ++k) c.arcs.emplace_back(2 * k - 1, 2 * k);
  return c;
}

Clan conjugated_clan(const Clan& c, const std::vector<int>& perm) {
  Clan out;
  out.n = c.n;
  for (const auto& [a, b] : c.arcs) {
    int x = perm[a - 1], y = perm[b - 1];
    out.arcs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  for (const auto& [k, s] : c.signs) out.signs[perm[k - 1]] = s;
  return out;
}

SignatureSeq signature(const Clan& c) {
  if (!c.fully_signed()) fail(errc::unsigned_clan, "signature needs a fully signed clan");
  SignatureSeq seq(c.n);
  int p = 0, q = 0;
  for (int l = 1; l <= c.n; ++l) {
    auto it = c.signs.find(l);
    if (it != c.signs.end()) {
      (it->second > 0 ? p : q) += 1;
    } else if (c.image(l) < l) {  // closing endpoint of an arc
      ++p;
      ++q;
    }
    seq[l - 1] = {p, q};
  }
  return seq;
}

bool is_symmetric_clan(const Clan& c, int eta, int eps) {
  const int n = c.n;
  auto mirror = [n](int k) { return n + 1 - k; };
  for (int k = 1; k <= n; ++k)
    if (c.image(mirror(k)) != mirror(c.image(k))) return false;  // (i) w w0 = w0 w
  for (int k : c.fixed_points()) {
    if (!c.signs.count(k) || !c.signs.count(mirror(k))) return false;
    if (c.sign_at(mirror(k)) != eta * c.sign_at(k)) return false;  // (ii)
  }
  if (eta != eps) {
    for (const auto& [a, b] : c.arcs)
      if (b == mirror(a)) return false;  // (iii) no symmetric arcs
  }
  return true;
}

bool is_valid_param(const Clan& c, const SpaceSetup& setup) {
  if (c.n != setup.n) return false;
  try {
    c.validate();
  } catch (const DomainError&) {
    return false;
  }
  switch (setup.type) {
    case TypeTag::A1:
      return c.signs.empty();
    case TypeTag::A2:
      return c.signs.empty() && c.fixed_points().empty();
    case TypeTag::A3: {
      if (!c.fully_signed()) return false;
      SignatureSeq s = signature(c);
      return s.back() == std::make_pair(setup.p(), setup.q());
    }
    default: {
      if (!c.fully_signed()) return false;
      SignatureSeq s = signature(c);
      if (s.back() != std::make_pair(setup.p(), setup.q())) return false;
      return is_symmetric_clan(c, setup.eta(), setup.eps_form());
    }
  }
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void gen_involutions(int n, std::vector<int>& partner, int next, std::vector<Clan>& out,
                     bool allow_fixed) {
  while (next <= n && partner[next] != 0) ++next;
  if (next > n) {
    Clan c;
    c.n = n;
    for (int k = 1; k <= n; ++k)
      if (partner[k] > k) c.arcs.emplace_back(k, partner[k]);
    out.push_back(std::move(c));
    return;
  }
  if (allow_fixed) {
    partner[next] = next;
    gen_involutions(n, partner, next + 1, out, allow_fixed);
    partner[next] = 0;
  }
  for (int b = next + 1; b <= n; ++b) {
    if (partner[b] != 0) continue;
    partner[next] = b;
    partner[b] = next;
    gen_involutions(n, partner, next + 1, out, allow_fixed);
    partner[next] = partner[b] = 0;
  }
}

void gen_sign_choices(const std::vector<int>& fixed, int plus_needed, size_t idx,
                      std::map<int, int>& acc, const Clan& base, std::vector<Clan>& out) {
  int remaining = static_cast<int>(fixed.size() - idx);
  if (plus_needed < 0 || plus_needed > remaining) return;
  if (idx == fixed.size()) {
    Clan c = base;
    c.signs = acc;
    out.push_back(std::move(c));
    return;
  }
  acc[fixed[idx]] = 1;
  gen_sign_choices(fixed, plus_needed - 1, idx + 1, acc, base, out);
  acc[fixed[idx]] = -1;
  gen_sign_choices(fixed, plus_needed, idx + 1, acc, base, out);
  acc.erase(fixed[idx]);
}

}  // namespace

std::vector<Clan> all_involutions(int n) {
  std::vector<Clan> out;
  std::vector<int> partner(n + 1, 0);
  gen_involutions(n, partner, 1, out, true);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clan> all_fpf_involutions(int n) {
  std::vector<Clan> out;
  if (n % 2 != 0) return out;
  std::vector<int> partner(n + 1, 0);
  gen_involutions(n, partner, 1, out, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clan> all_signed_clans(int n, int p, int q) {
  std::vector<Clan> out;
  if (p < 0 || q < 0 || p + q != n) return out;
  for (const Clan& base : all_involutions(n)) {
    int m = static_cast<int>(base.arcs.size());
    std::vector<int> fixed = base.fixed_points();
    std::map<int, int> acc;
    gen_sign_choices(fixed, p - m, 0, acc, base, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clan> enumerate_params(const SpaceSetup& setup) {
  switch (setup.type) {
    case TypeTag::A1: return all_involutions(setup.n);
    case TypeTag::A2: return all_fpf_involutions(setup.n);
    case TypeTag::A3: return all_signed_clans(setup.n, setup.p(), setup.q());
    default: {
      std::vector<Clan> out;
      for (Clan& c : all_signed_clans(setup.n, setup.p(), setup.q()))
        if (is_symmetric_clan(c, setup.eta(), setup.eps_form())) out.push_back(std::move(c));
      return out;
    }
  }
}

long count_params(const SpaceSetup& setup) {
  return static_cast<long>(enumerate_params(setup).size());
}

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long count_closed(const SpaceSetup& setup) {
  switch (setup.type) {
    case TypeTag::A1:
    case TypeTag::A2: return 1;
    case TypeTag::A3: return binomial(setup.n, setup.p());
    case TypeTag::BD1:
    case TypeTag::C2: return binomial(setup.p() / 2 + setup.q() / 2, setup.p() / 2);
    case TypeTag::C1:
    case TypeTag::D3: return 1L << (setup.n / 2);
  }
  fail(errc::internal, "unknown type");
}

// ---------------------------------------------------------------------------
// Open / closed parameter predicates (the remark lists)

namespace {

// w0^(t) = (1; n)(2; n-1)...(t; n-t+1)
std::vector<std::pair<int, int>> partial_reversal_arcs(int n, int t) {
  std::vector<std::pair<int, int>> arcs;
  for (int k = 1; k <= t; ++k) arcs.emplace_back(k, n + 1 - k);
  return arcs;
}

// hat w0^(t) = v0^(t) w0^(t) v0^(t) with v0^(t) = (1;2)(3;4)...(t-1;t)
std::vector<std::pair<int, int>> c2_open_arcs(int n, int t) {
  std::vector<int> perm(n);
  for (int k = 1; k <= n; ++k) perm[k - 1] = k;
  for (int k = 1; k + 1 <= t; k += 2) std::swap(perm[k - 1], perm[k]);
  Clan base;
  base.n = n;
  base.arcs = partial_reversal_arcs(n, t);
  return conjugated_clan(base, perm).arcs;
}

// hat w0 = w0 v0: k -> n-k for odd k, k -> n-k+2 for even k; fixes m, m+1
// when m = n/2 is odd
std::vector<std::pair<int, int>> d3_open_arcs(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int k = 1; k <= n; ++k) {
    int img = (k % 2 == 1) ? n - k : n - k + 2;
    if (img > k) arcs.emplace_back(k, img);
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

bool signs_all(const Clan& c, int want) {
  for (const auto& [k, s] : c.signs)
    if (s != want) return false;
  return true;
}

}  // namespace

bool is_open_param(const Clan& c, const SpaceSetup& setup) {
  if (!is_valid_param(c, setup)) fail(errc::invalid_param, "not a parameter for this setup");
  int n = setup.n;
  switch (setup.type) {
    case TypeTag::A1:
      return c.arcs.empty();
    case TypeTag::A2:
      return c.arcs == pairing_involution(n).arcs;
    case TypeTag::A3:
    case TypeTag::BD1: {
      int t = std::min(setup.p(), setup.q());
      return c.arcs == partial_reversal_arcs(n, t) &&
             signs_all(c, setup.p() >= setup.q() ? 1 : -1);
    }
    case TypeTag::C2: {
      int t = std::min(setup.p(), setup.q());
      return c.arcs == c2_open_arcs(n, t) && signs_all(c, setup.p() >= setup.q() ? 1 : -1);
    }
    case TypeTag::C1:
      return c.arcs == reversal_involution(n).arcs;
    case TypeTag::D3: {
      int m = n / 2;
      auto open_arcs = d3_open_arcs(n);
      if (m % 2 == 0) {
        // two fixed-point-free open parameters, swapped by switching the
        // middle vectors
        if (c.arcs == open_arcs) return true;
        std::vector<int> perm(n);
        for (int k = 1; k <= n; ++k) perm[k - 1] = k;
        std::swap(perm[m - 1], perm[m]);
        Clan base;
        base.n = n;
        base.arcs = open_arcs;
        return c.arcs == conjugated_clan(base, perm).arcs;
      }
      if (c.arcs != open_arcs) return false;
      return c.sign_at(m) == -c.sign_at(m + 1);
    }
  }
  fail(errc::internal, "unknown type");
}

bool is_closed_param(const Clan& c, const SpaceSetup& setup) {
  if (!is_valid_param(c, setup)) fail(errc::invalid_param, "not a parameter for this setup");
  switch (setup.type) {
    case TypeTag::A1:
    case TypeTag::A2:
      return c.arcs == reversal_involution(setup.n).arcs;
    case TypeTag::BD1:
      if (setup.p() % 2 == 1 && setup.q() % 2 == 1) {
        int m = setup.n / 2;
        return c.arcs == std::vector<std::pair<int, int>>{{m, m + 1}};
      }
      return c.arcs.empty();
    default:
      return c.arcs.empty();
  }
}

const char* family_name(Family f) { return f == Family::K_side ? "K" : "G0"; }

OrbitParam make_orbit_param(Clan c, Family f, const SpaceSetup& setup) {
  if (!is_valid_param(c, setup)) fail(errc::invalid_param, "clan is not in the parameter set");
  return OrbitParam{std::move(c), f, setup.type};
}

// ---------------------------------------------------------------------------
// Link pattern rendering

std::string render_link_pattern_ascii(const Clan& c) {
  // arcs drawn as nested brackets above the vertex line, signs below
  int rows = 0;
  std::vector<int> depth(c.arcs.size(), 1);
  for (size_t i = 0; i < c.arcs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      bool nested = c.arcs[j].first < c.arcs[i].first && c.arcs[i].second < c.arcs[j].second;
      bool crossing = c.arcs[j].first < c.arcs[i].first && c.arcs[j].second < c.arcs[i].second &&
                      c.arcs[i].first < c.arcs[j].second;
      if (nested || crossing) depth[i] = std::max(depth[i], depth[j] + 1);
    }
    rows = std::max(rows, depth[i]);
  }
  int width = 2 * c.n - 1;
  std::vector<std::string> grid(rows, std::string(width, ' '));
  for (size_t i = 0; i < c.arcs.size(); ++i) {
    int r = rows - depth[i];
    int xa = 2 * (c.arcs[i].first - 1), xb = 2 * (c.arcs[i].second - 1);
    grid[r][xa] = '.';
    grid[r][xb] = '.';
    for (int x = xa + 1; x < xb; ++x) grid[r][x] = '_';
  }
  std::string vertices, below;
  for (int k = 1; k <= c.n; ++k) {
    vertices += 'o';
    auto it = c.signs.find(k);
    below += (it == c.signs.end()) ? ' ' : (it->second > 0 ? '+' : '-');
    if (k < c.n) {
      vertices += ' ';
      below += ' ';
    }
  }
  std::string out;
  for (const std::string& row : grid) out += row + "\n";
  out += vertices + "\n";
  if (below.find_first_not_of(' ') != std::string::npos) out += below + "\n";
  return out;
}

std::string render_link_pattern_dot(const Clan& c) {
  std::ostringstream os;
  os << "graph linkpattern {\n  rankdir=LR;\n  node [shape=point];\n";
  for (int k = 1; k <= c.n; ++k) {
    os << "  v" << k << " [xlabel=\"" << k;
    auto it = c.signs.find(k);
    if (it != c.signs.end()) os << (it->second > 0 ? "+" : "-");
    os << "\"];\n";
  }
  for (int k = 1; k < c.n; ++k)
    os << "  v" << k << " -- v" << k + 1 << " [style=invis];\n";
  for (const auto& [a, b] : c.arcs)
    os << "  v" << a << " -- v" << b << " [constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace flagorbits
