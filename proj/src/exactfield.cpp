#include "flagorbits/exactfield.hpp"

#include <algorithm>
#include <cctype>

namespace flagorbits {

namespace {

constexpr int kMaxRadicals = 30;
constexpr long kMaxPrecBits = 1 << 20;

int top_radical_of_mask(std::uint32_t mask) {  // 1-based, 0 if none
  int top = 0;
  while (mask) {
    ++top;
    mask >>= 1;
  }
  return top;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar basics

const TowerPtr& Scalar::common_tower(const Scalar& a, const Scalar& b) {
  if (a.tower_ && b.tower_) {
    if (a.tower_ != b.tower_) fail(errc::tower_mismatch, "operands belong to different towers");
    return a.tower_;
  }
  return a.tower_ ? a.tower_ : b.tower_;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::pair<std::uint32_t, mpq_class>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

bool Scalar::is_real() const {
  for (const auto& [k, c] : terms_)
    if (k & 1u) return false;
  return true;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

mpq_class Scalar::rational_value() const {
  if (terms_.empty()) return mpq_class(0);
  if (!is_rational()) fail(errc::internal, "rational_value on non-rational scalar");
  return terms_[0].second;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(common_tower(*this, o), terms_);
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  const TowerPtr& tw = common_tower(*this, o);
  Scalar acc(tw, {});
  std::vector<std::pair<std::uint32_t, mpq_class>> plain;  // terms with no radical overlap
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      mpq_class c = ca * cb;
      std::uint32_t ia = ka & 1u, ib = kb & 1u;
      if (ia && ib) c = -c;  // i*i = -1
      std::uint32_t ibit = ia ^ ib;
      std::uint32_t ma = ka >> 1, mb = kb >> 1;
      std::uint32_t common = ma & mb;
      std::uint32_t key = ((ma ^ mb) << 1) | ibit;
      if (common == 0) {
        plain.emplace_back(key, std::move(c));
        continue;
      }
      // overlapping radicals square out into their radicands
      Scalar part(tw, {{key, std::move(c)}});
      std::uint32_t rest = common;
      while (rest) {
        int k = top_radical_of_mask(rest);
        rest &= ~(1u << (k - 1));
        part = part * tw->radicand(k);
      }
      acc = acc + part;
    }
  }
  Scalar r(tw, std::move(plain));
  r.normalize();
  return acc.is_zero() ? r : r + acc;
}

Scalar Scalar::conj() const {
  Scalar r(*this);
  for (auto& t : r.terms_)
    if (t.first & 1u) t.second = -t.second;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  std::uint32_t full_mask = 0;
  for (const auto& [k, c] : terms_) full_mask |= (k >> 1);
  if (full_mask == 0) {
    // element of Q(i)
    mpq_class a(0), b(0);
    for (const auto& [k, c] : terms_) (k & 1u) ? b = c : a = c;
    mpq_class d = a * a + b * b;
    Scalar r(tower_, {});
    if (a != 0) r.terms_.emplace_back(0u, a / d);
    if (b != 0) r.terms_.emplace_back(1u, -b / d);
    r.normalize();
    return r;
  }
  // split off the top radical: x = u + v*r_top, 1/x = (u - v*r_top)/(u^2 - v^2*a_top)
  int top = top_radical_of_mask(full_mask);
  std::uint32_t bit = 1u << (top - 1);
  Scalar u(tower_, {}), v(tower_, {});
  for (const auto& [k, c] : terms_) {
    std::uint32_t mask = k >> 1;
    if (mask & bit)
      v.terms_.emplace_back(((mask & ~bit) << 1) | (k & 1u), c);
    else
      u.terms_.emplace_back(k, c);
  }
  u.normalize();
  v.normalize();
  Scalar rtop(tower_, {{bit << 1, mpq_class(1)}});
  Scalar den = u * u - v * v * tower_->radicand(top);
  return (u - v * rtop) * den.inverse();
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail(errc::division_by_zero, "division by zero");
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (tower_ && o.tower_ && tower_ != o.tower_)
    fail(errc::tower_mismatch, "comparing scalars from different towers");
  return terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// Sign determination (adaptive rational interval arithmetic)

namespace {

using Interval = std::pair<mpq_class, mpq_class>;

Interval iv_add(const Interval& a, const Interval& b) {
  return {a.first + b.first, a.second + b.second};
}

Interval iv_mul(const Interval& a, const Interval& b) {
  mpq_class p1 = a.first * b.first, p2 = a.first * b.second;
  mpq_class p3 = a.second * b.first, p4 = a.second * b.second;
  mpq_class lo = std::min(std::min(p1, p2), std::min(p3, p4));
  mpq_class hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

// enclosure of sqrt(q) for q >= 0, within 1/2^prec
Interval iv_sqrt_point(const mpq_class& q, long prec) {
  if (q == 0) return {mpq_class(0), mpq_class(0)};
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class scaled = num * den;
  mpz_class shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), scaled.get_mpz_t(), 2 * prec);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
  mpz_class d;
  mpz_mul_2exp(d.get_mpz_t(), den.get_mpz_t(), prec);
  mpq_class lo(s, d), hi(s + 1, d);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Interval iv_sqrt(const Interval& a, long prec) {
  mpq_class lo = a.first < 0 ? mpq_class(0) : a.first;
  Interval l = iv_sqrt_point(lo, prec);
  Interval h = iv_sqrt_point(a.second, prec);
  return {l.first, h.second};
}

}  // namespace

Tower::Interval Tower::radical_interval(int k, long prec) {
  if (prec != cached_prec_) {
    cached_prec_ = prec;
    cached_iv_.clear();
  }
  while (static_cast<int>(cached_iv_.size()) < k) {
    int next = static_cast<int>(cached_iv_.size()) + 1;
    Interval a = eval_interval(radicands_[next - 1], prec);
    auto s = iv_sqrt({a.lo, a.hi}, prec);
    cached_iv_.push_back(Interval{s.first, s.second});
  }
  return cached_iv_[k - 1];
}

Tower::Interval Tower::eval_interval(const Scalar& x, long prec) {
  // real part only; callers guarantee x is real
  std::pair<mpq_class, mpq_class> sum{mpq_class(0), mpq_class(0)};
  for (const auto& [key, c] : x.terms()) {
    if (key & 1u) continue;
    std::pair<mpq_class, mpq_class> term{c, c};
    std::uint32_t mask = key >> 1;
    int k = 0;
    while (mask) {
      ++k;
      if (mask & 1u) {
        Interval r = radical_interval(k, prec);
        term = iv_mul(term, {r.lo, r.hi});
      }
      mask >>= 1;
    }
    sum = iv_add(sum, term);
  }
  return Interval{sum.first, sum.second};
}

int Scalar::sign_of_real() const {
  if (!is_real()) fail(errc::not_real, "sign of a non-real element");
  if (is_zero()) return 0;
  if (is_rational()) return sgn(terms_[0].second);
  if (!tower_) fail(errc::internal, "radical term without tower");
  for (long prec = 64; prec <= kMaxPrecBits; prec *= 2) {
    Tower::Interval iv = tower_->eval_interval(*this, prec);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
  // unreachable for nonzero elements: monomials are linearly independent,
  // so the true value is nonzero and refinement separates it from 0
  fail(errc::internal, "interval refinement did not resolve sign");
}

// ---------------------------------------------------------------------------
// Tower: construction, exact square detection, adjunction

TowerPtr Tower::make() { return TowerPtr(new Tower()); }

const Scalar& Tower::radicand(int k) const {
  if (k < 1 || k > radical_count()) fail(errc::out_of_range, "radical index");
  return radicands_[k - 1];
}

Scalar Tower::zero() { return Scalar(shared_from_this(), {}); }

Scalar Tower::rational(const mpq_class& q) {
  mpq_class v = q;
  v.canonicalize();
  if (v == 0) return zero();
  return Scalar(shared_from_this(), {{0u, v}});
}

Scalar Tower::imaginary_unit() { return Scalar(shared_from_this(), {{1u, mpq_class(1)}}); }

Scalar Tower::radical(int k) {
  if (k < 1 || k > radical_count()) fail(errc::out_of_range, "radical index");
  return Scalar(shared_from_this(), {{(1u << (k - 1)) << 1, mpq_class(1)}});
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class &num = q.get_num(), &den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(sn, sd);
  r.canonicalize();
  return r;
}

}  // namespace

// Exact square test in the real subtower.  Recursion over the top radical:
// u + v*sqrt(d) is a square iff N = u^2 - v^2 d is a square n^2 below and
// (u + n)/2 (for one sign of n) is a nonzero square x^2; then y = v/(2x).
std::optional<Scalar> Tower::try_sqrt(const Scalar& a) {
  if (!a.is_real()) return std::nullopt;
  TowerPtr self = shared_from_this();

  std::uint32_t full_mask = 0;
  for (const auto& [k, c] : a.terms()) full_mask |= (k >> 1);
  if (full_mask == 0) {
    auto r = rational_sqrt(a.is_zero() ? mpq_class(0) : a.terms()[0].second);
    if (!r) return std::nullopt;
    return rational(*r);
  }
  int top = top_radical_of_mask(full_mask);
  std::uint32_t bit = 1u << (top - 1);

  Scalar u(self, {}), v(self, {});
  {
    std::vector<std::pair<std::uint32_t, mpq_class>> ut, vt;
    for (const auto& [k, c] : a.terms()) {
      std::uint32_t mask = k >> 1;
      if (mask & bit)
        vt.emplace_back(((mask & ~bit) << 1) | (k & 1u), c);
      else
        ut.emplace_back(k, c);
    }
    u = Scalar(self, std::move(ut));
    v = Scalar(self, std::move(vt));
  }
  const Scalar& d = radicand(top);
  Scalar rtop = radical(top);

  if (v.is_zero()) {
    if (auto s = try_sqrt(u)) return s;
    // u = y^2 d  <=>  u*d = (y d)^2
    if (auto s = try_sqrt(u * d)) {
      if (s->is_zero()) return zero();
      return (*s / d) * rtop;
    }
    return std::nullopt;
  }

  Scalar big_n = u * u - v * v * d;
  auto n = try_sqrt(big_n);
  if (!n) return std::nullopt;
  Scalar half = rational(mpq_class(1, 2));
  for (Scalar cand_n : {*n, -*n}) {
    Scalar h = (u + cand_n) * half;
    auto s = try_sqrt(h);
    if (s && !s->is_zero()) {
      Scalar y = v / (rational(2) * *s);
      Scalar cand = *s + y * rtop;
      if (cand * cand == a) return cand;
    }
  }
  return std::nullopt;
}

Scalar Tower::adjoin_sqrt(const Scalar& a) {
  if (!a.is_real()) fail(errc::not_positive, "radicand must be real");
  if (a.tower() && a.tower().get() != this)
    fail(errc::tower_mismatch, "radicand from a different tower");
  int s = a.sign_of_real();
  if (s <= 0) fail(errc::not_positive, "radicand must be positive");
  if (auto root = try_sqrt(a)) {
    Scalar r = *root;
    if (r.sign_of_real() < 0) r = -r;
    return r;
  }
  if (radical_count() >= kMaxRadicals) fail(errc::out_of_range, "tower depth limit");
  Scalar stored = a;
  if (!stored.tower()) stored = rational(a.is_zero() ? mpq_class(0) : a.terms()[0].second);
  radicands_.push_back(stored);
  cached_prec_ = 0;
  cached_iv_.clear();
  return radical(radical_count());
}

// ---------------------------------------------------------------------------
// Textual grammar

std::string Scalar::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    out += mag.get_num().get_str();
    if (mag.get_den() != 1) out += "/" + mag.get_den().get_str();
    if (key & 1u) out += "*i";
    std::uint32_t mask = key >> 1;
    for (int k = 1; mask; ++k, mask >>= 1)
      if (mask & 1u) out += "*r" + std::to_string(k);
  }
  return out;
}

namespace {

struct ParseCursor {
  const std::string& s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

mpq_class parse_rational(ParseCursor& c) {
  size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) throw std::runtime_error("expected digits in scalar literal");
  mpz_class num(c.s.substr(start, c.pos - start));
  mpz_class den(1);
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) throw std::runtime_error("expected denominator digits");
    den = mpz_class(c.s.substr(dstart, c.pos - dstart));
    if (den == 0) throw std::runtime_error("zero denominator in scalar literal");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, const TowerPtr& tower) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::runtime_error("empty scalar literal");

  ParseCursor c{s};
  Scalar total = tower->zero();
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') {
    sign = c.peek() == '-' ? -1 : 1;
    ++c.pos;
  }
  while (true) {
    // one term: product of factors
    Scalar term = tower->rational(sign);
    bool expect_factor = true;
    while (expect_factor) {
      if (c.done()) throw std::runtime_error("unexpected end of scalar literal");
      char ch = c.peek();
      if (ch == 'i') {
        ++c.pos;
        term = term * tower->imaginary_unit();
      } else if (ch == 'r') {
        ++c.pos;
        size_t start = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == start) throw std::runtime_error("expected radical index after 'r'");
        int k = std::stoi(c.s.substr(start, c.pos - start));
        if (k < 1 || k > tower->radical_count())
          throw std::runtime_error("unknown radical r" + std::to_string(k));
        term = term * tower->radical(k);
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        term = term * tower->rational(parse_rational(c));
      } else {
        throw std::runtime_error(std::string("unexpected character '") + ch + "' in scalar");
      }
      expect_factor = !c.done() && c.peek() == '*';
      if (expect_factor) ++c.pos;
    }
    total += term;
    if (c.done()) break;
    char op = c.peek();
    if (op != '+' && op != '-') throw std::runtime_error("expected '+' or '-' between terms");
    sign = op == '-' ? -1 : 1;
    ++c.pos;
  }
  return total;
}

}  // namespace flagorbits
