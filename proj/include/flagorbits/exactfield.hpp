#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagorbits/errors.hpp"

namespace flagorbits {

class Tower;
using TowerPtr = std::shared_ptr<Tower>;

/*
 * Exact arithmetic in an iterated quadratic extension Q(i)(sqrt(a1))...(sqrt(ar)).
 *
 * A Scalar is a sparse coordinate vector over monomials in the adjoined
 * square roots times {1, i}.  A term key packs the radical subset as a bit
 * mask (bits 1..r) together with the i-bit (bit 0), so complex conjugation
 * and equality are linear scans.  Every radicand a_k is a real positive
 * element of the tower below it and no radicand is a perfect square there,
 * hence the monomials are a Q(i)-basis and "zero iff no terms" holds.
 *
 * Scalars are immutable values.  Tower extension (adjoin_sqrt) mutates the
 * shared Tower and must be serialized by the caller; all read-only
 * arithmetic is safe to run concurrently.
 */
class Scalar {
 public:
  Scalar() = default;  // zero with no tower attached; usable as accumulator

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  bool is_rational() const;  // no radical and no i factor
  mpq_class rational_value() const;  // requires is_rational()

  const TowerPtr& tower() const { return tower_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar conj() const;    // fixes real radicals, negates i
  Scalar inverse() const;

  // Sign of a real element: -1, 0, +1.  Throws NotReal.
  int sign_of_real() const;

  // Canonical textual form, e.g. "1/2 + 1/2*i*r1".  parse() accepts the
  // whitespace-insensitive grammar  term ((+|-) term)*  with
  // term = (p[/q]|i|r<k>) ('*' factor)*.
  std::string render() const;
  static Scalar parse(const std::string& text, const TowerPtr& tower);

  // Term access in canonical (sorted) order: key = mask<<1 | ibit.
  const std::vector<std::pair<std::uint32_t, mpq_class>>& terms() const { return terms_; }

 private:
  friend class Tower;
  Scalar(TowerPtr t, std::vector<std::pair<std::uint32_t, mpq_class>> terms)
      : tower_(std::move(t)), terms_(std::move(terms)) {}

  static const TowerPtr& common_tower(const Scalar& a, const Scalar& b);
  void normalize();

  TowerPtr tower_;
  std::vector<std::pair<std::uint32_t, mpq_class>> terms_;  // sorted by key, no zeros
};

// Closed-under-sqrt scalar context.  Radicands are adjoined in request
// order and named positionally r1, r2, ... for the textual grammar.
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  static TowerPtr make();

  int radical_count() const { return static_cast<int>(radicands_.size()); }
  const Scalar& radicand(int k) const;  // 1-based

  Scalar zero();
  Scalar rational(const mpq_class& q);
  Scalar integer(long v) { return rational(mpq_class(v)); }
  Scalar imaginary_unit();
  Scalar radical(int k);  // the k-th adjoined square root, 1-based

  // Returns s with s*s == a and sign_of_real(s) == +1.  If a is already a
  // square in the tower the existing root is returned and the tower is
  // unchanged.  Throws NotPositive unless a is real with positive sign.
  Scalar adjoin_sqrt(const Scalar& a);

  // Exact square test in the real subtower; returns a square root if one
  // exists (sign unspecified).
  std::optional<Scalar> try_sqrt(const Scalar& a);

 private:
  friend class Scalar;
  Tower() = default;

  struct Interval {  // closed rational interval enclosure
    mpq_class lo, hi;
  };
  Interval radical_interval(int k, long prec);
  Interval eval_interval(const Scalar& x, long prec);

  std::vector<Scalar> radicands_;
  // per-precision cache of radical enclosures
  long cached_prec_ = 0;
  std::vector<Interval> cached_iv_;
};

// Free-function spellings used throughout the library.
inline Scalar conjugate(const Scalar& x) { return x.conj(); }
inline int sign_of_real(const Scalar& x) { return x.sign_of_real(); }

}  // namespace flagorbits
