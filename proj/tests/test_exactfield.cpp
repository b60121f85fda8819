#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagorbits/exactfield.hpp"

using namespace flagorbits;

namespace {

TowerPtr tower_with_sqrt2(Scalar* sqrt2 = nullptr) {
  TowerPtr t = Tower::make();
  Scalar s = t->adjoin_sqrt(t->integer(2));
  if (sqrt2) *sqrt2 = s;
  return t;
}

}  // namespace

TEST_CASE("rational and gaussian arithmetic") {
  TowerPtr t = Tower::make();
  Scalar half = t->rational(mpq_class(1, 2));
  Scalar i = t->imaginary_unit();

  // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
  CHECK((half + i) * (half - i) == t->rational(mpq_class(5, 4)));
  CHECK(i * i == t->integer(-1));
  CHECK((t->integer(3) / t->integer(6)) == half);
  CHECK_THROWS_AS(t->integer(1) / t->zero(), DomainError);
}

TEST_CASE("defining relation of adjoined roots") {
  Scalar s2;
  TowerPtr t = tower_with_sqrt2(&s2);
  CHECK(s2 * s2 == t->integer(2));

  // ((1+i)/sqrt2) * conj((1+i)/sqrt2) = (1+i)(1-i)/2 = 1
  Scalar z = (t->integer(1) + t->imaginary_unit()) / s2;
  CHECK(z * z.conj() == t->integer(1));
}

TEST_CASE("conjugation") {
  Scalar s2;
  TowerPtr t = tower_with_sqrt2(&s2);
  Scalar i = t->imaginary_unit();

  CHECK(conjugate(i) == -i);
  CHECK(conjugate(s2) == s2);
  Scalar x = t->rational(mpq_class(3, 4)) * i * s2;
  CHECK(conjugate(x) == -x);
  // involutive and multiplicative on a small sample
  Scalar samples[] = {i, s2, x, t->rational(mpq_class(-7, 5)) + i * s2, t->zero()};
  for (const Scalar& a : samples) {
    CHECK(conjugate(conjugate(a)) == a);
    for (const Scalar& b : samples) CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
  }
}

TEST_CASE("sign of real elements") {
  Scalar s2;
  TowerPtr t = tower_with_sqrt2(&s2);

  CHECK(sign_of_real(t->zero()) == 0);
  CHECK(sign_of_real(t->integer(1) - s2) == -1);       // sqrt2 in (1.414, 1.415)
  CHECK(sign_of_real(t->integer(3) - t->integer(2) * s2) == 1);  // (3-2r)(3+2r)=1>0
  CHECK_THROWS_AS(sign_of_real(t->imaginary_unit()), DomainError);

  // multiplicativity on real elements
  Scalar reals[] = {s2, t->integer(1) - s2, t->rational(mpq_class(3, 7)), -s2 + t->integer(5)};
  for (const Scalar& a : reals)
    for (const Scalar& b : reals)
      CHECK(sign_of_real(a * b) == sign_of_real(a) * sign_of_real(b));
}

TEST_CASE("adjoin_sqrt") {
  TowerPtr t = Tower::make();
  Scalar s2 = t->adjoin_sqrt(t->integer(2));
  CHECK(t->radical_count() == 1);
  CHECK(s2 * s2 == t->integer(2));
  CHECK(sign_of_real(s2) == 1);

  // perfect square: no extension
  Scalar s4 = t->adjoin_sqrt(t->integer(4));
  CHECK(s4 == t->integer(2));
  CHECK(t->radical_count() == 1);

  // 3 + 2*sqrt2 = (1 + sqrt2)^2: detected inside the tower
  Scalar a = t->integer(3) + t->integer(2) * s2;
  Scalar r = t->adjoin_sqrt(a);
  CHECK(r == t->integer(1) + s2);
  CHECK(t->radical_count() == 1);

  // a genuinely new radicand extends the tower
  Scalar s3 = t->adjoin_sqrt(t->integer(3));
  CHECK(t->radical_count() == 2);
  CHECK(s3 * s3 == t->integer(3));
  CHECK(s2 * s3 * s2 * s3 == t->integer(6));

  // nested radicand: sqrt(2 + sqrt2) is not a square in Q(i)(sqrt2, sqrt3)
  Scalar b = t->integer(2) + s2;
  Scalar rb = t->adjoin_sqrt(b);
  CHECK(t->radical_count() == 3);
  CHECK(rb * rb == b);
  CHECK(sign_of_real(rb) == 1);

  CHECK_THROWS_AS(t->adjoin_sqrt(-s2), DomainError);
  CHECK_THROWS_AS(t->adjoin_sqrt(t->imaginary_unit()), DomainError);
}

TEST_CASE("division in deep towers") {
  TowerPtr t = Tower::make();
  Scalar s2 = t->adjoin_sqrt(t->integer(2));
  Scalar s3 = t->adjoin_sqrt(t->integer(3));
  Scalar i = t->imaginary_unit();
  Scalar x = (t->integer(1) + i * s2 - s3) / (s2 + s3 * i - t->rational(mpq_class(2, 3)));
  Scalar y = x * (s2 + s3 * i - t->rational(mpq_class(2, 3)));
  CHECK(y == t->integer(1) + i * s2 - s3);
  CHECK((x / x) == t->integer(1));
}

TEST_CASE("textual grammar round trip") {
  Scalar s2;
  TowerPtr t = tower_with_sqrt2(&s2);
  Scalar i = t->imaginary_unit();

  Scalar z = t->rational(mpq_class(1, 2)) + t->rational(mpq_class(1, 2)) * i * s2;
  CHECK(z.render() == "1/2 + 1/2*i*r1");
  CHECK(Scalar::parse(z.render(), t) == z);
  CHECK(Scalar::parse(" 1/2+1/2 * i * r1 ", t) == z);

  Scalar samples[] = {t->zero(), -s2, i - t->integer(4), s2 * i * t->rational(mpq_class(-7, 3)),
                      (t->integer(1) + s2) * (i - s2)};
  for (const Scalar& a : samples) CHECK(Scalar::parse(a.render(), t) == a);

  CHECK(t->zero().render() == "0");
  CHECK_THROWS(Scalar::parse("1 + r9", t));
  CHECK_THROWS(Scalar::parse("", t));
  CHECK_THROWS(Scalar::parse("2**3", t));
}

TEST_CASE("tower mismatch is rejected") {
  TowerPtr t1 = Tower::make(), t2 = Tower::make();
  Scalar a = t1->integer(1), b = t2->integer(1);
  CHECK_THROWS_AS((void)(a + b), DomainError);
}
