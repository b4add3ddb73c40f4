#include <doctest.h>

#include <cmath>
#include <random>

#include "klein/qnum.hpp"

using namespace klein;

namespace {

QNum q(long x, long y) { return QNum(x, y); }

// Independent oracle: (a + b w)(c + d w) with w^2 = w - 2, expanded by hand.
QNum mul_oracle(const QNum& p, const QNum& r) {
  const Rational &a = p.x(), &b = p.y(), &c = r.x(), &d = r.y();
  return QNum(a * c - 2 * b * d, a * d + b * c + b * d);
}

}  // namespace

TEST_CASE("multiplication follows w^2 = w - 2") {
  CHECK(QNum::w() * QNum::w() == q(-2, 1));
  CHECK(QNum::w() * QNum::w_bar() == QNum(2));
  CHECK(q(1, 1) * q(1, 1) == q(-1, 3));
  CHECK(QNum::w_bar() == q(1, -1));
  CHECK(QNum::i_sqrt7() * QNum::i_sqrt7() == QNum(-7));
}

TEST_CASE("inverse") {
  CHECK(QNum(2).inv() == QNum(ratio(1, 2), 0));
  CHECK(QNum::w().inv() == QNum(ratio(1, 2), ratio(-1, 2)));
  CHECK(q(1, 1).inv() == QNum(ratio(1, 2), ratio(-1, 4)));
  CHECK(q(1, 1) * q(1, 1).inv() == QNum(1));
  CHECK_THROWS_AS(QNum().inv(), DivisionByZero);
}

TEST_CASE("conjugation and norm") {
  CHECK(QNum::w().conj() == QNum::w_bar());
  CHECK(q(3, 5).conj() == q(8, -5));
  CHECK(q(3, 5).norm() == 9 + 15 + 50);
  CHECK(QNum().norm() == 0);
  CHECK((q(3, 5) * q(3, 5).conj()) == QNum(q(3, 5).norm(), 0));
}

TEST_CASE("hermitian form on roots") {
  const CVec3 a{{q(0, 1), q(0, 1), QNum()}};
  const CVec3 b{{QNum(2), QNum(), QNum()}};
  const CVec3 c{{QNum(), QNum(), QNum(2)}};
  CHECK(hermitian(a, a) == QNum(2));
  CHECK(hermitian(b, b) == QNum(2));
  CHECK(hermitian(b, c) == QNum());
}

TEST_CASE("text round trip") {
  for (const QNum& x : {QNum(), QNum(1), QNum::w(), q(-3, 7), QNum(ratio(1, 2), ratio(-5, 6))})
    CHECK(QNum::parse(x.str()) == x);
  CHECK(QNum::parse("w") == QNum::w());
  CHECK(QNum::parse("2-w") == q(2, -1));
  CHECK(QNum::parse("1/2*w") == QNum(0, ratio(1, 2)));
  CHECK_THROWS_AS(QNum::parse("w/2x"), ParseError);
  CHECK(rational_str(ratio(4, 6)) == "2/3");
  CHECK(ratio(0, 7) == 0);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  auto r = [&] { return QNum(ratio(num(rng), den(rng)), ratio(num(rng), den(rng))); };
  for (int t = 0; t < 1000; ++t) {
    const QNum a = r(), b = r(), c = r();
    CHECK(a * b == mul_oracle(a, b));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).norm() == a.norm() * b.norm());
    if (!a.is_zero()) CHECK(a * a.inv() == QNum(1));
  }
}

TEST_CASE("complex embedding") {
  const auto w = QNum::w().embed();
  CHECK(w.real() == doctest::Approx(0.5));
  CHECK(w.imag() == doctest::Approx(std::sqrt(7.0) / 2));
}
