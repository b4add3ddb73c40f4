#include "klein/torus_point.hpp"

#include <numeric>

namespace klein {

TorusPoint::TorusPoint(std::span<const Rational> eps_coords) {
  if (eps_coords.size() != 6) throw std::invalid_argument("torus points have six epsilon coordinates");
  mpz_class den = 1;
  for (const auto& c : eps_coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  if (!den.fits_slong_p()) throw std::overflow_error("torsion order exceeds int64");
  den_ = den.get_si();
  for (std::size_t i = 0; i < 6; ++i) {
    mpz_class n = eps_coords[i].get_num() * (den / eps_coords[i].get_den());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
    num_[i] = r.get_si();
  }
  normalize();
}

TorusPoint TorusPoint::from_numerators(const std::array<std::int64_t, 6>& num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("torus point denominator must be positive");
  TorusPoint p;
  p.num_ = num;
  p.den_ = den;
  p.normalize();
  return p;
}

void TorusPoint::normalize() {
  std::int64_t g = den_;
  for (auto& n : num_) {
    n %= den_;
    if (n < 0) n += den_;
    g = std::gcd(g, n);
  }
  if (g > 1) {
    den_ /= g;
    for (auto& n : num_) n /= g;
  }
}

RatVec6 TorusPoint::coords() const {
  RatVec6 c;
  for (std::size_t i = 0; i < 6; ++i) {
    c[i] = Rational(mpz_class(static_cast<long>(num_[i])), mpz_class(static_cast<long>(den_)));
    c[i].canonicalize();
  }
  return c;
}

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) { return checked_mul(a / std::gcd(a, b), b); }

}  // namespace

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
  std::int64_t d = lcm_checked(den_, o.den_);
  std::array<std::int64_t, 6> n{};
  for (std::size_t i = 0; i < 6; ++i)
    n[i] = checked_add(checked_mul(num_[i], d / den_), checked_mul(o.num_[i], d / o.den_)) % d;
  return from_numerators(n, d);
}

TorusPoint TorusPoint::operator-() const {
  std::array<std::int64_t, 6> n{};
  for (std::size_t i = 0; i < 6; ++i) n[i] = -num_[i];
  return from_numerators(n, den_);
}

TorusPoint TorusPoint::operator-(const TorusPoint& o) const { return *this + (-o); }

TorusPoint TorusPoint::times(std::int64_t k) const {
  std::array<std::int64_t, 6> n{};
  std::int64_t kr = k % den_;
  for (std::size_t i = 0; i < 6; ++i) n[i] = static_cast<std::int64_t>((static_cast<__int128>(num_[i]) * kr) % den_);
  return from_numerators(n, den_);
}

TorusPoint TorusPoint::apply(const IntMat6& m) const {
  std::array<std::int64_t, 6> n{};
  for (std::size_t i = 0; i < 6; ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < 6; ++j) s += static_cast<__int128>(m(i, j)) * num_[j];
    n[i] = static_cast<std::int64_t>(s % den_);
  }
  return from_numerators(n, den_);
}

bool TorusPoint::fixed_by(const IntMat6& m) const {
  for (std::size_t i = 0; i < 6; ++i) {
    __int128 s = -static_cast<__int128>(num_[i]);
    for (std::size_t j = 0; j < 6; ++j) s += static_cast<__int128>(m(i, j)) * num_[j];
    if (s % den_ != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
  for (std::size_t i = 0; i < 6; ++i) {
    __int128 l = static_cast<__int128>(a.num_[i]) * b.den_;
    __int128 r = static_cast<__int128>(b.num_[i]) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string TorusPoint::str() const {
  std::string s = "[";
  auto c = coords();
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + rational_str(c[i]);
  return s + "]";
}

TorusPoint TorusPoint::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("torus point must look like [a,b,c,d,e,f]");
  s = s.substr(1, s.size() - 2);
  RatVec6 c;
  std::size_t start = 0, k = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (k == 6) throw ParseError("torus point has more than six coordinates");
      c[k++] = parse_rational(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (k != 6) throw ParseError("torus point needs six coordinates");
  return TorusPoint(c);
}

std::size_t TorusPointHash::operator()(const TorusPoint& p) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(p.denominator());
  for (auto n : p.numerators()) h = h * 1000003u ^ std::hash<std::int64_t>{}(n);
  return h;
}

}  // namespace klein
