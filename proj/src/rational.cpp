#include "bihom/rational.hpp"

#include <limits>
#include <ostream>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t abs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  const u128 mag = abs128(v);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  mpz_class out;
  const std::uint64_t words[2] = {lo, hi};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

bool fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ParseError("rational with zero denominator");
  *this = from_i128(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { *this = from_big(value); }

Rational Rational::from_i128(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return {};
  const u128 g = gcd128(abs128(numerator), static_cast<u128>(denominator));
  if (g > 1) {
    numerator /= static_cast<i128>(g);
    denominator /= static_cast<i128>(g);
  }
  if (numerator >= kMin64 && numerator <= kMax64 && denominator <= kMax64) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
  }
  mpq_class q(mpz_from_i128(numerator), mpz_from_i128(denominator));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class value) {
  value.canonicalize();
  if (fits_i64(value.get_num()) && fits_i64(value.get_den())) {
    Rational r;
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid_integer(num_text, true)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos && !valid_integer(den_text, false)) {
    throw ParseError("malformed rational denominator in '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  mpz_class num(num_str, 10);
  mpz_class den(slash == std::string_view::npos ? std::string("1") : std::string(den_text), 10);
  if (den == 0) throw ParseError("rational literal '" + std::string(text) + "' has zero denominator");
  return from_big(mpq_class(num, den));
}

bool Rational::is_integer() const noexcept {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const noexcept {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (num_ == 0) return *this = rhs;
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t sum = 0;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum)) {
        num_ = sum;
        return *this;
      }
    }
    return *this = from_i128(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                             static_cast<i128>(den_) * rhs.den_);
  }
  return *this = from_big(to_mpq() + rhs.to_mpq());
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t diff = 0;
      if (!__builtin_sub_overflow(num_, rhs.num_, &diff)) {
        num_ = diff;
        return *this;
      }
    }
    return *this = from_i128(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                             static_cast<i128>(den_) * rhs.den_);
  }
  return *this = from_big(to_mpq() - rhs.to_mpq());
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0) return *this;
    if (rhs.num_ == 0) return *this = Rational{};
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t prod = 0;
      if (!__builtin_mul_overflow(num_, rhs.num_, &prod)) {
        num_ = prod;
        return *this;
      }
    }
    // Cross-cancel first so the product is already reduced.
    const std::uint64_t g1 = gcd64(abs64(num_), static_cast<std::uint64_t>(rhs.den_));
    const std::uint64_t g2 = gcd64(abs64(rhs.num_), static_cast<std::uint64_t>(den_));
    const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) *
                   static_cast<i128>(rhs.num_ / static_cast<std::int64_t>(g2));
    const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) *
                   static_cast<i128>(rhs.den_ / static_cast<std::int64_t>(g1));
    if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    return *this = from_i128(n, d);
  }
  return *this = from_big(to_mpq() * rhs.to_mpq());
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!rhs.big_) {
    Rational inverse;
    if (rhs.num_ < 0) {
      if (rhs.num_ == std::numeric_limits<std::int64_t>::min()) return *this *= from_big(mpq_class(1) / rhs.to_mpq());
      inverse.num_ = -rhs.den_;
      inverse.den_ = -rhs.num_;
    } else {
      inverse.num_ = rhs.den_;
      inverse.den_ = rhs.num_;
    }
    return *this *= inverse;
  }
  return *this = from_big(to_mpq() / rhs.to_mpq());
}

Rational operator-(const Rational& value) {
  if (!value.big_ && value.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r = value;
    r.num_ = -r.num_;
    return r;
  }
  return Rational::from_big(-value.to_mpq());
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;  // canonical form: small and big never coincide
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace bihom
