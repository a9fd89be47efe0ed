#include "circles/rational.hpp"

#include <cctype>

#include "circles/error.hpp"

namespace circles {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational sqrt_floor(const Rational& value, unsigned bits) {
  if (sgn(value) <= 0) return Rational(0);
  // floor(sqrt(value) * 2^bits) = floor(sqrt(value * 4^bits))
  mpz_class scale = mpz_class(1) << (2 * bits);
  Rational scaled = value * scale;
  mpz_class floor_scaled = scaled.get_num() / scaled.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_scaled.get_mpz_t());
  Rational result(root, mpz_class(1) << bits);
  result.canonicalize();
  return result;
}

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  Rational c = value;
  c.canonicalize();
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace circles
