#include "nctorus/integer.hpp"

#include <cctype>
#include <stdexcept>

#include "nctorus/errors.hpp"

namespace nctorus {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const std::string_view raw = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) throw InvalidInput("malformed integer '" + std::string(raw) + "'");
  Integer value(std::string(text), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const std::string_view raw = text;
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    try {
      return Rational(parse_integer(text));
    } catch (const InvalidInput&) {
      throw InvalidInput("malformed rational '" + std::string(raw) + "'");
    }
  }
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text) || trim(num_text) != num_text || num_text.empty()) {
    throw InvalidInput("malformed rational '" + std::string(raw) + "'");
  }
  Integer num;
  try {
    num = parse_integer(num_text);
  } catch (const InvalidInput&) {
    throw InvalidInput("malformed rational '" + std::string(raw) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) throw InvalidInput("malformed rational '" + std::string(raw) + "': zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& value) {
  return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

Integer exact_sqrt(const Integer& value) {
  if (!is_perfect_square(value)) {
    throw std::logic_error("expected a perfect square, got " + value.get_str());
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace nctorus
