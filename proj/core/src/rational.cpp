#include "qcf/rational.hpp"

#include <cctype>

#include "qcf/error.hpp"

namespace qcf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1) / v_, Canonical{});
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  // U+2212 minus sign
  for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  const std::string_view v(s);
  std::string_view body = v;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  mpq_class out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    const mpz_class den(std::string(d), 10);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    out = mpq_class(mpz_class(std::string(n), 10), den);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorKind::Parse, "bad decimal '" + s + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const std::string digits = std::string(ip.empty() ? "0" : ip) + std::string(fp);
    out = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
    out = mpq_class(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  if (neg) out = -out;
  return Rat(out);
}

}  // namespace qcf
