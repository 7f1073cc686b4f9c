/* Copyright (C) 2026 The tricover authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "tricover/exactalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tricover {

namespace {

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw std::invalid_argument("malformed rational: '" + t + "'");
  for (std::size_t k = i; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k])))
      throw std::invalid_argument("malformed rational: '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  mpz_class n = parse_integer(trim(s.substr(0, slash)));
  mpz_class d = parse_integer(trim(s.substr(slash + 1)));
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

bool rational_root(const Rational& x, unsigned k, Rational* root) {
  if (k == 0) return false;
  mpz_class n = x.num(), d = x.den(), rn, rd;
  bool neg = n < 0;
  if (neg) {
    if (k % 2 == 0) return false;
    n = -n;
  }
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
  if (root) *root = Rational(neg ? mpz_class(-rn) : rn, rd);
  return true;
}

mpz_class height(const Rational& x) {
  mpz_class n = abs(x.num());
  mpz_class d = x.den();
  return n > d ? n : d;
}

}  // namespace tricover
