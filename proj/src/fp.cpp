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
#include "tricover/exactalg/fp.hpp"

#include <stdexcept>

namespace tricover {

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t Fp::check_prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("prime exceeds 2^31");
  if (!is_prime_u32(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return static_cast<std::uint32_t>(p);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r(p_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero");
  long long a = v_, m = p_, x0 = 1, x1 = 0;
  while (m) {
    long long q = a / m;
    long long t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(p_, x0);
}

Fp Fp::from_rational(std::uint32_t p, const Rational& q) {
  mpz_class n = q.num() % p, d = q.den() % p;
  if (d == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  return Fp(p, n.get_si()) / Fp(p, d.get_si());
}

}  // namespace tricover
