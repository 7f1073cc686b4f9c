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
#include "tricover/exactalg/text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tricover {

namespace {

const std::vector<std::string> kKnownVars = {"u", "v", "w", "x", "y", "z", "α", "λ", "t"};

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly<Rational> run() {
    MPoly<Rational> r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  using MP = MPoly<Rational>;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  int nv() const { return static_cast<int>(vars_.size()); }

  MP expr() {
    MP acc(NoContext{}, nv());
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      MP t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == '*' || match_var(nullptr);
  }

  MP term() {
    MP acc = MP::constant(NoContext{}, nv(), 1);
    bool any = false;
    while (starts_factor()) {
      if (peek('*')) {
        if (!any) fail("dangling '*'");
        ++pos_;
      }
      acc = acc * factor();
      any = true;
    }
    if (!any) fail("expected a term");
    return acc;
  }

  mpz_class integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(b, pos_ - b)), 10);
  }

  // Longest known variable spelled at the cursor; returns its length.
  std::size_t match_var(std::string* name) {
    static const std::vector<std::pair<std::string, std::string>> spellings = {
        {"alpha", "α"}, {"lambda", "λ"}, {"α", "α"}, {"λ", "λ"}, {"u", "u"}, {"v", "v"},
        {"w", "w"},     {"x", "x"},      {"y", "y"}, {"z", "z"}, {"t", "t"}};
    for (const auto& [sp, canon] : spellings) {
      if (s_.substr(pos_, sp.size()) == sp) {
        if (name) *name = canon;
        return sp.size();
      }
    }
    return 0;
  }

  MP primary() {
    skip();
    if (peek('(')) {
      ++pos_;
      MP e = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return e;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mpz_class n = integer(), d = 1;
      if (peek('/')) {
        ++pos_;
        d = integer();
        if (d == 0) fail("zero denominator");
      }
      return MP::constant(NoContext{}, nv(), Rational(n, d));
    }
    std::string name;
    std::size_t len = match_var(&name);
    if (len == 0) fail("unknown symbol");
    pos_ += len;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) fail("variable " + name + " not allowed here");
    return MP::var(NoContext{}, nv(), static_cast<int>(it - vars_.begin()));
  }

  MP factor() {
    MP b = primary();
    if (peek('^')) {
      ++pos_;
      mpz_class e = integer();
      if (e > 4096) fail("exponent too large");
      return pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly<Rational> parse_mpoly(std::string_view text, const std::vector<std::string>& vars) {
  std::vector<std::string> canon(vars);
  for (auto& v : canon) {
    if (v == "alpha") v = "α";
    if (v == "lambda") v = "λ";
    if (std::find(kKnownVars.begin(), kKnownVars.end(), v) == kKnownVars.end())
      throw std::invalid_argument("unsupported variable name " + v);
  }
  return Parser(text, canon).run();
}

QPoly parse_poly(std::string_view text, const std::string& var) {
  return parse_mpoly(text, {var}).to_univariate(0);
}

}  // namespace tricover
