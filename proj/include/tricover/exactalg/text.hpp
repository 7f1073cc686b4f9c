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
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tricover/exactalg/mpoly.hpp"
#include "tricover/exactalg/qpoly.hpp"

namespace tricover {

// Polynomial text grammar: integer or p/q coefficients, '^' powers, optional
// '*', parentheses, and variables drawn from {u,v,w,x,y,z,α,λ,t}.  "alpha"
// and "lambda" are accepted as ASCII spellings.  Variables outside `vars`
// are rejected.
MPoly<Rational> parse_mpoly(std::string_view text, const std::vector<std::string>& vars);

QPoly parse_poly(std::string_view text, const std::string& var);

}  // namespace tricover
