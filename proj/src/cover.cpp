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
#include "tricover/cover/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricover {

DegreeBoundsReport image_degree_bounds(long n, int genus_Y) {
  if (n < 1) throw std::invalid_argument("torsion order must be positive");
  DegreeBoundsReport r;
  r.n = n;
  r.genus_Y = genus_Y;
  // genus >= 2: 2 g_Y - 2 >= 2m + 3(m - 1).
  r.m_max_genus_ge2 = std::max(1L, (2L * genus_Y + 1) / 5);
  r.degree_genus_ge2 = (n + r.m_max_genus_ge2 - 1) / r.m_max_genus_ge2;
  r.exact_genus_ge2 = r.m_max_genus_ge2 == 1;
  // genus 1: 2 g_Y - 2 >= 3(m - 1).
  r.m_max_genus1 = std::max(1L, (2L * genus_Y + 1) / 3);
  r.degree_genus1 = (n + r.m_max_genus1 - 1) / r.m_max_genus1;
  // genus 0: the image is a line c3 u + c4 v = 1 and u has n zeros.
  r.genus0_bound = 2L * genus_Y + 1;
  r.genus0_possible = n <= r.genus0_bound;
  return r;
}

}  // namespace tricover
