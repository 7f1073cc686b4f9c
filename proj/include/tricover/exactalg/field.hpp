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

namespace tricover {

// Every scalar domain K used by the generic containers specializes this
// template.  Required members:
//   using Context;                       data needed to make constants
//   static Context context(const K&);
//   static K from_int(const Context&, long);
//   static K from_rational(const Context&, const Rational&);
//   static bool is_zero(const K&);
//   static double magnitude(const K&);   pivot weight, 0/1 for exact types
//   static std::string str(const K&);
//   static constexpr bool exact;
template <class K>
struct FieldTraits;

template <class K>
using ContextOf = typename FieldTraits<K>::Context;

template <class K>
bool is_zero(const K& x) {
  return FieldTraits<K>::is_zero(x);
}

template <class K>
K zero_like(const K& x) {
  return FieldTraits<K>::from_int(FieldTraits<K>::context(x), 0);
}

template <class K>
K one_like(const K& x) {
  return FieldTraits<K>::from_int(FieldTraits<K>::context(x), 1);
}

template <class K>
K int_like(const K& x, long n) {
  return FieldTraits<K>::from_int(FieldTraits<K>::context(x), n);
}

template <class K>
K make_int(const ContextOf<K>& ctx, long n) {
  return FieldTraits<K>::from_int(ctx, n);
}

template <class K>
std::string to_str(const K& x) {
  return FieldTraits<K>::str(x);
}

struct NoContext {
  bool operator==(const NoContext&) const = default;
};

}  // namespace tricover
