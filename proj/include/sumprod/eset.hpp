// Copyright 2026 The sumprod-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUMPROD_ESET_HPP_
#define SUMPROD_ESET_HPP_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/field.hpp"

namespace sumprod {

// A finite subset of a field. Codes are kept strictly increasing; a byte mask
// of size q answers membership in O(1) and is built on first use (only for
// q <= 2^24, larger fields fall back to binary search).
class ESet {
 public:
  ESet(FieldPtr field, std::vector<std::uint32_t> codes);
  ESet(FieldPtr field, std::initializer_list<std::uint32_t> codes)
      : ESet(std::move(field), std::vector<std::uint32_t>(codes)) {}
  ESet(FieldPtr field, std::span<const Elem> elems);

  static ESet Empty(FieldPtr field) { return ESet(std::move(field), {}); }
  // Parses "1,2,4". Whitespace around codes is ignored; "" is the empty set.
  static ESet Parse(FieldPtr field, std::string_view text);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  std::span<const std::uint32_t> codes() const { return codes_; }
  Elem operator[](std::size_t i) const { return Elem{codes_[i]}; }

  bool Contains(Elem x) const;
  std::string ToString() const;

  friend bool operator==(const ESet& a, const ESet& b) {
    return a.field_ == b.field_ && a.codes_ == b.codes_;
  }

 private:
  struct MaskCache;

  FieldPtr field_;
  std::vector<std::uint32_t> codes_;
  std::shared_ptr<MaskCache> mask_;
};

// Throws kFieldMismatch unless both sets live in the same field object.
void RequireSameField(const ESet& a, const ESet& b);

// Subfield of order p^nu: the fixed points of x -> x^{p^nu}.
ESet Subfield(const FieldPtr& field, int nu);

}  // namespace sumprod

#endif  // SUMPROD_ESET_HPP_
