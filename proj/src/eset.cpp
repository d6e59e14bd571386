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

#include "sumprod/eset.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

namespace sumprod {

struct ESet::MaskCache {
  std::once_flag once;
  std::vector<std::uint8_t> mask;
};

namespace {
constexpr std::uint32_t kMaskLimit = 1u << 24;
}

ESet::ESet(FieldPtr field, std::vector<std::uint32_t> codes)
    : field_(std::move(field)),
      codes_(std::move(codes)),
      mask_(std::make_shared<MaskCache>()) {
  Require(field_ != nullptr, Errc::kPrecondition, "set without a field");
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  if (!codes_.empty() && codes_.back() >= field_->order()) {
    Fail(Errc::kInvalidElement,
         "element code " + std::to_string(codes_.back()) + " outside [0, q)");
  }
}

ESet::ESet(FieldPtr field, std::span<const Elem> elems)
    : ESet(std::move(field), [&] {
        std::vector<std::uint32_t> codes;
        codes.reserve(elems.size());
        for (Elem e : elems) codes.push_back(e.code);
        return codes;
      }()) {}

ESet ESet::Parse(FieldPtr field, std::string_view text) {
  std::vector<std::uint32_t> codes;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (item.empty()) {
      if (end == text.size() && codes.empty() && pos == 0) break;
      Fail(Errc::kInvalidElement, "empty item in set literal");
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      Fail(Errc::kInvalidElement,
           "bad element code '" + std::string(item) + "'");
    }
    codes.push_back(field->FromCode(v).code);
    pos = end + 1;
  }
  return ESet(std::move(field), std::move(codes));
}

bool ESet::Contains(Elem x) const {
  if (x.code >= field_->order()) return false;
  if (field_->order() > kMaskLimit) {
    return std::binary_search(codes_.begin(), codes_.end(), x.code);
  }
  std::call_once(mask_->once, [this] {
    mask_->mask.assign(field_->order(), 0);
    for (std::uint32_t c : codes_) mask_->mask[c] = 1;
  });
  return mask_->mask[x.code] != 0;
}

std::string ESet::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(codes_[i]);
  }
  return out;
}

void RequireSameField(const ESet& a, const ESet& b) {
  if (a.field_ptr() != b.field_ptr()) {
    Fail(Errc::kFieldMismatch, "sets belong to different fields");
  }
}

ESet Subfield(const FieldPtr& field, int nu) {
  const int m = field->degree();
  if (nu < 1 || nu > m || m % nu != 0) {
    Fail(Errc::kNotDivisor, "subfield degree must divide the field degree");
  }
  if (nu == m) {
    std::vector<std::uint32_t> all(field->order());
    for (std::uint32_t c = 0; c < field->order(); ++c) all[c] = c;
    return ESet(field, std::move(all));
  }
  // F_{p^nu}^* is the subgroup of order p^nu - 1.
  std::uint64_t sub_order = 1;
  for (int i = 0; i < nu; ++i) sub_order *= field->characteristic();
  const std::uint64_t step = (field->order() - 1) / (sub_order - 1);
  const Elem h = field->Pow(field->generator(), step);
  std::vector<std::uint32_t> codes{0};
  Elem x = field->One();
  for (std::uint64_t i = 0; i + 1 < sub_order; ++i) {
    codes.push_back(x.code);
    x = field->Mul(x, h);
  }
  return ESet(field, std::move(codes));
}

}  // namespace sumprod
