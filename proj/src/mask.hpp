// Copyright 2026 The rolebind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROLEBIND_MASK_HPP
#define ROLEBIND_MASK_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rolebind {

/// 256-bit role bitmask, one bit per role-table index. The width mirrors the
/// EVM word size used by the generated contracts; role tables are capped at
/// 256 entries so a mask always fits.
class Mask256 {
 public:
  constexpr Mask256() = default;

  static Mask256 bit(unsigned index);

  bool test(unsigned index) const;
  Mask256& set(unsigned index);
  bool none() const;
  unsigned popcount() const;

  /// True iff every bit of `other` is also set in *this.
  bool contains(const Mask256& other) const;

  std::vector<unsigned> bits() const;

  std::string to_decimal() const;
  static std::optional<Mask256> from_decimal(std::string_view text);

  friend Mask256 operator&(const Mask256& a, const Mask256& b);
  friend Mask256 operator|(const Mask256& a, const Mask256& b);
  friend Mask256 operator~(const Mask256& a);
  Mask256& operator|=(const Mask256& o);
  Mask256& operator&=(const Mask256& o);

  bool operator==(const Mask256& o) const { return words_ == o.words_; }
  /// Numeric order (most significant word first).
  bool operator<(const Mask256& o) const;

 private:
  std::array<std::uint64_t, 4> words_{};  // words_[0] is least significant
};

}  // namespace rolebind

#endif  // ROLEBIND_MASK_HPP
