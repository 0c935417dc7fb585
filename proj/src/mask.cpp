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

#include "mask.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace rolebind {

Mask256 Mask256::bit(unsigned index) {
  assert(index < 256);
  Mask256 m;
  m.words_[index / 64] = std::uint64_t{1} << (index % 64);
  return m;
}

bool Mask256::test(unsigned index) const {
  if (index >= 256) return false;
  return (words_[index / 64] >> (index % 64)) & 1u;
}

Mask256& Mask256::set(unsigned index) {
  assert(index < 256);
  words_[index / 64] |= std::uint64_t{1} << (index % 64);
  return *this;
}

bool Mask256::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

unsigned Mask256::popcount() const {
  unsigned n = 0;
  for (auto w : words_) n += static_cast<unsigned>(std::popcount(w));
  return n;
}

bool Mask256::contains(const Mask256& other) const {
  for (int i = 0; i < 4; ++i)
    if ((words_[i] & other.words_[i]) != other.words_[i]) return false;
  return true;
}

std::vector<unsigned> Mask256::bits() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 256; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string Mask256::to_decimal() const {
  std::array<std::uint64_t, 4> v = words_;
  std::string digits;
  auto nonzero = [&] {
    return v[0] || v[1] || v[2] || v[3];
  };
  if (!nonzero()) return "0";
  while (nonzero()) {
    // divide v by 10, collect remainder
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
      unsigned __int128 cur = (rem << 64) | v[i];
      v[i] = static_cast<std::uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<Mask256> Mask256::from_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Mask256 out;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    // out = out * 10 + digit, with overflow check
    unsigned __int128 carry = static_cast<unsigned>(c - '0');
    for (int i = 0; i < 4; ++i) {
      unsigned __int128 cur = static_cast<unsigned __int128>(out.words_[i]) * 10 + carry;
      out.words_[i] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    if (carry != 0) return std::nullopt;
  }
  return out;
}

Mask256 operator&(const Mask256& a, const Mask256& b) {
  Mask256 r;
  for (int i = 0; i < 4; ++i) r.words_[i] = a.words_[i] & b.words_[i];
  return r;
}

Mask256 operator|(const Mask256& a, const Mask256& b) {
  Mask256 r;
  for (int i = 0; i < 4; ++i) r.words_[i] = a.words_[i] | b.words_[i];
  return r;
}

Mask256 operator~(const Mask256& a) {
  Mask256 r;
  for (int i = 0; i < 4; ++i) r.words_[i] = ~a.words_[i];
  return r;
}

Mask256& Mask256::operator|=(const Mask256& o) {
  for (int i = 0; i < 4; ++i) words_[i] |= o.words_[i];
  return *this;
}

Mask256& Mask256::operator&=(const Mask256& o) {
  for (int i = 0; i < 4; ++i) words_[i] &= o.words_[i];
  return *this;
}

bool Mask256::operator<(const Mask256& o) const {
  for (int i = 3; i >= 0; --i) {
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
  }
  return false;
}

}  // namespace rolebind
