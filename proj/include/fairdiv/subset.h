// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_SUBSET_H_
#define FAIRDIV_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fairdiv {

// A subset of goods {0, ..., m-1}, stored as a bit mask. Goods are small
// nonnegative integers; at most kMaxGoods of them fit in one subset.
class Subset {
 public:
  static constexpr int kMaxGoods = 64;

  constexpr Subset() = default;
  static constexpr Subset FromBits(std::uint64_t bits) { return Subset(bits); }

  static constexpr Subset All(int m) {
    return Subset(m >= kMaxGoods ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << m) - 1);
  }

  static constexpr Subset Single(int g) { return Subset(std::uint64_t{1} << g); }

  static Subset Of(std::initializer_list<int> goods) {
    Subset s;
    for (int g : goods) s = s.Plus(g);
    return s;
  }

  static Subset FromIndices(const std::vector<int>& goods) {
    Subset s;
    for (int g : goods) s = s.Plus(g);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int Count() const { return std::popcount(bits_); }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr bool Contains(int g) const { return (bits_ >> g) & 1; }
  constexpr Subset Plus(int g) const {
    return Subset(bits_ | (std::uint64_t{1} << g));
  }
  constexpr Subset Minus(int g) const {
    return Subset(bits_ & ~(std::uint64_t{1} << g));
  }
  constexpr bool SubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }

  // Lowest good in the subset; must not be empty.
  constexpr int Min() const { return std::countr_zero(bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator^(Subset a, Subset b) {
    return Subset(a.bits_ ^ b.bits_);
  }
  // Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(Subset a, Subset b) {
    return a.bits_ != b.bits_;
  }

  // Iterates over members in ascending order.
  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& other) const {
      return bits_ != other.bits_;
    }

   private:
    std::uint64_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> ToIndices() const {
    std::vector<int> out;
    out.reserve(Count());
    for (int g : *this) out.push_back(g);
    return out;
  }

  // Renders as "{0 2 5}"; the empty subset renders as "{}".
  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    for (int g : *this) {
      if (!first) out += ' ';
      out += std::to_string(g);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace fairdiv

#endif  // FAIRDIV_SUBSET_H_
