//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_HASH_H_
#define PESTGRAPH_HASH_H_

#include <cstdint>
#include <initializer_list>
#include <span>

namespace pestgraph {

// FNV-1a 64 over a little-endian byte serialization. Each field is written as
// 8 bytes, so the hash of a tuple is independent of host endianness and of the
// integer width used by the caller.
class Fnv1a64 {
public:
  static constexpr std::uint64_t kOffsetBasis = 0xCBF29CE484222325ULL;
  static constexpr std::uint64_t kPrime = 0x00000100000001B3ULL;

  Fnv1a64 &add(std::int64_t value) {
    auto u = static_cast<std::uint64_t>(value);
    for (int b = 0; b < 8; ++b) {
      state_ ^= (u >> (8 * b)) & 0xFFU;
      state_ *= kPrime;
    }
    return *this;
  }

  Fnv1a64 &add_u64(std::uint64_t value) {
    return add(static_cast<std::int64_t>(value));
  }

  Fnv1a64 &add(std::initializer_list<std::int64_t> values) {
    for (auto v: values)
      add(v);
    return *this;
  }

  Fnv1a64 &add(std::span<const std::int64_t> values) {
    for (auto v: values)
      add(v);
    return *this;
  }

  std::uint64_t value() const { return state_; }

private:
  std::uint64_t state_ = kOffsetBasis;
};

inline std::uint64_t fnv1a(std::initializer_list<std::int64_t> fields) {
  return Fnv1a64().add(fields).value();
}

inline std::uint64_t fnv1a(std::span<const std::int64_t> fields) {
  return Fnv1a64().add(fields).value();
}

}  // namespace pestgraph

#endif  // PESTGRAPH_HASH_H_
