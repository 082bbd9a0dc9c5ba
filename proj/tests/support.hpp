#pragma once

// Conversions between library vectors and the oracle's machine integers.

#include <vector>

#include "a1c/intlattice.hpp"
#include "oracles.hpp"

namespace support {

inline a1c::Vec to_vec(const oracle::V& v) {
  a1c::Vec out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline oracle::V to_v(const a1c::Vec& v) {
  oracle::V out;
  for (const auto& x : v) out.push_back(static_cast<oracle::I64>(x));
  return out;
}

inline std::vector<a1c::Vec> to_vecs(const std::vector<oracle::V>& vs) {
  std::vector<a1c::Vec> out;
  for (const auto& v : vs) out.push_back(to_vec(v));
  return out;
}

inline std::vector<oracle::V> to_vs(const std::vector<a1c::Vec>& vs) {
  std::vector<oracle::V> out;
  for (const auto& v : vs) out.push_back(to_v(v));
  return out;
}

inline std::vector<a1c::Vec> vecs(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<a1c::Vec> out;
  for (const auto& r : rows) out.push_back(a1c::make_vec(r));
  return out;
}

}  // namespace support
