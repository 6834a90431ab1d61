#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mzv {

struct ShufflePair {
  std::uint32_t c = 0;   // in [1, p)
  std::int64_t aj = 0;   // first index of S_d(aj, w - aj)
  friend bool operator==(const ShufflePair&, const ShufflePair&) = default;
};

/// The set S(a,b): Delta_d(a,b) = sum c_j S_d(a_j, a+b-a_j).
struct ShuffleSet {
  std::uint32_t p = 2, n = 1;
  std::int64_t a = 1, b = 1;
  std::vector<ShufflePair> pairs;
  /// "bivariate", "numeric" or empty when not certified.
  std::string certified;

  std::uint64_t q() const;
  std::int64_t weight() const { return a + b; }
  /// Merges repeated a_j (adding coefficients mod p), drops zeros, sorts by a_j.
  void canonicalize();
  /// Throws InvalidArgument when an invariant is broken.
  void validate() const;
  /// Same pairs (order-insensitive after canonicalization), a, b and field.
  bool same_relation(const ShuffleSet& o) const;
};

nlohmann::json to_json(const ShuffleSet& s);
ShuffleSet shuffle_from_json(const nlohmann::json& j);

struct TaEntry {
  std::uint32_t c = 1;
  std::int64_t phi = 0;
  std::int64_t j = 0;
  friend bool operator==(const TaEntry&, const TaEntry&) = default;
};

/// The increment set T_a: pairs (c, phi(j)) sorted by j.
struct TaSet {
  std::int64_t a = 1;
  std::vector<TaEntry> entries;
  friend bool operator==(const TaSet&, const TaSet&) = default;
};

nlohmann::json to_json(const TaSet& t);

}  // namespace mzv
