#pragma once

#include <random>
#include <vector>

#include "mzv/poly.hpp"

namespace mzv::testing {

inline Field field(std::uint32_t q) {
  switch (q) {
    case 4: return FieldCtx::create(2, 2);
    case 8: return FieldCtx::create(2, 3);
    case 9: return FieldCtx::create(3, 2);
    default: return FieldCtx::create(q, 1);
  }
}

inline Poly random_poly(const Field& f, std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> u(0, f->q() - 1);
  std::vector<FieldElem> c(len);
  for (auto& x : c) x = FieldElem{u(rng)};
  return Poly(f, std::move(c));
}

inline Poly P(const Field& f, std::initializer_list<std::int64_t> c) { return Poly::from_ints(f, c); }

}  // namespace mzv::testing
