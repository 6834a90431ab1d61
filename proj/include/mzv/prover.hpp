#pragma once

#include <optional>
#include <vector>

#include "mzv/shuffle.hpp"
#include "mzv/workbench.hpp"

namespace mzv {

struct ProofResult {
  enum class Status { Proved, Refuted, NumericOnly };
  Status status = Status::NumericOnly;
  /// H_a H_b - H_{a+b} - sum c_j H_{a_j} G_{w-a_j}; zero unless refuted
  /// through the bivariate identity.
  BiPoly residual;
  /// Smallest checked d where the relation fails numerically, if any.
  std::optional<std::uint32_t> failing_d;
  std::vector<std::uint32_t> checked_d;
};

const char* status_name(ProofResult::Status s) noexcept;

/// Certifies s for every d through the identity in F_q(t)[T]. Relations with
/// a non-even w - a_j cannot be written with G (it does not exist there) and
/// fall back to numeric checks, so they are at best NumericOnly.
ProofResult prove_identity(const Workbench& wb, const ShuffleSet& s, std::uint32_t check_depth = 3);

/// The residual of the bivariate identity alone.
BiPoly identity_residual(const Workbench& wb, const ShuffleSet& s);

nlohmann::json to_json(const ProofResult& r);

}  // namespace mzv
