#pragma once

#include <vector>

#include "mzv/shuffle.hpp"
#include "mzv/workbench.hpp"

namespace mzv {

enum class SolveMethod {
  /// Principal-part expansion at d = 1, certified by the bivariate identity
  /// when w <= prove_limit and by exact checks at d = 1..d_checks otherwise.
  Auto,
  /// Linear system from the bivariate identity over the even basis.
  Bivariate,
  /// Linear system at d = 2 (d = 1 rows added if rank-deficient), confirmed at d = 3, 4.
  PerD,
};

struct SolveOptions {
  std::uint32_t d_checks = 3;
  bool restrict_even = false;
  SolveMethod method = SolveMethod::Auto;
  std::int64_t prove_limit = 96;
};

/// Thrown when the expansion is not unique; carries every solution found
/// (a particular one plus one per kernel vector) and the kernel.
class NonUniqueError : public Error {
 public:
  NonUniqueError(std::vector<ShuffleSet> solutions, std::vector<std::vector<std::uint32_t>> kernel)
      : Error(Errc::NonUniqueSolution, "shuffle expansion is not unique"),
        solutions_(std::move(solutions)),
        kernel_(std::move(kernel)) {}
  const std::vector<ShuffleSet>& solutions() const noexcept { return solutions_; }
  const std::vector<std::vector<std::uint32_t>>& kernel() const noexcept { return kernel_; }

 private:
  std::vector<ShuffleSet> solutions_;
  std::vector<std::vector<std::uint32_t>> kernel_;
};

/// Finds and certifies S(a,b). Throws NoSolution when no expansion exists.
ShuffleSet solve_shuffle(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt = {});

/// Delta_d(a,b) == sum c_j S_d(a_j, w - a_j), checked exactly on the scaled
/// polynomials l_d^w (both sides).
bool verify_at_d(const Workbench& wb, const ShuffleSet& s, std::uint32_t d);

/// The unique candidate from the poles of Delta_1(a,b) at t = theta:
/// c_k = [x^{a-k}] R_b + [x^{b-k}] R_a with R_s(x) = sum_{c != 0} (x - c)^{-s}.
std::vector<ShufflePair> principal_expansion(const FieldCtx& F, std::int64_t a, std::int64_t b);

/// S(a,b) \ S(a, b - r_a), each set from its own solver call.
std::vector<ShufflePair> extract_T(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt = {});

const char* method_name(SolveMethod m) noexcept;

}  // namespace mzv
