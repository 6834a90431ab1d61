#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzv/shuffle.hpp"
#include "mzv/workbench.hpp"

namespace mzv {

/// Recursion data for a: r_a = (q-1) p^m with m minimal such that a <= p^m,
/// phi(i,j) = r_a - a - j(q-1) + i r_a, j_max = floor((r_a - a)/(q-1)).
struct StructParams {
  std::uint64_t q = 2;
  std::uint32_t p = 2;
  std::int64_t a = 1;
  std::uint32_t m = 0;
  std::int64_t r = 1;
  std::int64_t j_max = 0;

  std::int64_t phi(std::int64_t i, std::int64_t j) const { return r - a - j * static_cast<std::int64_t>(q - 1) + i * r; }
  std::int64_t phi(std::int64_t j) const { return phi(0, j); }
};

StructParams struct_params(std::uint64_t q, std::uint32_t p, std::int64_t a);
StructParams struct_params(const FieldCtx& F, std::int64_t a);

/// t_a = prod_{j=0}^{p-2} (p-j)^{mu_j}, mu_j the number of digits j of a-1 in base p.
std::int64_t t_of(std::uint32_t p, std::int64_t a);

/// c_{a,j} for prime q. Throws NotApplicable for prime powers, InvalidIndex
/// outside 0..j_max, InvalidArgument when C(r_a - a, j(q-1)) vanishes mod p,
/// and UndefinedCoefficient when p divides ceil(j(q-1)/j_max).
std::uint32_t c_of(const FieldCtx& F, std::int64_t a, std::int64_t j);

/// T_a for prime q: the carry-free j with coefficient c_{a,j}.
TaSet ta_prime(const FieldCtx& F, std::int64_t a);
/// T_a for q = 4 (coefficients 1).
TaSet ta_q4(const FieldCtx& F, std::int64_t a);
/// The tabulated T_a for even q and a in {2,3,4}.
TaSet ta_table_small_a(const FieldCtx& F, std::int64_t a);

enum class TaSource { Auto, Prime, Q4, Table };
enum class InitialSource {
  /// band, then full formula, then solver
  Auto,
  /// band, then full formula; otherwise the prediction is partial
  NoSolver,
};

struct Prediction {
  /// main | full-2.1 .. full-2.6 | large-index | q4
  std::string recipe;
  ShuffleSet predicted;
  /// band | full-formula | solver-assisted | unavailable | none (no initial part needed)
  std::string initial_provenance = "none";
  std::vector<std::string> warnings;
  bool partial() const { return initial_provenance == "unavailable"; }
};

nlohmann::json to_json(const Prediction& p);

/// The recursion S(a,b) = S(a,b') plus the T_a image for i = 0..sigma-1,
/// b = r_a sigma + b', 0 < b' <= r_a.
Prediction predict_S(const Workbench& wb, std::int64_t a, std::int64_t b, TaSource ta = TaSource::Auto,
                     InitialSource init = InitialSource::Auto);

/// Whether full_delta_small_a covers (q, a).
bool full_covered(const FieldCtx& F, std::int64_t a);
/// The closed-form conjectures for small a; throws NotCovered.
Prediction full_delta_small_a(const FieldCtx& F, std::int64_t a, std::int64_t b);

enum class LargeFamily {
  QnQnm1,       // (q^n, q^n - 1)
  Qnp1Qn,       // (q^n + 1, q^n)
  Qnm1Qnp1,     // (q^n - 1, q^n + 1)
  Qnm1nQnp1,    // (q^{n-1}, q^n + 1)
  Qnp1Shift,    // (q^n + 1, q^n + 1 - q^i), 0 <= i <= n
};

LargeFamily parse_family(const std::string& name);
const char* family_name(LargeFamily f) noexcept;

/// The large-index formulas; throws InvalidFamily on invalid parameters.
Prediction large_index_delta(const FieldCtx& F, LargeFamily family, std::uint32_t n, std::uint32_t i = 0);

/// S(a, a-1) == S(a, a-4^j) for q = 4, both from the solver.
bool check_shift_conjecture(const Workbench& wb, std::int64_t a, std::uint32_t j);

}  // namespace mzv
