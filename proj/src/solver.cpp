#include "mzv/solver.hpp"

#include <algorithm>

#include "mzv/linalg.hpp"
#include "mzv/prover.hpp"
#include "mzv/recipes.hpp"

namespace mzv {

namespace {

FieldElem elem(const FieldCtx& F, std::uint32_t c) { return F.from_int(c); }

ShuffleSet make_set(const FieldCtx& F, std::int64_t a, std::int64_t b, std::vector<ShufflePair> pairs) {
  ShuffleSet s;
  s.p = F.p();
  s.n = F.n();
  s.a = a;
  s.b = b;
  s.pairs = std::move(pairs);
  s.canonicalize();
  return s;
}

// Adds the F_p-coordinate equations of target = sum_j x_j * cols[j] (all over F_q[t]).
void add_poly_rows(FpSystem& sys, const FieldCtx& F, const std::vector<const Poly*>& cols, const Poly& target) {
  std::size_t len = target.size();
  for (const Poly* c : cols) len = std::max(len, c->size());
  std::vector<std::uint32_t> row(cols.size());
  for (std::size_t f = 0; f < len && !sys.full_rank(); ++f) {
    for (std::uint32_t i = 0; i < F.n(); ++i) {
      bool any = false;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        row[j] = F.coord(cols[j]->coeff(f), i);
        any = any || row[j] != 0;
      }
      const std::uint32_t rhs = F.coord(target.coeff(f), i);
      if (!any && rhs == 0) continue;
      sys.add_row(row, rhs);
      if (!sys.consistent()) return;
    }
  }
}

std::vector<ShufflePair> pairs_from(const std::vector<std::int64_t>& basis, const std::vector<std::uint32_t>& x) {
  std::vector<ShufflePair> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (x[j] != 0) out.push_back({x[j], basis[j]});
  }
  return out;
}

[[noreturn]] void throw_non_unique(const FieldCtx& F, std::int64_t a, std::int64_t b, const std::vector<std::int64_t>& basis,
                                   const FpSystem& sys) {
  const auto x = *sys.particular();
  const auto ker = sys.kernel();
  std::vector<ShuffleSet> sols{make_set(F, a, b, pairs_from(basis, x))};
  for (const auto& k : ker) {
    std::vector<std::uint32_t> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = (x[j] + k[j]) % F.p();
    sols.push_back(make_set(F, a, b, pairs_from(basis, y)));
  }
  throw NonUniqueError(std::move(sols), ker);
}

[[noreturn]] void throw_no_solution(std::int64_t a, std::int64_t b, const std::string& why) {
  throw Error(Errc::NoSolution, "no shuffle expansion for (" + std::to_string(a) + "," + std::to_string(b) + "): " + why);
}

ShuffleSet solve_auto(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt) {
  const FieldCtx& F = *wb.field();
  ShuffleSet s = make_set(F, a, b, principal_expansion(F, a, b));
  if (s.weight() <= opt.prove_limit) {
    const ProofResult pr = prove_identity(wb, s, std::min<std::uint32_t>(opt.d_checks, 3));
    if (pr.status != ProofResult::Status::Proved) {
      throw_no_solution(a, b, "the d = 1 expansion fails the identity in F_q(t)[T]");
    }
    s.certified = "bivariate";
    return s;
  }
  for (std::uint32_t d = 1; d <= opt.d_checks; ++d) {
    if (!verify_at_d(wb, s, d)) throw_no_solution(a, b, "the d = 1 expansion fails at d = " + std::to_string(d));
  }
  s.certified = "numeric";
  return s;
}

ShuffleSet solve_bivariate(const Workbench& wb, std::int64_t a, std::int64_t b) {
  const Field& f = wb.field();
  const FieldCtx& F = *f;
  const HGCache& hg = wb.hg();
  const std::int64_t w = a + b, q = F.q();
  // G_k only exists for even k, so the basis is the even one
  std::vector<std::int64_t> basis;
  for (std::int64_t k = 1; k < w; ++k) {
    if ((w - k) % (q - 1) == 0) basis.push_back(k);
  }
  const BiPoly Ha = hg.compute_H(a), Hb = hg.compute_H(b), Hw = hg.compute_H(w);
  std::vector<std::pair<BiPoly, BiPoly>> cols;
  Poly den = lcm(Ha.den() * Hb.den(), Hw.den());
  for (std::int64_t k : basis) {
    cols.emplace_back(hg.compute_H(k), hg.compute_G(w - k));
    den = lcm(den, cols.back().first.den() * cols.back().second.den());
  }
  auto product = [&](const BiPoly& A, const BiPoly& B) {
    return detail::mul_rows(F, A.rows_over(den.exact_div(B.den())), B.rows_over(B.den()));
  };
  BiRows target = product(Ha, Hb);
  detail::add_rows_scalar(target, Hw.rows_over(den), F.neg(F.one()));
  std::vector<BiRows> colrows;
  std::size_t nrows = target.size();
  for (const auto& [A, B] : cols) {
    colrows.push_back(product(A, B));
    nrows = std::max(nrows, colrows.back().size());
  }
  FpSystem sys(F.p(), basis.size());
  const Poly zero(f);
  for (std::size_t e = nrows; e-- > 0 && !sys.full_rank() && sys.consistent();) {
    std::vector<const Poly*> pc;
    for (const auto& r : colrows) pc.push_back(e < r.size() ? &r[e] : &zero);
    add_poly_rows(sys, F, pc, e < target.size() ? target[e] : zero);
  }
  if (!sys.consistent()) throw_no_solution(a, b, "the identity in F_q(t)[T] is inconsistent");
  if (!sys.full_rank()) throw_non_unique(F, a, b, basis, sys);
  ShuffleSet s = make_set(F, a, b, pairs_from(basis, *sys.particular()));
  if (!identity_residual(wb, s).is_zero()) throw_no_solution(a, b, "the identity in F_q(t)[T] is inconsistent");
  s.certified = "bivariate";
  return s;
}

ShuffleSet solve_per_d(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt) {
  const Field& f = wb.field();
  const FieldCtx& F = *f;
  const PowerSums& ps = wb.power_sums();
  const std::int64_t w = a + b, q = F.q();
  std::vector<std::int64_t> basis;
  for (std::int64_t k = 1; k < w; ++k) {
    if (!opt.restrict_even || (w - k) % (q - 1) == 0) basis.push_back(k);
  }
  FpSystem sys(F.p(), basis.size());
  for (std::uint32_t d : {2U, 1U}) {
    std::vector<Poly> colv;
    for (std::int64_t k : basis) colv.push_back(ps.scaled_sum(d, k) * ps.scaled_less(d, w - k));
    std::vector<const Poly*> cols;
    for (const auto& c : colv) cols.push_back(&c);
    add_poly_rows(sys, F, cols, ps.scaled_sum(d, a) * ps.scaled_sum(d, b) - ps.scaled_sum(d, w));
    if (!sys.consistent()) throw_no_solution(a, b, "inconsistent at d = " + std::to_string(d));
    if (sys.full_rank()) break;
  }
  if (!sys.full_rank()) throw_non_unique(F, a, b, basis, sys);
  ShuffleSet s = make_set(F, a, b, pairs_from(basis, *sys.particular()));
  for (std::uint32_t d = 1; d <= std::max<std::uint32_t>(opt.d_checks, 4); ++d) {
    if (!verify_at_d(wb, s, d)) throw_no_solution(a, b, "the d = 2 solution fails at d = " + std::to_string(d));
  }
  s.certified = "numeric";
  return s;
}

}  // namespace

const char* method_name(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::Auto: return "auto";
    case SolveMethod::Bivariate: return "bivariate";
    case SolveMethod::PerD: return "per-d";
  }
  return "?";
}

std::vector<ShufflePair> principal_expansion(const FieldCtx& F, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidIndex, "a and b must be positive");
  const std::uint32_t p = F.p();
  const std::int64_t q1 = static_cast<std::int64_t>(F.q()) - 1;
  // [x^n] R_s = -(-1)^n C(s+n-1, n) when (q-1) | s+n
  auto R = [&](std::int64_t s, std::int64_t n) -> std::uint32_t {
    if (n < 0 || (s + n) % q1 != 0) return 0;
    const std::uint32_t v = lucas_binom(s + n - 1, n, p);
    return n % 2 == 0 ? (p - v) % p : v;
  };
  std::vector<ShufflePair> out;
  for (std::int64_t k = 1; k <= std::max(a, b); ++k) {
    const std::uint32_t c = (R(b, a - k) + R(a, b - k)) % p;
    if (c != 0) out.push_back({c, k});
  }
  return out;
}

bool verify_at_d(const Workbench& wb, const ShuffleSet& s, std::uint32_t d) {
  const PowerSums& ps = wb.power_sums();
  const FieldCtx& F = *wb.field();
  const std::int64_t w = s.weight();
  Poly lhs = ps.scaled_sum(d, s.a) * ps.scaled_sum(d, s.b) - ps.scaled_sum(d, w);
  Poly rhs(wb.field());
  for (const auto& pr : s.pairs) {
    if (d == 0) break;
    rhs.add_scaled(ps.scaled_sum(d, pr.aj) * ps.scaled_less(d, w - pr.aj), elem(F, pr.c));
  }
  return lhs == rhs;
}

ShuffleSet solve_shuffle(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidIndex, "a and b must be positive");
  checked_add(a, b);
  switch (opt.method) {
    case SolveMethod::Auto: return solve_auto(wb, a, b, opt);
    case SolveMethod::Bivariate: return solve_bivariate(wb, a, b);
    case SolveMethod::PerD: return solve_per_d(wb, a, b, opt);
  }
  throw Error(Errc::InvalidArgument, "unknown solve method");
}

std::vector<ShufflePair> extract_T(const Workbench& wb, std::int64_t a, std::int64_t b, const SolveOptions& opt) {
  const StructParams sp = struct_params(*wb.field(), a);
  if (b <= sp.r) throw Error(Errc::InvalidArgument, "extract_T needs b > r_a");
  const ShuffleSet hi = solve_shuffle(wb, a, b, opt);
  const ShuffleSet lo = solve_shuffle(wb, a, b - sp.r, opt);
  std::vector<ShufflePair> out;
  for (const auto& pr : hi.pairs) {
    if (std::find(lo.pairs.begin(), lo.pairs.end(), pr) == lo.pairs.end()) out.push_back(pr);
  }
  return out;
}

}  // namespace mzv
