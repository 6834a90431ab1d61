#include "mzv/prover.hpp"

#include "mzv/solver.hpp"
#include "mzv/text.hpp"

namespace mzv {

const char* status_name(ProofResult::Status s) noexcept {
  switch (s) {
    case ProofResult::Status::Proved: return "proved";
    case ProofResult::Status::Refuted: return "refuted";
    case ProofResult::Status::NumericOnly: return "numeric_only";
  }
  return "?";
}

BiPoly identity_residual(const Workbench& wb, const ShuffleSet& s) {
  const Field& f = wb.field();
  const FieldCtx& F = *f;
  const HGCache& hg = wb.hg();
  const std::int64_t w = s.weight();
  struct Term {
    FieldElem c;
    BiPoly A, B;
  };
  std::vector<Term> terms;
  const BiPoly one = BiPoly::constant(RatFunc::one(f));
  terms.push_back({F.one(), hg.compute_H(s.a), hg.compute_H(s.b)});
  terms.push_back({F.neg(F.one()), hg.compute_H(w), one});
  for (const auto& pr : s.pairs) {
    terms.push_back({F.neg(F.from_int(pr.c)), hg.compute_H(pr.aj), hg.compute_G(w - pr.aj)});
  }
  Poly den = Poly::one(f);
  for (const auto& t : terms) den = lcm(den, t.A.den() * t.B.den());
  BiRows acc;
  for (const auto& t : terms) {
    if (t.A.is_zero() || t.B.is_zero()) continue;
    const BiRows prod = detail::mul_rows(F, t.A.rows_over(den.exact_div(t.B.den())), t.B.rows_over(t.B.den()));
    detail::add_rows_scalar(acc, prod, t.c);
  }
  for (auto& r : acc) {
    if (!r.field()) r = Poly(f);
  }
  return BiPoly::from_rows(den, acc);
}

ProofResult prove_identity(const Workbench& wb, const ShuffleSet& s, std::uint32_t check_depth) {
  ProofResult r;
  r.residual = BiPoly(wb.field());
  const std::int64_t q = wb.field()->q();
  bool all_even = true;
  for (const auto& pr : s.pairs) all_even = all_even && (s.weight() - pr.aj) % (q - 1) == 0;

  auto numeric = [&] {
    for (std::uint32_t d = 0; d <= check_depth; ++d) {
      r.checked_d.push_back(d);
      if (!verify_at_d(wb, s, d)) {
        r.failing_d = d;
        return false;
      }
    }
    return true;
  };

  if (!all_even) {
    r.status = numeric() ? ProofResult::Status::NumericOnly : ProofResult::Status::Refuted;
    return r;
  }
  r.residual = identity_residual(wb, s);
  const bool ok = numeric();
  if (r.residual.is_zero()) {
    if (!ok) {
      throw Error(Errc::VerificationFailed, "identity holds but a numeric check failed");
    }
    r.status = ProofResult::Status::Proved;
  } else {
    r.status = ProofResult::Status::Refuted;
  }
  return r;
}

nlohmann::json to_json(const ProofResult& r) {
  nlohmann::json j = {{"status", status_name(r.status)}, {"checked_d", r.checked_d}};
  if (r.failing_d) j["failing_d"] = *r.failing_d;
  if (r.status == ProofResult::Status::Refuted && !r.residual.is_zero()) j["residual"] = to_string(r.residual);
  return j;
}

}  // namespace mzv
