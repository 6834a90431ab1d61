#include "mzv/recipes.hpp"

#include <algorithm>
#include <bit>

#include "mzv/error.hpp"
#include "mzv/solver.hpp"

namespace mzv {

namespace {

std::uint32_t mod_p(std::int64_t x, std::uint32_t p) {
  const std::int64_t m = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 1, b = x % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Int{num/den}
bool divides(std::int64_t den, std::int64_t num) { return num % den == 0; }

ShuffleSet empty_set(const FieldCtx& F, std::int64_t a, std::int64_t b) {
  ShuffleSet s;
  s.p = F.p();
  s.n = F.n();
  s.a = a;
  s.b = b;
  return s;
}

void push(std::vector<ShufflePair>& out, std::int64_t c, std::int64_t aj, std::uint32_t p) {
  const std::uint32_t r = mod_p(c, p);
  if (r != 0) out.push_back({r, aj});
}

// sum over i >= 0 of c * S(b - phi(i,J), .) subject to b - phi(i,J) > a
void guarded(std::vector<ShufflePair>& out, const StructParams& sp, std::int64_t b, std::int64_t J, std::int64_t c) {
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t aj = b - sp.phi(i, J);
    if (aj <= sp.a) break;
    push(out, c, aj, sp.p);
  }
}

std::int64_t bit_length(std::int64_t x) { return x == 0 ? 0 : std::bit_width(static_cast<std::uint64_t>(x)); }

std::int64_t ones(std::int64_t x) { return std::popcount(static_cast<std::uint64_t>(x)); }

TaSet resolve_ta(const FieldCtx& F, std::int64_t a, TaSource src, std::string& tag) {
  if (src == TaSource::Auto) {
    if (F.is_prime()) {
      src = TaSource::Prime;
    } else if (F.q() == 4) {
      src = TaSource::Q4;
    } else if (F.p() == 2 && a >= 2 && a <= 4) {
      src = TaSource::Table;
    } else {
      throw Error(Errc::NotCovered, "no T_a rule for q = " + std::to_string(F.q()) + ", a = " + std::to_string(a));
    }
  }
  switch (src) {
    case TaSource::Prime: tag = "main"; return ta_prime(F, a);
    case TaSource::Q4: tag = "q4"; return ta_q4(F, a);
    default: tag = "main"; return ta_table_small_a(F, a);
  }
}

}  // namespace

StructParams struct_params(std::uint64_t q, std::uint32_t p, std::int64_t a) {
  if (a < 1) throw Error(Errc::InvalidIndex, "a must be >= 1");
  StructParams sp;
  sp.q = q;
  sp.p = p;
  sp.a = a;
  std::int64_t pm = 1;
  while (pm < a) {
    pm = checked_mul(pm, p);
    ++sp.m;
  }
  sp.r = checked_mul(static_cast<std::int64_t>(q - 1), pm);
  sp.j_max = (sp.r - a) / static_cast<std::int64_t>(q - 1);
  return sp;
}

StructParams struct_params(const FieldCtx& F, std::int64_t a) { return struct_params(F.q(), F.p(), a); }

std::int64_t t_of(std::uint32_t p, std::int64_t a) {
  if (a < 1) throw Error(Errc::InvalidIndex, "a must be >= 1");
  std::int64_t t = 1;
  for (std::uint32_t d : base_p_digits(a - 1, p)) {
    if (d <= p - 2) t = checked_mul(t, p - d);
  }
  return t;
}

std::uint32_t c_of(const FieldCtx& F, std::int64_t a, std::int64_t j) {
  if (!F.is_prime()) throw Error(Errc::NotApplicable, "c_{a,j} is defined for prime q only");
  const StructParams sp = struct_params(F, a);
  if (j < 0 || j > sp.j_max) throw Error(Errc::InvalidIndex, "j out of range 0..j_max");
  if (j == 0) return 1;
  const std::int64_t q1 = static_cast<std::int64_t>(F.q() - 1);
  const std::uint32_t bin = lucas_binom(sp.r - a, j * q1, F.p());
  if (bin == 0) throw Error(Errc::InvalidArgument, "C(r_a - a, j(q-1)) vanishes mod p");
  const std::int64_t ceil = (j * q1 + sp.j_max - 1) / sp.j_max;
  const std::uint32_t cm = mod_p(ceil, F.p());
  if (cm == 0) {
    throw Error(Errc::UndefinedCoefficient,
                "p divides ceil(j(q-1)/j_max) for a = " + std::to_string(a) + ", j = " + std::to_string(j));
  }
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(inv_mod(cm, F.p())) * bin % F.p());
}

TaSet ta_prime(const FieldCtx& F, std::int64_t a) {
  if (!F.is_prime()) throw Error(Errc::NotApplicable, "ta_prime needs prime q");
  const StructParams sp = struct_params(F, a);
  const std::int64_t q1 = static_cast<std::int64_t>(F.q() - 1);
  TaSet t;
  t.a = a;
  for (std::int64_t j = 0; j <= sp.j_max; ++j) {
    if (has_carry(j * q1, sp.phi(j), F.p())) continue;
    t.entries.push_back({c_of(F, a, j), sp.phi(j), j});
  }
  return t;
}

TaSet ta_q4(const FieldCtx& F, std::int64_t a) {
  if (F.q() != 4) throw Error(Errc::NotApplicable, "ta_q4 needs q = 4");
  const StructParams sp = struct_params(F, a);
  const std::int64_t want = 1 + ones(sp.r - a);
  TaSet t;
  t.a = a;
  std::vector<std::pair<std::int64_t, std::int64_t>> carried;  // (alpha_j, j)
  for (std::int64_t j = 0; j <= sp.j_max; ++j) {
    const std::int64_t x = 3 * j, y = sp.phi(j);
    if ((x & y) == 0) {
      t.entries.push_back({1, y, j});
    } else if (ones(x) + ones(y) == want) {
      carried.emplace_back(bit_length(x) + bit_length(y), j);
    }
  }
  std::int64_t best = -1;
  for (const auto& [alpha, j] : carried) best = std::max(best, alpha);
  for (const auto& [alpha, j] : carried) {
    if (alpha == best) t.entries.push_back({1, sp.phi(j), j});
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const TaEntry& x, const TaEntry& y) { return x.j < y.j; });
  return t;
}

TaSet ta_table_small_a(const FieldCtx& F, std::int64_t a) {
  if (F.p() != 2 || a < 2 || a > 4) throw Error(Errc::NotApplicable, "the table covers even q and a in {2,3,4}");
  const StructParams sp = struct_params(F, a);
  TaSet t;
  t.a = a;
  t.entries.push_back({1, sp.phi(0), 0});
  if (a == 3) t.entries.push_back({1, sp.phi(sp.j_max), sp.j_max});
  return t;
}

nlohmann::json to_json(const Prediction& p) {
  nlohmann::json j = to_json(p.predicted);
  j["recipe"] = p.recipe;
  j["initial_provenance"] = p.initial_provenance;
  j["warnings"] = p.warnings;
  return j;
}

Prediction predict_S(const Workbench& wb, std::int64_t a, std::int64_t b, TaSource ta, InitialSource init) {
  const FieldCtx& F = *wb.field();
  if (b < 1) throw Error(Errc::InvalidIndex, "b must be >= 1");
  const StructParams sp = struct_params(F, a);
  Prediction pr;
  const TaSet T = resolve_ta(F, a, ta, pr.recipe);
  if (a == 1) pr.warnings.push_back("experimental: a = 1");
  if (F.is_prime() && static_cast<std::int64_t>(T.entries.size()) != t_of(F.p(), a)) {
    pr.warnings.push_back("|T_a| = " + std::to_string(T.entries.size()) + " differs from t_a = " +
                          std::to_string(t_of(F.p(), a)));
  }
  const std::int64_t sigma = (b - 1) / sp.r;
  const std::int64_t bp = b - sigma * sp.r;
  pr.predicted = empty_set(F, a, b);
  auto& out = pr.predicted.pairs;
  for (std::int64_t i = 0; i < sigma; ++i) {
    for (const TaEntry& e : T.entries) out.push_back({e.c, b - (e.phi + i * sp.r)});
  }
  if (bp >= sp.r - static_cast<std::int64_t>(F.q()) + 2) {
    for (const TaEntry& e : T.entries) {
      if (e.j != 0) out.push_back({e.c, bp - e.phi});
    }
    pr.initial_provenance = "band";
  } else if (full_covered(F, a)) {
    const Prediction init_part = full_delta_small_a(F, a, bp);
    out.insert(out.end(), init_part.predicted.pairs.begin(), init_part.predicted.pairs.end());
    pr.initial_provenance = "full-formula";
  } else if (init == InitialSource::Auto) {
    try {
      const ShuffleSet s = solve_shuffle(wb, a, bp);
      out.insert(out.end(), s.pairs.begin(), s.pairs.end());
      pr.initial_provenance = "solver-assisted";
    } catch (const Error& e) {
      pr.initial_provenance = "unavailable";
      pr.warnings.push_back(std::string("initial values: ") + e.what());
    }
  } else {
    pr.initial_provenance = "unavailable";
  }
  pr.predicted.canonicalize();
  return pr;
}

bool full_covered(const FieldCtx& F, std::int64_t a) {
  if (F.p() == 2) return a >= 2 && a <= 4;
  return a == 2 || a == 3;
}

Prediction full_delta_small_a(const FieldCtx& F, std::int64_t a, std::int64_t b) {
  if (!full_covered(F, a)) {
    throw Error(Errc::NotCovered, "no full formula for q = " + std::to_string(F.q()) + ", a = " + std::to_string(a));
  }
  if (b < 1) throw Error(Errc::InvalidIndex, "b must be >= 1");
  const std::uint32_t p = F.p();
  const std::int64_t q = F.q(), q1 = q - 1;
  const StructParams sp = struct_params(F, a);
  const std::int64_t r = sp.r;
  Prediction pr;
  pr.recipe = "full";
  pr.initial_provenance = "full-formula";
  pr.predicted = empty_set(F, a, b);
  auto& out = pr.predicted.pairs;

  // the a = 3 tail shared by even q > 2 and odd p
  auto a3_tail = [&] {
    if (divides(q1, b + 1)) push(out, binom_exact((b + 1) / q1 + 1, 2), 2, p);
    if (divides(q1, b)) push(out, binom_exact(b / q1 + 2, 2) - 1, 3, p);
  };

  if (p == 2) {
    if (a == 2) {
      const std::int64_t sigma = (b - 1) / r;
      for (std::int64_t i = 0; i < sigma; ++i) push(out, 1, b - sp.phi(i, 0), p);
      if (divides(q1, b)) push(out, b / q1, 2, p);
    } else if (a == 3) {
      guarded(out, sp, b, 0, 1);
      guarded(out, sp, b, sp.j_max, 1);
      if (q == 2) {
        std::int64_t hits = 0;
        for (std::int64_t i = 1; i <= 2; ++i) hits += divides(r, b - i) ? 1 : 0;
        push(out, hits, 2, p);
        push(out, hits, 3, p);
      } else {
        a3_tail();
      }
    } else {
      guarded(out, sp, b, 0, 1);
      // the printed denominator "r_r" is read as r_4
      if (divides(r, b - std::max<std::int64_t>(q - 3, 1))) push(out, 1, 2, p);
      if (divides(r, b - 2 * q + 3)) push(out, 1, 3, p);
      std::int64_t hits = 0;
      for (std::int64_t i = 1; i <= 3; ++i) hits += divides(r, b - i * q1) ? 1 : 0;
      push(out, hits, 4, p);
    }
  } else if (a == 2) {
    for (std::int64_t j = 0; j <= static_cast<std::int64_t>(p) - 1; ++j) {
      guarded(out, sp, b, static_cast<std::int64_t>(p) - 1 - j, j + 2);
    }
    if (divides(q1, b)) push(out, b / q1, 2, p);
  } else {
    const std::int64_t P = p;
    const std::int64_t not3 = p == 3 ? 0 : 1;
    guarded(out, sp, b, 0, 1);
    if (not3) guarded(out, sp, b, 3, 1);
    for (std::int64_t j = 2; j <= (P - 3) / 2; ++j) {
      guarded(out, sp, b, j + 2, binom_exact(j + 1, 2));
      guarded(out, sp, b, P + 1 - j, binom_exact(j + 1, 2));
    }
    if (not3) guarded(out, sp, b, (P + 3) / 2, binom_exact((P + 1) / 2, 2));
    a3_tail();
  }
  pr.predicted.canonicalize();
  return pr;
}

LargeFamily parse_family(const std::string& name) {
  for (LargeFamily f : {LargeFamily::QnQnm1, LargeFamily::Qnp1Qn, LargeFamily::Qnm1Qnp1, LargeFamily::Qnm1nQnp1,
                        LargeFamily::Qnp1Shift}) {
    if (name == family_name(f)) return f;
  }
  throw Error(Errc::InvalidFamily, "unknown family '" + name + "'");
}

const char* family_name(LargeFamily f) noexcept {
  switch (f) {
    case LargeFamily::QnQnm1: return "qn,qn-1";
    case LargeFamily::Qnp1Qn: return "qn+1,qn";
    case LargeFamily::Qnm1Qnp1: return "qn-1,qn+1";
    case LargeFamily::Qnm1nQnp1: return "qn-1n,qn+1";
    case LargeFamily::Qnp1Shift: return "qn+1,qn+1-qi";
  }
  return "?";
}

Prediction large_index_delta(const FieldCtx& F, LargeFamily family, std::uint32_t n, std::uint32_t i) {
  const std::uint32_t p = F.p();
  const std::int64_t q = F.q(), q1 = q - 1;
  const std::int64_t minus = p - 1;
  const std::int64_t two_over_q = q == 2 ? 1 : 0;
  if (n < 1) throw Error(Errc::InvalidFamily, "n must be >= 1");
  const std::int64_t qn = ipow(q, n);
  Prediction pr;
  pr.recipe = "large-index";
  auto& out = pr.predicted.pairs;
  std::int64_t a = 0, b = 0;
  switch (family) {
    case LargeFamily::QnQnm1:
      a = qn;
      b = qn - 1;
      if (b < 1) throw Error(Errc::InvalidFamily, "q^n - 1 must be >= 1");
      push(out, minus, qn, p);
      break;
    case LargeFamily::Qnp1Qn:
      a = qn + 1;
      b = qn;
      push(out, two_over_q, 2, p);
      for (std::int64_t j = 1; j <= (qn - 1) / q1; ++j) push(out, minus, 3 + (j - 1) * q1, p);
      break;
    case LargeFamily::Qnm1Qnp1:
      a = qn - 1;
      b = qn + 1;
      if (a < 1) throw Error(Errc::InvalidFamily, "q^n - 1 must be >= 1");
      for (std::int64_t j = 1; j <= (qn + q - 2) / q1; ++j) push(out, minus, 2 + (j - 1) * q1, p);
      break;
    case LargeFamily::Qnm1nQnp1: {
      const std::int64_t qm = ipow(q, n - 1);
      a = qm;
      b = qn + 1;
      push(out, two_over_q, 2, p);
      // the second index is taken as q^{n-1} + q^n - 2 - (j-1)(q-1) so the weight is preserved
      for (std::int64_t j = 1; j <= (qm - 1) / q1; ++j) push(out, minus, 3 + (j - 1) * q1, p);
      break;
    }
    case LargeFamily::Qnp1Shift: {
      if (i > n) throw Error(Errc::InvalidFamily, "need 0 <= i <= n");
      const std::int64_t qi = ipow(q, i);
      a = qn + 1;
      b = qn + 1 - qi;
      push(out, two_over_q, 2, p);
      for (std::int64_t j = 1; j <= (qn - qi) / q1; ++j) push(out, minus, 3 + (j - 1) * q1, p);
      pr.warnings.push_back("trailing sum has an empty index range and contributes nothing");
      break;
    }
  }
  pr.predicted.p = p;
  pr.predicted.n = F.n();
  pr.predicted.a = a;
  pr.predicted.b = b;
  pr.predicted.canonicalize();
  return pr;
}

bool check_shift_conjecture(const Workbench& wb, std::int64_t a, std::uint32_t j) {
  const FieldCtx& F = *wb.field();
  if (F.q() != 4) throw Error(Errc::NotApplicable, "the shift conjecture is stated for q = 4");
  const std::int64_t b2 = a - ipow(4, j);
  if (a - 1 < 1 || b2 < 1) throw Error(Errc::InvalidIndex, "need a - 4^j >= 1");
  const ShuffleSet s1 = solve_shuffle(wb, a, a - 1);
  const ShuffleSet s2 = solve_shuffle(wb, a, b2);
  return s1.pairs == s2.pairs;
}

}  // namespace mzv
