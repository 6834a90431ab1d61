#include "mzv/hg.hpp"

#include <fstream>
#include <sstream>

#include "mzv/text.hpp"

namespace mzv {

namespace {

constexpr std::string_view kCacheMagic = "mzv-hg-cache v1";

struct Monomial {
  std::uint64_t T_exp, t_exp;
  bool negative;
};

// Expansion of B_i(T) = prod_{s=1}^{i} (T^{q^s} - t^{q^i}); every term is a monomial.
std::vector<Monomial> b_terms(std::uint64_t q, std::uint32_t i) {
  std::uint64_t qi = 1;
  for (std::uint32_t s = 0; s < i; ++s) qi *= q;
  std::vector<Monomial> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i); ++mask) {
    std::uint64_t Te = 0, qs = q;
    std::uint32_t missing = 0;
    for (std::uint32_t s = 1; s <= i; ++s, qs *= q) {
      if (mask >> (s - 1) & 1) {
        Te += qs;
      } else {
        ++missing;
      }
    }
    out.push_back({Te, missing * qi, missing % 2 == 1});
  }
  return out;
}

std::vector<std::uint64_t> q_powers_upto(std::uint64_t q, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= m; x *= q) out.push_back(x);
  return out;
}

}  // namespace

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

HGCache::HGCache(const PowerSums& ps, std::filesystem::path cache_dir) : ps_(ps), dir_(std::move(cache_dir)) {}

HGCache::Stats HGCache::stats() const {
  std::lock_guard lk(mu_);
  return stats_;
}

void HGCache::extend_h_rows(std::size_t m_target) const {
  const Field& f = field();
  const std::uint64_t q = f->q();
  const CarlitzCache& C = ps_.carlitz();
  if (h_rows_.empty()) h_rows_.push_back({Poly::one(f), BiRows{Poly::one(f)}});
  while (h_rows_.size() <= m_target) {
    const std::uint64_t m = h_rows_.size();
    const auto qp = q_powers_upto(q, m);  // q^0 .. q^i <= m
    // Den_m = prod_{j>=1} D_j^{floor(m/q^j)}
    Poly den = Poly::one(f);
    for (std::size_t j = 1; j < qp.size(); ++j) den *= C.D(static_cast<std::uint32_t>(j)).pow(m / qp[j]);
    BiRows acc;
    for (std::size_t i = 0; i < qp.size(); ++i) {
      const std::uint64_t prev = m - qp[i];
      Poly F = Poly::one(f);
      for (std::size_t j = 1; j < qp.size(); ++j) {
        std::uint64_t ex = m / qp[j] - prev / qp[j] - (j == i ? 1 : 0);
        if (ex > 0) F *= C.D(static_cast<std::uint32_t>(j)).pow(ex);
      }
      BiRows scaled;
      detail::add_rows(scaled, h_rows_[prev].rows, F);
      const bool neg_i = i % 2 == 1;
      for (const Monomial& mono : b_terms(q, static_cast<std::uint32_t>(i))) {
        if (acc.size() < scaled.size() + mono.T_exp) acc.resize(scaled.size() + mono.T_exp, Poly(f));
        const FieldElem c = (neg_i != mono.negative) ? f->neg(f->one()) : f->one();
        for (std::size_t e = 0; e < scaled.size(); ++e) {
          if (!scaled[e].is_zero()) acc[e + mono.T_exp].add_scaled(scaled[e], c, mono.t_exp);
        }
      }
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    h_rows_.push_back({std::move(den), std::move(acc)});
  }
}

bool HGCache::check_at(const BiPoly& h, std::int64_t k, bool is_G, std::uint32_t d) const {
  const Poly want = is_G ? ps_.scaled_less(d, k) : ps_.scaled_sum(d, k);
  const std::uint64_t m = detail::q_power(field()->q(), d);
  Poly acc(field());
  for (const auto& [e, p] : h.numerators()) acc.add_scaled(p, field()->one(), e * m);
  return acc == want * h.den();
}

BiPoly HGCache::compute_H(std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidIndex, "H_k needs k >= 1");
  std::lock_guard lk(mu_);
  if (auto it = H_.find(k); it != H_.end()) return it->second;
  if (auto hit = load(k, false)) return H_.emplace(k, *hit).first->second;
  extend_h_rows(static_cast<std::size_t>(k - 1));
  const Fixed& fx = h_rows_[static_cast<std::size_t>(k - 1)];
  BiPoly H = BiPoly::from_rows(fx.den, fx.rows);
  for (std::uint32_t d = 0; d <= kCheckDepth; ++d) {
    if (!check_at(H, k, false, d)) {
      throw Error(Errc::VerificationFailed, "H_" + std::to_string(k) + " fails its defining property at d=" + std::to_string(d));
    }
  }
  ++stats_.computed;
  store(k, false, H);
  return H_.emplace(k, std::move(H)).first->second;
}

BiPoly HGCache::compute_G(std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidIndex, "G_k needs k >= 1");
  std::lock_guard lk(mu_);
  if (auto it = G_.find(k); it != G_.end()) return it->second;
  if (auto hit = load(k, true)) return G_.emplace(k, *hit).first->second;
  BiPoly G = solve_G(k, compute_H(k));
  for (std::uint32_t d = 0; d <= kCheckDepth; ++d) {
    if (!check_at(G, k, true, d)) {
      throw Error(Errc::VerificationFailed, "G_" + std::to_string(k) + " fails its defining property at d=" + std::to_string(d));
    }
  }
  ++stats_.computed;
  store(k, true, G);
  return G_.emplace(k, std::move(G)).first->second;
}

BiPoly HGCache::solve_G(std::int64_t k, const BiPoly& H) const {
  const Field& f = field();
  const FieldCtx& F = *f;
  const std::int64_t q = F.q();
  const std::int64_t qk = checked_mul(q, k);
  const std::int64_t degH = H.degree_T();
  // (t - T^q)^k = sum_m beta_m T^{qm}, beta_m = C(k,m) (-1)^m t^{k-m}
  struct Beta {
    std::int64_t m;
    FieldElem c;
    std::uint64_t shift;
  };
  std::vector<Beta> beta;
  for (std::int64_t m = 0; m <= k; ++m) {
    const std::uint32_t b = lucas_binom(k, m, F.p());
    if (b == 0) continue;
    FieldElem c = F.from_int(b);
    if (m % 2 == 1) c = F.neg(c);
    beta.push_back({m, c, static_cast<std::uint64_t>(k - m)});
  }
  const FieldElem beta_k = k % 2 == 0 ? F.one() : F.neg(F.one());

  // e* = qk/(q-1): unknown g_e enters equations qe and e + qm (m <= k);
  // the highest of these is its pivot equation
  const bool estar_int = qk % (q - 1) == 0;
  const std::int64_t estar_floor = qk / (q - 1);
  auto above = [&](std::int64_t e) { return e > estar_floor; };  // e > e*
  auto below = [&](std::int64_t e) { return e < estar_floor || (e == estar_floor && !estar_int); };

  const std::int64_t n_max = std::max(qk + std::max<std::int64_t>(degH, 0), q * (estar_floor + 2));
  const BiRows hr = H.rows_over(H.den());
  std::vector<Poly> g0(static_cast<std::size_t>(n_max + 1), Poly(f)), g1 = g0;
  bool has_lambda = false;
  std::vector<std::pair<Poly, Poly>> constraints;

  for (std::int64_t n = n_max; n >= 0; --n) {
    std::int64_t e = -1;
    FieldElem kappa{};
    if (n % q == 0 && above(n / q)) {
      e = n / q;
      kappa = F.one();
    } else if (n >= qk && below(n - qk)) {
      e = n - qk;
      kappa = F.neg(beta_k);
    } else if (estar_int && n == q * estar_floor) {
      e = estar_floor;
      kappa = F.sub(F.one(), beta_k);
    }
    // known = [q|n] g_{n/q} - sum_m beta_m g_{n-qm}, pivot excluded; rhs = sum_m beta_m h_{n-qm}
    Poly k0(f), k1(f), rhs(f);
    if (n % q == 0 && n / q != e) {
      k0 += g0[static_cast<std::size_t>(n / q)];
      k1 += g1[static_cast<std::size_t>(n / q)];
    }
    for (const Beta& b : beta) {
      const std::int64_t idx = n - q * b.m;
      if (idx < 0) break;
      const auto u = static_cast<std::size_t>(idx);
      if (u < hr.size() && !hr[u].is_zero()) rhs.add_scaled(hr[u], b.c, b.shift);
      if (idx == e) continue;
      if (!g0[u].is_zero()) k0.add_scaled(g0[u], F.neg(b.c), b.shift);
      if (!g1[u].is_zero()) k1.add_scaled(g1[u], F.neg(b.c), b.shift);
    }
    if (e >= 0 && !kappa.is_zero()) {
      const FieldElem ki = F.inv(kappa);
      g0[static_cast<std::size_t>(e)] = (rhs - k0).scaled(ki);
      g1[static_cast<std::size_t>(e)] = (-k1).scaled(ki);
    } else if (e >= 0) {
      // the coefficient of g_{e*} cancels: it becomes the free parameter
      has_lambda = true;
      g1[static_cast<std::size_t>(e)] = Poly::one(f);
      k0 -= rhs;
      if (!k0.is_zero() || !k1.is_zero()) constraints.emplace_back(std::move(k0), std::move(k1));
    } else {
      k0 -= rhs;
      if (!k0.is_zero() || !k1.is_zero()) constraints.emplace_back(std::move(k0), std::move(k1));
    }
  }
  // G(t) = 0
  {
    Poly c0(f), c1(f);
    for (std::size_t e = 0; e < g0.size(); ++e) {
      if (!g0[e].is_zero()) c0.add_scaled(g0[e], F.one(), e);
      if (!g1[e].is_zero()) c1.add_scaled(g1[e], F.one(), e);
    }
    if (!c0.is_zero() || !c1.is_zero()) constraints.emplace_back(std::move(c0), std::move(c1));
  }

  Poly lam_num(f), lam_den = Poly::one(f);
  if (has_lambda) {
    bool fixed = false;
    for (const auto& [c0, c1] : constraints) {
      if (c1.is_zero()) continue;
      RatFunc lam = rat_normalize(-c0, c1);
      lam_num = lam.num();
      lam_den = lam.den();
      fixed = true;
      break;
    }
    if (!fixed) {
      throw Error(Errc::NoPolynomialSolution, "G_" + std::to_string(k) + ": free parameter left undetermined");
    }
  }
  for (const auto& [c0, c1] : constraints) {
    if (!(c0 * lam_den + c1 * lam_num).is_zero()) {
      throw Error(Errc::NoPolynomialSolution, "G_" + std::to_string(k) + ": inconsistent linear system");
    }
  }
  BiRows rows(g0.size(), Poly(f));
  for (std::size_t e = 0; e < g0.size(); ++e) {
    rows[e] = g0[e] * lam_den;
    if (!g1[e].is_zero() && !lam_num.is_zero()) rows[e] += g1[e] * lam_num;
  }
  return BiPoly::from_rows(H.den() * lam_den, rows);
}

std::filesystem::path HGCache::entry_path(std::int64_t k, bool is_G) const {
  const FieldCtx& F = *field();
  return dir_ / (std::string(is_G ? "G" : "H") + "_p" + std::to_string(F.p()) + "_n" + std::to_string(F.n()) + "_m" +
                 std::to_string(F.modulus_code()) + "_k" + std::to_string(k) + ".txt");
}

std::optional<BiPoly> HGCache::load(std::int64_t k, bool is_G) const {
  if (dir_.empty()) return std::nullopt;
  const auto path = entry_path(k, is_G);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string all = ss.str();
  try {
    std::istringstream hs(all);
    std::string magic, field_line, kind_line, sum_line;
    std::getline(hs, magic);
    std::getline(hs, field_line);
    std::getline(hs, kind_line);
    std::getline(hs, sum_line);
    const FieldCtx& F = *field();
    const std::string want_field = "field " + std::to_string(F.p()) + " " + std::to_string(F.n()) + " " + std::to_string(F.modulus_code());
    const std::string want_kind = std::string("kind ") + (is_G ? "G" : "H") + " " + std::to_string(k);
    if (magic != kCacheMagic || field_line != want_field || kind_line != want_kind || sum_line.rfind("checksum ", 0) != 0) {
      throw Error(Errc::ParseError, "bad cache header");
    }
    const std::string body = all.substr(static_cast<std::size_t>(hs.tellg()));
    if (std::stoull(sum_line.substr(9), nullptr, 16) != fnv1a(body)) throw Error(Errc::ParseError, "checksum mismatch");
    BiPoly h = from_storage(field(), body);
    if (!check_at(h, k, is_G, 1)) throw Error(Errc::VerificationFailed, "cached entry fails re-verification");
    ++stats_.disk_hits;
    return h;
  } catch (const std::exception&) {
    ++stats_.disk_rejects;
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
}

void HGCache::store(std::int64_t k, bool is_G, const BiPoly& h) const {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const FieldCtx& F = *field();
  const std::string body = to_storage(h);
  std::ostringstream hex;
  hex << std::hex << fnv1a(body);
  std::string out = std::string(kCacheMagic) + "\n";
  out += "field " + std::to_string(F.p()) + " " + std::to_string(F.n()) + " " + std::to_string(F.modulus_code()) + "\n";
  out += std::string("kind ") + (is_G ? "G" : "H") + " " + std::to_string(k) + "\n";
  out += "checksum " + hex.str() + "\n" + body;
  const auto path = entry_path(k, is_G);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) return;
    o << out;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace mzv
