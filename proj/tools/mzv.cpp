#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <unistd.h>

#include "mzv/error.hpp"
#include "mzv/prover.hpp"
#include "mzv/recipes.hpp"
#include "mzv/solver.hpp"
#include "mzv/sweep.hpp"
#include "mzv/text.hpp"

namespace fs = std::filesystem;
using namespace mzv;

namespace {

constexpr int kOk = 0, kRefuted = 1, kUsage = 2;

struct FieldOpts {
  std::uint32_t p = 0, n = 1;
  std::vector<std::uint32_t> modulus;
  std::string cache;

  std::shared_ptr<Workbench> workbench() const {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!modulus.empty()) mod = modulus;
    return Workbench::create(FieldCtx::create(p, n, mod), cache);
  }
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
  cmd->add_option("-p", f.p, "characteristic")->required();
  cmd->add_option("-n", f.n, "extension degree (q = p^n)");
  cmd->add_option("--modulus", f.modulus, "explicit modulus coefficients, constant term first")->delimiter(',');
  cmd->add_option("--cache", f.cache, "H/G cache directory (default $MZV_CACHE_DIR)");
}

SolveMethod parse_method(const std::string& m) {
  if (m == "auto") return SolveMethod::Auto;
  if (m == "bivariate") return SolveMethod::Bivariate;
  if (m == "per-d") return SolveMethod::PerD;
  throw Error(Errc::InvalidArgument, "unknown method '" + m + "'");
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

ShuffleSet read_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return shuffle_from_json(j);
}

// the relation from --relation, or from the solver when absent
ShuffleSet relation_for(const Workbench& wb, const std::string& path, std::int64_t a, std::int64_t b) {
  if (path.empty()) {
    if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "need -a and -b or --relation");
    return solve_shuffle(wb, a, b);
  }
  ShuffleSet s = read_relation(path);
  if (s.p != wb.field()->p() || s.n != wb.field()->n()) {
    throw Error(Errc::InvalidArgument, "relation field does not match -p/-n");
  }
  return s;
}

// ---- selftest ----

struct Suite {
  int failures = 0;
  void check(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  }
};

int run_selftest() {
  Suite st;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  for (auto [p, n] : fields) {
    auto wb = Workbench::create(FieldCtx::create(p, n));
    const PowerSums& ps = wb->power_sums();
    const std::string tag = "q=" + std::to_string(wb->field()->q());
    bool ok = true;
    for (std::uint32_t d = 0; d <= 2; ++d) {
      for (std::int64_t k = 1; k <= 20; ++k) ok = ok && ps.power_sum(d, k) == ps.power_sum_oracle(d, k);
    }
    st.check(ok, tag + " power sums agree with the literal sum (d <= 2, k <= 20)");
    ok = true;
    for (std::uint32_t d = 0; d <= 3; ++d) {
      ok = ok && ps.power_sum(d, 1) == RatFunc(ps.carlitz().ell(d)).inverse();
      for (std::int64_t s = 1; s <= 10; ++s) ok = ok && ps.power_sum(d, p * s) == ps.power_sum(d, s).pow(p);
    }
    st.check(ok, tag + " S_d(1) = 1/l_d and S_d(ps) = S_d(s)^p (d <= 3)");
    ok = true;
    const std::int64_t q1 = wb->field()->q() - 1;
    for (std::int64_t k = 1; k <= 12; ++k) {
      const BiPoly H = wb->hg().compute_H(k);
      for (std::uint32_t d = 0; d <= 3; ++d) {
        ok = ok && H.eval_T(d) == RatFunc(ps.scaled_sum(d, k));
        if (k % q1 == 0) ok = ok && wb->hg().compute_G(k).eval_T(d) == RatFunc(ps.scaled_less(d, k));
      }
    }
    st.check(ok, tag + " H_k, G_k evaluate to the scaled power sums (k <= 12, d <= 3)");
  }
  {
    auto wb = Workbench::create(FieldCtx::create(5, 1));
    const ShuffleSet s = solve_shuffle(*wb, 2, 30);
    const std::vector<ShufflePair> want{{3, 4}, {2, 8}, {1, 12}, {4, 20}, {3, 24}, {2, 28}};
    st.check(s.pairs == want, "q=5 S(2,30) is the six-term set");
    st.check(prove_identity(*wb, s).status == ProofResult::Status::Proved, "q=5 S(2,30) is proved");
  }
  {
    const fs::path dir = fs::temp_directory_path() / ("mzv-selftest-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    const Field F = FieldCtx::create(3, 1);
    std::string first, second;
    {
      PowerSums ps(F);
      HGCache hg(ps, dir);
      first = to_storage(hg.compute_H(7));
    }
    {
      PowerSums ps(F);
      HGCache hg(ps, dir);
      second = to_storage(hg.compute_H(7));
      st.check(first == second && hg.stats().disk_hits == 1, "cache round trip reproduces H_7");
    }
    for (const auto& e : fs::directory_iterator(dir)) {
      std::fstream f(e.path(), std::ios::in | std::ios::out);
      f.seekp(-3, std::ios::end);
      f << "2+1";
    }
    {
      PowerSums ps(F);
      HGCache hg(ps, dir);
      const std::string third = to_storage(hg.compute_H(7));
      st.check(third == first && hg.stats().disk_rejects == 1, "corrupted cache entry is rejected and recomputed");
    }
    fs::remove_all(dir);
  }
  std::cout << (st.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return st.failures == 0 ? kOk : kRefuted;
}

// ---- cache management ----

int run_cache(const std::string& action, const std::string& dir) {
  if (dir.empty()) throw Error(Errc::InvalidArgument, "no cache directory (use --cache or MZV_CACHE_DIR)");
  if (!fs::exists(dir)) {
    print({{"entries", 0}});
    return kOk;
  }
  static const std::regex name(R"(([HG])_p(\d+)_n(\d+)_m(\d+)_k(\d+)\.txt)");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  nlohmann::json out = nlohmann::json::array();
  int bad = 0;
  for (const auto& path : files) {
    std::smatch m;
    const std::string fname = path.filename().string();
    if (!std::regex_match(fname, m, name)) continue;
    nlohmann::json row{{"file", fname}, {"kind", m[1].str()}, {"k", std::stoll(m[5].str())}};
    if (action == "clear") {
      fs::remove(path);
      row["removed"] = true;
    } else if (action == "verify") {
      const auto p = static_cast<std::uint32_t>(std::stoul(m[2].str()));
      const auto n = static_cast<std::uint32_t>(std::stoul(m[3].str()));
      std::uint64_t code = std::stoull(m[4].str());
      std::vector<std::uint32_t> mod;
      for (std::uint32_t i = 0; i <= n; ++i, code /= p) mod.push_back(static_cast<std::uint32_t>(code % p));
      const Field F = FieldCtx::create(p, n, mod);
      PowerSums ps(F);
      HGCache hg(ps, dir);
      const std::int64_t k = std::stoll(m[5].str());
      if (m[1] == "H") {
        hg.compute_H(k);
      } else {
        hg.compute_G(k);
      }
      const bool ok = hg.stats().disk_rejects == 0;
      row["ok"] = ok;
      bad += ok ? 0 : 1;
    }
    out.push_back(row);
  }
  print({{"action", action}, {"entries", out}});
  return bad == 0 ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power sums and shuffle relations over F_q[t]"};
  app.require_subcommand(1);
  FieldOpts fo;
  const char* env = std::getenv("MZV_CACHE_DIR");
  if (env) fo.cache = env;

  std::int64_t a = 0, b = 0;
  std::string method = "auto", recipe = "auto", relation, family, out_path, json_path;
  std::uint32_t d_checks = 3, check_depth = 3, fam_n = 1, fam_i = 0;
  bool restrict_even = false, check = false, timing = false;
  unsigned jobs = 1;
  std::vector<std::int64_t> as;
  std::int64_t b_min = 1, b_max = 0;
  std::vector<std::uint32_t> ds{0, 1, 2, 3};
  std::string cache_action;

  auto* solve = app.add_subcommand("solve", "find and certify S(a,b)");
  add_field_opts(solve, fo);
  solve->add_option("-a", a)->required();
  solve->add_option("-b", b)->required();
  solve->add_option("--method", method, "auto | bivariate | per-d");
  solve->add_option("--d-checks", d_checks);
  solve->add_flag("--restrict-even", restrict_even);

  auto* predict = app.add_subcommand("predict", "evaluate a conjectural recipe");
  add_field_opts(predict, fo);
  predict->add_option("-a", a);
  predict->add_option("-b", b);
  predict->add_option("--recipe", recipe, "auto | main | full | q4 | large-index");
  predict->add_option("--family", family, "large-index family: qn,qn-1 | qn+1,qn | qn-1,qn+1 | qn-1n,qn+1 | qn+1,qn+1-qi");
  predict->add_option("--family-n", fam_n);
  predict->add_option("--family-i", fam_i);
  predict->add_flag("--check", check, "compare with the solver");

  auto* prove = app.add_subcommand("prove", "prove a relation for all d");
  add_field_opts(prove, fo);
  prove->add_option("-a", a);
  prove->add_option("-b", b);
  prove->add_option("--relation", relation, "ShuffleSet JSON file (default: solver output)");
  prove->add_option("--check-depth", check_depth);

  auto* verify = app.add_subcommand("verify", "check a relation at given d");
  add_field_opts(verify, fo);
  verify->add_option("-a", a);
  verify->add_option("-b", b);
  verify->add_option("--relation", relation);
  verify->add_option("--d", ds)->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "compare a recipe with the solver on a grid");
  add_field_opts(sweep, fo);
  sweep->add_option("-a", as, "comma-separated a values")->delimiter(',')->required();
  sweep->add_option("--b-min", b_min);
  sweep->add_option("--b-max", b_max)->required();
  sweep->add_option("--recipe", recipe);
  sweep->add_option("--method", method);
  sweep->add_option("--d-checks", d_checks);
  sweep->add_flag("--restrict-even", restrict_even);
  sweep->add_option("--jobs", jobs);
  sweep->add_option("--out", out_path, "CSV path (default stdout)");
  sweep->add_option("--json", json_path, "summary JSON path (default stderr)");
  sweep->add_flag("--timing", timing, "fill the time_ms column");

  auto* selftest = app.add_subcommand("selftest", "run the built-in checks");

  auto* cache = app.add_subcommand("cache", "inspect or clear the H/G cache");
  cache->add_option("action", cache_action, "list | verify | clear")->required()->check(CLI::IsMember({"list", "verify", "clear"}));
  cache->add_option("--cache", fo.cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    SolveOptions so;
    so.method = parse_method(method);
    so.d_checks = d_checks;
    so.restrict_even = restrict_even;

    if (*selftest) return run_selftest();
    if (*cache) return run_cache(cache_action, fo.cache);

    auto wb = fo.workbench();
    const FieldCtx& F = *wb->field();

    if (*solve) {
      print(to_json(solve_shuffle(*wb, a, b, so)));
      return kOk;
    }
    if (*predict) {
      Prediction pr;
      if (recipe == "large-index") {
        pr = large_index_delta(F, parse_family(family), fam_n, fam_i);
      } else {
        if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "need -a and -b");
        if (recipe == "full" || (recipe == "auto" && full_covered(F, a))) {
          pr = full_delta_small_a(F, a, b);
        } else if (recipe == "main" || recipe == "auto") {
          pr = predict_S(*wb, a, b);
        } else if (recipe == "q4") {
          pr = predict_S(*wb, a, b, TaSource::Q4);
        } else {
          throw Error(Errc::InvalidArgument, "unknown recipe '" + recipe + "'");
        }
      }
      nlohmann::json j = to_json(pr);
      int rc = kOk;
      if (check) {
        const ShuffleSet s = solve_shuffle(*wb, pr.predicted.a, pr.predicted.b, so);
        const bool match = !pr.partial() && s.pairs == pr.predicted.pairs;
        j["solver"] = to_json(s);
        j["match"] = pr.partial() ? "PARTIAL" : (match ? "MATCH" : "MISMATCH");
        if (!pr.partial() && !match) rc = kRefuted;
      }
      print(j);
      return rc;
    }
    if (*prove) {
      const ProofResult r = prove_identity(*wb, relation_for(*wb, relation, a, b), check_depth);
      print(to_json(r));
      return r.status == ProofResult::Status::Refuted ? kRefuted : kOk;
    }
    if (*verify) {
      const ShuffleSet s = relation_for(*wb, relation, a, b);
      nlohmann::json res = nlohmann::json::array();
      bool all = true;
      for (std::uint32_t d : ds) {
        const bool ok = verify_at_d(*wb, s, d);
        all = all && ok;
        res.push_back({{"d", d}, {"ok", ok}});
      }
      print({{"relation", to_json(s)}, {"results", res}, {"ok", all}});
      return all ? kOk : kRefuted;
    }
    if (*sweep) {
      SweepGrid g;
      g.as = as;
      g.b_min = b_min;
      g.b_max = b_max;
      g.recipe = recipe;
      g.jobs = jobs;
      g.timing = timing;
      g.solve = so;
      const SweepReport rep = run_sweep(*wb, g);
      if (out_path.empty()) {
        rep.write_csv(std::cout);
      } else {
        std::ofstream os(out_path);
        if (!os) throw Error(Errc::InvalidArgument, "cannot write " + out_path);
        rep.write_csv(os);
      }
      const std::string summary = rep.summary().dump(2);
      if (json_path.empty()) {
        std::cerr << summary << "\n";
      } else {
        std::ofstream(json_path) << summary << "\n";
      }
      const bool clean = rep.count(MatchKind::Mismatch) == 0 && rep.count(MatchKind::Error) == 0;
      return clean ? kOk : kRefuted;
    }
  } catch (const NonUniqueError& e) {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& s : e.solutions()) sols.push_back(to_json(s));
    print({{"error", e.what()}, {"solutions", sols}});
    return kRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NoSolution ? kRefuted : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
