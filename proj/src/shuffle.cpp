#include "mzv/shuffle.hpp"

#include <algorithm>

#include "mzv/error.hpp"
#include "mzv/ffield.hpp"

namespace mzv {

std::uint64_t ShuffleSet::q() const { return static_cast<std::uint64_t>(ipow(p, n)); }

void ShuffleSet::canonicalize() {
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.aj < y.aj; });
  std::vector<ShufflePair> out;
  for (const auto& pr : pairs) {
    if (!out.empty() && out.back().aj == pr.aj) {
      out.back().c = (out.back().c + pr.c) % p;
    } else {
      out.push_back({pr.c % p, pr.aj});
    }
  }
  std::erase_if(out, [](const ShufflePair& x) { return x.c == 0; });
  pairs = std::move(out);
}

void ShuffleSet::validate() const {
  if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "a and b must be positive");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    if (pr.c == 0 || pr.c >= p) throw Error(Errc::InvalidArgument, "coefficient outside [1, p)");
    if (pr.aj < 1 || pr.aj > weight() - 1) throw Error(Errc::InvalidArgument, "a_j outside [1, w-1]");
    if (i > 0 && pairs[i - 1].aj >= pr.aj) throw Error(Errc::InvalidArgument, "pairs must be strictly ascending in a_j");
  }
}

bool ShuffleSet::same_relation(const ShuffleSet& o) const {
  ShuffleSet x = *this, y = o;
  x.canonicalize();
  y.canonicalize();
  return x.p == y.p && x.n == y.n && x.a == y.a && x.b == y.b && x.pairs == y.pairs;
}

nlohmann::json to_json(const ShuffleSet& s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pr : s.pairs) pairs.push_back({{"c", pr.c}, {"aj", pr.aj}});
  nlohmann::json j = {{"q", s.q()}, {"p", s.p}, {"n", s.n}, {"a", s.a}, {"b", s.b}, {"weight", s.weight()}, {"pairs", pairs}};
  if (!s.certified.empty()) j["certified"] = s.certified;
  return j;
}

ShuffleSet shuffle_from_json(const nlohmann::json& j) {
  try {
    ShuffleSet s;
    s.p = j.at("p").get<std::uint32_t>();
    s.n = j.value("n", 1U);
    s.a = j.at("a").get<std::int64_t>();
    s.b = j.at("b").get<std::int64_t>();
    for (const auto& pr : j.at("pairs")) s.pairs.push_back({pr.at("c").get<std::uint32_t>(), pr.at("aj").get<std::int64_t>()});
    s.certified = j.value("certified", std::string{});
    if (j.contains("q") && j["q"].get<std::uint64_t>() != s.q()) throw Error(Errc::ParseError, "q does not equal p^n");
    if (j.contains("weight") && j["weight"].get<std::int64_t>() != s.weight()) throw Error(Errc::ParseError, "weight does not equal a+b");
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed relation JSON: ") + e.what());
  }
}

nlohmann::json to_json(const TaSet& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries) entries.push_back({{"c", e.c}, {"phi", e.phi}, {"j", e.j}});
  return {{"a", t.a}, {"entries", entries}};
}

}  // namespace mzv
