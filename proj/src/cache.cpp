#include "psg/cache.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace psg {

const char* kEngineVersion = "psg-1";

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json summary_to_json(const SemigroupSummary& s) {
  json j;
  j["v"] = kEngineVersion;
  j["n"] = s.n;
  j["p"] = s.p;
  j["f"] = s.f;
  j["g"] = s.g;
  j["e"] = s.e;
  j["u"] = s.u;
  if (s.f_even) j["f_even"] = *s.f_even;
  else j["f_even"] = nullptr;
  j["atoms"] = s.atoms;
  json alpha = json::array();
  for (const auto& a : s.alpha) alpha.push_back({a.num, a.den});
  j["alpha"] = alpha;
  j["wf"] = decimal_string(s.window_factor);
  j["wf0"] = "";  // filled by the cache with its own key
  j["certified"] = s.certified;
  return j;
}

SemigroupSummary summary_from_json(const json& j) {
  SemigroupSummary s;
  s.n = j.at("n").get<i64>();
  s.p = j.at("p").get<i64>();
  s.f = j.at("f").get<i64>();
  s.g = j.at("g").get<i64>();
  s.e = j.at("e").get<i64>();
  s.u = j.at("u").get<i64>();
  if (!j.at("f_even").is_null()) s.f_even = j.at("f_even").get<i64>();
  s.atoms = j.at("atoms").get<std::vector<i64>>();
  for (const auto& a : j.at("alpha")) s.alpha.push_back({a.at(0).get<i64>(), a.at(1).get<i64>()});
  s.window_factor = parse_decimal(j.at("wf").get<std::string>());
  s.certified = j.at("certified").get<bool>();
  return s;
}

}  // namespace

SummaryCache::SummaryCache(std::string dir, std::string window_factor_key)
    : dir_(std::move(dir)), wf_key_(std::move(window_factor_key)) {}

std::string SummaryCache::file_path() const {
  return (fs::path(dir_) / "summaries.jsonl").string();
}

std::map<i64, SemigroupSummary> SummaryCache::load(std::ostream& diag) const {
  std::map<i64, SemigroupSummary> rows;
  std::ifstream in(file_path());
  if (!in) return rows;
  std::string line;
  i64 lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      if (j.at("v").get<std::string>() != kEngineVersion) continue;
      if (j.at("wf0").get<std::string>() != wf_key_) continue;
      SemigroupSummary s = summary_from_json(j);
      if (!s.certified) continue;
      rows[s.n] = std::move(s);
    } catch (const std::exception&) {
      diag << "cache: skipping corrupt line " << lineno << " of " << file_path() << "\n";
    }
  }
  return rows;
}

void SummaryCache::store(const std::map<i64, SemigroupSummary>& rows) const {
  fs::create_directories(dir_);
  const fs::path target = file_path();
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    for (const auto& [n, s] : rows) {
      json j = summary_to_json(s);
      j["wf0"] = wf_key_;
      out << j.dump() << '\n';
    }
  }
  fs::rename(tmp, target);
}

}  // namespace psg
