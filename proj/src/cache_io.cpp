#include "g2/cache_io.hpp"

#include <fstream>
#include <json.hpp>
#include <string>

#include "g2/errors.hpp"

namespace g2 {

namespace {

using nlohmann::json;

const char* ambient_name(int n) { return n == 2 ? "p2" : "p3"; }

GWKey parse_key(int n, const json& e) {
  GWKey key{n, e.at("d").get<int>(), {}};
  if (key.degree < 1) throw ValidationError("degree must be positive");
  std::vector<int> ins = e.at("insertions").get<std::vector<int>>();
  for (int c : ins) {
    if (c < 2 || c > n) throw ValidationError("insertion h^" + std::to_string(c) + " is not normalized");
  }
  key.insertions = ExponentMultiset::from(ins);
  if (key.insertions.size() < 3 || !gw_balanced(n, key.degree, key.insertions)) {
    throw ValidationError("entry is not a balanced reconstruction key");
  }
  return key;
}

}  // namespace

void save_cache(const GenusZero& gw, const std::filesystem::path& path) {
  json doc = {{"version", kCacheVersion}, {"entries", {{"p2", json::array()}, {"p3", json::array()}}}};
  for (const auto& [key, value] : gw.entries()) {
    doc["entries"][ambient_name(key.ambient)].push_back(
        {{"d", key.degree}, {"insertions", key.insertions.sorted()}, {"value", value.to_string()}});
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ValidationError("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out.flush()) throw ValidationError("failed writing cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ValidationError("cannot move cache into place: " + ec.message());
}

std::size_t load_cache(GenusZero& gw, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read cache file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("cache file " + path.string() + " is not valid JSON: " + e.what());
  }

  std::vector<std::pair<GWKey, Rational>> staged;
  try {
    const int version = doc.at("version").get<int>();
    if (version != kCacheVersion) {
      throw ValidationError("cache file " + path.string() + " has version " + std::to_string(version) +
                            ", expected " + std::to_string(kCacheVersion) + "; delete it to rebuild");
    }
    const json& entries = doc.at("entries");
    for (int n = kMinAmbient; n <= kMaxAmbient; ++n) {
      auto it = entries.find(ambient_name(n));
      if (it == entries.end()) continue;
      for (const json& e : *it) {
        staged.emplace_back(parse_key(n, e), Rational::parse(e.at("value").get<std::string>()));
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError("cache file " + path.string() + " is malformed: " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("rejected cache file: ") + e.what());
  }
  gw.preload(staged);
  return staged.size();
}

}  // namespace g2
