#include "tuttelab/map_json.hpp"

#include "tuttelab/errors.hpp"

namespace tuttelab {

nlohmann::json map_to_json(const RootedMap& m) {
  nlohmann::json j;
  j["n_darts"] = m.n_darts();
  j["alpha"] = m.alpha();
  j["sigma"] = m.sigma();
  if (m.is_atomic())
    j["root"] = nullptr;
  else
    j["root"] = m.root();
  return j;
}

RootedMap map_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InvalidMap("map record must be a JSON object");
    for (const char* key : {"n_darts", "alpha", "sigma", "root"})
      if (!j.contains(key)) throw InvalidMap(std::string("map record lacks '") + key + "'");
    int n = j.at("n_darts").get<int>();
    auto alpha = j.at("alpha").get<std::vector<int32_t>>();
    auto sigma = j.at("sigma").get<std::vector<int32_t>>();
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(sigma.size()) != n)
      throw InvalidMap("n_darts disagrees with the permutation lengths");
    const auto& r = j.at("root");
    if (r.is_null()) {
      if (n != 0) throw InvalidMap("null root on a non-atomic map");
      return RootedMap::atomic();
    }
    return RootedMap(std::move(alpha), std::move(sigma), r.get<int32_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMap(std::string("malformed map record: ") + e.what());
  }
}

std::string map_to_json_line(const RootedMap& m) { return map_to_json(m).dump(); }

RootedMap map_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMap(std::string("unparseable map file: ") + e.what());
  }
  return map_from_json(j);
}

}  // namespace tuttelab
