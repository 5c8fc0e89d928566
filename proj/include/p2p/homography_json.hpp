#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "p2p/errors.hpp"
#include "p2p/geometry.hpp"

namespace p2p {

// {"h": [[r0],[r1],[r2]]}, row-major, full double precision, h22 = 1
// whenever representable.
inline nlohmann::json homography_to_json(const Homography& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back({h(r, 0), h(r, 1), h(r, 2)});
  return nlohmann::json{{"h", rows}};
}

inline Homography homography_from_json(const nlohmann::json& j) {
  if (!j.contains("h") || !j["h"].is_array() || j["h"].size() != 3)
    throw IoError("homography json: expected {\"h\": [[..],[..],[..]]}");
  std::array<double, 9> m;
  for (int r = 0; r < 3; ++r) {
    const auto& row = j["h"][r];
    if (!row.is_array() || row.size() != 3)
      throw IoError("homography json: row " + std::to_string(r) +
                    " must hold 3 numbers");
    for (int c = 0; c < 3; ++c) m[r * 3 + c] = row[c].get<double>();
  }
  return make_homography(m);
}

inline void save_homography(const std::string& path, const Homography& h) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for write: " + path);
  f << homography_to_json(h).dump(2) << "\n";
}

inline Homography load_homography(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad homography json in " + path + ": " + e.what());
  }
  return homography_from_json(j);
}

}  // namespace p2p
