#include "recnn/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "recnn/error.hpp"

namespace recnn {
namespace {

namespace fs = std::filesystem;

std::string require_string_field(const nlohmann::json& obj, const char* key,
                                 std::size_t line_no) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw DataError("manifest line " + std::to_string(line_no) +
                    ": missing string field '" + key + "'");
  }
  return obj[key].get<std::string>();
}

std::string resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  if (path.is_absolute()) return path.string();
  return (base / path).string();
}

}  // namespace

std::vector<ManifestRecord> load_manifest(const std::string& path,
                                          bool verify_paths) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path);
  const fs::path base = fs::path(path).parent_path();

  std::vector<ManifestRecord> records;
  std::unordered_map<std::string, std::size_t> first_line_of_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("manifest line " + std::to_string(line_no) +
                      ": invalid JSON (" + e.what() + ")");
    }
    if (!obj.is_object()) {
      throw DataError("manifest line " + std::to_string(line_no) +
                      ": expected a JSON object");
    }

    ManifestRecord rec;
    rec.image_id = require_string_field(obj, "id", line_no);
    rec.class_label = require_string_field(obj, "class", line_no);
    rec.image_path = resolve(base, require_string_field(obj, "image", line_no));
    rec.label_path = resolve(base, require_string_field(obj, "labels", line_no));
    rec.feature_path =
        resolve(base, require_string_field(obj, "features", line_no));

    auto [it, inserted] = first_line_of_id.emplace(rec.image_id, line_no);
    if (!inserted) {
      throw DataError("manifest: duplicate image_id '" + rec.image_id +
                      "' on lines " + std::to_string(it->second) + " and " +
                      std::to_string(line_no));
    }
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw DataError("read failed: " + path);

  if (verify_paths) {
    for (const auto& rec : records) {
      for (const std::string* p :
           {&rec.image_path, &rec.label_path, &rec.feature_path}) {
        if (!fs::exists(*p)) {
          throw DataError("manifest: image '" + rec.image_id +
                          "' references missing file " + *p);
        }
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const ManifestRecord& a, const ManifestRecord& b) {
              return a.image_id < b.image_id;
            });
  return records;
}

}  // namespace recnn
