#pragma once

#include <string>
#include <vector>

namespace recnn {

// One archive image: unique id, broad class label, and the three data
// files. Paths are stored resolved (relative entries are interpreted
// against the manifest's directory).
struct ManifestRecord {
  std::string image_id;
  std::string class_label;
  std::string image_path;
  std::string label_path;
  std::string feature_path;
};

// JSON-lines manifest: one object per line with string fields
// id, class, image, labels, features. Records are returned sorted
// ascending by image_id; duplicate ids are rejected with both line
// numbers. With verify_paths (the default) every referenced file must
// exist. Blank lines are skipped; an empty file is a valid empty archive.
std::vector<ManifestRecord> load_manifest(const std::string& path,
                                          bool verify_paths = true);

}  // namespace recnn
