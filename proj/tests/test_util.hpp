#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "recnn/prng.hpp"
#include "recnn/raster.hpp"

namespace testutil {

// Fresh directory under the system temp root; removed on destruction.
class TempDir {
public:
  TempDir() {
    static int counter = 0;
    const auto base = std::filesystem::temp_directory_path();
    do {
      path_ = base / ("recnn_test_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
    } while (std::filesystem::exists(path_));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string str() const { return path_.string(); }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return res;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
    res.output.append(buf, n);
  const int status = ::pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::vector<std::uint8_t> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline recnn::FeatureMap random_feature_map(recnn::SplitMix64& rng,
                                            std::uint32_t h, std::uint32_t w,
                                            std::uint32_t c,
                                            double lo = -2.0,
                                            double hi = 2.0) {
  recnn::FeatureMap map;
  map.height = h;
  map.width = w;
  map.channels = c;
  map.values.resize(static_cast<std::size_t>(h) * w * c);
  for (float& v : map.values)
    v = static_cast<float>(lo + (hi - lo) * rng.next_double());
  return map;
}

inline recnn::LabelMap random_label_map(recnn::SplitMix64& rng,
                                        std::uint32_t h, std::uint32_t w,
                                        std::uint32_t num_classes,
                                        double ignore_prob = 0.0) {
  recnn::LabelMap map;
  map.height = h;
  map.width = w;
  map.num_classes = num_classes;
  map.labels.resize(static_cast<std::size_t>(h) * w);
  for (auto& v : map.labels) {
    if (ignore_prob > 0.0 && rng.next_double() < ignore_prob)
      v = recnn::LabelMap::kIgnore;
    else
      v = static_cast<std::uint8_t>(rng.next_below(num_classes));
  }
  return map;
}

inline recnn::RasterImage random_image(recnn::SplitMix64& rng, std::uint32_t h,
                                       std::uint32_t w) {
  recnn::RasterImage img;
  img.height = h;
  img.width = w;
  img.pixels.resize(static_cast<std::size_t>(h) * w * 3);
  for (auto& v : img.pixels)
    v = static_cast<std::uint8_t>(rng.next_below(256));
  return img;
}

}  // namespace testutil
