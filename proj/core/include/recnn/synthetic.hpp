#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recnn {

// Deterministic archive generator. Each composition (broad class) is a
// fixed layout: one background pixel class plus one rectangle per further
// class, all drawn from a class subset unique to the composition.
// Subsets share a common size, so no composition's class set contains
// another's and zero-noise region sets of different compositions keep a
// strictly positive distance in both query directions.
struct SynthConfig {
  std::uint32_t num_images = 0;
  std::uint32_t num_compositions = 0;  // must divide num_images
  std::uint32_t num_pixel_classes = 0; // <= 17 (palette size)
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint32_t channels = 0;          // >= num_pixel_classes
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

// Pixel class c maps to the one-hot prototype with 1.0 at channel c; each
// feature value gets Gaussian noise of the configured sigma on top. The
// per-image generator is SplitMix64 seeded with seed XOR image index, so
// identical configs produce byte-identical files. Emits
// img<######>.{ppm,pgm,fmap} plus manifest.jsonl and returns the
// manifest path.
std::string generate_dataset(const SynthConfig& cfg,
                             const std::string& out_dir);

// Class subset of one composition: the comp-th size-t combination of
// {0..num_pixel_classes-1} in lexicographic order. Exposed for tests.
std::vector<std::uint8_t> composition_classes(const SynthConfig& cfg,
                                              std::uint32_t comp);

}  // namespace recnn
