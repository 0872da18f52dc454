#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "recnn/distance.hpp"
#include "recnn/prng.hpp"

using namespace recnn;

namespace {

RegionFeatureSet set_of(std::vector<std::vector<float>> descriptors) {
  RegionFeatureSet set;
  set.dim = static_cast<std::uint32_t>(descriptors[0].size());
  for (std::size_t j = 0; j < descriptors.size(); ++j) {
    RegionFeature rf;
    rf.region.id = static_cast<std::uint32_t>(j + 1);
    rf.region.pixel_count = 1;
    rf.descriptor = std::move(descriptors[j]);
    set.regions.push_back(std::move(rf));
  }
  return set;
}

RegionFeatureSet random_set(SplitMix64& rng, std::size_t max_regions,
                            std::size_t dim) {
  const std::size_t n = 1 + rng.next_below(max_regions);
  std::vector<std::vector<float>> descs(n);
  for (auto& d : descs) {
    d.resize(dim);
    for (float& v : d)
      v = static_cast<float>(rng.next_double() * 4.0 - 2.0);
  }
  return set_of(std::move(descs));
}

}  // namespace

TEST_CASE("vector distances") {
  const std::vector<float> a = {0.0f, 0.0f}, b = {3.0f, 4.0f};
  CHECK(vector_distance(a, b, Norm::L2) == 5.0);
  const std::vector<float> c = {1.0f, 2.0f}, d = {2.0f, 0.0f};
  CHECK(vector_distance(c, d, Norm::L1) == 3.0);
  CHECK(vector_distance(b, b, Norm::L1) == 0.0);
  CHECK(vector_distance(b, b, Norm::L2) == 0.0);
  const std::vector<float> shorter = {1.0f};
  CHECK_THROWS_AS(vector_distance(a, shorter, Norm::L1),
                  std::invalid_argument);
}

TEST_CASE("region-set distance worked example and asymmetry") {
  const RegionFeatureSet q = set_of({{0, 0}, {1, 1}});
  const RegionFeatureSet r = set_of({{0, 1}, {2, 2}});
  CHECK(region_set_distance(q, r) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(region_set_distance(r, q) ==
        doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-12));
  CHECK(region_set_distance(q, q) == 0.0);
  // optional symmetrized mode averages both directions
  CHECK(region_set_distance(q, r, true) ==
        doctest::Approx((1.0 + (1.0 + std::sqrt(2.0)) / 2.0) / 2.0));
}

TEST_CASE("duplicated archive regions change nothing") {
  SplitMix64 rng(71);
  for (int iter = 0; iter < 20; ++iter) {
    const RegionFeatureSet q = random_set(rng, 5, 3);
    RegionFeatureSet r = random_set(rng, 5, 3);
    const double base = region_set_distance(q, r);
    r.regions.push_back(r.regions[rng.next_below(r.regions.size())]);
    CHECK(region_set_distance(q, r) == base);
  }
}

TEST_CASE("adding archive regions never increases the distance") {
  SplitMix64 rng(73);
  for (int iter = 0; iter < 20; ++iter) {
    const RegionFeatureSet q = random_set(rng, 5, 3);
    RegionFeatureSet r = random_set(rng, 5, 3);
    const double base = region_set_distance(q, r);
    RegionFeature extra;
    extra.descriptor = {static_cast<float>(rng.next_double()),
                        static_cast<float>(rng.next_double()),
                        static_cast<float>(rng.next_double())};
    r.regions.push_back(extra);
    CHECK(region_set_distance(q, r) <= base);
  }
}

TEST_CASE("matches the brute-force oracle on random pairs") {
  SplitMix64 rng(79);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t dim = 1 + rng.next_below(4);
    const RegionFeatureSet q = random_set(rng, 8, dim);
    const RegionFeatureSet r = random_set(rng, 8, dim);
    const double expected =
        static_cast<double>(oracles::region_set_distance_bruteforce(q, r));
    CHECK(region_set_distance(q, r) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("empty sets and dimension mismatches are rejected") {
  const RegionFeatureSet q = set_of({{1, 2}});
  CHECK_THROWS_AS(region_set_distance(q, RegionFeatureSet{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(region_set_distance(RegionFeatureSet{}, q),
                  std::invalid_argument);
  CHECK_THROWS_AS(region_set_distance(q, set_of({{1, 2, 3}})),
                  std::invalid_argument);
}
