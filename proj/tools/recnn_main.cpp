#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recnn/error.hpp"
#include "recnn/index.hpp"
#include "recnn/manifest.hpp"
#include "recnn/metrics.hpp"
#include "recnn/netpbm.hpp"
#include "recnn/retrieval.hpp"
#include "recnn/synthetic.hpp"

namespace {

// Exit codes: 0 success, 1 usage error, 2 data/format error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::pair<std::uint32_t, std::uint32_t> parse_size(const std::string& spec) {
  const auto sep = spec.find('x');
  if (sep == std::string::npos || sep == 0 || sep + 1 == spec.size())
    throw std::invalid_argument("--size expects HxW, e.g. 64x64");
  std::size_t used_h = 0, used_w = 0;
  unsigned long h = 0, w = 0;
  try {
    h = std::stoul(spec.substr(0, sep), &used_h);
    w = std::stoul(spec.substr(sep + 1), &used_w);
  } catch (const std::exception&) {
    throw std::invalid_argument("--size expects HxW, e.g. 64x64");
  }
  if (used_h != sep || used_w != spec.size() - sep - 1 || h == 0 || w == 0)
    throw std::invalid_argument("--size expects HxW, e.g. 64x64");
  return {static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(w)};
}

void write_report_csv(const std::string& path,
                      const recnn::MetricsReport& report,
                      const std::vector<int>& k_list) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw recnn::DataError("cannot open report file: " + path);
  out << "scheme,anmrr,map";
  for (int k : k_list) out << ",p" << k;
  out << "\n" << report.scheme << "," << fmt6(report.anmrr) << ","
      << fmt6(report.map);
  for (int k : k_list) out << "," << fmt6(report.p_at.at(k));
  out << "\n";
  if (!out) throw recnn::DataError("write failed: " + path);
}

void write_pr_csv(const std::string& path,
                  const recnn::MetricsReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw recnn::DataError("cannot open PR file: " + path);
  out << "recall,precision\n";
  for (const recnn::PrPoint& pt : report.pr_curve)
    out << fmt6(pt.recall) << "," << fmt6(pt.precision) << "\n";
  if (!out) throw recnn::DataError("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region-feature image retrieval engine and benchmark harness"};
  app.require_subcommand(1);

  // gen-synthetic
  auto* gen = app.add_subcommand("gen-synthetic",
                                 "Generate a deterministic synthetic archive");
  std::string gen_out, gen_size;
  recnn::SynthConfig cfg;
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--images", cfg.num_images, "Number of images")->required();
  gen->add_option("--compositions", cfg.num_compositions,
                  "Number of broad classes")->required();
  gen->add_option("--classes", cfg.num_pixel_classes,
                  "Number of pixel classes (<= 17)")->required();
  gen->add_option("--size", gen_size, "Image size HxW, e.g. 64x64")->required();
  gen->add_option("--channels", cfg.channels, "Feature channels")->required();
  gen->add_option("--noise", cfg.noise_sigma, "Gaussian noise sigma")
      ->required();
  gen->add_option("--seed", cfg.seed, "64-bit PRNG seed")->required();

  // build-index
  auto* build = app.add_subcommand("build-index",
                                   "Extract descriptors and persist an index");
  std::string build_manifest, build_out;
  recnn::IndexConfig index_cfg;
  build->add_option("--manifest", build_manifest, "JSON-lines manifest")
      ->required();
  build->add_option("--out", build_out, "Output .rix file")->required();
  build->add_option("--connectivity", index_cfg.connectivity,
                    "Region connectivity, 4 or 8")
      ->check(CLI::IsMember({4, 8}));
  build->add_option("--min-region-px", index_cfg.min_region_px,
                    "Drop regions smaller than this many pixels");

  // query
  auto* query = app.add_subcommand("query", "Rank the archive against one id");
  std::string query_index, query_id, query_scheme;
  int top_k = 10;
  bool label_filter = false;
  query->add_option("--index", query_index, "Index file")->required();
  query->add_option("--id", query_id, "Query image id")->required();
  query->add_option("--scheme", query_scheme,
                    "recnn|recnn+|stats|color|lbp|glcm")->required();
  query->add_option("--top-k", top_k, "Lines to print (default 10)");
  query->add_flag("--label-filter", label_filter,
                  "Drop entries sharing no pixel class with the query");

  // evaluate
  auto* evaluate = app.add_subcommand(
      "evaluate", "Query every entry and write metric reports");
  std::string eval_index, eval_scheme, eval_report, eval_pr;
  std::vector<int> k_list = {5, 10, 20, 50};
  evaluate->add_option("--index", eval_index, "Index file")->required();
  evaluate->add_option("--scheme", eval_scheme,
                       "recnn|recnn+|stats|color|lbp|glcm")->required();
  evaluate->add_option("--report", eval_report, "Metrics CSV path")
      ->required();
  evaluate->add_option("--pr", eval_pr, "11-point PR CSV path")->required();
  evaluate->add_option("--k", k_list, "P@k cutoffs (default 5,10,20,50)")
      ->delimiter(',');

  // seg-metrics
  auto* seg = app.add_subcommand(
      "seg-metrics", "Score a predicted label map against ground truth");
  std::string seg_pred, seg_gt;
  std::uint32_t seg_classes = 0;
  seg->add_option("--pred", seg_pred, "Predicted PGM label map")->required();
  seg->add_option("--gt", seg_gt, "Ground-truth PGM label map")->required();
  seg->add_option("--classes", seg_classes, "Number of classes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto [h, w] = parse_size(gen_size);
      cfg.height = h;
      cfg.width = w;
      std::cout << recnn::generate_dataset(cfg, gen_out) << "\n";
    } else if (build->parsed()) {
      const auto manifest = recnn::load_manifest(build_manifest);
      const recnn::RetrievalIndex index =
          recnn::build_index(manifest, index_cfg);
      recnn::save_index(build_out, index);
      std::cout << build_out << ": " << index.entries.size() << " entries, "
                << index.feature_dim << " feature dims\n";
    } else if (query->parsed()) {
      if (top_k < 1) throw std::invalid_argument("--top-k must be >= 1");
      const recnn::RetrievalIndex index = recnn::load_index(query_index);
      const recnn::RankedList ranked = recnn::query_ranked(
          index, query_id, recnn::scheme_from_string(query_scheme),
          label_filter);
      const std::size_t n =
          std::min(ranked.size(), static_cast<std::size_t>(top_k));
      for (std::size_t i = 0; i < n; ++i)
        std::cout << (i + 1) << "," << ranked[i].image_id << ","
                  << fmt6(ranked[i].distance) << "\n";
    } else if (evaluate->parsed()) {
      const recnn::RetrievalIndex index = recnn::load_index(eval_index);
      const recnn::MetricsReport report = recnn::evaluate_scheme(
          index, recnn::scheme_from_string(eval_scheme), k_list);
      write_report_csv(eval_report, report, k_list);
      write_pr_csv(eval_pr, report);
    } else if (seg->parsed()) {
      const recnn::LabelMap pred = recnn::read_pgm_file(seg_pred, seg_classes);
      const recnn::LabelMap gt = recnn::read_pgm_file(seg_gt, seg_classes);
      const recnn::SegMetrics m = recnn::seg_metrics(pred, gt);
      std::cout << "pixel_acc,mean_acc,mean_iu\n"
                << fmt6(m.pixel_acc) << "," << fmt6(m.mean_acc) << ","
                << fmt6(m.mean_iu) << "\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
