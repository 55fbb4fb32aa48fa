#pragma once

// Experiment configuration and the one-shot pipeline runner behind the `run`
// subcommand: load dataset -> (perturb) -> extract -> classify -> artifacts.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "contourgraph/contourgraph.hpp"

namespace cngtool {

using ordered_json = nlohmann::ordered_json;

inline std::string mode_name(cng::ThresholdMode m) {
  return m == cng::ThresholdMode::smaller_than ? "lt" : "gt";
}

inline cng::ThresholdMode parse_mode(const std::string& s) {
  if (s == "lt") return cng::ThresholdMode::smaller_than;
  if (s == "gt") return cng::ThresholdMode::greater_than;
  throw std::invalid_argument("mode must be 'lt' or 'gt', got '" + s + "'");
}

inline cng::DescriptorKind parse_descriptor(const std::string& s) {
  if (s == "phi") return cng::DescriptorKind::phi;
  if (s == "varphi") return cng::DescriptorKind::varphi;
  throw std::invalid_argument("descriptor must be 'phi' or 'varphi', got '" + s + "'");
}

inline std::string perturb_kind_name(cng::PerturbKind k) {
  switch (k) {
    case cng::PerturbKind::rotate: return "rotate";
    case cng::PerturbKind::scale: return "scale";
    case cng::PerturbKind::noise: return "noise";
    case cng::PerturbKind::degrade_continuous: return "degrade_continuous";
    case cng::PerturbKind::degrade_random: return "degrade_random";
  }
  return "rotate";
}

inline cng::PerturbKind parse_perturb_kind(const std::string& s) {
  if (s == "rotate") return cng::PerturbKind::rotate;
  if (s == "scale") return cng::PerturbKind::scale;
  if (s == "noise") return cng::PerturbKind::noise;
  if (s == "degrade_continuous" || s == "degrade-continuous")
    return cng::PerturbKind::degrade_continuous;
  if (s == "degrade_random" || s == "degrade-random")
    return cng::PerturbKind::degrade_random;
  throw std::invalid_argument("unknown perturbation kind '" + s + "'");
}

inline ordered_json perturb_to_json(const cng::PerturbSpec& p) {
  ordered_json j;
  j["kind"] = perturb_kind_name(p.kind);
  switch (p.kind) {
    case cng::PerturbKind::rotate: j["angle_deg"] = p.angle_deg; break;
    case cng::PerturbKind::scale: j["factor"] = p.factor; break;
    case cng::PerturbKind::noise: j["noise_level"] = p.noise_level; break;
    case cng::PerturbKind::degrade_continuous:
    case cng::PerturbKind::degrade_random:
      j["degrade_fraction"] = p.degrade_fraction;
      break;
  }
  j["seed"] = p.seed;
  return j;
}

inline cng::PerturbSpec perturb_from_json(const ordered_json& j) {
  cng::PerturbSpec p;
  p.kind = parse_perturb_kind(j.at("kind").get<std::string>());
  switch (p.kind) {
    case cng::PerturbKind::rotate: p.angle_deg = j.at("angle_deg").get<double>(); break;
    case cng::PerturbKind::scale: p.factor = j.at("factor").get<double>(); break;
    case cng::PerturbKind::noise: p.noise_level = j.at("noise_level").get<int>(); break;
    case cng::PerturbKind::degrade_continuous:
    case cng::PerturbKind::degrade_random:
      p.degrade_fraction = j.at("degrade_fraction").get<double>();
      break;
  }
  p.seed = j.value("seed", std::uint64_t{0});
  return p;
}

/// Short file-name tag for one perturbation, e.g. rotate_35 or noise_2.
inline std::string perturb_tag(const cng::PerturbSpec& p) {
  char buf[64];
  switch (p.kind) {
    case cng::PerturbKind::rotate:
      std::snprintf(buf, sizeof(buf), "rotate_%g", p.angle_deg);
      break;
    case cng::PerturbKind::scale:
      std::snprintf(buf, sizeof(buf), "scale_%g", p.factor);
      break;
    case cng::PerturbKind::noise:
      std::snprintf(buf, sizeof(buf), "noise_%d", p.noise_level);
      break;
    case cng::PerturbKind::degrade_continuous:
      std::snprintf(buf, sizeof(buf), "degcont_%g", p.degrade_fraction);
      break;
    case cng::PerturbKind::degrade_random:
      std::snprintf(buf, sizeof(buf), "degrand_%g", p.degrade_fraction);
      break;
  }
  return buf;
}

struct ExperimentConfig {
  std::string dataset;
  std::string out_dir = "out";
  cng::DescriptorKind descriptor = cng::DescriptorKind::phi;
  cng::ThresholdMode mode = cng::ThresholdMode::smaller_than;
  std::vector<double> thresholds;  // explicit list; empty -> uniform n_thresholds
  int n_thresholds = 13;
  std::string classifier = "knn:1";
  int folds = 10;
  int repeats = 100;
  std::uint64_t seed = 1;
  bool scale_features = true;
  int jobs = 1;
  bool skip_bad = false;
  std::vector<cng::PerturbSpec> perturbations;
};

inline ordered_json config_to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["dataset"] = cfg.dataset;
  j["out_dir"] = cfg.out_dir;
  j["descriptor"] = to_string(cfg.descriptor);
  j["mode"] = mode_name(cfg.mode);
  if (!cfg.thresholds.empty()) {
    j["thresholds"] = cfg.thresholds;
  } else {
    j["n_thresholds"] = cfg.n_thresholds;
  }
  j["classifier"] = cfg.classifier;
  j["folds"] = cfg.folds;
  j["repeats"] = cfg.repeats;
  j["seed"] = cfg.seed;
  j["scale_features"] = cfg.scale_features;
  j["jobs"] = cfg.jobs;
  j["skip_bad"] = cfg.skip_bad;
  j["perturbations"] = ordered_json::array();
  for (const auto& p : cfg.perturbations) j["perturbations"].push_back(perturb_to_json(p));
  return j;
}

inline ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig cfg;
  cfg.dataset = j.at("dataset").get<std::string>();
  cfg.out_dir = j.value("out_dir", std::string("out"));
  cfg.descriptor = parse_descriptor(j.value("descriptor", std::string("phi")));
  cfg.mode = parse_mode(j.value("mode", std::string("lt")));
  if (j.contains("thresholds")) {
    cfg.thresholds = j.at("thresholds").get<std::vector<double>>();
  } else {
    cfg.n_thresholds = j.value("n_thresholds", 13);
  }
  cfg.classifier = j.value("classifier", std::string("knn:1"));
  cfg.folds = j.value("folds", 10);
  cfg.repeats = j.value("repeats", 100);
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.scale_features = j.value("scale_features", true);
  cfg.jobs = j.value("jobs", 1);
  cfg.skip_bad = j.value("skip_bad", false);
  if (j.contains("perturbations")) {
    for (const auto& p : j.at("perturbations")) cfg.perturbations.push_back(perturb_from_json(p));
  }
  return cfg;
}

/// FNV-1a over the canonical JSON dump; every artifact embeds this hash so a
/// run can be traced back to its exact configuration.
inline std::string config_hash(const ExperimentConfig& cfg) {
  const std::string dump = config_to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline cng::SweepPlan resolve_plan(const ExperimentConfig& cfg) {
  if (cfg.thresholds.empty()) return cng::uniform_plan(cfg.n_thresholds, cfg.mode);
  cng::SweepPlan plan;
  plan.thresholds = cfg.thresholds;
  plan.mode = cfg.mode;
  cng::validate_plan(plan);
  return plan;
}

inline std::vector<cng::FeatureVector> extract_dataset(const std::vector<cng::Contour>& contours,
                                                       cng::DescriptorKind kind,
                                                       const cng::SweepPlan& plan, int jobs) {
  std::vector<cng::FeatureVector> features(contours.size());
  cng::parallel_for(contours.size(), jobs, [&](std::size_t i) {
    features[i] = kind == cng::DescriptorKind::varphi ? cng::extract_varphi(contours[i], plan)
                                                      : cng::extract_phi(contours[i], plan);
  });
  return features;
}

/// Runs the full pipeline for one config: one variant per perturbation (or a
/// single unperturbed variant), each writing features CSV + sidecar, report
/// JSON and a table line. Returns the reports keyed by variant tag.
inline std::vector<std::pair<std::string, cng::AccuracyReport>> run_experiment(
    const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const auto plan = resolve_plan(cfg);
  const auto spec = cng::ClassifierSpec::parse(cfg.classifier);
  const auto hash = config_hash(cfg);
  const auto contours = cng::load_dataset(cfg.dataset, cfg.skip_bad);
  fs::create_directories(cfg.out_dir);

  struct Variant {
    std::string tag;
    bool perturbed = false;
    cng::PerturbSpec spec;
  };
  std::vector<Variant> variants;
  if (cfg.perturbations.empty()) {
    variants.push_back({"original", false, {}});
  } else {
    for (const auto& p : cfg.perturbations) variants.push_back({perturb_tag(p), true, p});
  }

  std::vector<std::pair<std::string, cng::AccuracyReport>> reports;
  for (const auto& variant : variants) {
    std::vector<cng::Contour> working;
    working.reserve(contours.size());
    for (std::size_t i = 0; i < contours.size(); ++i) {
      if (!variant.perturbed) {
        working.push_back(contours[i]);
      } else {
        cng::PerturbSpec p = variant.spec;
        p.seed = cng::derive_seed(variant.spec.seed != 0 ? variant.spec.seed : cfg.seed, i);
        working.push_back(cng::perturb(contours[i], p));
      }
    }
    const auto features = extract_dataset(working, cfg.descriptor, plan, cfg.jobs);

    const std::vector<std::string> preamble = {
        "config=" + hash, "seed=" + std::to_string(cfg.seed), "variant=" + variant.tag};
    const fs::path features_path = fs::path(cfg.out_dir) / ("features_" + variant.tag + ".csv");
    cng::write_features_csv(features, features_path, preamble);

    ordered_json sidecar;
    sidecar["layout"] = cng::layout_to_json(features.front().layout);
    sidecar["descriptor"] = to_string(cfg.descriptor);
    sidecar["version"] = cng::kVersion;
    sidecar["seed"] = cfg.seed;
    sidecar["config_hash"] = hash;
    sidecar["variant"] = variant.tag;
    sidecar["config"] = config_to_json(cfg);
    cng::write_text_atomic(fs::path(cfg.out_dir) / ("features_" + variant.tag + ".json"),
                           sidecar.dump(2) + "\n");

    const auto dataset = cng::LabeledDataset::from_feature_vectors(features);
    const auto report = cng::cross_validate(dataset, spec, cfg.folds, cfg.repeats, cfg.seed,
                                            cfg.scale_features, cfg.jobs);

    ordered_json rj = cng::report_to_json(report);
    rj["config_hash"] = hash;
    rj["variant"] = variant.tag;
    rj["config"] = config_to_json(cfg);
    cng::write_text_atomic(fs::path(cfg.out_dir) / ("report_" + variant.tag + ".json"),
                           rj.dump(2) + "\n");
    cng::write_text_atomic(fs::path(cfg.out_dir) / ("report_" + variant.tag + ".txt"),
                           "# config=" + hash + " seed=" + std::to_string(cfg.seed) + "\n" +
                               cng::report_table_line(report) + "\n");
    std::cout << variant.tag << ": " << cng::report_table_line(report) << "\n";
    reports.emplace_back(variant.tag, report);
  }
  return reports;
}

}  // namespace cngtool
