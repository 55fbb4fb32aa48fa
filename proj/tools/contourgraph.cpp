// Command-line front-end: generate and perturb contours, extract descriptors,
// measure graphs, estimate curvature, classify datasets, and run the sweep /
// single-threshold studies.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contourgraph/contourgraph.hpp"
#include "experiment.hpp"

namespace fs = std::filesystem;
using cngtool::ordered_json;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CONTOURGRAPH_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

cng::SweepPlan plan_from_flags(const std::vector<double>& thresholds, int n_thresholds,
                               const std::string& mode_str) {
  const auto mode = cngtool::parse_mode(mode_str);
  if (!thresholds.empty()) {
    cng::SweepPlan plan;
    plan.thresholds = thresholds;
    plan.mode = mode;
    cng::validate_plan(plan);
    return plan;
  }
  return cng::uniform_plan(n_thresholds, mode);
}

cng::ShapeKind parse_shape_kind(const std::string& s) {
  if (s == "circle") return cng::ShapeKind::circle;
  if (s == "polygon") return cng::ShapeKind::regular_polygon;
  if (s == "star") return cng::ShapeKind::star;
  throw std::invalid_argument("kind must be circle, polygon or star, got '" + s + "'");
}

void print_measurements(const cng::MeasurementSet& ms) {
  ordered_json j;
  j["threshold"] = ms.threshold;
  j["mode"] = cngtool::mode_name(ms.mode);
  j["avg_degree"] = ms.avg_degree;
  j["max_degree"] = ms.max_degree;
  j["hier_degree_2"] = ms.hier_degree_2;
  j["hier_degree_3"] = ms.hier_degree_3;
  j["avg_clustering"] = ms.avg_clustering;
  j["avg_path_length"] = ms.avg_path_length;
  j["assortativity"] = ms.assortativity;
  j["avg_betweenness"] = ms.avg_betweenness;
  std::cout << j.dump(2) << "\n";
}

struct StudyRow {
  std::string descriptor;
  std::string mode;
  int n_thresholds = 0;
  double threshold = 0.0;
  cng::AccuracyReport report;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape analysis with thresholded contour proximity networks"};
  app.require_subcommand(1);

  // ---- generate -----------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "Generate an ideal shape contour");
  std::string gen_kind = "circle", gen_label, gen_out = "contour.csv";
  int gen_sides = 5, gen_samples = 200;
  double gen_ratio = 0.5, gen_radius = 100.0;
  std::vector<double> gen_center = {0.0, 0.0};
  generate->add_option("--kind", gen_kind, "circle | polygon | star");
  generate->add_option("--sides", gen_sides, "sides or star tips");
  generate->add_option("--inner-ratio", gen_ratio, "star inner radius ratio in (0,1)");
  generate->add_option("--samples", gen_samples, "number of contour points");
  generate->add_option("--radius", gen_radius, "outer radius in px");
  generate->add_option("--center", gen_center, "center x,y")->expected(2)->delimiter(',');
  generate->add_option("--label", gen_label, "class label written to the CSV header");
  generate->add_option("--out", gen_out, "output contour CSV");

  // ---- trace --------------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "Trace the outer boundary of a PBM/PGM silhouette");
  std::string trace_in, trace_label, trace_out = "contour.csv";
  trace->add_option("--in", trace_in, "input PBM/PGM image")->required();
  trace->add_option("--label", trace_label, "class label");
  trace->add_option("--out", trace_out, "output contour CSV");

  // ---- perturb ------------------------------------------------------------
  auto* perturb_cmd = app.add_subcommand("perturb", "Apply a geometric or degradation transform");
  std::string pert_in, pert_out = "perturbed.csv", pert_kind = "rotate";
  double pert_angle = 0.0, pert_factor = 1.0, pert_fraction = 0.0;
  int pert_noise = 0;
  std::uint64_t pert_seed = default_seed();
  perturb_cmd->add_option("--in", pert_in, "input contour CSV")->required();
  perturb_cmd->add_option("--out", pert_out, "output contour CSV");
  perturb_cmd->add_option("--kind", pert_kind,
                          "rotate | scale | noise | degrade-continuous | degrade-random");
  perturb_cmd->add_option("--angle", pert_angle, "rotation angle in degrees");
  perturb_cmd->add_option("--factor", pert_factor, "scale factor > 0");
  perturb_cmd->add_option("--noise-level", pert_noise, "integer noise amplitude in px");
  perturb_cmd->add_option("--fraction", pert_fraction, "fraction of points to remove");
  perturb_cmd->add_option("--seed", pert_seed, "seed for stochastic transforms");

  // ---- interpolate --------------------------------------------------------
  auto* interp = app.add_subcommand("interpolate", "Blend two contours");
  std::string interp_a, interp_b, interp_out = "blend.csv";
  double interp_alpha = 0.5;
  interp->add_option("--a", interp_a, "first contour CSV")->required();
  interp->add_option("--b", interp_b, "second contour CSV")->required();
  interp->add_option("--alpha", interp_alpha, "blend weight in [0,1]");
  interp->add_option("--out", interp_out, "output contour CSV");

  // ---- shared extraction flags --------------------------------------------
  std::string x_data, x_mode = "lt", x_descriptor = "phi", x_out = "out";
  std::vector<double> x_thresholds;
  int x_nt = 13, x_jobs = 1;
  bool x_skip_bad = false;
  std::uint64_t x_seed = default_seed();

  auto add_extract_flags = [&](CLI::App* cmd) {
    cmd->add_option("--data", x_data, "dataset directory (class subdirs of CSV/PBM/PGM)")
        ->required();
    cmd->add_option("--mode", x_mode, "lt | gt");
    cmd->add_option("--thresholds", x_thresholds, "explicit threshold list")->delimiter(',');
    cmd->add_option("--n-thresholds", x_nt, "uniform threshold count");
    cmd->add_option("--jobs", x_jobs, "worker threads (0 = all cores)");
    cmd->add_option("--seed", x_seed, "seed recorded in outputs");
    cmd->add_flag("--skip-bad", x_skip_bad, "skip unreadable files instead of aborting");
    cmd->add_option("--out", x_out, "output directory");
  };

  // ---- extract ------------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "Extract descriptors for a dataset");
  add_extract_flags(extract);
  extract->add_option("--descriptor", x_descriptor, "phi | varphi");

  // ---- measure ------------------------------------------------------------
  auto* measure = app.add_subcommand("measure", "Measure one contour at one threshold");
  std::string m_in, m_mode = "lt", m_profile, m_edges;
  double m_t = 0.325;
  measure->add_option("--in", m_in, "input contour CSV")->required();
  measure->add_option("--t", m_t, "threshold");
  measure->add_option("--mode", m_mode, "lt | gt");
  measure->add_option("--profile", m_profile, "write per-node CSV (node,k,cc,b,k2,k3)");
  measure->add_option("--edges", m_edges, "write edge list dump");

  // ---- curvature ----------------------------------------------------------
  auto* curv = app.add_subcommand("curvature", "Per-point curvature of a contour");
  std::string c_in, c_out = "curvature.csv";
  double c_sigma = 0.0;
  bool c_norm = false;
  curv->add_option("--in", c_in, "input contour CSV")->required();
  curv->add_option("--sigma", c_sigma, "Gaussian low-pass scale in bins (0 = n/64)");
  curv->add_flag("--normalize", c_norm, "min-max rescale to [0,1]");
  curv->add_option("--out", c_out, "output CSV (index,curvature)");

  // ---- classify -----------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "Cross-validate a feature file");
  std::string cl_features, cl_classifier = "knn:1", cl_out = "out";
  int cl_folds = 10, cl_repeats = 100, cl_jobs = 1;
  bool cl_no_scale = false;
  std::uint64_t cl_seed = default_seed();
  classify->add_option("--features", cl_features, "features CSV")->required();
  classify->add_option("--classifier", cl_classifier, "knn:k | nb");
  classify->add_option("--folds", cl_folds, "cross-validation folds");
  classify->add_option("--repeats", cl_repeats, "cross-validation repeats");
  classify->add_option("--seed", cl_seed, "fold-assignment seed");
  classify->add_option("--jobs", cl_jobs, "worker threads");
  classify->add_flag("--no-scale", cl_no_scale, "disable min-max scaling");
  classify->add_option("--out", cl_out, "output directory");

  // ---- run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run a full experiment from a config file");
  std::string run_config;
  run->add_option("--config", run_config, "experiment config JSON")->required();

  // ---- sweep-study --------------------------------------------------------
  auto* sweep_study = app.add_subcommand(
      "sweep-study", "Accuracy vs threshold-count grid for both descriptors");
  std::string ss_classifier = "knn:1";
  std::vector<int> ss_nts = {13, 8, 4, 2};
  std::vector<std::string> ss_descriptors = {"phi", "varphi"};
  std::vector<std::string> ss_modes = {"lt", "gt"};
  int ss_folds = 10, ss_repeats = 100;
  add_extract_flags(sweep_study);
  sweep_study->add_option("--n-thresholds-list", ss_nts, "threshold counts")->delimiter(',');
  sweep_study->add_option("--descriptor-list", ss_descriptors, "descriptors")->delimiter(',');
  sweep_study->add_option("--mode-list", ss_modes, "modes")->delimiter(',');
  sweep_study->add_option("--classifier", ss_classifier, "knn:k | nb");
  sweep_study->add_option("--folds", ss_folds, "folds");
  sweep_study->add_option("--repeats", ss_repeats, "repeats");

  // ---- single-threshold-study ----------------------------------------------
  auto* single_study = app.add_subcommand(
      "single-threshold-study", "Accuracy per individual threshold vs the full sweep");
  std::string st_classifier = "knn:1";
  int st_folds = 10, st_repeats = 100;
  add_extract_flags(single_study);
  single_study->add_option("--classifier", st_classifier, "knn:k | nb");
  single_study->add_option("--folds", st_folds, "folds");
  single_study->add_option("--repeats", st_repeats, "repeats");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      cng::ShapeSpec spec;
      spec.kind = parse_shape_kind(gen_kind);
      spec.n_sides_or_tips = gen_sides;
      spec.inner_radius_ratio = gen_ratio;
      spec.n_samples = gen_samples;
      spec.radius = gen_radius;
      spec.center = {gen_center[0], gen_center[1]};
      auto c = cng::generate_shape(spec);
      c.label = gen_label;
      cng::write_contour_csv(c, gen_out);
      std::cout << "wrote " << gen_out << " (" << c.size() << " points)\n";
    } else if (*trace) {
      auto c = cng::trace_boundary(cng::read_pnm(trace_in));
      c.label = trace_label;
      cng::write_contour_csv(c, trace_out);
      std::cout << "wrote " << trace_out << " (" << c.size() << " points)\n";
    } else if (*perturb_cmd) {
      cng::PerturbSpec p;
      p.kind = cngtool::parse_perturb_kind(pert_kind);
      p.angle_deg = pert_angle;
      p.factor = pert_factor;
      p.noise_level = pert_noise;
      p.degrade_fraction = pert_fraction;
      p.seed = pert_seed;
      const auto c = cng::perturb(cng::read_contour_csv(pert_in), p);
      cng::write_contour_csv(c, pert_out);
      std::cout << "wrote " << pert_out << " (" << c.size() << " points)\n";
    } else if (*interp) {
      const auto a = cng::read_contour_csv(interp_a);
      const auto b = cng::read_contour_csv(interp_b);
      const auto c = cng::interpolate(a, b, interp_alpha);
      cng::write_contour_csv(c, interp_out);
      std::cout << "wrote " << interp_out << " (" << c.size() << " points)\n";
    } else if (*extract) {
      const auto plan = plan_from_flags(x_thresholds, x_nt, x_mode);
      const auto contours = cng::load_dataset(x_data, x_skip_bad);
      const auto kind = cngtool::parse_descriptor(x_descriptor);
      const auto features = cngtool::extract_dataset(contours, kind, plan, x_jobs);
      fs::create_directories(x_out);
      cng::write_features_csv(features, fs::path(x_out) / "features.csv",
                              {"seed=" + std::to_string(x_seed)});
      ordered_json sidecar;
      sidecar["layout"] = cng::layout_to_json(features.front().layout);
      sidecar["descriptor"] = x_descriptor;
      sidecar["version"] = cng::kVersion;
      sidecar["seed"] = x_seed;
      cng::write_text_atomic(fs::path(x_out) / "features.json", sidecar.dump(2) + "\n");
      std::cout << "wrote " << (fs::path(x_out) / "features.csv").string() << " ("
                << features.size() << " rows x " << features.front().values.size()
                << " features)\n";
    } else if (*measure) {
      const auto c = cng::read_contour_csv(m_in);
      const auto wnet = cng::build_weighted(c);
      const auto g = cng::threshold(wnet, m_t, cngtool::parse_mode(m_mode));
      const auto [ms, profile] = cng::measure_all(g);
      print_measurements(ms);
      if (!m_profile.empty()) cng::write_text_atomic(m_profile, cng::profile_csv(profile));
      if (!m_edges.empty()) cng::write_text_atomic(m_edges, cng::edge_list_text(g));
    } else if (*curv) {
      const auto c = cng::read_contour_csv(c_in);
      auto sig = cng::curvature_signal(c, c_sigma);
      if (c_norm) sig = cng::normalize_signal(sig);
      cng::write_text_atomic(c_out, cng::curvature_csv(sig));
      std::cout << "wrote " << c_out << "\n";
    } else if (*classify) {
      const auto data = cng::read_features_csv(cl_features);
      const auto spec = cng::ClassifierSpec::parse(cl_classifier);
      const auto report =
          cng::cross_validate(data, spec, cl_folds, cl_repeats, cl_seed, !cl_no_scale, cl_jobs);
      fs::create_directories(cl_out);
      cng::write_text_atomic(fs::path(cl_out) / "report.json",
                             cng::report_to_json(report).dump(2) + "\n");
      cng::write_text_atomic(fs::path(cl_out) / "report.txt",
                             cng::report_table_line(report) + "\n");
      std::cout << cng::report_table_line(report) << "\n";
    } else if (*run) {
      const auto cfg = cngtool::config_from_json(
          ordered_json::parse(cng::read_text(run_config)));
      cngtool::run_experiment(cfg);
    } else if (*sweep_study) {
      const auto contours = cng::load_dataset(x_data, x_skip_bad);
      const auto spec = cng::ClassifierSpec::parse(ss_classifier);
      std::vector<StudyRow> rows;
      for (const auto& mode_str : ss_modes) {
        for (int nt : ss_nts) {
          const auto plan = cng::uniform_plan(nt, cngtool::parse_mode(mode_str));
          for (const auto& desc : ss_descriptors) {
            const auto kind = cngtool::parse_descriptor(desc);
            const auto features = cngtool::extract_dataset(contours, kind, plan, x_jobs);
            const auto data = cng::LabeledDataset::from_feature_vectors(features);
            StudyRow row;
            row.descriptor = desc;
            row.mode = mode_str;
            row.n_thresholds = nt;
            row.report =
                cng::cross_validate(data, spec, ss_folds, ss_repeats, x_seed, true, x_jobs);
            std::cout << desc << " " << mode_str << " n_T=" << nt << ": "
                      << cng::report_table_line(row.report) << "\n";
            rows.push_back(std::move(row));
          }
        }
      }
      std::string csv = "descriptor,mode,n_thresholds,mean_accuracy,std_dev\n";
      for (const auto& row : rows) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.4f,%.4f\n", row.descriptor.c_str(),
                      row.mode.c_str(), row.n_thresholds, row.report.mean_accuracy,
                      row.report.std_dev);
        csv += buf;
      }
      fs::create_directories(x_out);
      cng::write_text_atomic(fs::path(x_out) / "sweep_study.csv", csv);
      std::cout << "wrote " << (fs::path(x_out) / "sweep_study.csv").string() << "\n";
    } else if (*single_study) {
      const auto contours = cng::load_dataset(x_data, x_skip_bad);
      const auto spec = cng::ClassifierSpec::parse(st_classifier);
      const auto plan = plan_from_flags(x_thresholds, x_nt, x_mode);
      const auto features = cngtool::extract_dataset(
          contours, cng::DescriptorKind::phi, plan, x_jobs);
      std::string csv = "threshold,mean_accuracy,std_dev\n";
      // Individual thresholds: the 7-measurement slice at each plan entry.
      for (std::size_t t = 0; t < plan.thresholds.size(); ++t) {
        std::vector<cng::FeatureVector> sliced(features.size());
        for (std::size_t i = 0; i < features.size(); ++i) {
          cng::FeatureVector fv;
          fv.layout = {cng::DescriptorKind::single_t, {plan.thresholds[t]}, plan.mode};
          fv.label = features[i].label;
          fv.values.assign(features[i].values.begin() + static_cast<std::ptrdiff_t>(7 * t),
                           features[i].values.begin() + static_cast<std::ptrdiff_t>(7 * t + 7));
          sliced[i] = std::move(fv);
        }
        const auto data = cng::LabeledDataset::from_feature_vectors(sliced);
        const auto report =
            cng::cross_validate(data, spec, st_folds, st_repeats, x_seed, true, x_jobs);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.6f,%.4f,%.4f\n", plan.thresholds[t],
                      report.mean_accuracy, report.std_dev);
        csv += buf;
        std::cout << "t=" << plan.thresholds[t] << ": " << cng::report_table_line(report) << "\n";
      }
      const auto full = cng::cross_validate(cng::LabeledDataset::from_feature_vectors(features),
                                            spec, st_folds, st_repeats, x_seed, true, x_jobs);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "full_sweep,%.4f,%.4f\n", full.mean_accuracy, full.std_dev);
      csv += buf;
      std::cout << "full sweep: " << cng::report_table_line(full) << "\n";
      fs::create_directories(x_out);
      cng::write_text_atomic(fs::path(x_out) / "single_threshold_study.csv", csv);
      std::cout << "wrote " << (fs::path(x_out) / "single_threshold_study.csv").string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
