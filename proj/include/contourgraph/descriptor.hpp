#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"
#include "contourgraph/metrics.hpp"
#include "contourgraph/network.hpp"

namespace cng {

enum class DescriptorKind { phi, varphi, single_t };

inline std::string to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::phi: return "phi";
    case DescriptorKind::varphi: return "varphi";
    case DescriptorKind::single_t: return "single_t";
  }
  return "phi";
}

/// Fixed measurement order of one threshold block of the generalized
/// descriptor: <k>, <k2>, <k3>, <cc>, <l>, rho, <b>.
inline const std::vector<std::string>& phi_measurement_names() {
  static const std::vector<std::string> names = {"k", "k2", "k3", "cc", "l", "rho", "b"};
  return names;
}

/// Degree-only descriptor block: average then maximum degree.
inline const std::vector<std::string>& varphi_measurement_names() {
  static const std::vector<std::string> names = {"kmu", "kmax"};
  return names;
}

/// Self-describing layout of a feature vector: kind, threshold schedule and
/// comparison mode fully determine the meaning of every position.
struct FeatureLayout {
  DescriptorKind kind = DescriptorKind::phi;
  std::vector<double> thresholds;
  ThresholdMode mode = ThresholdMode::smaller_than;

  std::size_t length() const {
    const std::size_t per =
        kind == DescriptorKind::varphi ? varphi_measurement_names().size()
                                       : phi_measurement_names().size();
    return per * thresholds.size();
  }

  bool operator==(const FeatureLayout&) const = default;
};

inline std::vector<std::string> column_names(const FeatureLayout& layout) {
  const auto& names = layout.kind == DescriptorKind::varphi
                          ? varphi_measurement_names()
                          : phi_measurement_names();
  std::vector<std::string> out;
  out.reserve(layout.length());
  char buf[64];
  for (double t : layout.thresholds) {
    for (const auto& name : names) {
      std::snprintf(buf, sizeof(buf), "%s_T%.3f", name.c_str(), t);
      out.emplace_back(buf);
    }
  }
  return out;
}

struct FeatureVector {
  std::vector<double> values;
  FeatureLayout layout;
  std::string label;
  std::string id;
};

/// Generalized descriptor: for each threshold of the plan, in order, the
/// seven structural measurements of the thresholded graph.
inline FeatureVector extract_phi(const Contour& c, const SweepPlan& plan) {
  FeatureVector fv;
  fv.layout = {DescriptorKind::phi, plan.thresholds, plan.mode};
  fv.label = c.label;
  fv.id = c.id;
  const WeightedNet wnet = build_weighted(c);
  const auto graphs = sweep(wnet, plan);
  fv.values.reserve(fv.layout.length());
  for (const auto& g : graphs) {
    const auto [ms, profile] = measure_all(g);
    for (double v : ms.descriptor_block()) fv.values.push_back(v);
  }
  return fv;
}

/// Degree-only descriptor: [average degree, max degree] per threshold.
inline FeatureVector extract_varphi(const Contour& c, const SweepPlan& plan) {
  FeatureVector fv;
  fv.layout = {DescriptorKind::varphi, plan.thresholds, plan.mode};
  fv.label = c.label;
  fv.id = c.id;
  const WeightedNet wnet = build_weighted(c);
  const auto graphs = sweep(wnet, plan);
  fv.values.reserve(fv.layout.length());
  for (const auto& g : graphs) {
    const DegreeStats ds = degree_stats(g);
    fv.values.push_back(ds.avg);
    fv.values.push_back(static_cast<double>(ds.max));
  }
  return fv;
}

/// The seven-measurement tuple at a single threshold.
inline FeatureVector extract_single(const Contour& c, double t, ThresholdMode mode) {
  FeatureVector fv;
  fv.layout = {DescriptorKind::single_t, {t}, mode};
  fv.label = c.label;
  fv.id = c.id;
  const WeightedNet wnet = build_weighted(c);
  const ThresholdGraph g = threshold(wnet, t, mode);
  const auto [ms, profile] = measure_all(g);
  for (double v : ms.descriptor_block()) fv.values.push_back(v);
  return fv;
}

}  // namespace cng
