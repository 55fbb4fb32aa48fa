#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/descriptor.hpp"
#include "contourgraph/parallel.hpp"
#include "contourgraph/rng.hpp"

namespace cng {

/// Feature matrix with labels. Class ids follow first appearance order in
/// the sample list, which makes tie-breaking rules deterministic.
struct LabeledDataset {
  std::vector<std::vector<double>> features;
  std::vector<std::string> labels;
  std::vector<std::string> ids;
  std::vector<std::string> columns;
  std::vector<std::string> classes;
  std::vector<int> class_ids;

  std::size_t size() const { return features.size(); }
  std::size_t dim() const { return features.empty() ? 0 : features.front().size(); }

  static LabeledDataset from_rows(std::vector<std::vector<double>> rows,
                                  std::vector<std::string> row_labels,
                                  std::vector<std::string> column_names = {},
                                  std::vector<std::string> row_ids = {}) {
    require(!rows.empty(), "dataset: no samples");
    require(rows.size() == row_labels.size(), "dataset: labels do not match rows");
    const std::size_t dim = rows.front().size();
    LabeledDataset d;
    for (const auto& r : rows) {
      require(r.size() == dim, "dataset: inconsistent feature dimensions");
    }
    d.features = std::move(rows);
    d.labels = std::move(row_labels);
    d.columns = std::move(column_names);
    d.ids = std::move(row_ids);
    d.class_ids.reserve(d.labels.size());
    for (const auto& label : d.labels) {
      require(!label.empty(), "dataset: every sample needs a label");
      auto it = std::find(d.classes.begin(), d.classes.end(), label);
      if (it == d.classes.end()) {
        d.classes.push_back(label);
        d.class_ids.push_back(static_cast<int>(d.classes.size()) - 1);
      } else {
        d.class_ids.push_back(static_cast<int>(it - d.classes.begin()));
      }
    }
    return d;
  }

  static LabeledDataset from_feature_vectors(const std::vector<FeatureVector>& vectors) {
    require(!vectors.empty(), "dataset: no feature vectors");
    const FeatureLayout& layout = vectors.front().layout;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels, ids;
    for (const auto& fv : vectors) {
      require(fv.layout == layout, "dataset: feature vectors have mixed layouts");
      rows.push_back(fv.values);
      labels.push_back(fv.label);
      ids.push_back(fv.id);
    }
    return from_rows(std::move(rows), std::move(labels), column_names(layout),
                     std::move(ids));
  }
};

/// Per-dimension min-max rescaling to [0,1], fitted on a subset of samples.
/// Constant dimensions map to 0.
class MinMaxScaler {
 public:
  void fit(const std::vector<std::vector<double>>& rows, const std::vector<int>& indices) {
    require(!indices.empty(), "scaler: nothing to fit on");
    const std::size_t dim = rows[static_cast<std::size_t>(indices.front())].size();
    lo_.assign(dim, std::numeric_limits<double>::infinity());
    hi_.assign(dim, -std::numeric_limits<double>::infinity());
    for (int idx : indices) {
      const auto& r = rows[static_cast<std::size_t>(idx)];
      for (std::size_t d = 0; d < dim; ++d) {
        lo_[d] = std::min(lo_[d], r[d]);
        hi_[d] = std::max(hi_[d], r[d]);
      }
    }
  }

  std::vector<double> transform(const std::vector<double>& x) const {
    require(x.size() == lo_.size(), "scaler: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double span = hi_[d] - lo_[d];
      out[d] = span > 0.0 ? (x[d] - lo_[d]) / span : 0.0;
    }
    return out;
  }

 private:
  std::vector<double> lo_, hi_;
};

/// Minimal classifier interface so further classifiers can slot into the
/// harness. fit() receives an already-scaled feature matrix.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void fit(std::vector<std::vector<double>> x, std::vector<int> y, int n_classes) = 0;
  virtual int predict(const std::vector<double>& x) const = 0;
  virtual std::string name() const = 0;
};

/// k-nearest neighbors with Euclidean distance. Distance ties break toward
/// the lower training index; vote ties break toward the class encountered
/// first in the sorted neighbor order.
class KnnClassifier : public Classifier {
 public:
  explicit KnnClassifier(int k) : k_(k) { require(k >= 1, "knn: k must be >= 1"); }

  void fit(std::vector<std::vector<double>> x, std::vector<int> y, int n_classes) override {
    require(!x.empty(), "knn: empty training set");
    require(static_cast<std::size_t>(k_) <= x.size(), "knn: k exceeds training size");
    x_ = std::move(x);
    y_ = std::move(y);
    n_classes_ = n_classes;
  }

  int predict(const std::vector<double>& q) const override {
    require(q.size() == x_.front().size(), "knn: query dimension mismatch");
    std::vector<std::pair<double, int>> order(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      double d2 = 0.0;
      for (std::size_t d = 0; d < q.size(); ++d) {
        const double diff = q[d] - x_[i][d];
        d2 += diff * diff;
      }
      order[i] = {d2, static_cast<int>(i)};
    }
    const std::size_t k = static_cast<std::size_t>(k_);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
    std::vector<int> votes(static_cast<std::size_t>(n_classes_), 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(y_[static_cast<std::size_t>(order[i].second)])];
    const int best = *std::max_element(votes.begin(), votes.end());
    for (std::size_t i = 0; i < k; ++i) {
      const int cls = y_[static_cast<std::size_t>(order[i].second)];
      if (votes[static_cast<std::size_t>(cls)] == best) return cls;
    }
    return y_[static_cast<std::size_t>(order[0].second)];
  }

  std::string name() const override { return "knn:" + std::to_string(k_); }

 private:
  int k_;
  int n_classes_ = 0;
  std::vector<std::vector<double>> x_;
  std::vector<int> y_;
};

/// Gaussian Naive Bayes with per-class, per-feature variance floored at 1e-9
/// and priors from class frequencies. Score ties break toward the lower
/// class id.
class NaiveBayesClassifier : public Classifier {
 public:
  void fit(std::vector<std::vector<double>> x, std::vector<int> y, int n_classes) override {
    require(!x.empty(), "nb: empty training set");
    const std::size_t dim = x.front().size();
    mean_.assign(static_cast<std::size_t>(n_classes), std::vector<double>(dim, 0.0));
    var_.assign(static_cast<std::size_t>(n_classes), std::vector<double>(dim, 0.0));
    log_prior_.assign(static_cast<std::size_t>(n_classes), 0.0);
    std::vector<int> count(static_cast<std::size_t>(n_classes), 0);
    for (std::size_t i = 0; i < x.size(); ++i) ++count[static_cast<std::size_t>(y[i])];
    for (int c = 0; c < n_classes; ++c) {
      require(count[static_cast<std::size_t>(c)] >= 2,
              "nb: every class needs at least 2 training samples");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto& m = mean_[static_cast<std::size_t>(y[i])];
      for (std::size_t d = 0; d < dim; ++d) m[d] += x[i][d];
    }
    for (int c = 0; c < n_classes; ++c) {
      for (std::size_t d = 0; d < dim; ++d) mean_[static_cast<std::size_t>(c)][d] /= count[static_cast<std::size_t>(c)];
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& m = mean_[static_cast<std::size_t>(y[i])];
      auto& v = var_[static_cast<std::size_t>(y[i])];
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = x[i][d] - m[d];
        v[d] += diff * diff;
      }
    }
    for (int c = 0; c < n_classes; ++c) {
      for (std::size_t d = 0; d < dim; ++d) {
        double& v = var_[static_cast<std::size_t>(c)][d];
        v = std::max(v / count[static_cast<std::size_t>(c)], 1e-9);
      }
      log_prior_[static_cast<std::size_t>(c)] =
          std::log(static_cast<double>(count[static_cast<std::size_t>(c)]) / static_cast<double>(x.size()));
    }
  }

  int predict(const std::vector<double>& q) const override {
    require(!mean_.empty() && q.size() == mean_.front().size(), "nb: query dimension mismatch");
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < mean_.size(); ++c) {
      double score = log_prior_[c];
      for (std::size_t d = 0; d < q.size(); ++d) {
        const double diff = q[d] - mean_[c][d];
        score += -0.5 * std::log(2.0 * std::numbers::pi * var_[c][d]) -
                 diff * diff / (2.0 * var_[c][d]);
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(c);
      }
    }
    return best;
  }

  std::string name() const override { return "nb"; }

 private:
  std::vector<std::vector<double>> mean_, var_;
  std::vector<double> log_prior_;
};

struct ClassifierSpec {
  enum class Kind { knn, nb };
  Kind kind = Kind::knn;
  int k = 1;

  static ClassifierSpec parse(const std::string& text) {
    ClassifierSpec spec;
    if (text == "nb") {
      spec.kind = Kind::nb;
      return spec;
    }
    if (text == "knn" || text.rfind("knn:", 0) == 0) {
      spec.kind = Kind::knn;
      spec.k = text == "knn" ? 1 : std::stoi(text.substr(4));
      require(spec.k >= 1, "classifier: knn needs k >= 1");
      return spec;
    }
    throw std::invalid_argument("classifier: unknown spec '" + text + "' (want knn:k or nb)");
  }

  std::unique_ptr<Classifier> make() const {
    if (kind == Kind::nb) return std::make_unique<NaiveBayesClassifier>();
    return std::make_unique<KnnClassifier>(k);
  }

  std::string name() const { return kind == Kind::nb ? "nb" : "knn:" + std::to_string(k); }
};

/// Classifies one query against a labeled training set: majority label among
/// the k nearest by Euclidean distance on min-max-rescaled features, the
/// scaler fitted on the training set.
inline std::string knn_classify(const LabeledDataset& train, const std::vector<double>& query,
                                int k, bool scale = true) {
  require(!train.features.empty(), "knn: empty training set");
  require(query.size() == train.dim(), "knn: query dimension mismatch");
  std::vector<int> all(train.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  MinMaxScaler scaler;
  std::vector<std::vector<double>> x = train.features;
  std::vector<double> q = query;
  if (scale) {
    scaler.fit(train.features, all);
    for (auto& row : x) row = scaler.transform(row);
    q = scaler.transform(q);
  }
  KnnClassifier clf(k);
  clf.fit(std::move(x), train.class_ids, static_cast<int>(train.classes.size()));
  return train.classes[static_cast<std::size_t>(clf.predict(q))];
}

inline std::string knn_classify(const LabeledDataset& train, const FeatureVector& query,
                                int k, bool scale = true) {
  return knn_classify(train, query.values, k, scale);
}

struct NBModel {
  MinMaxScaler scaler;
  bool scaled = true;
  NaiveBayesClassifier nb;
  std::vector<std::string> classes;
};

inline NBModel nb_fit(const LabeledDataset& train, bool scale = true) {
  NBModel model;
  model.scaled = scale;
  model.classes = train.classes;
  std::vector<int> all(train.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<double>> x = train.features;
  if (scale) {
    model.scaler.fit(train.features, all);
    for (auto& row : x) row = model.scaler.transform(row);
  }
  model.nb.fit(std::move(x), train.class_ids, static_cast<int>(train.classes.size()));
  return model;
}

inline std::string nb_predict(const NBModel& model, const std::vector<double>& query) {
  const std::vector<double> q = model.scaled ? model.scaler.transform(query) : query;
  return model.classes[static_cast<std::size_t>(model.nb.predict(q))];
}

inline std::string nb_predict(const NBModel& model, const FeatureVector& query) {
  return nb_predict(model, query.values);
}

/// Outcome of a repeated cross-validation run. The confusion matrix is summed
/// over all repeats: row = true class, column = predicted class.
struct AccuracyReport {
  double mean_accuracy = 0.0;  // percent
  double std_dev = 0.0;        // percent, over repeats
  int n_folds = 0;
  int n_repeats = 0;
  std::uint64_t seed = 0;
  bool scaled = true;
  std::string classifier;
  std::vector<std::string> classes;
  std::vector<std::vector<long long>> confusion;
  std::vector<double> per_repeat_accuracy;
};

/// Stratified n-fold cross-validation repeated n_repeats times. Fold
/// assignment for repeat r comes from a stream derived from (seed, r), so
/// serial and parallel runs agree bit for bit. Any feature scaling is fitted
/// on the training folds only.
inline AccuracyReport cross_validate(const LabeledDataset& data, const ClassifierSpec& spec,
                                     int n_folds, int n_repeats, std::uint64_t seed,
                                     bool scale = true, int jobs = 1) {
  require(n_folds >= 2, "cross_validate: need at least 2 folds");
  require(n_repeats >= 1, "cross_validate: need at least 1 repeat");
  const int n_classes = static_cast<int>(data.classes.size());
  require(n_classes >= 2, "cross_validate: need at least 2 classes");
  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(n_classes));
  for (std::size_t i = 0; i < data.size(); ++i) {
    by_class[static_cast<std::size_t>(data.class_ids[i])].push_back(static_cast<int>(i));
  }
  for (int c = 0; c < n_classes; ++c) {
    require(static_cast<int>(by_class[static_cast<std::size_t>(c)].size()) >= n_folds,
            "cross_validate: class '" + data.classes[static_cast<std::size_t>(c)] +
                "' has fewer instances (" +
                std::to_string(by_class[static_cast<std::size_t>(c)].size()) +
                ") than folds (" + std::to_string(n_folds) + ")");
  }

  struct RepeatOutcome {
    double accuracy = 0.0;
    std::vector<std::vector<long long>> confusion;
  };
  std::vector<RepeatOutcome> outcomes(static_cast<std::size_t>(n_repeats));

  parallel_for(static_cast<std::size_t>(n_repeats), jobs, [&](std::size_t r) {
    Rng rng(derive_seed(seed, r));
    std::vector<int> fold_of(data.size(), -1);
    for (int c = 0; c < n_classes; ++c) {
      std::vector<int> idx = by_class[static_cast<std::size_t>(c)];
      rng.shuffle(idx);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        fold_of[static_cast<std::size_t>(idx[q])] = static_cast<int>(q) % n_folds;
      }
    }
    RepeatOutcome& oc = outcomes[r];
    oc.confusion.assign(static_cast<std::size_t>(n_classes),
                        std::vector<long long>(static_cast<std::size_t>(n_classes), 0));
    long long correct = 0;
    for (int f = 0; f < n_folds; ++f) {
      std::vector<int> train_idx, test_idx;
      for (std::size_t i = 0; i < data.size(); ++i) {
        (fold_of[i] == f ? test_idx : train_idx).push_back(static_cast<int>(i));
      }
      MinMaxScaler scaler;
      if (scale) scaler.fit(data.features, train_idx);
      std::vector<std::vector<double>> x;
      std::vector<int> y;
      x.reserve(train_idx.size());
      y.reserve(train_idx.size());
      for (int i : train_idx) {
        x.push_back(scale ? scaler.transform(data.features[static_cast<std::size_t>(i)])
                          : data.features[static_cast<std::size_t>(i)]);
        y.push_back(data.class_ids[static_cast<std::size_t>(i)]);
      }
      auto clf = spec.make();
      clf->fit(std::move(x), std::move(y), n_classes);
      for (int i : test_idx) {
        const auto q = scale ? scaler.transform(data.features[static_cast<std::size_t>(i)])
                             : data.features[static_cast<std::size_t>(i)];
        const int predicted = clf->predict(q);
        const int truth = data.class_ids[static_cast<std::size_t>(i)];
        ++oc.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(predicted)];
        if (predicted == truth) ++correct;
      }
    }
    oc.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(data.size());
  });

  AccuracyReport report;
  report.n_folds = n_folds;
  report.n_repeats = n_repeats;
  report.seed = seed;
  report.scaled = scale;
  report.classifier = spec.name();
  report.classes = data.classes;
  report.confusion.assign(static_cast<std::size_t>(n_classes),
                          std::vector<long long>(static_cast<std::size_t>(n_classes), 0));
  double sum = 0.0;
  for (const auto& oc : outcomes) {
    report.per_repeat_accuracy.push_back(oc.accuracy);
    sum += oc.accuracy;
    for (int a = 0; a < n_classes; ++a) {
      for (int b = 0; b < n_classes; ++b) {
        report.confusion[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
            oc.confusion[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
  }
  report.mean_accuracy = sum / n_repeats;
  if (n_repeats > 1) {
    double ss = 0.0;
    for (const auto& oc : outcomes) {
      const double d = oc.accuracy - report.mean_accuracy;
      ss += d * d;
    }
    report.std_dev = std::sqrt(ss / (n_repeats - 1));
  }
  return report;
}

}  // namespace cng
