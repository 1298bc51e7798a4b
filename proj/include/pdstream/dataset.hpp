#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdstream {

/// Binary class labels. Legitimate traffic is class 0, malicious is class 1.
enum class Label : int { Legitimate = 0, Malicious = 1 };

inline const char* label_name(Label l) {
  return l == Label::Legitimate ? "legitimate" : "malicious";
}

/// One observation: a feature vector, optionally labeled.
/// Feature values are expected to live in [0,1] once normalized.
struct Sample {
  std::vector<double> features;
  std::optional<Label> label;

  Sample() = default;
  Sample(std::vector<double> f, std::optional<Label> l = std::nullopt)
      : features(std::move(f)), label(l) {}
};

/// An ordered collection of samples sharing one dimensionality.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::size_t dim) : dim_(dim) {}

  void add(Sample s);
  void reserve(std::size_t n) { samples_.reserve(n); }

  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  std::size_t dim() const { return dim_; }

  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  Sample& operator[](std::size_t i) { return samples_[i]; }

  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  /// Count of labeled samples per class.
  std::map<Label, std::size_t> class_counts() const;
  std::size_t count(Label l) const;
  bool has_both_classes() const;

 private:
  std::vector<Sample> samples_;
  std::size_t dim_ = 0;
};

/// Per-feature (min, max) captured when a dataset is normalized, so the
/// identical affine transform can be applied to later stream samples.
struct NormalizationRecord {
  std::vector<double> mins;
  std::vector<double> maxs;

  void save_csv(const std::string& path) const;
  static NormalizationRecord load_csv(const std::string& path);
};

/// Rescale every feature to [0,1] by (x - min) / (max - min).
/// Constant features map to 0.0.
Dataset normalize(const Dataset& d, NormalizationRecord* record = nullptr);

/// Apply a previously captured normalization to a single sample.
Sample apply_normalization(const NormalizationRecord& rec, Sample s);

/// Load a labeled dataset from a headered CSV file. The named label column
/// must contain exactly two distinct values; `legit_value`, when non-empty,
/// names the value mapped to Legitimate. Otherwise values "0"/"1" map
/// directly and any other pair maps its lexicographically smaller value to
/// Legitimate. Raw (unnormalized) feature values are preserved.
Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& legit_value = "");

/// Two-class Gaussian dataset: Legitimate ~ N(0.75, 0.05) and
/// Malicious ~ N(0.25, 0.05) per dimension, clipped to [0,1]. Classes are
/// interleaved so contiguous slices stay balanced.
Dataset generate_synthetic(std::size_t n_per_class, std::size_t dim,
                           std::uint64_t rng_seed);

}  // namespace pdstream
