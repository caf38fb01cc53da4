#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ood_relabel/matrix.hpp"
#include "ood_relabel/soft_label.hpp"

namespace oodrel {

/// One training or test example. The payload is a feature matrix
/// (frames x bands) or a raw vector stored as a single row; for corpora loaded
/// from a manifest it stays empty until features are extracted and the clip is
/// referenced through audio_path instead.
struct Instance {
  std::string id;
  Matrix payload;
  SoftLabel label;
  bool verified = false;
  /// Synthetic ground truth only: the generating cluster for ID points,
  /// nullopt for OOD points. Never exposed to the classifiers.
  std::optional<std::size_t> source_class_index;
  std::string audio_path;
};

class LabeledCorpus {
 public:
  LabeledCorpus() = default;
  LabeledCorpus(std::size_t num_classes, std::vector<std::string> class_names)
      : num_classes_(num_classes), class_names_(std::move(class_names)) {}

  std::size_t num_classes() const { return num_classes_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<Instance>& instances() const { return instances_; }
  std::vector<Instance>& instances() { return instances_; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }

  /// Appends an instance, enforcing unique ids and label dimension K.
  void add(Instance instance);

  const Instance& operator[](std::size_t i) const { return instances_[i]; }
  Instance& operator[](std::size_t i) { return instances_[i]; }

 private:
  std::size_t num_classes_ = 0;
  std::vector<std::string> class_names_;
  std::vector<Instance> instances_;
};

/// Desk-scale surrogate for an OOD-corrupted audio corpus: K Gaussian clusters
/// on a circle plus mislabelled OOD clusters placed near (cluster midpoints)
/// or far (10x the circle radius).
struct SyntheticSpec {
  std::size_t num_classes = 4;
  std::size_t points_per_class = 50;
  double ood_fraction = 0.3;
  bool near_ood = true;
  double cluster_spread = 1.0;
  /// Fraction of ID instances marked verified, applied per class.
  double verified_fraction = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Reads a UTF-8 CSV manifest with header `fname,label,manually_verified`
/// (flag values 0/1). Every row must name an existing file under audio_root.
/// When expected_class_names is empty the class set is the sorted set of
/// distinct labels in the manifest; otherwise labels must come from the given
/// list (enabling e.g. a test manifest to reuse the training class set).
LabeledCorpus load_manifest(const std::string& manifest_path, const std::string& audio_root,
                            const std::vector<std::string>& expected_class_names = {});

/// Splits into (verified, unverified). Errors when the corpus is empty or has
/// no verified instances (the auxiliary classifier could not be trained).
std::pair<LabeledCorpus, LabeledCorpus> partition_clean_noisy(const LabeledCorpus& corpus);

/// Samples per_class verified instances per class without replacement into a
/// validation corpus; the remainder (verified and unverified) becomes the
/// train corpus. Deterministic for a fixed seed.
std::pair<LabeledCorpus, LabeledCorpus> split_validation(const LabeledCorpus& corpus,
                                                         std::size_t per_class,
                                                         std::uint64_t seed);

LabeledCorpus generate_synthetic_corpus(const SyntheticSpec& spec);

}  // namespace oodrel
