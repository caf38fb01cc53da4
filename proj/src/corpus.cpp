#include "ood_relabel/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ood_relabel/rng.hpp"

namespace oodrel {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void LabeledCorpus::add(Instance instance) {
  if (instance.label.num_classes() != num_classes_)
    throw std::invalid_argument("corpus: label dimension " +
                                std::to_string(instance.label.num_classes()) +
                                " does not match K=" + std::to_string(num_classes_));
  for (const auto& existing : instances_)
    if (existing.id == instance.id)
      throw std::invalid_argument("corpus: duplicate instance id '" + instance.id + "'");
  instances_.push_back(std::move(instance));
}

void SyntheticSpec::validate() const {
  if (num_classes < 2) throw std::invalid_argument("SyntheticSpec: num_classes must be >= 2");
  if (points_per_class < 1)
    throw std::invalid_argument("SyntheticSpec: points_per_class must be >= 1");
  if (ood_fraction < 0.0 || ood_fraction > 1.0)
    throw std::invalid_argument("SyntheticSpec: ood_fraction must be in [0,1]");
  if (ood_fraction >= 1.0)
    throw std::invalid_argument("SyntheticSpec: ood_fraction must be < 1 (no ID data otherwise)");
  if (cluster_spread <= 0.0)
    throw std::invalid_argument("SyntheticSpec: cluster_spread must be positive");
  if (verified_fraction < 0.0 || verified_fraction > 1.0)
    throw std::invalid_argument("SyntheticSpec: verified_fraction must be in [0,1]");
}

LabeledCorpus load_manifest(const std::string& manifest_path, const std::string& audio_root,
                            const std::vector<std::string>& expected_class_names) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("manifest: cannot open '" + manifest_path + "'");

  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("manifest '" + manifest_path + "': empty corpus");
  if (strip(header) != "fname,label,manually_verified")
    throw std::runtime_error("manifest '" + manifest_path +
                             "': expected header 'fname,label,manually_verified', got '" +
                             strip(header) + "'");

  struct Row {
    std::string fname, label;
    bool verified;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const auto fields = split_csv_line(strip(line));
    if (fields.size() != 3)
      throw std::runtime_error("manifest row " + std::to_string(line_no) + ": expected 3 fields, got " +
                               std::to_string(fields.size()));
    const std::string flag = strip(fields[2]);
    if (flag != "0" && flag != "1")
      throw std::runtime_error("manifest row " + std::to_string(line_no) +
                               ": manually_verified must be 0 or 1, got '" + flag + "'");
    rows.push_back({strip(fields[0]), strip(fields[1]), flag == "1"});
  }
  if (rows.empty()) throw std::runtime_error("manifest '" + manifest_path + "': empty corpus");

  std::vector<std::string> class_names = expected_class_names;
  if (class_names.empty()) {
    std::set<std::string> names;
    for (const auto& row : rows) names.insert(row.label);
    class_names.assign(names.begin(), names.end());
  }
  std::unordered_map<std::string, std::size_t> class_index;
  for (std::size_t i = 0; i < class_names.size(); ++i) class_index[class_names[i]] = i;

  LabeledCorpus corpus(class_names.size(), class_names);
  for (const auto& row : rows) {
    const auto it = class_index.find(row.label);
    if (it == class_index.end()) {
      std::string valid;
      for (const auto& name : class_names) valid += (valid.empty() ? "" : ", ") + name;
      throw std::runtime_error("manifest: unknown class name '" + row.label +
                               "' for '" + row.fname + "'; valid names: " + valid);
    }
    const auto path = std::filesystem::path(audio_root) / row.fname;
    if (!std::filesystem::exists(path))
      throw std::runtime_error("manifest: audio file '" + row.fname + "' not found under '" +
                               audio_root + "'");
    Instance instance;
    instance.id = row.fname;
    instance.label = SoftLabel::one_hot(it->second, class_names.size());
    instance.verified = row.verified;
    instance.audio_path = path.string();
    corpus.add(std::move(instance));
  }
  return corpus;
}

std::pair<LabeledCorpus, LabeledCorpus> partition_clean_noisy(const LabeledCorpus& corpus) {
  if (corpus.empty()) throw std::invalid_argument("partition_clean_noisy: empty corpus");
  LabeledCorpus clean(corpus.num_classes(), corpus.class_names());
  LabeledCorpus noisy(corpus.num_classes(), corpus.class_names());
  for (const auto& instance : corpus.instances())
    (instance.verified ? clean : noisy).add(instance);
  if (clean.empty())
    throw std::runtime_error(
        "partition_clean_noisy: no verified instances; the auxiliary classifier cannot be trained");
  return {std::move(clean), std::move(noisy)};
}

std::pair<LabeledCorpus, LabeledCorpus> split_validation(const LabeledCorpus& corpus,
                                                         std::size_t per_class,
                                                         std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> verified_by_class(corpus.num_classes());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& instance = corpus[i];
    if (instance.verified) verified_by_class[instance.label.argmax()].push_back(i);
  }
  for (std::size_t k = 0; k < corpus.num_classes(); ++k)
    if (verified_by_class[k].size() < per_class)
      throw std::runtime_error("split_validation: class '" + corpus.class_names()[k] + "' has only " +
                               std::to_string(verified_by_class[k].size()) +
                               " verified instances, need " + std::to_string(per_class));

  Rng rng(seed);
  std::unordered_set<std::size_t> validation_indices;
  for (auto& indices : verified_by_class) {
    rng.shuffle(indices);
    for (std::size_t j = 0; j < per_class; ++j) validation_indices.insert(indices[j]);
  }

  LabeledCorpus train(corpus.num_classes(), corpus.class_names());
  LabeledCorpus validation(corpus.num_classes(), corpus.class_names());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    (validation_indices.count(i) ? validation : train).add(corpus[i]);
  return {std::move(train), std::move(validation)};
}

LabeledCorpus generate_synthetic_corpus(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const std::size_t K = spec.num_classes;
  std::vector<std::string> class_names;
  for (std::size_t k = 0; k < K; ++k) class_names.push_back("class_" + std::to_string(k));
  LabeledCorpus corpus(K, class_names);

  const double radius = 3.0 * spec.cluster_spread;
  constexpr double kPi = 3.14159265358979323846;
  std::vector<std::pair<double, double>> id_means(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(K);
    id_means[k] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  // OOD clusters: chord midpoints of adjacent ID means when near, the same
  // directions pushed to 10x the circle radius when far.
  std::vector<std::pair<double, double>> ood_means(K);
  for (std::size_t k = 0; k < K; ++k) {
    const auto& a = id_means[k];
    const auto& b = id_means[(k + 1) % K];
    double mx = 0.5 * (a.first + b.first);
    double my = 0.5 * (a.second + b.second);
    if (!spec.near_ood) {
      const double norm = std::sqrt(mx * mx + my * my);
      const double scale = norm > 0.0 ? 10.0 * radius / norm : 0.0;
      mx *= scale;
      my *= scale;
    }
    ood_means[k] = {mx, my};
  }

  std::size_t counter = 0;
  const auto next_id = [&counter] {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "syn_%06zu", counter++);
    return std::string(buf);
  };

  const std::size_t num_id = K * spec.points_per_class;
  const std::size_t verified_per_class = static_cast<std::size_t>(
      std::llround(spec.verified_fraction * static_cast<double>(spec.points_per_class)));

  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < spec.points_per_class; ++j) {
      Instance instance;
      instance.id = next_id();
      instance.payload = Matrix::row_vector(
          {rng.normal(id_means[k].first, spec.cluster_spread),
           rng.normal(id_means[k].second, spec.cluster_spread)});
      instance.label = SoftLabel::one_hot(k, K);
      instance.verified = j < verified_per_class;
      instance.source_class_index = k;
      corpus.add(std::move(instance));
    }
  }

  // Smallest count whose share of the final corpus reaches ood_fraction;
  // equals ceil(ood_fraction * total).
  const std::size_t num_ood =
      spec.ood_fraction > 0.0
          ? static_cast<std::size_t>(std::ceil(
                spec.ood_fraction * static_cast<double>(num_id) / (1.0 - spec.ood_fraction) - 1e-12))
          : 0;
  for (std::size_t j = 0; j < num_ood; ++j) {
    const std::size_t cluster = rng.uniform_int(K);
    Instance instance;
    instance.id = next_id();
    instance.payload = Matrix::row_vector(
        {rng.normal(ood_means[cluster].first, spec.cluster_spread),
         rng.normal(ood_means[cluster].second, spec.cluster_spread)});
    instance.label = SoftLabel::one_hot(rng.uniform_int(K), K);
    instance.verified = false;
    instance.source_class_index = std::nullopt;
    corpus.add(std::move(instance));
  }
  return corpus;
}

}  // namespace oodrel
