#include "starcount/table.hpp"

#include <algorithm>

#include "starcount/errors.hpp"

namespace starcount {

TableColumn TableColumn::from_counts(std::span<const std::uint64_t> counts) {
  std::vector<std::string> labels;
  labels.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) labels.push_back(std::to_string(i));
  return from_labeled_counts(std::move(labels), counts);
}

TableColumn TableColumn::from_labeled_counts(std::vector<std::string> labels,
                                             std::span<const std::uint64_t> counts) {
  if (labels.size() != counts.size()) {
    throw InvalidArgument("label list and count list differ in length");
  }
  TableColumn t;
  t.labels_ = std::move(labels);
  t.counts_.assign(counts.begin(), counts.end());
  t.prefix_.reserve(counts.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < t.counts_.size(); ++i) {
    if (t.counts_[i] == 0) {
      throw InvalidArgument("label '" + t.labels_[i] + "' has count 0; counts must be >= 1");
    }
    if (!t.index_.emplace(t.labels_[i], i).second) {
      throw InvalidArgument("duplicate label '" + t.labels_[i] + "'");
    }
    running += t.counts_[i];
    t.prefix_.push_back(running);
  }
  return t;
}

TableColumn TableColumn::from_cells(std::span<const std::string> cells) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& cell : cells) {
    auto [it, inserted] = seen.emplace(cell, labels.size());
    if (inserted) {
      labels.push_back(cell);
      counts.push_back(0);
    }
    ++counts[it->second];
  }
  return from_labeled_counts(std::move(labels), counts);
}

std::uint64_t TableColumn::count(std::size_t label) const {
  if (label >= counts_.size()) {
    throw InvalidArgument("unknown label index " + std::to_string(label));
  }
  return counts_[label];
}

const std::string& TableColumn::label(std::size_t index) const {
  if (index >= labels_.size()) {
    throw InvalidArgument("unknown label index " + std::to_string(index));
  }
  return labels_[index];
}

std::optional<std::size_t> TableColumn::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TableColumn::label_of_row(std::uint64_t row) const {
  if (row >= total_rows()) throw InvalidArgument("row index out of range");
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), row);
  return static_cast<std::size_t>(it - prefix_.begin());
}

}  // namespace starcount
