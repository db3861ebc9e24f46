#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace starcount {

// Multiset of labels from one table column: label i occurs counts[i] >= 1
// times, and W = sum(counts) is the row count. Rows are numbered 0..W-1 in
// label order, so a uniform row maps to label i with probability counts[i]/W.
class TableColumn {
 public:
  TableColumn() = default;

  // Labels are "0", "1", ... in order. Zero counts are rejected.
  static TableColumn from_counts(std::span<const std::uint64_t> counts);
  static TableColumn from_labeled_counts(std::vector<std::string> labels,
                                         std::span<const std::uint64_t> counts);
  // One entry per row; labels are ordered by first appearance.
  static TableColumn from_cells(std::span<const std::string> cells);

  std::size_t num_labels() const { return labels_.size(); }
  std::uint64_t total_rows() const { return prefix_.empty() ? 0 : prefix_.back(); }
  std::span<const std::string> labels() const { return labels_; }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t count(std::size_t label) const;
  const std::string& label(std::size_t index) const;
  std::optional<std::size_t> find(const std::string& label) const;

  // Label index owning row `row` (0-based, row < W).
  std::size_t label_of_row(std::uint64_t row) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> prefix_;  // prefix_[i] = rows in labels 0..i
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace starcount
