// Corpus statistics: per-category occurrence matrices, item support, global
// support, category identifiers, conditional item probabilities per
// subcategory, differentiator scores and their per-subcategory ranks.

#ifndef BASKETCHEF_STATS_H_
#define BASKETCHEF_STATS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basketchef/corpus.h"

namespace basketchef {

struct MatrixRow {
  std::string recipe_id;
  std::size_t subcategory = 0;
  std::size_t dish = 0;
};

// Sparse binary recipe x item matrix for one category, one row per recipe in
// file order. Stored row-compressed; column sums are kept alongside.
class OccurrenceMatrix {
 public:
  OccurrenceMatrix() = default;
  OccurrenceMatrix(std::size_t category, std::size_t subcategory_count, std::size_t column_count);

  void add_row(MatrixRow row, std::span<const ItemId> items);

  std::size_t category() const { return category_; }
  std::size_t subcategory_count() const { return subcategory_count_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return column_sums_.size(); }

  const MatrixRow& row(std::size_t i) const { return rows_.at(i); }
  std::span<const ItemId> row_items(std::size_t i) const;
  bool entry(std::size_t row, ItemId item) const;
  std::size_t row_sum(std::size_t row) const { return row_items(row).size(); }
  std::size_t column_sum(ItemId item) const { return column_sums_.at(index_of(item)); }

 private:
  std::size_t category_ = 0;
  std::size_t subcategory_count_ = 0;
  std::vector<MatrixRow> rows_;
  std::vector<std::size_t> offsets_{0};
  std::vector<ItemId> items_;
  std::vector<std::size_t> column_sums_;
};

// Throws std::out_of_range for an unknown category.
OccurrenceMatrix build_matrix(const Corpus& corpus, std::size_t category);

// Fraction of the matrix rows containing `item`.
double support(const OccurrenceMatrix& matrix, ItemId item);

// Support over every recipe of every category, indexed by item.
std::vector<double> global_support(const Corpus& corpus);

// Items with the top `h` global-support values, ties to the lower index.
std::vector<ItemId> global_exclusions(const Corpus& corpus, std::size_t h);

struct IdentifierSet {
  std::size_t category = 0;
  // Descending support, ties to the lower vocabulary index.
  std::vector<ItemId> identifiers;
  std::vector<double> supports;
  // Fewer than k eligible items existed.
  bool truncated = false;

  bool contains(ItemId item) const;
};

IdentifierSet category_identifiers(const Corpus& corpus, std::size_t category, std::size_t k,
                                   std::size_t h);

// P(item | subcategory) for one category. Dense subcategory x item.
class ConditionalTable {
 public:
  ConditionalTable(std::vector<std::size_t> rows_per_subcategory, std::size_t item_count);

  std::size_t subcategory_count() const { return rows_.size(); }
  std::size_t item_count() const { return item_count_; }
  std::size_t rows(std::size_t s) const { return rows_.at(s); }
  std::size_t count(std::size_t s, ItemId item) const;
  double probability(std::size_t s, ItemId item) const;

  void increment(std::size_t s, ItemId item) { ++counts_[s * item_count_ + index_of(item)]; }

 private:
  std::vector<std::size_t> rows_;
  std::size_t item_count_;
  std::vector<std::uint32_t> counts_;
};

// Throws std::invalid_argument when a subcategory has no rows.
ConditionalTable conditional_probabilities(const OccurrenceMatrix& matrix);

// p_rs = P(r|s) - sum of P(r|s') over the sibling subcategories s'.
//
// Alongside the doubles, the table keeps each score as an exact integer
// numerator over the common denominator lcm(rows per subcategory) whenever
// that fits in 64 bits, so that ranking does not depend on rounding.
class DifferentiatorTable {
 public:
  DifferentiatorTable(std::size_t subcategory_count, std::size_t item_count);

  std::size_t subcategory_count() const { return subcategory_count_; }
  std::size_t item_count() const { return item_count_; }
  double score(std::size_t s, ItemId item) const;
  bool exact() const { return denominator_.has_value(); }
  std::int64_t numerator(std::size_t s, ItemId item) const;
  std::optional<std::int64_t> denominator() const { return denominator_; }

 private:
  friend DifferentiatorTable differentiator_scores(const ConditionalTable& cond);

  std::size_t subcategory_count_;
  std::size_t item_count_;
  std::vector<double> scores_;
  std::vector<std::int64_t> numerators_;
  std::optional<std::int64_t> denominator_;
};

DifferentiatorTable differentiator_scores(const ConditionalTable& cond);

// Rank 1 is the largest p_rs in a subcategory row; ties go to the lower
// vocabulary index. Every row is a permutation of 1..item_count.
class RankTable {
 public:
  RankTable() = default;
  RankTable(std::size_t subcategory_count, std::size_t item_count);

  std::size_t subcategory_count() const { return subcategory_count_; }
  std::size_t item_count() const { return item_count_; }
  std::uint32_t rank(std::size_t s, ItemId item) const;
  // Item holding `rank` (1-based) in subcategory s.
  ItemId item_at_rank(std::size_t s, std::uint32_t rank) const;
  double score(std::size_t s, ItemId item) const;

 private:
  friend RankTable rank_table(const DifferentiatorTable& scores);

  std::size_t subcategory_count_ = 0;
  std::size_t item_count_ = 0;
  std::vector<std::uint32_t> ranks_;
  std::vector<ItemId> order_;
  std::vector<double> scores_;
};

RankTable rank_table(const DifferentiatorTable& scores);

// Everything above, precomputed once for a corpus. Immutable after
// construction.
class CorpusStats {
 public:
  explicit CorpusStats(const Corpus& corpus);

  std::size_t category_count() const { return matrices_.size(); }
  const OccurrenceMatrix& matrix(std::size_t c) const { return matrices_.at(c); }
  const ConditionalTable& conditional(std::size_t c) const { return conditionals_.at(c); }
  const RankTable& ranks(std::size_t c) const { return ranks_.at(c); }
  const std::vector<double>& global() const { return global_; }

  double support(std::size_t c, ItemId item) const;

  // True when the item occurs in at least one recipe of category c.
  bool relevant(std::size_t c, ItemId item) const {
    return matrices_[c].column_sum(item) > 0;
  }
  // Categories in which the item occurs, ascending.
  const std::vector<std::size_t>& categories_of(ItemId item) const {
    return item_categories_.at(index_of(item));
  }

  IdentifierSet identifiers(std::size_t c, std::size_t k, std::size_t h) const;

 private:
  std::vector<std::size_t> global_counts_;
  std::vector<double> global_;
  std::vector<OccurrenceMatrix> matrices_;
  std::vector<ConditionalTable> conditionals_;
  std::vector<RankTable> ranks_;
  std::vector<std::vector<std::size_t>> item_categories_;
};

}  // namespace basketchef

#endif  // BASKETCHEF_STATS_H_
