#include "basketchef/stats.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace basketchef {

namespace {

// Order items by descending count, ties to the lower index.
std::vector<ItemId> by_count(const std::vector<std::size_t>& counts) {
  std::vector<ItemId> order(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) order[j] = item_at(j);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return counts[index_of(a)] > counts[index_of(b)];
  });
  return order;
}

std::vector<std::size_t> global_counts(const Corpus& corpus, std::size_t* total_rows) {
  std::vector<std::size_t> counts(corpus.vocabulary_size(), 0);
  std::size_t rows = 0;
  for (const Category& c : corpus.categories()) {
    for (const Subcategory& s : c.subcategories) {
      for (const Dish& d : s.dishes) {
        for (const Recipe& r : d.recipes) {
          ++rows;
          for (ItemId item : r.items) ++counts[index_of(item)];
        }
      }
    }
  }
  if (total_rows != nullptr) *total_rows = rows;
  return counts;
}

std::vector<ItemId> top_h(const std::vector<std::size_t>& counts, std::size_t h) {
  std::vector<ItemId> order = by_count(counts);
  order.resize(std::min(h, order.size()));
  return order;
}

IdentifierSet select_identifiers(std::size_t category, const OccurrenceMatrix& matrix,
                                 const std::vector<ItemId>& excluded, std::size_t k) {
  if (k == 0) throw std::invalid_argument("identifier count k must be at least 1");
  if (matrix.row_count() == 0) throw std::invalid_argument("category has no recipes");
  std::vector<std::size_t> counts(matrix.column_count());
  for (std::size_t j = 0; j < counts.size(); ++j) counts[j] = matrix.column_sum(item_at(j));

  IdentifierSet out;
  out.category = category;
  for (ItemId item : by_count(counts)) {
    if (out.identifiers.size() == k) break;
    if (counts[index_of(item)] == 0) break;
    if (std::find(excluded.begin(), excluded.end(), item) != excluded.end()) continue;
    out.identifiers.push_back(item);
    out.supports.push_back(support(matrix, item));
  }
  out.truncated = out.identifiers.size() < k;
  return out;
}

// lcm of the row counts when every numerator bounded by lcm * subcategories
// stays representable; nullopt otherwise.
std::optional<std::int64_t> common_denominator(const ConditionalTable& cond) {
  constexpr auto kLimit = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  unsigned __int128 lcm = 1;
  for (std::size_t s = 0; s < cond.subcategory_count(); ++s) {
    const auto rows = static_cast<unsigned __int128>(cond.rows(s));
    const auto g = std::gcd(static_cast<std::uint64_t>(lcm), static_cast<std::uint64_t>(rows));
    lcm = lcm / g * rows;
    if (lcm * (cond.subcategory_count() + 1) > kLimit) return std::nullopt;
  }
  return static_cast<std::int64_t>(lcm);
}

}  // namespace

// --- OccurrenceMatrix ---

OccurrenceMatrix::OccurrenceMatrix(std::size_t category, std::size_t subcategory_count,
                                   std::size_t column_count)
    : category_(category), subcategory_count_(subcategory_count), column_sums_(column_count, 0) {}

void OccurrenceMatrix::add_row(MatrixRow row, std::span<const ItemId> items) {
  for (ItemId item : items) {
    ++column_sums_.at(index_of(item));
    items_.push_back(item);
  }
  std::sort(items_.begin() + static_cast<std::ptrdiff_t>(offsets_.back()), items_.end());
  offsets_.push_back(items_.size());
  rows_.push_back(std::move(row));
}

std::span<const ItemId> OccurrenceMatrix::row_items(std::size_t i) const {
  if (i >= rows_.size()) throw std::out_of_range("matrix row out of range");
  return std::span<const ItemId>(items_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

bool OccurrenceMatrix::entry(std::size_t row, ItemId item) const {
  auto items = row_items(row);
  return std::binary_search(items.begin(), items.end(), item);
}

OccurrenceMatrix build_matrix(const Corpus& corpus, std::size_t category) {
  if (category >= corpus.categories().size()) {
    throw std::out_of_range("unknown category id " + std::to_string(category));
  }
  const Category& c = corpus.category(category);
  OccurrenceMatrix m(category, c.subcategories.size(), corpus.vocabulary_size());
  for (std::size_t s = 0; s < c.subcategories.size(); ++s) {
    const auto& dishes = c.subcategories[s].dishes;
    for (std::size_t d = 0; d < dishes.size(); ++d) {
      for (const Recipe& r : dishes[d].recipes) m.add_row(MatrixRow{r.id, s, d}, r.items);
    }
  }
  return m;
}

double support(const OccurrenceMatrix& matrix, ItemId item) {
  const std::size_t hits = matrix.column_sum(item);
  if (matrix.row_count() == 0) return 0.0;
  return static_cast<double>(hits) / static_cast<double>(matrix.row_count());
}

std::vector<double> global_support(const Corpus& corpus) {
  std::size_t rows = 0;
  const std::vector<std::size_t> counts = global_counts(corpus, &rows);
  std::vector<double> out(counts.size(), 0.0);
  if (rows == 0) return out;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    out[j] = static_cast<double>(counts[j]) / static_cast<double>(rows);
  }
  return out;
}

std::vector<ItemId> global_exclusions(const Corpus& corpus, std::size_t h) {
  return top_h(global_counts(corpus, nullptr), h);
}

bool IdentifierSet::contains(ItemId item) const {
  return std::find(identifiers.begin(), identifiers.end(), item) != identifiers.end();
}

IdentifierSet category_identifiers(const Corpus& corpus, std::size_t category, std::size_t k,
                                   std::size_t h) {
  return select_identifiers(category, build_matrix(corpus, category), global_exclusions(corpus, h),
                            k);
}

// --- ConditionalTable ---

ConditionalTable::ConditionalTable(std::vector<std::size_t> rows_per_subcategory,
                                   std::size_t item_count)
    : rows_(std::move(rows_per_subcategory)),
      item_count_(item_count),
      counts_(rows_.size() * item_count, 0) {}

std::size_t ConditionalTable::count(std::size_t s, ItemId item) const {
  if (s >= rows_.size() || index_of(item) >= item_count_) {
    throw std::out_of_range("conditional table index out of range");
  }
  return counts_[s * item_count_ + index_of(item)];
}

double ConditionalTable::probability(std::size_t s, ItemId item) const {
  return static_cast<double>(count(s, item)) / static_cast<double>(rows_[s]);
}

ConditionalTable conditional_probabilities(const OccurrenceMatrix& matrix) {
  std::vector<std::size_t> rows(matrix.subcategory_count(), 0);
  for (std::size_t i = 0; i < matrix.row_count(); ++i) ++rows.at(matrix.row(i).subcategory);
  for (std::size_t s = 0; s < rows.size(); ++s) {
    if (rows[s] == 0) {
      throw std::invalid_argument("subcategory " + std::to_string(s) + " has no rows");
    }
  }
  ConditionalTable table(std::move(rows), matrix.column_count());
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    for (ItemId item : matrix.row_items(i)) table.increment(matrix.row(i).subcategory, item);
  }
  return table;
}

// --- DifferentiatorTable ---

DifferentiatorTable::DifferentiatorTable(std::size_t subcategory_count, std::size_t item_count)
    : subcategory_count_(subcategory_count),
      item_count_(item_count),
      scores_(subcategory_count * item_count, 0.0) {}

double DifferentiatorTable::score(std::size_t s, ItemId item) const {
  if (s >= subcategory_count_ || index_of(item) >= item_count_) {
    throw std::out_of_range("differentiator table index out of range");
  }
  return scores_[s * item_count_ + index_of(item)];
}

std::int64_t DifferentiatorTable::numerator(std::size_t s, ItemId item) const {
  if (!exact()) throw std::logic_error("differentiator table has no exact form");
  if (s >= subcategory_count_ || index_of(item) >= item_count_) {
    throw std::out_of_range("differentiator table index out of range");
  }
  return numerators_[s * item_count_ + index_of(item)];
}

DifferentiatorTable differentiator_scores(const ConditionalTable& cond) {
  const std::size_t subs = cond.subcategory_count();
  const std::size_t items = cond.item_count();
  DifferentiatorTable out(subs, items);
  out.denominator_ = common_denominator(cond);
  if (out.denominator_) out.numerators_.assign(subs * items, 0);

  for (std::size_t j = 0; j < items; ++j) {
    const ItemId item = item_at(j);
    double total = 0.0;
    std::int64_t total_num = 0;
    for (std::size_t s = 0; s < subs; ++s) {
      total += cond.probability(s, item);
      if (out.denominator_) {
        total_num += static_cast<std::int64_t>(cond.count(s, item)) *
                     (*out.denominator_ / static_cast<std::int64_t>(cond.rows(s)));
      }
    }
    for (std::size_t s = 0; s < subs; ++s) {
      const double own = cond.probability(s, item);
      if (out.denominator_) {
        const std::int64_t own_num = static_cast<std::int64_t>(cond.count(s, item)) *
                                     (*out.denominator_ / static_cast<std::int64_t>(cond.rows(s)));
        const std::int64_t num = 2 * own_num - total_num;
        out.numerators_[s * items + j] = num;
        out.scores_[s * items + j] =
            static_cast<double>(num) / static_cast<double>(*out.denominator_);
      } else {
        out.scores_[s * items + j] = own - (total - own);
      }
    }
  }
  return out;
}

// --- RankTable ---

RankTable::RankTable(std::size_t subcategory_count, std::size_t item_count)
    : subcategory_count_(subcategory_count),
      item_count_(item_count),
      ranks_(subcategory_count * item_count, 0),
      order_(subcategory_count * item_count, ItemId{}),
      scores_(subcategory_count * item_count, 0.0) {}

std::uint32_t RankTable::rank(std::size_t s, ItemId item) const {
  if (s >= subcategory_count_ || index_of(item) >= item_count_) {
    throw std::out_of_range("rank table index out of range");
  }
  return ranks_[s * item_count_ + index_of(item)];
}

ItemId RankTable::item_at_rank(std::size_t s, std::uint32_t rank) const {
  if (s >= subcategory_count_ || rank == 0 || rank > item_count_) {
    throw std::out_of_range("rank out of range");
  }
  return order_[s * item_count_ + rank - 1];
}

double RankTable::score(std::size_t s, ItemId item) const {
  if (s >= subcategory_count_ || index_of(item) >= item_count_) {
    throw std::out_of_range("rank table index out of range");
  }
  return scores_[s * item_count_ + index_of(item)];
}

RankTable rank_table(const DifferentiatorTable& scores) {
  const std::size_t subs = scores.subcategory_count();
  const std::size_t items = scores.item_count();
  RankTable out(subs, items);
  std::vector<ItemId> order(items);
  for (std::size_t s = 0; s < subs; ++s) {
    for (std::size_t j = 0; j < items; ++j) order[j] = item_at(j);
    if (scores.exact()) {
      std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
        return scores.numerator(s, a) > scores.numerator(s, b);
      });
    } else {
      std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
        return scores.score(s, a) > scores.score(s, b);
      });
    }
    for (std::size_t pos = 0; pos < items; ++pos) {
      const std::size_t j = index_of(order[pos]);
      out.order_[s * items + pos] = order[pos];
      out.ranks_[s * items + j] = static_cast<std::uint32_t>(pos + 1);
      out.scores_[s * items + j] = scores.score(s, order[pos]);
    }
  }
  return out;
}

// --- CorpusStats ---

CorpusStats::CorpusStats(const Corpus& corpus)
    : item_categories_(corpus.vocabulary_size()) {
  global_counts_ = global_counts(corpus, nullptr);
  global_ = global_support(corpus);
  const std::size_t n = corpus.categories().size();
  matrices_.reserve(n);
  conditionals_.reserve(n);
  ranks_.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    matrices_.push_back(build_matrix(corpus, c));
    conditionals_.push_back(conditional_probabilities(matrices_.back()));
    ranks_.push_back(rank_table(differentiator_scores(conditionals_.back())));
    for (std::size_t j = 0; j < corpus.vocabulary_size(); ++j) {
      if (matrices_.back().column_sum(item_at(j)) > 0) item_categories_[j].push_back(c);
    }
  }
}

double CorpusStats::support(std::size_t c, ItemId item) const {
  return basketchef::support(matrices_.at(c), item);
}

IdentifierSet CorpusStats::identifiers(std::size_t c, std::size_t k, std::size_t h) const {
  return select_identifiers(c, matrices_.at(c), top_h(global_counts_, h), k);
}

}  // namespace basketchef
