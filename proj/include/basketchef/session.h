// The online engine. A Session holds one shopper's basket and keeps category
// activation counts, per-subcategory activation scores and the active sets
// current as items are added, removed or accepted from a recommended dish.
//
// Scoring: each basket item that occurs somewhere in an active category c
// adds rank(p_rs)^(-1/n) to every subcategory s of c. A category activates
// once q of its identifiers are in the basket, and its subcategory scores are
// then taken over the whole basket, so the final state never depends on the
// order in which items arrived.

#ifndef BASKETCHEF_SESSION_H_
#define BASKETCHEF_SESSION_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basketchef/corpus.h"
#include "basketchef/model.h"

namespace basketchef {

struct SessionConfig {
  std::size_t k = 5;      // identifiers per category
  std::size_t h = 1;      // globally common items excluded from identifiers
  std::size_t q = 1;      // identifiers needed to activate a category
  double n = 3.0;         // root of the rank in the score increment
  double theta = 4.0;     // subcategory activation threshold
  std::size_t top_n = 5;  // dishes returned by recommend

  // Names of fields violating k,q,top_n >= 1, n >= 1, theta > 0.
  std::vector<std::string> invalid_fields() const;
  // Throws std::invalid_argument naming every invalid field.
  void validate() const;

  bool operator==(const SessionConfig&) const = default;
};

// rank^(-1/n).
double score_increment(std::uint32_t rank, double n);

// Smallest m with sum_{r=1..m} r^(-1/n) >= theta.
std::uint64_t min_items_to_activate(double n, double theta);

// |A n B| / |A u B|; 0 when both are empty. Inputs need not be sorted.
double jaccard(std::span<const ItemId> a, std::span<const ItemId> b);

struct SubcategoryRef {
  std::size_t category = 0;
  std::size_t subcategory = 0;

  auto operator<=>(const SubcategoryRef&) const = default;
};

struct EventReport {
  enum class Kind { kAdd, kRemove, kSelect };

  Kind kind = Kind::kAdd;
  std::vector<ItemId> items;
  // Add of an item already in the basket; nothing changed.
  bool duplicate = false;
  std::vector<std::size_t> activated_categories;
  std::vector<SubcategoryRef> activated_subcategories;
  // Only removals can deactivate.
  std::vector<std::size_t> deactivated_categories;
  std::vector<SubcategoryRef> deactivated_subcategories;
};

struct Recommendation {
  std::size_t category = 0;
  std::size_t subcategory = 0;
  std::size_t dish = 0;
  std::string dish_name;
  std::string recipe_id;
  double similarity = 0.0;
  std::size_t intersection = 0;
  std::size_t union_size = 0;
  // Best recipe's items not yet in the basket, ascending id.
  std::vector<ItemId> missing_items;
};

struct RecommendResult {
  std::vector<Recommendation> recommendations;
  // Recipes whose similarity was computed (all recipes of active subcategories).
  std::size_t recipes_scored = 0;
};

class SessionError : public std::runtime_error {
 public:
  enum class Code { kUnknownItem, kNotInBasket, kUnknownRecipe, kInvalidSelection, kInactive };

  SessionError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class Session {
 public:
  // Throws std::invalid_argument for an invalid config.
  Session(std::shared_ptr<const Model> model, SessionConfig config = {});

  EventReport add_item(ItemId item);
  EventReport remove_item(ItemId item);
  EventReport select_dish(std::string_view dish, std::string_view recipe_id,
                          std::span<const ItemId> accepted);

  // Throws SessionError(kInactive) unless the category is active.
  double subcategory_score(std::size_t category, std::size_t subcategory) const;

  std::vector<Recommendation> recommend() const { return recommend_with_stats().recommendations; }
  RecommendResult recommend_with_stats() const;

  const Model& model() const { return *model_; }
  const SessionConfig& config() const { return config_; }
  const IdentifierIndex& identifiers() const { return *identifiers_; }

  const std::vector<ItemId>& basket() const { return basket_; }
  bool in_basket(ItemId item) const;
  std::uint32_t activation_count(std::size_t category) const { return counts_.at(category); }
  bool category_active(std::size_t category) const { return category_active_.at(category) != 0; }
  bool subcategory_active(std::size_t category, std::size_t subcategory) const;
  std::vector<std::size_t> active_categories() const;
  std::vector<SubcategoryRef> active_subcategories() const;

 private:
  void reset();
  void add_unchecked(ItemId item, EventReport& report);
  double score_of(std::size_t category, std::size_t subcategory, ItemId item) const;

  std::shared_ptr<const Model> model_;
  SessionConfig config_;
  std::shared_ptr<const IdentifierIndex> identifiers_;

  std::vector<ItemId> basket_;
  std::vector<std::uint8_t> in_basket_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint8_t> category_active_;
  std::vector<std::vector<double>> scores_;
  std::vector<std::vector<std::uint8_t>> subcategory_active_;
};

}  // namespace basketchef

#endif  // BASKETCHEF_SESSION_H_
