#include "basketchef/session.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace basketchef {

std::vector<std::string> SessionConfig::invalid_fields() const {
  std::vector<std::string> bad;
  if (k < 1) bad.emplace_back("k");
  if (q < 1) bad.emplace_back("q");
  if (!(n >= 1.0) || !std::isfinite(n)) bad.emplace_back("n");
  if (!(theta > 0.0) || !std::isfinite(theta)) bad.emplace_back("theta");
  if (top_n < 1) bad.emplace_back("top_n");
  return bad;
}

void SessionConfig::validate() const {
  const auto bad = invalid_fields();
  if (bad.empty()) return;
  std::string msg = "invalid session config field(s):";
  for (const auto& f : bad) msg += " " + f;
  throw std::invalid_argument(msg);
}

double score_increment(std::uint32_t rank, double n) {
  return std::pow(static_cast<double>(rank), -1.0 / n);
}

std::uint64_t min_items_to_activate(double n, double theta) {
  if (!(n >= 1.0) || !(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("min_items_to_activate needs n >= 1 and finite theta > 0");
  }
  double score = 0.0;
  std::uint64_t m = 0;
  while (score < theta) {
    ++m;
    score += std::pow(static_cast<double>(m), -1.0 / n);
  }
  return m;
}

double jaccard(std::span<const ItemId> a, std::span<const ItemId> b) {
  std::vector<ItemId> x(a.begin(), a.end());
  std::vector<ItemId> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  std::size_t common = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t all = x.size() + y.size() - common;
  return all == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(all);
}

Session::Session(std::shared_ptr<const Model> model, SessionConfig config)
    : model_(std::move(model)), config_(config) {
  if (!model_) throw std::invalid_argument("session needs a model");
  config_.validate();
  identifiers_ = model_->identifiers(config_.k, config_.h);
  reset();
}

void Session::reset() {
  const Corpus& corpus = model_->corpus();
  const std::size_t cats = corpus.categories().size();
  basket_.clear();
  in_basket_.assign(corpus.vocabulary_size(), 0);
  counts_.assign(cats, 0);
  category_active_.assign(cats, 0);
  scores_.resize(cats);
  subcategory_active_.resize(cats);
  for (std::size_t c = 0; c < cats; ++c) {
    scores_[c].assign(corpus.category(c).subcategories.size(), 0.0);
    subcategory_active_[c].assign(corpus.category(c).subcategories.size(), 0);
  }
}

bool Session::in_basket(ItemId item) const {
  return index_of(item) < in_basket_.size() && in_basket_[index_of(item)] != 0;
}

bool Session::subcategory_active(std::size_t category, std::size_t subcategory) const {
  return subcategory_active_.at(category).at(subcategory) != 0;
}

std::vector<std::size_t> Session::active_categories() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < category_active_.size(); ++c) {
    if (category_active_[c]) out.push_back(c);
  }
  return out;
}

std::vector<SubcategoryRef> Session::active_subcategories() const {
  std::vector<SubcategoryRef> out;
  for (std::size_t c = 0; c < subcategory_active_.size(); ++c) {
    for (std::size_t s = 0; s < subcategory_active_[c].size(); ++s) {
      if (subcategory_active_[c][s]) out.push_back({c, s});
    }
  }
  return out;
}

double Session::score_of(std::size_t category, std::size_t subcategory, ItemId item) const {
  return score_increment(model_->stats().ranks(category).rank(subcategory, item), config_.n);
}

double Session::subcategory_score(std::size_t category, std::size_t subcategory) const {
  if (!category_active(category)) {
    throw SessionError(SessionError::Code::kInactive,
                       "category \"" + model_->corpus().category(category).name +
                           "\" is not active");
  }
  return scores_.at(category).at(subcategory);
}

void Session::add_unchecked(ItemId item, EventReport& report) {
  const CorpusStats& stats = model_->stats();
  basket_.push_back(item);
  in_basket_[index_of(item)] = 1;

  // Categories already active pick up the new item incrementally.
  std::vector<std::size_t> touched;
  for (std::size_t c : stats.categories_of(item)) {
    if (!category_active_[c]) continue;
    for (std::size_t s = 0; s < scores_[c].size(); ++s) scores_[c][s] += score_of(c, s, item);
    touched.push_back(c);
  }

  // Newly activated categories are scored over the whole basket.
  for (std::size_t c : identifiers_->categories_by_item[index_of(item)]) {
    ++counts_[c];
    if (category_active_[c] || counts_[c] < config_.q) continue;
    category_active_[c] = 1;
    report.activated_categories.push_back(c);
    for (std::size_t s = 0; s < scores_[c].size(); ++s) {
      double score = 0.0;
      for (ItemId b : basket_) {
        if (stats.relevant(c, b)) score += score_of(c, s, b);
      }
      scores_[c][s] = score;
    }
    touched.push_back(c);
  }

  std::sort(touched.begin(), touched.end());
  for (std::size_t c : touched) {
    for (std::size_t s = 0; s < scores_[c].size(); ++s) {
      if (!subcategory_active_[c][s] && scores_[c][s] >= config_.theta) {
        subcategory_active_[c][s] = 1;
        report.activated_subcategories.push_back({c, s});
      }
    }
  }
}

EventReport Session::add_item(ItemId item) {
  if (index_of(item) >= in_basket_.size()) {
    throw SessionError(SessionError::Code::kUnknownItem,
                       "unknown item id " + std::to_string(index_of(item)));
  }
  EventReport report;
  report.kind = EventReport::Kind::kAdd;
  report.items.push_back(item);
  if (in_basket_[index_of(item)]) {
    report.duplicate = true;
    return report;
  }
  add_unchecked(item, report);
  std::sort(report.activated_categories.begin(), report.activated_categories.end());
  return report;
}

EventReport Session::remove_item(ItemId item) {
  if (!in_basket(item)) {
    throw SessionError(SessionError::Code::kNotInBasket,
                       index_of(item) < in_basket_.size()
                           ? "item \"" + model_->corpus().item_name(item) + "\" is not in the basket"
                           : "unknown item id " + std::to_string(index_of(item)));
  }
  const auto before_cats = active_categories();
  const auto before_subs = active_subcategories();

  std::vector<ItemId> remaining;
  remaining.reserve(basket_.size() - 1);
  for (ItemId b : basket_) {
    if (b != item) remaining.push_back(b);
  }
  reset();
  EventReport scratch;
  for (ItemId b : remaining) add_unchecked(b, scratch);

  EventReport report;
  report.kind = EventReport::Kind::kRemove;
  report.items.push_back(item);
  const auto after_cats = active_categories();
  const auto after_subs = active_subcategories();
  std::set_difference(after_cats.begin(), after_cats.end(), before_cats.begin(), before_cats.end(),
                      std::back_inserter(report.activated_categories));
  std::set_difference(before_cats.begin(), before_cats.end(), after_cats.begin(), after_cats.end(),
                      std::back_inserter(report.deactivated_categories));
  std::set_difference(after_subs.begin(), after_subs.end(), before_subs.begin(), before_subs.end(),
                      std::back_inserter(report.activated_subcategories));
  std::set_difference(before_subs.begin(), before_subs.end(), after_subs.begin(), after_subs.end(),
                      std::back_inserter(report.deactivated_subcategories));
  return report;
}

EventReport Session::select_dish(std::string_view dish, std::string_view recipe_id,
                                 std::span<const ItemId> accepted) {
  const Corpus& corpus = model_->corpus();
  const auto path = corpus.find_recipe(recipe_id);
  if (!path) {
    throw SessionError(SessionError::Code::kUnknownRecipe,
                       "unknown recipe id \"" + std::string(recipe_id) + "\"");
  }
  const Dish& owner =
      corpus.category(path->category).subcategories[path->subcategory].dishes[path->dish];
  if (owner.name != dish) {
    throw SessionError(SessionError::Code::kInvalidSelection,
                       "recipe \"" + std::string(recipe_id) + "\" belongs to dish \"" + owner.name +
                           "\", not \"" + std::string(dish) + "\"");
  }
  const Recipe& recipe = corpus.recipe(*path);
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    const ItemId item = accepted[i];
    if (!std::binary_search(recipe.items.begin(), recipe.items.end(), item)) {
      throw SessionError(SessionError::Code::kInvalidSelection,
                         "accepted item id " + std::to_string(index_of(item)) +
                             " is not an ingredient of recipe \"" + recipe.id + "\"");
    }
    if (in_basket(item) || std::find(accepted.begin(), accepted.begin() + static_cast<std::ptrdiff_t>(i), item) !=
                               accepted.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw SessionError(SessionError::Code::kInvalidSelection,
                         "accepted item \"" + corpus.item_name(item) + "\" is already in the basket");
    }
  }

  EventReport report;
  report.kind = EventReport::Kind::kSelect;
  for (ItemId item : accepted) {
    report.items.push_back(item);
    add_unchecked(item, report);
  }
  std::sort(report.activated_categories.begin(), report.activated_categories.end());
  std::sort(report.activated_subcategories.begin(), report.activated_subcategories.end());
  return report;
}

RecommendResult Session::recommend_with_stats() const {
  const Corpus& corpus = model_->corpus();
  RecommendResult out;
  std::vector<Recommendation> dishes;

  // a beats b on similarity when a.i / a.u > b.i / b.u.
  auto better = [](std::size_t ai, std::size_t au, std::size_t bi, std::size_t bu) {
    return ai * bu > bi * au;
  };

  for (const SubcategoryRef ref : active_subcategories()) {
    const Subcategory& sub = corpus.category(ref.category).subcategories[ref.subcategory];
    for (std::size_t d = 0; d < sub.dishes.size(); ++d) {
      const Recipe* best = nullptr;
      std::size_t best_i = 0;
      std::size_t best_u = 1;
      for (const Recipe& recipe : sub.dishes[d].recipes) {
        ++out.recipes_scored;
        std::size_t common = 0;
        for (ItemId item : recipe.items) common += in_basket_[index_of(item)];
        const std::size_t all = recipe.items.size() + basket_.size() - common;
        if (best == nullptr || better(common, all, best_i, best_u) ||
            (!better(best_i, best_u, common, all) && common > best_i)) {
          best = &recipe;
          best_i = common;
          best_u = all;
        }
      }
      Recommendation rec;
      rec.category = ref.category;
      rec.subcategory = ref.subcategory;
      rec.dish = d;
      rec.dish_name = sub.dishes[d].name;
      rec.recipe_id = best->id;
      rec.intersection = best_i;
      rec.union_size = best_u;
      rec.similarity =
          best_u == 0 ? 0.0 : static_cast<double>(best_i) / static_cast<double>(best_u);
      for (ItemId item : best->items) {
        if (!in_basket_[index_of(item)]) rec.missing_items.push_back(item);
      }
      dishes.push_back(std::move(rec));
    }
  }

  std::stable_sort(dishes.begin(), dishes.end(), [&](const Recommendation& a, const Recommendation& b) {
    if (better(a.intersection, a.union_size, b.intersection, b.union_size)) return true;
    if (better(b.intersection, b.union_size, a.intersection, a.union_size)) return false;
    if (a.intersection != b.intersection) return a.intersection > b.intersection;
    return a.dish_name < b.dish_name;
  });
  if (dishes.size() > config_.top_n) dishes.resize(config_.top_n);
  out.recommendations = std::move(dishes);
  return out;
}

}  // namespace basketchef
