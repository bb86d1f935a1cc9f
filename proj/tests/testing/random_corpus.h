// Random small corpora for property and oracle tests. The raw form keeps the
// hierarchy as plain strings so oracles never touch engine data structures.

#ifndef BASKETCHEF_TESTING_RANDOM_CORPUS_H_
#define BASKETCHEF_TESTING_RANDOM_CORPUS_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace basketchef::testing {

struct RawRow {
  std::string category;
  std::string subcategory;
  std::string dish;
  std::string recipe_id;
  std::vector<std::string> items;  // distinct
};

struct RawCorpus {
  std::vector<RawRow> rows;  // file order

  std::string to_json() const {
    nlohmann::ordered_json doc;
    doc["categories"] = nlohmann::ordered_json::array();
    auto& cats = doc["categories"];
    for (const RawRow& r : rows) {
      if (cats.empty() || cats.back()["name"] != r.category) {
        cats.push_back({{"name", r.category}, {"subcategories", nlohmann::ordered_json::array()}});
      }
      auto& subs = cats.back()["subcategories"];
      if (subs.empty() || subs.back()["name"] != r.subcategory) {
        subs.push_back({{"name", r.subcategory}, {"dishes", nlohmann::ordered_json::array()}});
      }
      auto& dishes = subs.back()["dishes"];
      if (dishes.empty() || dishes.back()["name"] != r.dish) {
        dishes.push_back({{"name", r.dish}, {"recipes", nlohmann::ordered_json::array()}});
      }
      dishes.back()["recipes"].push_back({{"id", r.recipe_id}, {"items", r.items}});
    }
    return doc.dump();
  }
};

struct RandomCorpusLimits {
  int max_categories = 5;
  int max_subcategories = 4;
  int max_dishes = 3;
  int max_recipes_per_dish = 6;
  int max_items = 30;
  int max_recipe_size = 8;
};

inline RawCorpus random_corpus(std::mt19937_64& rng, const RandomCorpusLimits& lim = {}) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int item_pool = uniform(3, lim.max_items);
  // A skewed pick makes some items common and creates support ties.
  std::geometric_distribution<int> skew(0.12);
  auto pick_item = [&] { return "item" + std::to_string(std::min(skew(rng), item_pool - 1)); };

  RawCorpus out;
  int recipe_no = 0;
  const int cats = uniform(1, lim.max_categories);
  for (int c = 0; c < cats; ++c) {
    const int subs = uniform(1, lim.max_subcategories);
    for (int s = 0; s < subs; ++s) {
      const int dishes = uniform(1, lim.max_dishes);
      for (int d = 0; d < dishes; ++d) {
        const int recipes = uniform(1, lim.max_recipes_per_dish);
        for (int r = 0; r < recipes; ++r) {
          RawRow row{"cat" + std::to_string(c), "sub" + std::to_string(s),
                     "dish" + std::to_string(d), "r" + std::to_string(recipe_no++), {}};
          const int size = uniform(1, lim.max_recipe_size);
          for (int i = 0; i < size; ++i) {
            std::string item = pick_item();
            if (std::find(row.items.begin(), row.items.end(), item) == row.items.end()) {
              row.items.push_back(std::move(item));
            }
          }
          out.rows.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

}  // namespace basketchef::testing

#endif  // BASKETCHEF_TESTING_RANDOM_CORPUS_H_
