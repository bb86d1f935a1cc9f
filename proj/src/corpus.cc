#include "basketchef/corpus.h"

#include <algorithm>
#include <cerrno>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "json.hpp"

namespace basketchef {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
}

std::string join_path(const std::string& parent, const std::string& child) {
  return parent.empty() ? child : parent + "/" + child;
}

void check_keys(const json& node, std::initializer_list<const char*> allowed,
                const std::string& path) {
  if (!node.is_object()) throw CorpusError(path, "expected a JSON object");
  for (const auto& [key, value] : node.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return key == k; });
    if (!known) throw CorpusError(path, "unknown key \"" + key + "\"");
  }
  for (const char* key : allowed) {
    if (!node.contains(key)) throw CorpusError(path, std::string("missing key \"") + key + "\"");
  }
}

const json& array_field(const json& node, const char* key, const std::string& path) {
  const json& value = node.at(key);
  if (!value.is_array()) throw CorpusError(path, std::string("\"") + key + "\" must be an array");
  return value;
}

std::string name_field(const json& node, const char* key, const std::string& path) {
  const json& value = node.at(key);
  if (!value.is_string()) throw CorpusError(path, std::string("\"") + key + "\" must be a string");
  std::string name = value.get<std::string>();
  if (name.empty()) throw CorpusError(path, std::string("\"") + key + "\" must be nonempty");
  return name;
}

class Loader {
 public:
  explicit Loader(std::vector<std::string>* warnings) : warnings_(warnings) {}

  Corpus load(const json& doc) {
    check_keys(doc, {"categories"}, "");
    const json& cats = array_field(doc, "categories", "");
    if (cats.empty()) throw CorpusError("", "corpus has no categories");

    std::vector<Category> categories;
    std::unordered_set<std::string> names;
    for (const json& node : cats) {
      check_keys(node, {"name", "subcategories"}, "");
      Category category;
      category.name = name_field(node, "name", "");
      if (!names.insert(category.name).second) {
        throw CorpusError(category.name, "duplicate category name \"" + category.name + "\"");
      }
      category.subcategories = subcategories(node, category.name);
      categories.push_back(std::move(category));
    }
    return Corpus(std::move(categories), std::move(vocabulary_));
  }

 private:
  std::vector<Subcategory> subcategories(const json& node, const std::string& path) {
    const json& subs = array_field(node, "subcategories", path);
    if (subs.empty()) throw CorpusError(path, "category has no subcategories");
    if (subs.size() == 1 && warnings_ != nullptr) {
      warnings_->push_back(path + ": category has a single subcategory; nothing to differentiate");
    }
    std::vector<Subcategory> out;
    std::unordered_set<std::string> names;
    for (const json& sub : subs) {
      check_keys(sub, {"name", "dishes"}, path);
      Subcategory subcategory;
      subcategory.name = name_field(sub, "name", path);
      if (!names.insert(subcategory.name).second) {
        throw CorpusError(path, "duplicate subcategory name \"" + subcategory.name + "\"");
      }
      subcategory.dishes = dishes(sub, join_path(path, subcategory.name));
      out.push_back(std::move(subcategory));
    }
    return out;
  }

  std::vector<Dish> dishes(const json& node, const std::string& path) {
    const json& list = array_field(node, "dishes", path);
    if (list.empty()) throw CorpusError(path, "subcategory has no dishes");
    std::vector<Dish> out;
    std::unordered_set<std::string> names;
    for (const json& entry : list) {
      check_keys(entry, {"name", "recipes"}, path);
      Dish dish;
      dish.name = name_field(entry, "name", path);
      if (!names.insert(dish.name).second) {
        throw CorpusError(path, "duplicate dish name \"" + dish.name + "\"");
      }
      dish.recipes = recipes(entry, join_path(path, dish.name));
      out.push_back(std::move(dish));
    }
    return out;
  }

  std::vector<Recipe> recipes(const json& node, const std::string& path) {
    const json& list = array_field(node, "recipes", path);
    if (list.empty()) throw CorpusError(path, "dish has no recipes");
    std::vector<Recipe> out;
    for (const json& entry : list) {
      check_keys(entry, {"id", "items"}, path);
      Recipe recipe;
      recipe.id = name_field(entry, "id", path);
      const std::string here = join_path(path, recipe.id);
      if (!recipe_ids_.insert(recipe.id).second) {
        throw CorpusError(here, "duplicate recipe id \"" + recipe.id + "\"");
      }
      const json& items = array_field(entry, "items", here);
      if (items.empty()) throw CorpusError(here, "recipe has an empty item list");
      for (const json& item : items) {
        if (!item.is_string()) throw CorpusError(here, "items must be strings");
        std::string name;
        try {
          name = normalize_item_name(item.get<std::string>());
        } catch (const CorpusError& e) {
          throw CorpusError(here, e.what());
        }
        recipe.items.push_back(intern(std::move(name)));
      }
      std::sort(recipe.items.begin(), recipe.items.end());
      recipe.items.erase(std::unique(recipe.items.begin(), recipe.items.end()), recipe.items.end());
      out.push_back(std::move(recipe));
    }
    return out;
  }

  ItemId intern(std::string name) {
    auto [it, inserted] = ids_.try_emplace(name, item_at(vocabulary_.size()));
    if (inserted) vocabulary_.push_back(Item{it->second, std::move(name)});
    return it->second;
  }

  std::vector<std::string>* warnings_;
  std::vector<Item> vocabulary_;
  std::unordered_map<std::string, ItemId> ids_;
  std::unordered_set<std::string> recipe_ids_;
};

}  // namespace

CorpusError::CorpusError(std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

std::size_t Subcategory::recipe_count() const {
  std::size_t n = 0;
  for (const Dish& d : dishes) n += d.recipes.size();
  return n;
}

std::size_t Category::recipe_count() const {
  std::size_t n = 0;
  for (const Subcategory& s : subcategories) n += s.recipe_count();
  return n;
}

Corpus::Corpus(std::vector<Category> categories, std::vector<Item> vocabulary)
    : categories_(std::move(categories)), vocabulary_(std::move(vocabulary)) {
  for (const Item& item : vocabulary_) item_index_.emplace(item.name, item.id);
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    const auto& subs = categories_[c].subcategories;
    for (std::size_t s = 0; s < subs.size(); ++s) {
      for (std::size_t d = 0; d < subs[s].dishes.size(); ++d) {
        const auto& recipes = subs[s].dishes[d].recipes;
        for (std::size_t r = 0; r < recipes.size(); ++r) {
          recipe_index_.emplace(recipes[r].id, RecipePath{c, s, d, r});
        }
      }
    }
  }
}

std::size_t Corpus::recipe_count() const {
  std::size_t n = 0;
  for (const Category& c : categories_) n += c.recipe_count();
  return n;
}

std::optional<ItemId> Corpus::find_item(std::string_view name) const {
  std::string key;
  try {
    key = normalize_item_name(name);
  } catch (const CorpusError&) {
    return std::nullopt;
  }
  auto it = item_index_.find(key);
  if (it == item_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Corpus::find_category(std::string_view name) const {
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    if (categories_[c].name == name) return c;
  }
  return std::nullopt;
}

std::optional<RecipePath> Corpus::find_recipe(std::string_view recipe_id) const {
  auto it = recipe_index_.find(std::string(recipe_id));
  if (it == recipe_index_.end()) return std::nullopt;
  return it->second;
}

const Recipe& Corpus::recipe(const RecipePath& path) const {
  return categories_.at(path.category)
      .subcategories.at(path.subcategory)
      .dishes.at(path.dish)
      .recipes.at(path.recipe);
}

std::vector<std::string> Corpus::items_with_prefix(std::string_view prefix) const {
  std::string key;
  try {
    key = normalize_item_name(prefix);
  } catch (const CorpusError&) {
    return {};
  }
  std::vector<std::string> out;
  for (const Item& item : vocabulary_) {
    if (item.name.compare(0, key.size(), key) == 0) out.push_back(item.name);
  }
  return out;
}

std::string normalize_item_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    if (is_space(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ch >= 'A' && ch <= 'Z' ? static_cast<char>(ch - 'A' + 'a') : ch);
  }
  if (out.empty()) throw CorpusError("", "empty item name");
  return out;
}

Corpus load_corpus(std::istream& source, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw CorpusError("", std::string("malformed corpus file: ") + e.what());
  }
  return Loader(warnings).load(doc);
}

Corpus load_corpus_text(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return load_corpus(in, warnings);
}

Corpus load_corpus_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(errno ? errno : ENOENT, std::generic_category(),
                            "cannot open corpus file " + path);
  }
  return load_corpus(in, warnings);
}

std::string dump_corpus(const Corpus& corpus, int indent) {
  ordered_json cats = ordered_json::array();
  for (const Category& c : corpus.categories()) {
    ordered_json subs = ordered_json::array();
    for (const Subcategory& s : c.subcategories) {
      ordered_json dishes = ordered_json::array();
      for (const Dish& d : s.dishes) {
        ordered_json recipes = ordered_json::array();
        for (const Recipe& r : d.recipes) {
          ordered_json items = ordered_json::array();
          for (ItemId id : r.items) items.push_back(corpus.item_name(id));
          recipes.push_back({{"id", r.id}, {"items", std::move(items)}});
        }
        dishes.push_back({{"name", d.name}, {"recipes", std::move(recipes)}});
      }
      subs.push_back({{"name", s.name}, {"dishes", std::move(dishes)}});
    }
    cats.push_back({{"name", c.name}, {"subcategories", std::move(subs)}});
  }
  ordered_json doc;
  doc["categories"] = std::move(cats);
  return doc.dump(indent);
}

}  // namespace basketchef
