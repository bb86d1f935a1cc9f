// Recipe corpus data model: category -> subcategory -> dish -> recipe -> items,
// plus the global item vocabulary shared by every category.

#ifndef BASKETCHEF_CORPUS_H_
#define BASKETCHEF_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace basketchef {

// Dense index into Corpus::vocabulary().
enum class ItemId : std::uint32_t {};

constexpr std::size_t index_of(ItemId id) { return static_cast<std::size_t>(id); }
constexpr ItemId item_at(std::size_t index) {
  return static_cast<ItemId>(static_cast<std::uint32_t>(index));
}

struct Item {
  ItemId id;
  std::string name;

  bool operator==(const Item&) const = default;
};

struct Recipe {
  std::string id;
  // Sorted ascending by id, no duplicates.
  std::vector<ItemId> items;

  bool operator==(const Recipe&) const = default;
};

struct Dish {
  std::string name;
  std::vector<Recipe> recipes;

  bool operator==(const Dish&) const = default;
};

struct Subcategory {
  std::string name;
  std::vector<Dish> dishes;

  std::size_t recipe_count() const;
  bool operator==(const Subcategory&) const = default;
};

struct Category {
  std::string name;
  std::vector<Subcategory> subcategories;

  std::size_t recipe_count() const;
  bool operator==(const Category&) const = default;
};

// Position of a recipe in the hierarchy.
struct RecipePath {
  std::size_t category = 0;
  std::size_t subcategory = 0;
  std::size_t dish = 0;
  std::size_t recipe = 0;
};

// Thrown for malformed or invalid corpus documents. path() names the offending
// node, e.g. "rice/biryani/chicken biryani/rb01".
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<Category> categories, std::vector<Item> vocabulary);

  const std::vector<Category>& categories() const { return categories_; }
  const Category& category(std::size_t c) const { return categories_.at(c); }
  const std::vector<Item>& vocabulary() const { return vocabulary_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  std::size_t recipe_count() const;

  const std::string& item_name(ItemId id) const { return vocabulary_.at(index_of(id)).name; }

  // Lookups take names that are normalized first.
  std::optional<ItemId> find_item(std::string_view name) const;
  std::optional<std::size_t> find_category(std::string_view name) const;
  std::optional<RecipePath> find_recipe(std::string_view recipe_id) const;
  const Recipe& recipe(const RecipePath& path) const;

  // Vocabulary names starting with the normalized prefix, in vocabulary order.
  std::vector<std::string> items_with_prefix(std::string_view prefix) const;

  bool operator==(const Corpus& other) const {
    return categories_ == other.categories_ && vocabulary_ == other.vocabulary_;
  }

 private:
  std::vector<Category> categories_;
  std::vector<Item> vocabulary_;
  std::unordered_map<std::string, ItemId> item_index_;
  std::unordered_map<std::string, RecipePath> recipe_index_;
};

// Lowercases, trims and collapses internal whitespace runs to one space.
// Throws CorpusError when nothing remains.
std::string normalize_item_name(std::string_view raw);

// Parses and validates a corpus document. Vocabulary ids follow first
// appearance in a depth-first walk. Non-fatal findings (a category with a
// single subcategory) are appended to `warnings` when given.
Corpus load_corpus(std::istream& source, std::vector<std::string>* warnings = nullptr);
Corpus load_corpus_text(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Throws std::system_error (I/O) or CorpusError (content).
Corpus load_corpus_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Serializes back to the corpus file format.
std::string dump_corpus(const Corpus& corpus, int indent = 2);

}  // namespace basketchef

#endif  // BASKETCHEF_CORPUS_H_
