#include "basketchef/corpus.h"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <system_error>
#include <vector>

#include "testing/fixtures.h"
#include "testing/random_corpus.h"

namespace basketchef {
namespace {

using testing::bundled_corpus_path;

constexpr const char* kTwoByTwo = R"({
  "categories": [
    {"name": "rice", "subcategories": [
      {"name": "biryani", "dishes": [
        {"name": "chicken biryani", "recipes": [
          {"id": "b1", "items": ["Rice", "  kewra   water ", "rice"]},
          {"id": "b2", "items": ["rice", "mace"]}]}]},
      {"name": "pulao", "dishes": [
        {"name": "veg pulao", "recipes": [
          {"id": "p1", "items": ["rice", "cumin seed"]}]}]}]},
    {"name": "chicken", "subcategories": [
      {"name": "indian", "dishes": [
        {"name": "butter chicken", "recipes": [
          {"id": "c1", "items": ["chicken", "butter"]}]}]},
      {"name": "chinese", "dishes": [
        {"name": "chilli chicken", "recipes": [
          {"id": "c2", "items": ["chicken", "soy sauce"]}]}]}]}]})";

std::string with_recipes(const std::string& recipes) {
  return R"({"categories": [{"name": "rice", "subcategories": [
    {"name": "pulao", "dishes": [{"name": "veg pulao", "recipes": [)" +
         recipes + R"(]}]},
    {"name": "biryani", "dishes": [{"name": "b", "recipes": [{"id": "z", "items": ["x"]}]}]}]}]})";
}

TEST(NormalizeItemName, LowercasesTrimsAndCollapsesWhitespace) {
  EXPECT_EQ(normalize_item_name("Kewra Water"), "kewra water");
  EXPECT_EQ(normalize_item_name("  ginger \t garlic\npaste  "), "ginger garlic paste");
  EXPECT_EQ(normalize_item_name("SALT"), "salt");
  EXPECT_EQ(normalize_item_name("jalape\xc3\xb1o"), "jalape\xc3\xb1o");
}

TEST(NormalizeItemName, IsIdempotent) {
  for (const char* raw : {"  A  b ", "x", "Long-Grain  RICE", "a\tb\nc"}) {
    const std::string once = normalize_item_name(raw);
    EXPECT_EQ(normalize_item_name(once), once) << raw;
  }
}

TEST(NormalizeItemName, RejectsBlankNames) {
  EXPECT_THROW(normalize_item_name(""), CorpusError);
  EXPECT_THROW(normalize_item_name(" \t\n"), CorpusError);
}

TEST(LoadCorpus, BuildsHierarchyAndVocabularyInFirstAppearanceOrder) {
  const Corpus corpus = load_corpus_text(kTwoByTwo);
  ASSERT_EQ(corpus.categories().size(), 2u);
  EXPECT_EQ(corpus.category(0).name, "rice");
  EXPECT_EQ(corpus.category(1).subcategories[1].name, "chinese");
  EXPECT_EQ(corpus.recipe_count(), 5u);
  EXPECT_EQ(corpus.category(0).recipe_count(), 3u);

  std::vector<std::string> names;
  for (const Item& item : corpus.vocabulary()) names.push_back(item.name);
  EXPECT_EQ(names, (std::vector<std::string>{"rice", "kewra water", "mace", "cumin seed",
                                             "chicken", "butter", "soy sauce"}));
  for (std::size_t i = 0; i < corpus.vocabulary_size(); ++i) {
    EXPECT_EQ(index_of(corpus.vocabulary()[i].id), i);
  }
}

TEST(LoadCorpus, DeduplicatesItemsWithinARecipe) {
  const Corpus corpus = load_corpus_text(kTwoByTwo);
  const Recipe& b1 = corpus.category(0).subcategories[0].dishes[0].recipes[0];
  ASSERT_EQ(b1.items.size(), 2u);
  EXPECT_EQ(corpus.item_name(b1.items[0]), "rice");
  EXPECT_EQ(corpus.item_name(b1.items[1]), "kewra water");
}

TEST(LoadCorpus, LookupsNormalizeTheirArgument) {
  const Corpus corpus = load_corpus_text(kTwoByTwo);
  auto id = corpus.find_item("  KEWRA water");
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(corpus.item_name(*id), "kewra water");
  EXPECT_FALSE(corpus.find_item("saffron").has_value());
  EXPECT_FALSE(corpus.find_item("   ").has_value());
  EXPECT_EQ(corpus.find_category("chicken"), 1u);
  EXPECT_FALSE(corpus.find_category("pasta").has_value());

  auto path = corpus.find_recipe("c2");
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->category, 1u);
  EXPECT_EQ(path->subcategory, 1u);
  EXPECT_EQ(corpus.recipe(*path).id, "c2");
  EXPECT_FALSE(corpus.find_recipe("nope").has_value());
}

TEST(LoadCorpus, PrefixSearchFollowsVocabularyOrder) {
  const Corpus corpus = load_corpus_text(kTwoByTwo);
  EXPECT_EQ(corpus.items_with_prefix("c"), (std::vector<std::string>{"cumin seed", "chicken"}));
  EXPECT_EQ(corpus.items_with_prefix("Chi"), (std::vector<std::string>{"chicken"}));
  EXPECT_TRUE(corpus.items_with_prefix("zz").empty());
}

TEST(LoadCorpus, DuplicateDishNamesReportThePath) {
  const std::string text = R"({"categories": [{"name": "rice", "subcategories": [
    {"name": "pulao", "dishes": [
      {"name": "veg pulao", "recipes": [{"id": "a", "items": ["x"]}]},
      {"name": "veg pulao", "recipes": [{"id": "b", "items": ["y"]}]}]},
    {"name": "biryani", "dishes": [{"name": "b", "recipes": [{"id": "c", "items": ["x"]}]}]}]}]})";
  try {
    load_corpus_text(text);
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.path(), "rice/pulao");
    EXPECT_NE(std::string(e.what()).find("duplicate dish name \"veg pulao\""), std::string::npos);
  }
}

TEST(LoadCorpus, RejectsEmptyItemList) {
  try {
    load_corpus_text(with_recipes(R"({"id": "p1", "items": []})"));
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.path(), "rice/pulao/veg pulao/p1");
  }
}

TEST(LoadCorpus, RejectsStructuralProblems) {
  const std::vector<std::string> bad = {
      "not json",
      "[]",
      R"({"categories": []})",
      R"({"categories": [], "extra": 1})",
      R"({"categories": [{"name": "rice", "subcategories": []}]})",
      R"({"categories": [{"name": "", "subcategories": []}]})",
      with_recipes(R"({"id": "p1", "items": ["x"], "notes": "?"})"),
      with_recipes(R"({"id": "p1", "items": [3]})"),
      with_recipes(R"({"id": "p1", "items": ["  "]})"),
      with_recipes(R"({"id": "p1"})"),
      with_recipes(R"({"id": "z", "items": ["x"]})"),  // recipe id reused
      with_recipes(""),
  };
  for (const auto& text : bad) {
    EXPECT_THROW(load_corpus_text(text), CorpusError) << text;
  }
}

TEST(LoadCorpus, DuplicateCategoryAndSubcategoryNames) {
  const std::string dup_cat = R"({"categories": [
    {"name": "a", "subcategories": [{"name": "s", "dishes": [{"name": "d", "recipes": [{"id": "1", "items": ["x"]}]}]}]},
    {"name": "a", "subcategories": [{"name": "s", "dishes": [{"name": "d", "recipes": [{"id": "2", "items": ["x"]}]}]}]}]})";
  EXPECT_THROW(load_corpus_text(dup_cat), CorpusError);
  const std::string dup_sub = R"({"categories": [{"name": "a", "subcategories": [
    {"name": "s", "dishes": [{"name": "d", "recipes": [{"id": "1", "items": ["x"]}]}]},
    {"name": "s", "dishes": [{"name": "e", "recipes": [{"id": "2", "items": ["x"]}]}]}]}]})";
  EXPECT_THROW(load_corpus_text(dup_sub), CorpusError);
}

TEST(LoadCorpus, SingleSubcategoryCategoryOnlyWarns) {
  const std::string text = R"({"categories": [{"name": "soup", "subcategories": [
    {"name": "clear", "dishes": [{"name": "d", "recipes": [{"id": "1", "items": ["x"]}]}]}]}]})";
  std::vector<std::string> warnings;
  const Corpus corpus = load_corpus_text(text, &warnings);
  EXPECT_EQ(corpus.recipe_count(), 1u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("soup"), std::string::npos);
}

TEST(LoadCorpus, MissingFileIsAnIoError) {
  EXPECT_THROW(load_corpus_file("/nonexistent/corpus.json"), std::system_error);
}

TEST(LoadCorpus, BundledCorpusShape) {
  // Frozen from tests/oracle/corpus_oracle.py.
  const Corpus corpus = load_corpus_file(bundled_corpus_path());
  EXPECT_EQ(corpus.recipe_count(), 60u);
  EXPECT_EQ(corpus.vocabulary_size(), 65u);
  ASSERT_EQ(corpus.categories().size(), 2u);
  EXPECT_EQ(corpus.category(0).recipe_count(), 36u);
  EXPECT_EQ(corpus.category(1).recipe_count(), 24u);
}

TEST(LoadCorpus, DumpRoundTripsAndIsDeterministic) {
  const Corpus corpus = load_corpus_file(bundled_corpus_path());
  const std::string dumped = dump_corpus(corpus);
  const Corpus again = load_corpus_text(dumped);
  EXPECT_EQ(again, corpus);
  EXPECT_EQ(dump_corpus(again), dumped);
  EXPECT_EQ(dump_corpus(load_corpus_file(bundled_corpus_path())), dumped);
}

TEST(LoadCorpus, RandomCorporaRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const testing::RawCorpus raw = testing::random_corpus(rng);
    const Corpus corpus = load_corpus_text(raw.to_json());
    EXPECT_EQ(corpus.recipe_count(), raw.rows.size());
    EXPECT_EQ(load_corpus_text(dump_corpus(corpus, -1)), corpus);
  }
}

}  // namespace
}  // namespace basketchef
