#ifndef BASKETCHEF_TESTING_FIXTURES_H_
#define BASKETCHEF_TESTING_FIXTURES_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "basketchef/model.h"
#include "basketchef/session.h"
#include "testing/random_corpus.h"

namespace basketchef::testing {

inline std::string bundled_corpus_path() {
  return std::string(BASKETCHEF_DATA_DIR) + "/bundled_corpus.json";
}

inline std::string fixture_path(const std::string& name) {
  return std::string(BASKETCHEF_FIXTURE_DIR) + "/" + name;
}

inline std::shared_ptr<const Model> bundled_model() {
  static const std::shared_ptr<const Model> model = Model::from_file(bundled_corpus_path());
  return model;
}

inline std::shared_ptr<const Model> model_from(const RawCorpus& raw) {
  return std::make_shared<const Model>(load_corpus_text(raw.to_json()));
}

inline ItemId id_of(const Model& model, const std::string& name) {
  auto id = model.corpus().find_item(name);
  if (!id) throw std::out_of_range("no item " + name);
  return *id;
}

inline std::size_t category_of(const Model& model, const std::string& name) {
  auto c = model.corpus().find_category(name);
  if (!c) throw std::out_of_range("no category " + name);
  return *c;
}

inline std::size_t subcategory_of(const Model& model, std::size_t c, const std::string& name) {
  const auto& subs = model.corpus().category(c).subcategories;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (subs[s].name == name) return s;
  }
  throw std::out_of_range("no subcategory " + name);
}

inline std::vector<std::string> names_of(const Model& model, const std::vector<ItemId>& ids) {
  std::vector<std::string> out;
  for (ItemId id : ids) out.push_back(model.corpus().item_name(id));
  return out;
}

}  // namespace basketchef::testing

#endif  // BASKETCHEF_TESTING_FIXTURES_H_
