#include "basketchef/model.h"

namespace basketchef {

Model::Model(Corpus corpus) : corpus_(std::move(corpus)), stats_(corpus_) {}

std::shared_ptr<const Model> Model::from_file(const std::string& path,
                                              std::vector<std::string>* warnings) {
  return std::make_shared<const Model>(load_corpus_file(path, warnings));
}

std::shared_ptr<const IdentifierIndex> Model::identifiers(std::size_t k, std::size_t h) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = identifier_cache_[{k, h}];
  if (slot) return slot;

  auto index = std::make_shared<IdentifierIndex>();
  index->k = k;
  index->h = h;
  index->categories_by_item.resize(corpus_.vocabulary_size());
  for (std::size_t c = 0; c < stats_.category_count(); ++c) {
    index->sets.push_back(stats_.identifiers(c, k, h));
    for (ItemId item : index->sets.back().identifiers) {
      index->categories_by_item[index_of(item)].push_back(c);
    }
  }
  slot = std::move(index);
  return slot;
}

}  // namespace basketchef
