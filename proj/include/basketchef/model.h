// A loaded corpus together with its precomputed statistics. Shared read-only
// by every session.

#ifndef BASKETCHEF_MODEL_H_
#define BASKETCHEF_MODEL_H_

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "basketchef/corpus.h"
#include "basketchef/stats.h"

namespace basketchef {

// Identifier sets of every category for one (k, h), plus the reverse lookup
// from an item to the categories it identifies.
struct IdentifierIndex {
  std::size_t k = 0;
  std::size_t h = 0;
  std::vector<IdentifierSet> sets;
  std::vector<std::vector<std::size_t>> categories_by_item;
};

class Model {
 public:
  explicit Model(Corpus corpus);

  static std::shared_ptr<const Model> from_file(const std::string& path,
                                                std::vector<std::string>* warnings = nullptr);

  const Corpus& corpus() const { return corpus_; }
  const CorpusStats& stats() const { return stats_; }

  // Built on first request for a given (k, h) and cached. Thread-safe.
  std::shared_ptr<const IdentifierIndex> identifiers(std::size_t k, std::size_t h) const;

 private:
  Corpus corpus_;
  CorpusStats stats_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const IdentifierIndex>>
      identifier_cache_;
};

}  // namespace basketchef

#endif  // BASKETCHEF_MODEL_H_
