#include "basketchef/json_view.h"

namespace basketchef {

namespace {

ordered_json item_names(const Corpus& corpus, const std::vector<ItemId>& items) {
  ordered_json out = ordered_json::array();
  for (ItemId item : items) out.push_back(corpus.item_name(item));
  return out;
}

ordered_json category_names(const Corpus& corpus, const std::vector<std::size_t>& cats) {
  ordered_json out = ordered_json::array();
  for (std::size_t c : cats) out.push_back(corpus.category(c).name);
  return out;
}

ordered_json subcategory_refs(const Corpus& corpus, const std::vector<SubcategoryRef>& refs) {
  ordered_json out = ordered_json::array();
  for (const SubcategoryRef& r : refs) {
    out.push_back({{"category", corpus.category(r.category).name},
                   {"subcategory", corpus.category(r.category).subcategories[r.subcategory].name}});
  }
  return out;
}

const char* kind_name(EventReport::Kind kind) {
  switch (kind) {
    case EventReport::Kind::kAdd:
      return "add";
    case EventReport::Kind::kRemove:
      return "remove";
    case EventReport::Kind::kSelect:
      return "select";
  }
  return "unknown";
}

}  // namespace

ordered_json config_json(const SessionConfig& config) {
  return {{"k", config.k},         {"h", config.h},         {"q", config.q},
          {"n", config.n},         {"theta", config.theta}, {"top_n", config.top_n}};
}

ordered_json state_json(const Session& session) {
  const Corpus& corpus = session.model().corpus();
  ordered_json counts = ordered_json::object();
  for (std::size_t c = 0; c < corpus.categories().size(); ++c) {
    counts[corpus.category(c).name] = session.activation_count(c);
  }
  ordered_json scores = ordered_json::array();
  for (std::size_t c : session.active_categories()) {
    const Category& cat = corpus.category(c);
    for (std::size_t s = 0; s < cat.subcategories.size(); ++s) {
      scores.push_back({{"category", cat.name},
                        {"subcategory", cat.subcategories[s].name},
                        {"score", session.subcategory_score(c, s)},
                        {"active", session.subcategory_active(c, s)}});
    }
  }
  ordered_json out;
  out["basket"] = item_names(corpus, session.basket());
  out["activation_counts"] = std::move(counts);
  out["active_categories"] = category_names(corpus, session.active_categories());
  out["subcategory_scores"] = std::move(scores);
  out["active_subcategories"] = subcategory_refs(corpus, session.active_subcategories());
  return out;
}

ordered_json report_json(const Session& session, const EventReport& report) {
  const Corpus& corpus = session.model().corpus();
  ordered_json out;
  out["event"] = kind_name(report.kind);
  out["items"] = item_names(corpus, report.items);
  if (report.kind == EventReport::Kind::kAdd) out["duplicate"] = report.duplicate;
  out["activated_categories"] = category_names(corpus, report.activated_categories);
  out["activated_subcategories"] = subcategory_refs(corpus, report.activated_subcategories);
  if (report.kind == EventReport::Kind::kRemove) {
    out["deactivated_categories"] = category_names(corpus, report.deactivated_categories);
    out["deactivated_subcategories"] = subcategory_refs(corpus, report.deactivated_subcategories);
  }
  return out;
}

ordered_json recommendations_json(const Session& session,
                                  const std::vector<Recommendation>& recommendations) {
  const Corpus& corpus = session.model().corpus();
  ordered_json out = ordered_json::array();
  for (const Recommendation& r : recommendations) {
    const Category& cat = corpus.category(r.category);
    out.push_back({{"dish", r.dish_name},
                   {"recipe_id", r.recipe_id},
                   {"category", cat.name},
                   {"subcategory", cat.subcategories[r.subcategory].name},
                   {"similarity", r.similarity},
                   {"missing_items", item_names(corpus, r.missing_items)}});
  }
  return out;
}

ordered_json corpus_summary_json(const Model& model, std::size_t k, std::size_t h) {
  const Corpus& corpus = model.corpus();
  auto identifiers = model.identifiers(k, h);
  ordered_json cats = ordered_json::array();
  for (std::size_t c = 0; c < corpus.categories().size(); ++c) {
    const Category& cat = corpus.category(c);
    ordered_json subs = ordered_json::array();
    for (const Subcategory& s : cat.subcategories) {
      subs.push_back({{"name", s.name}, {"dish_count", s.dishes.size()}});
    }
    cats.push_back({{"name", cat.name},
                    {"recipe_count", cat.recipe_count()},
                    {"subcategories", std::move(subs)},
                    {"identifiers", item_names(corpus, identifiers->sets[c].identifiers)}});
  }
  ordered_json vocab = ordered_json::array();
  for (const Item& item : corpus.vocabulary()) vocab.push_back(item.name);

  ordered_json out;
  out["categories"] = std::move(cats);
  out["vocabulary_size"] = corpus.vocabulary_size();
  out["vocabulary"] = std::move(vocab);
  out["identifier_params"] = {{"k", k}, {"h", h}};
  return out;
}

}  // namespace basketchef
