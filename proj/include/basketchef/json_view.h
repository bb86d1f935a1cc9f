// JSON renderings of session state, event reports and recommendations. Shared
// by the HTTP service and the replay transcript so both speak the same shapes.
// Items are always referred to by name.

#ifndef BASKETCHEF_JSON_VIEW_H_
#define BASKETCHEF_JSON_VIEW_H_

#include <vector>

#include "basketchef/model.h"
#include "basketchef/session.h"
#include "json.hpp"

namespace basketchef {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const SessionConfig& config);

// basket, activation counts, active categories, per-subcategory scores of
// active categories, active subcategories.
ordered_json state_json(const Session& session);

ordered_json report_json(const Session& session, const EventReport& report);

ordered_json recommendations_json(const Session& session,
                                  const std::vector<Recommendation>& recommendations);

// Categories with subcategory names and dish counts, vocabulary size and the
// identifier sets for (k, h).
ordered_json corpus_summary_json(const Model& model, std::size_t k, std::size_t h);

}  // namespace basketchef

#endif  // BASKETCHEF_JSON_VIEW_H_
