// Python bindings for the basketchef engine. Items are passed by name; state,
// reports and recommendations come back as plain dicts/lists with the same
// shapes as the HTTP API.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "basketchef/corpus.h"
#include "basketchef/json_view.h"
#include "basketchef/model.h"
#include "basketchef/replay.h"
#include "basketchef/session.h"

namespace py = pybind11;
using namespace basketchef;

namespace {

py::object to_python(const ordered_json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

std::size_t category_index(const Model& model, const std::string& name) {
  auto c = model.corpus().find_category(name);
  if (!c) throw py::key_error("no category named \"" + name + "\"");
  return *c;
}

std::size_t subcategory_index(const Model& model, std::size_t c, const std::string& name) {
  const auto& subs = model.corpus().category(c).subcategories;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (subs[s].name == name) return s;
  }
  throw py::key_error("no subcategory named \"" + name + "\"");
}

ItemId item_id(const Model& model, const std::string& name) {
  auto id = model.corpus().find_item(name);
  if (!id) throw py::key_error("unknown item \"" + name + "\"");
  return *id;
}

std::vector<ItemId> item_ids(const Model& model, const std::vector<std::string>& names) {
  std::vector<ItemId> out;
  for (const auto& n : names) out.push_back(item_id(model, n));
  return out;
}

}  // namespace

PYBIND11_MODULE(basketchef, m) {
  m.doc() = "Dish-aware grocery basket recommendations";

  py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);
  py::register_exception<SessionError>(m, "SessionError", PyExc_ValueError);
  py::register_exception<ReplayError>(m, "ReplayError", PyExc_ValueError);

  m.def("normalize_item_name", &normalize_item_name, py::arg("raw"));
  m.def("score_increment", &score_increment, py::arg("rank"), py::arg("n"));
  m.def("min_items_to_activate", &min_items_to_activate, py::arg("n"), py::arg("theta"));
  m.def(
      "jaccard",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        // Intern both sides into a throwaway id space.
        std::vector<std::string> names;
        auto intern = [&](const std::string& s) {
          const std::string key = normalize_item_name(s);
          auto it = std::find(names.begin(), names.end(), key);
          if (it == names.end()) {
            names.push_back(key);
            return item_at(names.size() - 1);
          }
          return item_at(static_cast<std::size_t>(it - names.begin()));
        };
        std::vector<ItemId> x, y;
        for (const auto& s : a) x.push_back(intern(s));
        for (const auto& s : b) y.push_back(intern(s));
        return jaccard(x, y);
      },
      py::arg("a"), py::arg("b"), "Jaccard similarity of two item-name collections.");
  m.def(
      "threshold_table",
      [](const std::vector<double>& ns, const std::vector<double>& thetas) {
        std::vector<std::vector<std::uint64_t>> grid;
        for (double t : thetas) {
          auto& row = grid.emplace_back();
          for (double n : ns) row.push_back(min_items_to_activate(n, t));
        }
        return grid;
      },
      py::arg("n_values"), py::arg("theta_values"), "Rows theta, columns n.");

  py::class_<SessionConfig>(m, "SessionConfig")
      .def(py::init([](std::size_t k, std::size_t h, std::size_t q, double n, double theta,
                       std::size_t top_n) {
             SessionConfig c{k, h, q, n, theta, top_n};
             c.validate();
             return c;
           }),
           py::kw_only(), py::arg("k") = 5, py::arg("h") = 1, py::arg("q") = 1,
           py::arg("n") = 3.0, py::arg("theta") = 4.0, py::arg("top_n") = 5)
      .def_readwrite("k", &SessionConfig::k)
      .def_readwrite("h", &SessionConfig::h)
      .def_readwrite("q", &SessionConfig::q)
      .def_readwrite("n", &SessionConfig::n)
      .def_readwrite("theta", &SessionConfig::theta)
      .def_readwrite("top_n", &SessionConfig::top_n)
      .def("invalid_fields", &SessionConfig::invalid_fields)
      .def("__repr__", [](const SessionConfig& c) {
        return "SessionConfig(" + config_json(c).dump() + ")";
      });

  py::class_<Model, std::shared_ptr<Model>>(m, "Model")
      .def_static(
          "from_file",
          [](const std::string& path) { return std::make_shared<Model>(load_corpus_file(path)); },
          py::arg("path"))
      .def_static(
          "from_json",
          [](const std::string& text) { return std::make_shared<Model>(load_corpus_text(text)); },
          py::arg("text"))
      .def_property_readonly("categories",
                             [](const Model& model) {
                               std::vector<std::string> out;
                               for (const auto& c : model.corpus().categories()) {
                                 out.push_back(c.name);
                               }
                               return out;
                             })
      .def_property_readonly("vocabulary",
                             [](const Model& model) {
                               std::vector<std::string> out;
                               for (const auto& i : model.corpus().vocabulary()) {
                                 out.push_back(i.name);
                               }
                               return out;
                             })
      .def_property_readonly("recipe_count",
                             [](const Model& model) { return model.corpus().recipe_count(); })
      .def(
          "identifiers",
          [](const Model& model, const std::string& category, std::size_t k, std::size_t h) {
            const auto& set = model.identifiers(k, h)->sets[category_index(model, category)];
            std::vector<std::string> out;
            for (ItemId id : set.identifiers) out.push_back(model.corpus().item_name(id));
            return out;
          },
          py::arg("category"), py::arg("k") = 5, py::arg("h") = 1)
      .def(
          "differentiators",
          [](const Model& model, const std::string& category, std::uint32_t top) {
            const std::size_t c = category_index(model, category);
            const RankTable& ranks = model.stats().ranks(c);
            py::dict out;
            const auto& subs = model.corpus().category(c).subcategories;
            for (std::size_t s = 0; s < subs.size(); ++s) {
              py::list rows;
              for (std::uint32_t r = 1; r <= top && r <= ranks.item_count(); ++r) {
                const ItemId id = ranks.item_at_rank(s, r);
                rows.append(py::make_tuple(model.corpus().item_name(id), ranks.score(s, id)));
              }
              out[py::str(subs[s].name)] = rows;
            }
            return out;
          },
          py::arg("category"), py::arg("top") = 5)
      .def(
          "rank",
          [](const Model& model, const std::string& category, const std::string& subcategory,
             const std::string& item) {
            const std::size_t c = category_index(model, category);
            return model.stats().ranks(c).rank(subcategory_index(model, c, subcategory),
                                               item_id(model, item));
          },
          py::arg("category"), py::arg("subcategory"), py::arg("item"))
      .def(
          "summary",
          [](const Model& model, std::size_t k, std::size_t h) {
            return to_python(corpus_summary_json(model, k, h));
          },
          py::arg("k") = 5, py::arg("h") = 1)
      .def(
          "replay",
          [](const std::shared_ptr<Model>& model, const std::string& script,
             const SessionConfig& config) {
            return to_python(run_replay(model, config, parse_replay_script(script)));
          },
          py::arg("script"), py::arg("config") = SessionConfig{});

  py::class_<Session>(m, "Session")
      .def(py::init([](const std::shared_ptr<Model>& model, const SessionConfig& config) {
             return Session(model, config);
           }),
           py::arg("model"), py::arg("config") = SessionConfig{})
      .def("add", [](Session& s, const std::string& item) {
        return to_python(report_json(s, s.add_item(item_id(s.model(), item))));
      }, py::arg("item"))
      .def("remove", [](Session& s, const std::string& item) {
        return to_python(report_json(s, s.remove_item(item_id(s.model(), item))));
      }, py::arg("item"))
      .def(
          "select",
          [](Session& s, const std::string& dish, const std::string& recipe_id,
             const std::vector<std::string>& accepted) {
            const auto ids = item_ids(s.model(), accepted);
            return to_python(report_json(s, s.select_dish(dish, recipe_id, ids)));
          },
          py::arg("dish"), py::arg("recipe_id"), py::arg("accepted_items"))
      .def("recommend",
           [](const Session& s) { return to_python(recommendations_json(s, s.recommend())); })
      .def("state", [](const Session& s) { return to_python(state_json(s)); })
      .def(
          "score",
          [](const Session& s, const std::string& category, const std::string& subcategory) {
            const std::size_t c = category_index(s.model(), category);
            return s.subcategory_score(c, subcategory_index(s.model(), c, subcategory));
          },
          py::arg("category"), py::arg("subcategory"))
      .def_property_readonly("basket", [](const Session& s) {
        std::vector<std::string> out;
        for (ItemId id : s.basket()) out.push_back(s.model().corpus().item_name(id));
        return out;
      });
}
