#include "basketchef/replay.h"

#include <istream>
#include <sstream>

namespace basketchef {

namespace {

std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::string token;
    if (line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char ch = line[i++];
        if (ch == '\\' && i < line.size()) {
          token.push_back(line[i++]);
        } else if (ch == '"') {
          closed = true;
          break;
        } else {
          token.push_back(ch);
        }
      }
      if (!closed) throw ReplayError(lineno, "unterminated quoted field");
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        token.push_back(line[i++]);
      }
    }
    out.push_back(std::move(token));
  }
  return out;
}

std::vector<std::string> split_items(const std::string& field) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : field) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  // Tolerate a trailing comma or a wholly empty list.
  std::vector<std::string> kept;
  for (auto& item : out) {
    if (item.find_first_not_of(" \t") != std::string::npos) kept.push_back(std::move(item));
  }
  return kept;
}

ItemId resolve(const Corpus& corpus, const std::string& name, std::size_t line) {
  auto id = corpus.find_item(name);
  if (!id) throw ReplayError(line, "unknown item \"" + name + "\"");
  return *id;
}

}  // namespace

std::vector<ReplayEvent> parse_replay_script(std::istream& in) {
  std::vector<ReplayEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tokens = tokenize(line, lineno);
    const std::string& command = tokens.front();
    ReplayEvent event;
    event.line = lineno;
    if (command == "add" || command == "remove") {
      if (tokens.size() < 2) throw ReplayError(lineno, command + " needs an item");
      event.kind = command == "add" ? ReplayEvent::Kind::kAdd : ReplayEvent::Kind::kRemove;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (t > 1) event.item.push_back(' ');
        event.item += tokens[t];
      }
    } else if (command == "select") {
      if (tokens.size() < 3 || tokens.size() > 4) {
        throw ReplayError(lineno, "select needs <dish> <recipe-id> [<item,item,...>]");
      }
      event.kind = ReplayEvent::Kind::kSelect;
      event.dish = tokens[1];
      event.recipe_id = tokens[2];
      if (tokens.size() == 4) event.items = split_items(tokens[3]);
    } else if (command == "recommend") {
      if (tokens.size() != 1) throw ReplayError(lineno, "recommend takes no arguments");
      event.kind = ReplayEvent::Kind::kRecommend;
    } else {
      throw ReplayError(lineno, "unknown command \"" + command + "\"");
    }
    events.push_back(std::move(event));
  }
  return events;
}

std::vector<ReplayEvent> parse_replay_script(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_replay_script(in);
}

ordered_json run_replay(std::shared_ptr<const Model> model, const SessionConfig& config,
                        const std::vector<ReplayEvent>& events) {
  Session session(model, config);
  const Corpus& corpus = model->corpus();

  ordered_json transcript;
  transcript["config"] = config_json(config);
  transcript["initial_state"] = state_json(session);
  ordered_json log = ordered_json::array();
  for (const ReplayEvent& event : events) {
    ordered_json entry;
    entry["line"] = event.line;
    try {
      switch (event.kind) {
        case ReplayEvent::Kind::kAdd:
          entry["report"] = report_json(session, session.add_item(resolve(corpus, event.item, event.line)));
          entry["state"] = state_json(session);
          break;
        case ReplayEvent::Kind::kRemove:
          entry["report"] =
              report_json(session, session.remove_item(resolve(corpus, event.item, event.line)));
          entry["state"] = state_json(session);
          break;
        case ReplayEvent::Kind::kSelect: {
          std::vector<ItemId> accepted;
          for (const auto& name : event.items) accepted.push_back(resolve(corpus, name, event.line));
          entry["report"] =
              report_json(session, session.select_dish(event.dish, event.recipe_id, accepted));
          entry["state"] = state_json(session);
          break;
        }
        case ReplayEvent::Kind::kRecommend:
          entry["event"] = "recommend";
          entry["recommendations"] = recommendations_json(session, session.recommend());
          break;
      }
    } catch (const SessionError& e) {
      throw ReplayError(event.line, e.what());
    }
    log.push_back(std::move(entry));
  }
  transcript["events"] = std::move(log);
  return transcript;
}

}  // namespace basketchef
