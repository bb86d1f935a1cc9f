// Session event scripts and their deterministic JSON transcripts.
//
// One event per line:
//
//   add <item>
//   remove <item>
//   select <dish> <recipe-id> <item,item,...>
//   recommend
//
// Fields are whitespace separated; wrap a field in double quotes when it
// contains spaces (select "chicken biryani" rb01 "mace,kewra water"). For add
// and remove the rest of the line is the item name, quoted or not. The item
// list of select may be empty or omitted. Blank lines and lines starting with
// '#' are ignored.

#ifndef BASKETCHEF_REPLAY_H_
#define BASKETCHEF_REPLAY_H_

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basketchef/json_view.h"
#include "basketchef/model.h"
#include "basketchef/session.h"

namespace basketchef {

struct ReplayEvent {
  enum class Kind { kAdd, kRemove, kSelect, kRecommend };

  Kind kind = Kind::kAdd;
  std::size_t line = 0;
  std::string item;                // add, remove
  std::string dish;                // select
  std::string recipe_id;           // select
  std::vector<std::string> items;  // select

  bool operator==(const ReplayEvent&) const = default;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<ReplayEvent> parse_replay_script(std::istream& in);
std::vector<ReplayEvent> parse_replay_script(std::string_view text);

// Runs the events against a fresh session. Throws ReplayError naming the line
// of the first event that cannot be applied.
ordered_json run_replay(std::shared_ptr<const Model> model, const SessionConfig& config,
                        const std::vector<ReplayEvent>& events);

}  // namespace basketchef

#endif  // BASKETCHEF_REPLAY_H_
