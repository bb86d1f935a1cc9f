#include "basketchef/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <system_error>

#include "CLI11.hpp"
#include "basketchef/model.h"
#include "basketchef/replay.h"
#include "basketchef/report.h"
#include "basketchef/service.h"

namespace basketchef {

namespace {

struct LoadOutcome {
  std::shared_ptr<const Model> model;
  int status = kExitOk;
};

LoadOutcome load_model(const std::string& path, std::ostream& err) {
  LoadOutcome out;
  if (path.empty()) {
    err << "error: no corpus given (use --corpus or BASKETCHEF_CORPUS)\n";
    out.status = kExitUsage;
    return out;
  }
  std::vector<std::string> warnings;
  try {
    out.model = Model::from_file(path, &warnings);
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << "\n";
    out.status = kExitIo;
    return out;
  } catch (const CorpusError& e) {
    err << "invalid corpus " << path << ": " << e.what() << "\n";
    out.status = kExitValidation;
    return out;
  } catch (const std::invalid_argument& e) {
    err << "invalid corpus " << path << ": " << e.what() << "\n";
    out.status = kExitValidation;
    return out;
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return out;
}

struct ConfigFlags {
  SessionConfig config;

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", config.k, "Identifiers per category")->capture_default_str();
    cmd->add_option("--h", config.h, "Globally common items excluded from identifiers")
        ->capture_default_str();
    cmd->add_option("--q", config.q, "Identifiers needed to activate a category")
        ->capture_default_str();
    cmd->add_option("--n", config.n, "Root of the rank in the score increment")
        ->capture_default_str();
    cmd->add_option("--theta", config.theta, "Subcategory activation threshold")
        ->capture_default_str();
    cmd->add_option("--top-n", config.top_n, "Dishes returned by recommend")->capture_default_str();
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"basketchef: dish-aware grocery basket recommendations"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string corpus_path;
  auto corpus_option = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_path, "Corpus JSON file")->envname("BASKETCHEF_CORPUS");
  };

  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  corpus_option(validate);

  std::size_t id_k = 5;
  std::size_t id_h = 1;
  auto* identifiers = app.add_subcommand("identifiers", "Category identifier table (CSV)");
  corpus_option(identifiers);
  identifiers->add_option("--k", id_k, "Identifiers per category")->capture_default_str();
  identifiers->add_option("--h", id_h, "Globally common items to exclude")->capture_default_str();

  std::string category_name;
  std::uint32_t top = 5;
  auto* differentiators =
      app.add_subcommand("differentiators", "Top subcategory differentiators of a category (CSV)");
  corpus_option(differentiators);
  differentiators->add_option("--category", category_name, "Category name")->required();
  differentiators->add_option("--top", top, "Ranks per subcategory")->capture_default_str();

  std::string n_range = "1..10";
  std::string theta_range = "1..7";
  auto* threshold = app.add_subcommand(
      "threshold-table", "Items needed to reach theta when added in rank order (CSV)");
  threshold->add_option("--n", n_range, "n values: a..b or a,b,c")->capture_default_str();
  threshold->add_option("--theta", theta_range, "theta values: a..b or a,b,c")
      ->capture_default_str();

  std::string curve_n = "1..5";
  std::uint32_t rank_max = 20;
  auto* curve = app.add_subcommand("score-curve", "Score increment per rank for several n (CSV)");
  curve->add_option("--n", curve_n, "n values: a..b or a,b,c")->capture_default_str();
  curve->add_option("--rank-max", rank_max, "Largest rank")->capture_default_str();

  std::string script_path;
  ConfigFlags replay_flags;
  auto* replay = app.add_subcommand("replay", "Replay a session script, print a JSON transcript");
  corpus_option(replay);
  replay->add_option("--script", script_path, "Event script")->required();
  replay_flags.attach(replay);

  int port = 8080;
  std::string host = "0.0.0.0";
  ConfigFlags serve_flags;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP JSON API");
  corpus_option(serve_cmd);
  serve_cmd->add_option("--port", port, "Port")->envname("BASKETCHEF_PORT")->capture_default_str();
  serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
  serve_flags.attach(serve_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (validate->parsed()) {
    auto loaded = load_model(corpus_path, err);
    if (!loaded.model) return loaded.status;
    const Corpus& corpus = loaded.model->corpus();
    out << "ok: " << corpus.categories().size() << " categories, " << corpus.recipe_count()
        << " recipes, " << corpus.vocabulary_size() << " items\n";
    return kExitOk;
  }

  if (identifiers->parsed()) {
    if (id_k < 1) {
      err << "error: --k must be at least 1\n";
      return kExitUsage;
    }
    auto loaded = load_model(corpus_path, err);
    if (!loaded.model) return loaded.status;
    write_identifier_csv(out, *loaded.model, id_k, id_h);
    return kExitOk;
  }

  if (differentiators->parsed()) {
    if (top < 1) {
      err << "error: --top must be at least 1\n";
      return kExitUsage;
    }
    auto loaded = load_model(corpus_path, err);
    if (!loaded.model) return loaded.status;
    auto category = loaded.model->corpus().find_category(category_name);
    if (!category) {
      err << "error: no category named \"" << category_name << "\"\n";
      return kExitUsage;
    }
    write_differentiator_csv(out, *loaded.model, *category, top);
    return kExitOk;
  }

  if (threshold->parsed() || curve->parsed()) {
    try {
      if (threshold->parsed()) {
        const auto ns = parse_number_list(n_range);
        const auto thetas = parse_number_list(theta_range);
        for (double n : ns) {
          if (!(n >= 1.0)) throw std::invalid_argument("n values must be >= 1");
        }
        for (double t : thetas) {
          if (!(t > 0.0)) throw std::invalid_argument("theta values must be > 0");
        }
        write_threshold_table(out, ns, thetas);
      } else {
        write_score_curve(out, parse_number_list(curve_n), rank_max);
      }
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

  if (replay->parsed()) {
    if (auto bad = replay_flags.config.invalid_fields(); !bad.empty()) {
      err << "error: invalid session config:";
      for (const auto& f : bad) err << " " << f;
      err << "\n";
      return kExitUsage;
    }
    auto loaded = load_model(corpus_path, err);
    if (!loaded.model) return loaded.status;
    std::ifstream script(script_path, std::ios::binary);
    if (!script) {
      err << "error: cannot open script " << script_path << "\n";
      return kExitIo;
    }
    try {
      const auto events = parse_replay_script(script);
      out << run_replay(loaded.model, replay_flags.config, events).dump(2) << "\n";
    } catch (const ReplayError& e) {
      err << "replay failed: " << script_path << ": " << e.what() << "\n";
      return kExitValidation;
    }
    return kExitOk;
  }

  if (serve_cmd->parsed()) {
    if (auto bad = serve_flags.config.invalid_fields(); !bad.empty()) {
      err << "error: invalid session config:";
      for (const auto& f : bad) err << " " << f;
      err << "\n";
      return kExitUsage;
    }
    auto loaded = load_model(corpus_path, err);
    if (!loaded.model) return loaded.status;
    ServiceOptions options;
    options.defaults = serve_flags.config;
    Service service(loaded.model, options);
    err << "serving " << corpus_path << " on " << host << ":" << port << "\n";
    if (!serve(service, host, port)) {
      err << "error: cannot bind " << host << ":" << port << " (port in use or not permitted)\n";
      return kExitIo;
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace basketchef
