// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include <spatent/error.hpp>
#include <spatent/version.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace spatent::cli {

namespace {

struct Subcommand {
  const char* name;
  const char* help;
  int (*handler)(const Context&);
};

constexpr Subcommand kSubcommands[] = {
    {"verdict", "entanglement verdict for one pair of regions", cmd_verdict},
    {"sweep", "verdicts over a separation x temperature grid", cmd_sweep},
    {"window", "momentum windows that reveal entanglement", cmd_window},
    {"tc", "critical temperature against region width", cmd_tc},
    {"extract", "entanglement extraction by two probes over a grid",
     cmd_extract},
    {"selftest", "run the oracle checks", cmd_selftest},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spatial-mode entanglement in a thermal 1D Bose gas", "spatent"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "INI file; one section per subcommand");
  for (const auto& sc : kSubcommands) app.add_subcommand(sc.name, sc.help);
  register_options(app, cfg);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("spatent");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const Subcommand* chosen = nullptr;
  for (const auto& sc : kSubcommands) {
    if (app.got_subcommand(sc.name)) chosen = &sc;
  }
  if (!chosen) {
    err << "error: no subcommand given\n";
    return kExitValidation;
  }

  const Context ctx{cfg, chosen->name, out, err};
  try {
    validate(cfg, ctx.command);
    return chosen->handler(ctx);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << (e.category() == ErrorCategory::validation ? "invalid input: "
                                                      : "numerical error: ")
        << e.what() << '\n';
    return e.category() == ErrorCategory::validation ? kExitValidation
                                                     : kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace spatent::cli
