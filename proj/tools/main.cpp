#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintopos/workspace.hpp"

int main(int argc, char** argv) {
  CLI::App app{"presheaf-topos auditor for finite categories"};
  app.name("fintopos");

  std::string workspace_path, json_out, fixtures_dir;
  std::vector<std::string> command, cap_overrides;
  app.add_option("workspace", workspace_path, "workspace JSON file");
  app.add_option("command", command,
                 "command verb and arguments; omit to run the workspace's stored requests");
  app.add_option("--json", json_out, "also write the machine-readable report to this file");
  app.add_option("--cap", cap_overrides, "override a limit, e.g. --cap max_morphisms=32")
      ->type_size(1);
  app.add_option("--fixtures", fixtures_dir,
                 "write the stock fixture workspaces into this directory and exit");
  app.footer(
      "Verbs: validate | omega | ideals | ideal-audit <ideal> | admissible-audit <class>\n"
      "       action-audit <class> | equivariance <topology> <class> | demorgan <topology>\n"
      "       family-audit <family> | full-audit\n"
      "Topologies: nn, id, j0, jI:<ideal>, jM:<class>, jSub, alpha:<family>\n"
      "Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 cap exceeded");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!fixtures_dir.empty()) {
      std::filesystem::create_directories(fixtures_dir);
      for (const auto& [name, text] : fintopos::fixture_workspaces()) {
        auto path = std::filesystem::path(fixtures_dir) / (name + ".json");
        std::ofstream out(path);
        if (!out) throw fintopos::InputError("cannot write '" + path.string() + "'");
        out << text;
        std::cout << path.string() << "\n";
      }
      return 0;
    }
    if (workspace_path.empty())
      throw fintopos::InputError("no workspace file given (or use --fixtures DIR)");
    fintopos::Workspace ws = fintopos::load_workspace(workspace_path, cap_overrides);
    fintopos::Report report = fintopos::run(ws, command);
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) throw fintopos::InputError("cannot write '" + json_out + "'");
      out << report.json;
    }
    std::cout << report.text;
    return report.exit_code;
  } catch (const fintopos::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const fintopos::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
