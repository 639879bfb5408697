#pragma once

// Workspaces tie the whole library to user input: a finite category (explicit
// composition table or one of the generators) plus named ideals, admissible
// classes, translation families, and presheaves, all read from one JSON file.
// Loading validates everything up front — a structure that fails its module's
// validator never reaches an analysis.  run() executes the command verbs of
// the fintopos tool and returns reports that are byte-stable across runs:
// object keys serialize sorted, witness lists are sorted, and nothing
// time-, locale-, or address-dependent is ever emitted.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fintopos/action.hpp"
#include "fintopos/admissible.hpp"
#include "fintopos/fincat.hpp"
#include "fintopos/ideal.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"

namespace fintopos {

// A loaded, fully validated workspace.  The category and its sieve tables are
// built once and shared by every analysis.  Not copyable — the named
// structures point into `cat` and `omega` — but movable, which keeps those
// addresses stable.
struct Workspace {
  Caps caps;
  std::unique_ptr<FinCat> cat;
  std::unique_ptr<OmegaPresheaf> omega;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, AdmissibleClass> classes;
  std::map<std::string, TranslationFamily> families;
  std::map<std::string, Presheaf> presheaves;
  // Analysis requests stored in the file, each a command token list; executed
  // by run() when it is handed an empty command.
  std::vector<std::vector<std::string>> requests;
};

// Parse and validate a workspace description.  Throws InputError on
// malformed JSON, unresolved names, or any structure its validator rejects;
// CapError when a limit is exceeded.  `cap_overrides` entries look like
// "max_morphisms=32" and take precedence over the file's "caps" block.
Workspace load_workspace(const std::string& path,
                         const std::vector<std::string>& cap_overrides = {});
Workspace load_workspace_text(const std::string& text,
                              const std::vector<std::string>& cap_overrides = {},
                              const std::string& origin = "<input>");

// Canonical serialization: generators are expanded to the explicit form,
// object keys are sorted, arrays follow the category's index order.  Loading
// the output reproduces the workspace, and save∘load is a fixpoint, so two
// files describing the same workspace serialize identically.
std::string save_workspace(const Workspace& ws);

struct Report {
  std::string command;  // the tokens, space-joined
  bool pass = true;
  int exit_code = 0;  // 0 when every requested check passed, 1 otherwise
  std::string json;   // machine-readable report, canonical form
  std::string text;   // human-readable summary
};

// Execute one command against a loaded workspace.  Unknown verbs and
// unresolved structure names throw InputError.  An empty token list runs the
// workspace's stored requests in order.
//
// Verbs:
//   validate                          category summary and structure flags
//   omega                             sieve table sizes, cross-checked
//   ideals                            enumerate every ideal on the category
//   ideal-audit <ideal>               laws of one ideal and its topology
//   admissible-audit <class>          class shape, partial maps, class topology
//   action-audit <class>              monoid, action, frame and subact laws
//   equivariance <topology> <class>   does the topology commute with S·m?
//   demorgan <topology>               De Morgan law over the sheaf candidates
//   family-audit <family>             translation family and its α topology
//   full-audit                        all of the above over everything named
//
// <ideal> resolves named ideals plus the builtins "y" (every arrow) and "0"
// (none).  <class> resolves named classes plus "ids" and "monos".
// <topology> is one of: nn, id, j0, jI:<ideal>, jM:<class>, jSub,
// alpha:<family>.
Report run(const Workspace& ws, const std::vector<std::string>& command);

// The stock categories as loadable workspace files, (name, JSON text) in a
// fixed order: terminal, gamma, l3, diamond, mon_e.  Each carries the named
// structures its walkthrough commands refer to.
std::vector<std::pair<std::string, std::string>> fixture_workspaces();

}  // namespace fintopos
