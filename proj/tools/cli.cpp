// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgeo/chains.hpp"
#include "cgeo/closure_system.hpp"
#include "cgeo/decomp.hpp"
#include "cgeo/errors.hpp"
#include "cgeo/format.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/subset.hpp"
#include "cgeo/symbolic.hpp"
#include "cgeo/total_order.hpp"
#include "cgeo/verify.hpp"

namespace cgeo::cli {
namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Shared state for the subcommand handlers.
struct Session {
  Format format = Format::Text;
  std::ostream* out = nullptr;
  int exit_code = 0;

  void print(const Document& doc) const { *out << write_document(doc, format); }
  void print_blank() const { *out << '\n'; }
};

// Loads a family document and validates the closure-system laws. When the
// family fails them the verdict document is printed and false is returned;
// the caller should finish with exit code 1.
bool load_system(Session& session, const std::string& path, bool require_zero,
                 std::optional<ClosureSystem>& system) {
  SetFamily family = parse_family(read_file(path));
  FamilyVerdict verdict = validate_closure_system(family, require_zero);
  if (!verdict.ok) {
    session.print(family_verdict_document(family.ground(), verdict));
    return false;
  }
  system.emplace(ClosureSystem::from_family(family));
  return true;
}

// Loads a zero-closed system and runs geometry recognition. On rejection
// the recognition document is printed and nullopt returned.
std::optional<ConvexGeometry> load_geometry(Session& session,
                                            const std::string& path) {
  std::optional<ClosureSystem> system;
  if (!load_system(session, path, /*require_zero=*/true, system)) {
    return std::nullopt;
  }
  Recognition rec = recognize(*system);
  if (!rec.ok) {
    session.print(recognition_document(rec));
    return std::nullopt;
  }
  return rec.geometry;
}

int do_check(Session& session, const std::string& path) {
  std::optional<ClosureSystem> system;
  if (!load_system(session, path, /*require_zero=*/true, system)) return 1;
  Recognition rec = recognize(*system);
  session.print(recognition_document(rec));
  return rec.ok ? 0 : 1;
}

int do_closure(Session& session, const std::string& path,
               const std::vector<std::string>& labels) {
  std::optional<ClosureSystem> system;
  if (!load_system(session, path, /*require_zero=*/false, system)) return 1;
  Subset argument = Subset::of_labels(system->ground(), labels);
  session.print(subset_document(system->closure(argument)));
  return 0;
}

int do_meet(Session& session, const std::string& left_path,
            const std::string& right_path) {
  std::optional<ClosureSystem> left;
  std::optional<ClosureSystem> right;
  if (!load_system(session, left_path, /*require_zero=*/true, left)) return 1;
  if (!load_system(session, right_path, /*require_zero=*/true, right)) return 1;
  ClosureSystem meet = meet_systems(*left, *right);
  Recognition rec = recognize(meet);
  session.print(system_document(meet));
  session.print_blank();
  session.print(recognition_document(rec));
  return rec.ok ? 0 : 1;
}

int do_join(Session& session, const std::vector<std::string>& paths) {
  std::vector<ClosureSystem> systems;
  systems.reserve(paths.size());
  for (const std::string& path : paths) {
    std::optional<ClosureSystem> system;
    if (!load_system(session, path, /*require_zero=*/true, system)) return 1;
    systems.push_back(std::move(*system));
  }
  ClosureSystem join = join_systems(systems);
  Recognition rec = recognize(join);
  session.print(system_document(join));
  session.print_blank();
  session.print(recognition_document(rec));
  return rec.ok ? 0 : 1;
}

int do_chains(Session& session, const std::string& path, std::uint64_t limit) {
  std::optional<ClosureSystem> system;
  if (!load_system(session, path, /*require_zero=*/true, system)) return 1;
  std::vector<Chain> chains = maximal_chains(*system, limit);
  session.print(chains_document(system->ground(), chains));
  return 0;
}

int do_orders(Session& session, const std::string& path) {
  std::optional<ConvexGeometry> g = load_geometry(session, path);
  if (!g) return 1;
  std::vector<TotalOrder> orders = compatible_orders(*g);
  session.print(orders_document(g->ground(), orders));
  return 0;
}

int do_decompose(Session& session, const std::string& path,
                 const std::string& mode) {
  std::optional<ConvexGeometry> g = load_geometry(session, path);
  if (!g) return 1;
  DecomposeMode m = mode == "witness-per-set" ? DecomposeMode::WitnessPerSet
                                              : DecomposeMode::All;
  session.print(decomposition_document(ej_decompose(*g, m)));
  return 0;
}

int do_mincover(Session& session, const std::string& path,
                const std::string& mode) {
  std::optional<ConvexGeometry> g = load_geometry(session, path);
  if (!g) return 1;
  CoverMode m = mode == "greedy" ? CoverMode::Greedy : CoverMode::Exact;
  session.print(decomposition_document(min_order_cover(*g, m)));
  return 0;
}

int do_random(Session& session, int n, int k, std::uint64_t seed) {
  ConvexGeometry g = random_geometry(n, k, seed);
  session.print(system_document(g.system()));
  return 0;
}

DocValue symbolic_value(const symbolic::SymbolicSet& s) {
  return DocValue::sym(symbolic::to_string(s));
}

int do_symbolic_demo(Session& session, std::uint64_t trials,
                     std::uint64_t seed) {
  symbolic::StandardnessWitness sw = symbolic::standardness_witness();
  symbolic::NonalgebraicWitness nw = symbolic::nonalgebraic_witness();
  symbolic::AepTrialReport report = symbolic::check_aep(trials, seed);
  Document doc;
  DocValue standard = DocValue::object({});
  standard.fields.emplace_back("singleton_closure",
                               symbolic_value(sw.singleton_closure));
  standard.fields.emplace_back("deleted", symbolic_value(sw.deleted));
  standard.fields.emplace_back("deleted_closure",
                               symbolic_value(sw.deleted_closure));
  doc.fields.emplace_back("standardness", standard);
  DocValue nonalg = DocValue::object({});
  nonalg.fields.emplace_back("a", symbolic_value(nw.a));
  nonalg.fields.emplace_back("a_closure", symbolic_value(nw.a_closure));
  nonalg.fields.emplace_back("finite_closure_union",
                             symbolic_value(nw.finite_closure_union));
  nonalg.fields.emplace_back("gap", DocValue::sym(symbolic::to_string(nw.gap)));
  doc.fields.emplace_back("nonalgebraic", nonalg);
  DocValue aep = DocValue::object({});
  aep.fields.emplace_back("trials",
                          DocValue::sym(std::to_string(report.trials)));
  aep.fields.emplace_back("violations",
                          DocValue::sym(std::to_string(report.violations)));
  aep.fields.emplace_back("seed", DocValue::sym(std::to_string(report.seed)));
  doc.fields.emplace_back("aep", aep);
  session.print(doc);
  // A sampled anti-exchange violation would contradict a proved property of
  // the model, so it is an internal error, not a rejection.
  return report.violations == 0 ? 0 : 3;
}

int do_verify(Session& session, int max_n, std::uint64_t seed,
              std::ostream& err) {
  VerifyOptions options;
  options.max_n = max_n;
  options.seed = seed;
  VerifyOutcome outcome = run_verify(options);
  *session.out << outcome.report;
  if (!outcome.all_pass) {
    err << "verification battery failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"closure systems and convex geometries toolkit"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "output flavor")
      ->check(CLI::IsMember({"text", "json-like"}));

  Session session;
  session.out = &out;
  // Runs after option assignment and before any subcommand callback.
  app.parse_complete_callback([&] {
    session.format =
        format_name == "json-like" ? Format::JsonLike : Format::Text;
  });

  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check", "validate a family and recognize a convex geometry");
  check->add_option("file", check_path, "family document")->required();
  check->callback(
      [&] { session.exit_code = do_check(session, check_path); });

  std::string closure_path;
  std::vector<std::string> closure_labels;
  CLI::App* closure = app.add_subcommand(
      "closure", "closure of a set of elements within a closure system");
  closure->add_option("file", closure_path, "family document")->required();
  closure->add_option("labels", closure_labels, "elements of the argument");
  closure->callback([&] {
    session.exit_code = do_closure(session, closure_path, closure_labels);
  });

  std::string meet_left;
  std::string meet_right;
  CLI::App* meet = app.add_subcommand(
      "meet", "intersection of two closure systems, then recognition");
  meet->add_option("left", meet_left, "family document")->required();
  meet->add_option("right", meet_right, "family document")->required();
  meet->callback(
      [&] { session.exit_code = do_meet(session, meet_left, meet_right); });

  std::vector<std::string> join_paths;
  CLI::App* join = app.add_subcommand(
      "join", "smallest closure system containing the inputs, then "
              "recognition");
  join->add_option("files", join_paths, "family documents")->required();
  join->callback([&] { session.exit_code = do_join(session, join_paths); });

  std::string chains_path;
  std::uint64_t chains_limit = 1000000;
  CLI::App* chains = app.add_subcommand(
      "chains", "maximal chains of a zero-closed closure system");
  chains->add_option("file", chains_path, "family document")->required();
  chains->add_option("--limit", chains_limit,
                     "refuse outputs larger than this");
  chains->callback([&] {
    session.exit_code = do_chains(session, chains_path, chains_limit);
  });

  std::string orders_path;
  CLI::App* orders =
      app.add_subcommand("orders", "compatible orders of a convex geometry");
  orders->add_option("file", orders_path, "family document")->required();
  orders->callback(
      [&] { session.exit_code = do_orders(session, orders_path); });

  std::string decompose_path;
  std::string decompose_mode = "all";
  CLI::App* decompose = app.add_subcommand(
      "decompose", "verified join decomposition into ideal geometries");
  decompose->add_option("file", decompose_path, "family document")->required();
  decompose->add_option("--mode", decompose_mode, "order selection")
      ->check(CLI::IsMember({"all", "witness-per-set"}));
  decompose->callback([&] {
    session.exit_code = do_decompose(session, decompose_path, decompose_mode);
  });

  std::string mincover_path;
  std::string mincover_mode = "exact";
  CLI::App* mincover = app.add_subcommand(
      "mincover", "small set of compatible orders that reconstructs the "
                  "geometry");
  mincover->add_option("file", mincover_path, "family document")->required();
  mincover->add_option("--mode", mincover_mode, "search strategy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  mincover->callback([&] {
    session.exit_code = do_mincover(session, mincover_path, mincover_mode);
  });

  int random_n = 4;
  int random_k = 2;
  std::uint64_t random_seed = 1;
  CLI::App* random = app.add_subcommand(
      "random", "seeded random convex geometry as a join of ideal "
                "geometries");
  random->add_option("--n", random_n, "ground set size");
  random->add_option("--k", random_k, "number of joined orders");
  random->add_option("--seed", random_seed, "random seed");
  random->callback([&] {
    session.exit_code = do_random(session, random_n, random_k, random_seed);
  });

  std::uint64_t sym_trials = 10000;
  std::uint64_t sym_seed = 1;
  CLI::App* symbolic_demo = app.add_subcommand(
      "symbolic-demo", "witnesses from the infinite closure model");
  symbolic_demo->add_option("--limit", sym_trials,
                            "number of sampled anti-exchange trials");
  symbolic_demo->add_option("--seed", sym_seed, "random seed");
  symbolic_demo->callback([&] {
    session.exit_code = do_symbolic_demo(session, sym_trials, sym_seed);
  });

  int verify_max_n = 6;
  std::uint64_t verify_seed = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "run the full verification battery");
  verify->add_option("--max-n", verify_max_n,
                     "largest randomized ground set size");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->callback([&] {
    session.exit_code = do_verify(session, verify_max_n, verify_seed, err);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GroundMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency violation: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return session.exit_code;
}

}  // namespace cgeo::cli
