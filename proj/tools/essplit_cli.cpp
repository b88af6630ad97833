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

// essplit: command-line front end for es-splitting of binary matroids.
//
// With --X and --e, queries run against the split matroid on E + {a, gamma};
// without them they run against the input matroid itself (oracle only).
// Exit status: 0 ok, 1 usage or parse error, 2 precondition violated,
// 3 formula and oracle disagree.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "essplit/check.hpp"
#include "essplit/errors.hpp"
#include "essplit/es_splitting.hpp"
#include "essplit/figure2.hpp"
#include "essplit/gf2.hpp"
#include "essplit/graph.hpp"
#include "essplit/json.hpp"
#include "essplit/matroid.hpp"

namespace essplit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitDisagreement = 3;

struct RunConfig {
  std::string input;
  std::string kind = "auto";
  std::optional<std::string> x;
  std::optional<std::string> e;
  std::optional<std::string> subset;
  std::string mode = "both";
  std::string format = "text";
  std::optional<std::size_t> cap;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  std::string label_a = "a";
  std::string label_gamma = "gamma";

  bool json() const { return format == "json"; }
  bool want_formula() const { return mode != "oracle"; }
  bool want_oracle() const { return mode != "formula"; }
  bool has_split() const { return x.has_value() || e.has_value(); }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

EnumerationCaps caps_of(const RunConfig& cfg) {
  EnumerationCaps caps;
  if (cfg.cap) {
    caps.subsets = *cfg.cap;
    caps.circuits = std::max(caps.circuits, *cfg.cap);
  }
  return caps;
}

BinaryMatroid load_matroid(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  std::ifstream in(cfg.input);
  if (!in) throw ParseError(cfg.input + ": cannot open file");
  std::string kind = cfg.kind;
  if (kind == "auto") {
    kind = cfg.input.size() >= 6 && cfg.input.ends_with(".graph") ? "graph" : "matrix";
  }
  if (kind == "graph") return graph::cycle_matroid(graph::parse_graph(in, cfg.input), caps_of(cfg));
  return BinaryMatroid(gf2::parse_matrix(in, cfg.input), caps_of(cfg));
}

SplitContext load_context(const RunConfig& cfg) {
  if (!cfg.x || !cfg.e) throw UsageError("--X and --e must be given together");
  const auto x = split_label_list(*cfg.x);
  return SplitContext::from_labels(load_matroid(cfg), x, *cfg.e,
                                   SplitLabels{cfg.label_a, cfg.label_gamma});
}

LabelSet subset_of(const RunConfig& cfg, const Ground& ground) {
  if (!cfg.subset) throw UsageError("--subset is required");
  return ground.parse(split_label_list(*cfg.subset));
}

void print_sets(const Ground& g, const std::vector<LabelSet>& sets) {
  for (LabelSet s : sets) std::cout << g.format(s) << '\n';
}

// --- split -----------------------------------------------------------------

int cmd_split(const RunConfig& cfg) {
  const SplitContext ctx = load_context(cfg);
  const gf2::GF2Matrix m = build_split_matrix(ctx);
  if (cfg.json()) {
    std::cout << to_json(m).dump() << '\n';
  } else {
    gf2::write_matrix(std::cout, m);
  }
  return kExitOk;
}

// --- closure ---------------------------------------------------------------

int cmd_closure(const RunConfig& cfg) {
  if (!cfg.has_split()) {
    if (!cfg.want_oracle()) throw UsageError("formula mode needs --X and --e");
    const BinaryMatroid m = load_matroid(cfg);
    const LabelSet closure = m.closure_of(subset_of(cfg, m.ground()));
    if (cfg.json()) {
      Json out;
      out["oracle"] = to_json(m.ground(), closure);
      std::cout << out.dump() << '\n';
    } else {
      std::cout << m.ground().format(closure) << '\n';
    }
    return kExitOk;
  }
  const SplitContext ctx = load_context(cfg);
  const Ground& g = ctx.split_ground();
  const SplitQuery q = SplitQuery::make(ctx, subset_of(cfg, g));
  ClosureCaseReport report;
  if (cfg.want_formula()) {
    report = predict_closure(ctx, q, cfg.want_oracle());
  } else {
    report.query = q;
    report.oracle_result = ctx.split().closure_of(q.a_prime);
  }
  if (cfg.json()) {
    std::cout << to_json(ctx, report).dump() << '\n';
  } else {
    std::cout << "A' = " << g.format(q.a_prime) << '\n';
    if (cfg.want_formula()) {
      std::cout << "matched:";
      if (report.matched.empty()) std::cout << " none";
      for (ClosureCase c : report.matched) std::cout << ' ' << case_id(c);
      std::cout << '\n';
      std::cout << "formula: "
                << (report.formula_result ? g.format(*report.formula_result) : "-") << '\n';
    }
    if (report.oracle_result) std::cout << "oracle: " << g.format(*report.oracle_result) << '\n';
    if (report.agreement) std::cout << "agree: " << (*report.agreement ? "yes" : "no") << '\n';
  }
  return report.agreement == false ? kExitDisagreement : kExitOk;
}

// --- rank ------------------------------------------------------------------

int cmd_rank(const RunConfig& cfg) {
  std::optional<std::size_t> formula;
  std::size_t oracle = 0;
  if (!cfg.has_split()) {
    if (!cfg.want_oracle()) throw UsageError("formula mode needs --X and --e");
    const BinaryMatroid m = load_matroid(cfg);
    oracle = m.rank_of(cfg.subset ? subset_of(cfg, m.ground()) : m.ground_set());
  } else {
    const SplitContext ctx = load_context(cfg);
    const LabelSet a_prime =
        cfg.subset ? subset_of(cfg, ctx.split_ground()) : ctx.split_ground().all();
    if (cfg.want_formula()) formula = predict_rank(ctx, SplitQuery::make(ctx, a_prime));
    oracle = ctx.split().rank_of(a_prime);
  }
  const bool agree = !formula || *formula == oracle;
  if (cfg.json()) {
    Json out;
    out["formula"] = formula ? Json(*formula) : Json(nullptr);
    out["oracle"] = cfg.want_oracle() ? Json(oracle) : Json(nullptr);
    out["agree"] = formula && cfg.want_oracle() ? Json(agree) : Json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    if (formula) std::cout << "formula: " << *formula << '\n';
    if (cfg.want_oracle()) std::cout << "oracle: " << oracle << '\n';
  }
  return cfg.want_oracle() && !agree ? kExitDisagreement : kExitOk;
}

// --- circuits --------------------------------------------------------------

std::vector<LabelSet> missing_from(const std::vector<LabelSet>& from,
                                   const std::vector<LabelSet>& sorted) {
  std::vector<LabelSet> out;
  for (LabelSet s : from) {
    if (!std::binary_search(sorted.begin(), sorted.end(), s, canonical_less)) out.push_back(s);
  }
  return out;
}

int cmd_circuits(const RunConfig& cfg) {
  if (!cfg.has_split()) {
    if (!cfg.want_oracle()) throw UsageError("formula mode needs --X and --e");
    const BinaryMatroid m = load_matroid(cfg);
    if (cfg.json()) {
      Json out;
      out["oracle"] = to_json(m.ground(), m.circuits());
      std::cout << out.dump() << '\n';
    } else {
      print_sets(m.ground(), m.circuits());
    }
    return kExitOk;
  }
  const SplitContext ctx = load_context(cfg);
  const Ground& g = ctx.split_ground();
  std::vector<LabelSet> predicted;
  if (cfg.want_formula()) {
    predicted = predict_circuits(ctx).flatten();
    sort_canonical(predicted);
  }
  std::vector<LabelSet> extra;
  std::vector<LabelSet> missing;
  if (cfg.want_formula() && cfg.want_oracle()) {
    extra = missing_from(predicted, ctx.split().circuits());
    missing = missing_from(ctx.split().circuits(), predicted);
  }
  const bool both = cfg.want_formula() && cfg.want_oracle();
  if (cfg.json()) {
    Json out;
    out["formula"] = cfg.want_formula() ? to_json(g, predicted) : Json(nullptr);
    out["oracle"] = cfg.want_oracle() ? to_json(g, ctx.split().circuits()) : Json(nullptr);
    if (both) {
      out["predicted_not_circuits"] = to_json(g, extra);
      out["circuits_not_predicted"] = to_json(g, missing);
      out["agree"] = extra.empty() && missing.empty();
    }
    std::cout << out.dump() << '\n';
  } else if (!both) {
    print_sets(g, cfg.want_formula() ? predicted : ctx.split().circuits());
  } else {
    print_sets(g, ctx.split().circuits());
    for (LabelSet c : extra) std::cout << "predicted, not a circuit: " << g.format(c) << '\n';
    for (LabelSet c : missing) std::cout << "circuit, not predicted: " << g.format(c) << '\n';
  }
  return both && !(extra.empty() && missing.empty()) ? kExitDisagreement : kExitOk;
}

// --- flats -----------------------------------------------------------------

int cmd_flats(const RunConfig& cfg) {
  if (!cfg.has_split()) {
    if (!cfg.want_oracle()) throw UsageError("formula mode needs --X and --e");
    const BinaryMatroid m = load_matroid(cfg);
    if (cfg.subset) {
      const bool flat = m.is_flat(subset_of(cfg, m.ground()));
      if (cfg.json()) {
        Json out;
        out["oracle"] = flat;
        std::cout << out.dump() << '\n';
      } else {
        std::cout << "oracle: " << (flat ? "flat" : "not flat") << '\n';
      }
      return kExitOk;
    }
    const auto flats = m.flats();
    if (cfg.json()) {
      Json out;
      out["oracle"] = to_json(m.ground(), flats);
      std::cout << out.dump() << '\n';
    } else {
      print_sets(m.ground(), flats);
    }
    return kExitOk;
  }

  const SplitContext ctx = load_context(cfg);
  const Ground& g = ctx.split_ground();
  std::vector<LabelSet> candidates;
  if (cfg.subset) {
    candidates.push_back(subset_of(cfg, g));
  } else {
    const std::size_t width = ctx.n() + 2;
    if (width > ctx.base().caps().subsets) {
      throw GroundSetTooLarge(width, ctx.base().caps().subsets);
    }
    const LabelSet::Mask end = LabelSet::Mask{1} << width;
    for (LabelSet::Mask bits = 0; bits < end; ++bits) candidates.emplace_back(bits);
    sort_canonical(candidates);
  }

  Json rows = Json::array();
  std::size_t violations = 0;
  for (LabelSet a_prime : candidates) {
    const SplitQuery q = SplitQuery::make(ctx, a_prime);
    std::optional<int> condition;
    bool base_flat = ctx.base().is_flat(q.a);
    if (cfg.want_formula() && base_flat) {
      if (auto c = predict_is_flat(ctx, q)) condition = condition_number(*c);
    }
    const bool oracle = cfg.want_oracle() && ctx.split().is_flat(a_prime);
    const bool violated = cfg.want_oracle() && condition && !oracle;
    if (violated) ++violations;
    // Listing mode shows oracle flats, or formula-certified ones.
    if (!cfg.subset && !oracle && !condition) continue;
    if (cfg.json()) {
      Json row;
      row["set"] = to_json(g, a_prime);
      row["condition"] = condition ? Json(*condition) : Json(nullptr);
      row["oracle"] = cfg.want_oracle() ? Json(oracle) : Json(nullptr);
      rows.push_back(std::move(row));
    } else {
      std::cout << g.format(a_prime);
      if (cfg.want_formula()) {
        std::cout << "  condition "
                  << (condition ? std::to_string(*condition)
                                : std::string(base_flat ? "-" : "- (A not flat in M)"));
      }
      if (cfg.want_oracle()) std::cout << "  oracle " << (oracle ? "flat" : "not flat");
      if (violated) std::cout << "  VIOLATION";
      std::cout << '\n';
    }
  }
  if (cfg.json()) {
    Json out;
    out["flats"] = std::move(rows);
    out["violations"] = violations;
    std::cout << out.dump() << '\n';
  }
  return violations ? kExitDisagreement : kExitOk;
}

// --- check -----------------------------------------------------------------

int cmd_check(const RunConfig& cfg) {
  const SplitContext ctx = load_context(cfg);
  CheckOptions options;
  options.sample = cfg.sample;
  options.seed = cfg.seed;
  const CheckSummary summary = run_check(ctx, options);
  if (cfg.json()) {
    std::cout << to_json(ctx, summary).dump() << '\n';
  } else {
    write_summary(std::cout, ctx, summary);
  }
  return summary.ok() ? kExitOk : kExitDisagreement;
}

// --- demo-fig2 -------------------------------------------------------------

std::string pretty(const Ground& g, LabelSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : g.names(s)) {
    if (!first) out += ',';
    out += name == "gamma" ? "γ" : name;
    first = false;
  }
  return out + "}";
}

void demo_closure(const SplitContext& ctx, const figure2::ClosureExample& ex,
                  std::size_t& mismatches) {
  const Ground& g = ctx.split_ground();
  const SplitQuery q = SplitQuery::parse(ctx, ex.query);
  const LabelSet published = g.parse(ex.published);
  const ClosureCaseReport report = predict_closure(ctx, q, true);
  std::cout << "  " << ex.case_id << "  cl'(" << pretty(g, q.a_prime)
            << ") = " << pretty(g, published) << '\n';
  std::cout << "        formula " << pretty(g, *report.formula_result) << ", oracle "
            << pretty(g, *report.oracle_result);
  if (*report.oracle_result == published) {
    std::cout << "  ok\n";
  } else {
    ++mismatches;
    std::cout << "  MISMATCH: published value is not the closure\n";
  }
  if (!ex.note.empty()) std::cout << "        note: " << ex.note << '\n';
}

std::size_t demo_flats(const BinaryMatroid& m, const std::vector<std::vector<std::string>>& listed,
                       const std::string& title) {
  const Ground& g = m.ground();
  std::vector<LabelSet> listed_sets;
  std::size_t rejected = 0;
  std::cout << '\n' << title << ": " << listed.size() << " listed\n";
  for (const auto& names : listed) {
    const LabelSet s = g.parse(names);
    listed_sets.push_back(s);
    if (m.is_flat(s)) {
      std::cout << "  " << pretty(g, s) << "  flat\n";
    } else {
      ++rejected;
      std::cout << "  " << pretty(g, s) << "  REJECTED: closure is " << pretty(g, m.closure_of(s))
                << '\n';
    }
  }
  sort_canonical(listed_sets);
  const auto oracle = m.flats();
  std::cout << "  confirmed " << listed.size() - rejected << " of " << listed.size()
            << " listed entries\n";
  std::cout << "  oracle flats (" << oracle.size() << "):\n";
  std::size_t absent = 0;
  for (LabelSet f : oracle) {
    const bool is_listed = f.empty() || std::binary_search(listed_sets.begin(),
                                                           listed_sets.end(), f, canonical_less);
    if (!is_listed) ++absent;
    std::cout << "    " << pretty(g, f) << (is_listed ? "" : "  not listed") << '\n';
  }
  std::cout << "  nonempty oracle flats not listed: " << absent << '\n';
  return rejected;
}

int cmd_demo_fig2() {
  const SplitContext ctx = figure2::context();
  std::cout << "M: cycle matroid of the square with centre C\n";
  std::cout << graph::format_graph(figure2::graph());
  std::cout << "X = {x,y}, e = y\n\n";
  std::cout << "split matrix:\n";
  gf2::write_matrix(std::cout, build_split_matrix(ctx));

  std::cout << "\nranks: r(M) = " << ctx.base().rank()
            << ", r(M') = " << ctx.split().rank() << '\n';

  std::cout << "\nclosures (published value, then formula and oracle):\n";
  std::size_t mismatches = 0;
  for (const auto& ex : figure2::closure_examples()) demo_closure(ctx, ex, mismatches);
  demo_closure(ctx, figure2::e_gamma_example(), mismatches);
  std::cout << "  published closures that differ from the oracle: " << mismatches << '\n';

  demo_flats(ctx.base(), figure2::published_flats_of_m(), "flats of M");
  demo_flats(ctx.split(), figure2::published_flats_of_split(), "flats of M'");
  return kExitOk;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_split) {
  cmd->add_option("--input", cfg.input, "matrix or graph file")->required();
  cmd->add_option("--kind", cfg.kind, "input kind (default: by extension)")
      ->check(CLI::IsMember({"auto", "matrix", "graph"}));
  auto* x = cmd->add_option("--X", cfg.x, "comma-separated labels of X");
  auto* e = cmd->add_option("--e", cfg.e, "the element e of X");
  if (needs_split) {
    x->required();
    e->required();
  }
  cmd->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cap", cfg.cap, "largest ground set for all-subset enumeration");
  cmd->add_option("--label-a", cfg.label_a, "label of the new element a");
  cmd->add_option("--label-gamma", cfg.label_gamma, "label of the new element gamma");
}

void add_query(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--subset", cfg.subset, "comma-separated labels of A'");
  cmd->add_option("--mode", cfg.mode, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
}

int run(int argc, char** argv) {
  CLI::App app{"es-splitting of binary matroids"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* split = app.add_subcommand("split", "print the split matrix");
  add_common(split, cfg, true);

  auto* closure = app.add_subcommand("closure", "closure of a subset");
  add_common(closure, cfg, false);
  add_query(closure, cfg);
  closure->get_option("--subset")->required();

  auto* rank = app.add_subcommand("rank", "rank of a subset (default: whole ground set)");
  add_common(rank, cfg, false);
  add_query(rank, cfg);

  auto* circuits = app.add_subcommand("circuits", "list circuits");
  add_common(circuits, cfg, false);
  add_query(circuits, cfg);

  auto* flats = app.add_subcommand("flats", "list flats, or test --subset");
  add_common(flats, cfg, false);
  add_query(flats, cfg);

  auto* check = app.add_subcommand("check", "compare every formula with the oracle");
  add_common(check, cfg, true);
  check->add_option("--sample", cfg.sample, "number of random subsets instead of all");
  check->add_option("--seed", cfg.seed, "seed for --sample");

  auto* demo = app.add_subcommand("demo-fig2", "reproduce the worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (split->parsed()) return cmd_split(cfg);
    if (closure->parsed()) return cmd_closure(cfg);
    if (rank->parsed()) return cmd_rank(cfg);
    if (circuits->parsed()) return cmd_circuits(cfg);
    if (flats->parsed()) return cmd_flats(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (demo->parsed()) return cmd_demo_fig2();
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitPrecondition;
  } catch (const FormulaDisagreement& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitDisagreement;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace essplit

int main(int argc, char** argv) { return essplit::run(argc, argv); }
