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

// Sweep of one split instance: every predictor is run against the oracle on
// all query sets A' (or a seeded sample) and the outcomes are tallied.

#ifndef ESSPLIT_CHECK_HPP_
#define ESSPLIT_CHECK_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "essplit/es_splitting.hpp"
#include "essplit/json.hpp"
#include "essplit/matroid.hpp"

namespace essplit {

struct CheckOptions {
  // Number of random query sets; nullopt means all of them.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  std::size_t max_witnesses = 25;
};

// A self-contained record of one failed comparison.
struct Witness {
  std::string kind;
  LabelSet a_prime;
  std::optional<LabelSet> formula;
  std::optional<LabelSet> oracle;
  std::optional<std::size_t> formula_rank;
  std::optional<std::size_t> oracle_rank;
  std::vector<ClosureCase> matched;
  std::string detail;
};

struct CheckSummary {
  std::size_t queries = 0;
  bool exhaustive = true;

  std::map<ClosureCase, std::size_t> case_hits;
  std::size_t no_lemma = 0;
  std::size_t multiply_matched = 0;
  std::size_t case_conflicts = 0;
  std::size_t closure_disagreements = 0;
  std::size_t shape_misses = 0;

  std::size_t rank_disagreements = 0;

  bool circuit_family_equal = true;
  std::vector<LabelSet> predicted_not_circuits;
  std::vector<LabelSet> circuits_not_predicted;

  std::size_t base_rank = 0;
  std::size_t split_rank = 0;
  bool corollary_holds = true;

  std::map<int, std::size_t> flat_condition_hits;
  std::size_t flat_violations = 0;

  std::size_t t_containment_violations = 0;

  std::vector<Witness> witnesses;

  std::size_t disagreements() const {
    return case_conflicts + closure_disagreements + shape_misses + rank_disagreements +
           flat_violations + t_containment_violations + (circuit_family_equal ? 0 : 1) +
           (corollary_holds ? 0 : 1);
  }
  bool ok() const { return disagreements() == 0; }
};

namespace detail {

inline std::vector<LabelSet> query_sets(std::size_t width, const CheckOptions& options,
                                        std::size_t subset_cap, bool& exhaustive) {
  std::vector<LabelSet> out;
  if (!options.sample) {
    if (width > subset_cap) throw GroundSetTooLarge(width, subset_cap);
    exhaustive = true;
    const LabelSet::Mask end = LabelSet::Mask{1} << width;
    out.reserve(end);
    for (LabelSet::Mask bits = 0; bits < end; ++bits) out.emplace_back(bits);
    return out;
  }
  exhaustive = false;
  std::mt19937_64 rng(options.seed);
  const LabelSet::Mask mask = LabelSet::first(width).bits();
  out.reserve(*options.sample);
  for (std::size_t i = 0; i < *options.sample; ++i) out.emplace_back(rng() & mask);
  return out;
}

inline bool contains_set(const std::vector<LabelSet>& sorted, LabelSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, canonical_less);
}

}  // namespace detail

inline CheckSummary run_check(const SplitContext& ctx, const CheckOptions& options = {}) {
  CheckSummary s;
  const BinaryMatroid& base = ctx.base();
  const BinaryMatroid& split = ctx.split();
  auto witness = [&](Witness w) {
    if (s.witnesses.size() < options.max_witnesses) s.witnesses.push_back(std::move(w));
  };

  const auto predicted = predict_circuits(ctx).flatten();
  const auto& actual = split.circuits();
  for (LabelSet c : predicted) {
    if (!detail::contains_set(actual, c)) s.predicted_not_circuits.push_back(c);
  }
  for (LabelSet c : actual) {
    if (!detail::contains_set(predicted, c)) s.circuits_not_predicted.push_back(c);
  }
  s.circuit_family_equal = s.predicted_not_circuits.empty() && s.circuits_not_predicted.empty();

  s.base_rank = base.rank();
  s.split_rank = split.rank();
  s.corollary_holds = s.split_rank == s.base_rank + 1;

  const auto queries =
      detail::query_sets(ctx.n() + 2, options, base.caps().subsets, s.exhaustive);
  for (LabelSet a_prime : queries) {
    ++s.queries;
    const SplitQuery q = SplitQuery::make(ctx, a_prime);

    const std::size_t formula_rank = predict_rank(ctx, q);
    const std::size_t oracle_rank = split.rank_of(a_prime);
    if (formula_rank != oracle_rank) {
      ++s.rank_disagreements;
      witness({"rank", a_prime, {}, {}, formula_rank, oracle_rank, {}, ""});
    }

    try {
      const ClosureCaseReport report = predict_closure(ctx, q, true);
      for (ClosureCase c : report.matched) ++s.case_hits[c];
      if (report.no_lemma_applies()) ++s.no_lemma;
      if (report.matched.size() > 1) ++s.multiply_matched;
      if (report.agreement == false) {
        ++s.closure_disagreements;
        witness({"closure", a_prime, report.formula_result, report.oracle_result, {}, {},
                 report.matched, ""});
      }
      const auto shapes = closure_shapes(ctx, BaseFacts::of(ctx, q.a));
      if (std::find(shapes.begin(), shapes.end(), *report.oracle_result) == shapes.end()) {
        ++s.shape_misses;
        witness({"shape", a_prime, {}, report.oracle_result, {}, {}, report.matched, ""});
      }
    } catch (const FormulaDisagreement& err) {
      ++s.case_conflicts;
      witness({"case-conflict", a_prime, {}, {}, {}, {}, {}, err.what()});
    }

    if (base.is_flat(q.a)) {
      if (auto condition = predict_is_flat(ctx, q)) {
        ++s.flat_condition_hits[condition_number(*condition)];
        if (!split.is_flat(a_prime)) {
          ++s.flat_violations;
          witness({"flat", a_prime, a_prime, split.closure_of(a_prime), {}, {}, {},
                   "condition " + std::to_string(condition_number(*condition))});
        }
      }
    }

    if (!q.has_a && !q.has_gamma) {
      const LabelSet closure = base.closure_of(q.a);
      if (closure.contains(ctx.e()) && !set_T(ctx, q.a).subset_of(closure)) {
        ++s.t_containment_violations;
        witness({"T-containment", a_prime, set_T(ctx, q.a), closure, {}, {}, {}, ""});
      }
    }
  }
  return s;
}

inline Json to_json(const SplitContext& ctx, const CheckSummary& s) {
  const Ground& g = ctx.split_ground();
  Json cases;
  for (ClosureCase c : kAllClosureCases) {
    auto it = s.case_hits.find(c);
    cases[case_id(c)] = it == s.case_hits.end() ? 0 : it->second;
  }
  Json flat_hits;
  for (int c = 1; c <= 6; ++c) {
    auto it = s.flat_condition_hits.find(c);
    flat_hits[std::to_string(c)] = it == s.flat_condition_hits.end() ? 0 : it->second;
  }
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses) {
    Json j;
    j["kind"] = w.kind;
    j["subset"] = to_json(g, w.a_prime);
    if (w.formula) j["formula"] = to_json(g, *w.formula);
    if (w.oracle) j["oracle"] = to_json(g, *w.oracle);
    if (w.formula_rank) j["formula_rank"] = *w.formula_rank;
    if (w.oracle_rank) j["oracle_rank"] = *w.oracle_rank;
    Json matched = Json::array();
    for (ClosureCase c : w.matched) matched.push_back(case_id(c));
    j["matched"] = std::move(matched);
    if (!w.detail.empty()) j["detail"] = w.detail;
    witnesses.push_back(std::move(j));
  }
  Json out;
  out["queries"] = s.queries;
  out["exhaustive"] = s.exhaustive;
  out["case_hits"] = std::move(cases);
  out["no_lemma_applies"] = s.no_lemma;
  out["multiply_matched"] = s.multiply_matched;
  out["case_conflicts"] = s.case_conflicts;
  out["closure_disagreements"] = s.closure_disagreements;
  out["shape_misses"] = s.shape_misses;
  out["rank_disagreements"] = s.rank_disagreements;
  out["circuit_family_equal"] = s.circuit_family_equal;
  out["predicted_not_circuits"] = to_json(g, s.predicted_not_circuits);
  out["circuits_not_predicted"] = to_json(g, s.circuits_not_predicted);
  out["base_rank"] = s.base_rank;
  out["split_rank"] = s.split_rank;
  out["rank_increases_by_one"] = s.corollary_holds;
  out["flat_condition_hits"] = std::move(flat_hits);
  out["flat_violations"] = s.flat_violations;
  out["t_containment_violations"] = s.t_containment_violations;
  out["disagreements"] = s.disagreements();
  out["witnesses"] = std::move(witnesses);
  return out;
}

inline void write_summary(std::ostream& out, const SplitContext& ctx, const CheckSummary& s) {
  const Ground& g = ctx.split_ground();
  out << "queries: " << s.queries << (s.exhaustive ? " (exhaustive)" : " (sampled)") << '\n';
  out << "closure cases:\n";
  for (ClosureCase c : kAllClosureCases) {
    auto it = s.case_hits.find(c);
    out << "  " << case_id(c) << ": " << (it == s.case_hits.end() ? 0 : it->second) << '\n';
  }
  out << "  no case applies: " << s.no_lemma << '\n';
  out << "  matched by several cases: " << s.multiply_matched << '\n';
  out << "closure formula vs oracle disagreements: " << s.closure_disagreements << '\n';
  out << "closures outside the seven shapes: " << s.shape_misses << '\n';
  out << "conflicting case formulas: " << s.case_conflicts << '\n';
  out << "rank formula disagreements: " << s.rank_disagreements << '\n';
  out << "circuit family equal: " << (s.circuit_family_equal ? "yes" : "no") << '\n';
  for (LabelSet c : s.predicted_not_circuits) out << "  predicted, not a circuit: " << g.format(c) << '\n';
  for (LabelSet c : s.circuits_not_predicted) out << "  circuit, not predicted: " << g.format(c) << '\n';
  out << "rank: base " << s.base_rank << ", split " << s.split_rank
      << (s.corollary_holds ? " (+1 ok)" : " (expected +1)") << '\n';
  out << "flat conditions:";
  for (int c = 1; c <= 6; ++c) {
    auto it = s.flat_condition_hits.find(c);
    out << ' ' << c << '=' << (it == s.flat_condition_hits.end() ? 0 : it->second);
  }
  out << "\nflat condition violations: " << s.flat_violations << '\n';
  out << "T(A) outside cl(A) with e in cl(A): " << s.t_containment_violations << '\n';
  for (const auto& w : s.witnesses) {
    out << "witness [" << w.kind << "] A' = " << g.format(w.a_prime);
    if (w.formula) out << " formula " << g.format(*w.formula);
    if (w.oracle) out << " oracle " << g.format(*w.oracle);
    if (w.formula_rank) out << " formula rank " << *w.formula_rank;
    if (w.oracle_rank) out << " oracle rank " << *w.oracle_rank;
    if (!w.matched.empty()) {
      out << " cases";
      for (ClosureCase c : w.matched) out << ' ' << case_id(c);
    }
    if (!w.detail.empty()) out << " (" << w.detail << ')';
    out << '\n';
  }
  out << "disagreements: " << s.disagreements() << '\n';
}

}  // namespace essplit

#endif  // ESSPLIT_CHECK_HPP_
