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

// The es-splitting M^e_X of a binary matroid M.
//
// Given a GF(2) representation A of M on E, a set X of elements and e in X,
// the split matrix is A with one extra row that is 1 exactly on X, then two
// extra columns: `a`, the unit vector of the new row, and `gamma`, the sum of
// the columns of e and a. The split matroid is the vector matroid of that
// matrix on E + {a, gamma}.
//
// Besides the construction, this header predicts circuits, ranks, closures
// and flats of the split matroid from circuits and closures of M alone. The
// predictors never look at the split matrix; SplitContext::split() is the
// independent reference they are compared against.
//
// Position convention: elements of E keep their positions 0..n-1 of M, `a`
// is at position n and `gamma` at n+1, so a subset of E is the same LabelSet
// in both matroids.

#ifndef ESSPLIT_ES_SPLITTING_HPP_
#define ESSPLIT_ES_SPLITTING_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "essplit/errors.hpp"
#include "essplit/gf2.hpp"
#include "essplit/label_set.hpp"
#include "essplit/matroid.hpp"

namespace essplit {

struct SplitLabels {
  std::string a = "a";
  std::string gamma = "gamma";
};

gf2::GF2Matrix build_split_matrix(const BinaryMatroid& base, LabelSet x_set, std::size_t e,
                                  const SplitLabels& labels);

// One es-splitting instance (M, X, e, labels of a and gamma). Immutable; the
// split matroid is built on construction.
class SplitContext {
 public:
  SplitContext(BinaryMatroid base, LabelSet x_set, std::size_t e, SplitLabels labels = {})
      : base_(std::move(base)), x_set_(x_set), e_(e), labels_(std::move(labels)) {
    base_.ground().check(x_set_);
    base_.ground().check(LabelSet::single(e_));
    if (!x_set_.contains(e_)) throw ElementNotInX(base_.ground().label(e_));
    if (base_.size() + 2 > kMaxGroundSize) {
      throw GroundSetTooLarge(base_.size() + 2, kMaxGroundSize);
    }
    split_ = BinaryMatroid(build_split_matrix(base_, x_set_, e_, labels_), base_.caps());
  }

  static SplitContext from_labels(BinaryMatroid base, std::span<const std::string> x_labels,
                                  std::string_view e_label, SplitLabels labels = {}) {
    const LabelSet x = base.ground().parse(x_labels);
    const std::size_t e = base.ground().index_of(e_label);
    return SplitContext(std::move(base), x, e, std::move(labels));
  }

  const BinaryMatroid& base() const { return base_; }
  const BinaryMatroid& split() const { return split_; }
  LabelSet x_set() const { return x_set_; }
  std::size_t e() const { return e_; }
  const SplitLabels& labels() const { return labels_; }

  std::size_t n() const { return base_.size(); }
  std::size_t a() const { return n(); }
  std::size_t gamma() const { return n() + 1; }
  LabelSet a_set() const { return LabelSet::single(a()); }
  LabelSet gamma_set() const { return LabelSet::single(gamma()); }
  LabelSet e_set() const { return LabelSet::single(e_); }
  LabelSet ground_e() const { return base_.ground_set(); }
  LabelSet delta() const { return e_set() | a_set() | gamma_set(); }
  const Ground& split_ground() const { return split_.ground(); }

 private:
  BinaryMatroid base_;
  LabelSet x_set_;
  std::size_t e_;
  SplitLabels labels_;
  BinaryMatroid split_;
};

inline gf2::GF2Matrix build_split_matrix(const BinaryMatroid& base, LabelSet x_set,
                                         std::size_t e, const SplitLabels& labels) {
  const Ground& ground = base.ground();
  ground.check(x_set);
  ground.check(LabelSet::single(e));
  if (!x_set.contains(e)) throw ElementNotInX(ground.label(e));
  if (labels.a == labels.gamma) throw LabelCollision(labels.gamma);
  if (ground.contains(labels.a)) throw LabelCollision(labels.a);
  if (ground.contains(labels.gamma)) throw LabelCollision(labels.gamma);

  gf2::GF2Matrix m = gf2::with_row(base.matrix(), x_set.bits());
  gf2::GF2Vector a_column(m.n_rows());
  a_column.set(m.n_rows() - 1);
  m = gf2::with_column(m, labels.a, a_column);
  return gf2::with_column(m, labels.gamma, m.column(e) + a_column);
}

inline gf2::GF2Matrix build_split_matrix(const SplitContext& ctx) {
  return build_split_matrix(ctx.base(), ctx.x_set(), ctx.e(), ctx.labels());
}

inline BinaryMatroid split_matroid(const SplitContext& ctx) { return ctx.split(); }

// A query set A' over E + {a, gamma}, with A = A' minus {a, gamma}.
struct SplitQuery {
  LabelSet a_prime;
  LabelSet a;
  bool has_a = false;
  bool has_gamma = false;

  static SplitQuery make(const SplitContext& ctx, LabelSet a_prime) {
    ctx.split_ground().check(a_prime);
    SplitQuery q;
    q.a_prime = a_prime;
    q.a = a_prime & ctx.ground_e();
    q.has_a = a_prime.contains(ctx.a());
    q.has_gamma = a_prime.contains(ctx.gamma());
    return q;
  }

  static SplitQuery parse(const SplitContext& ctx, std::span<const std::string> labels) {
    return make(ctx, ctx.split_ground().parse(labels));
  }
};

// ---------------------------------------------------------------------------
// Circuit-parity predicates on M.

inline bool is_ox(const SplitContext& ctx, LabelSet circuit) {
  return classify_circuit(circuit, ctx.x_set()) == CircuitClass::kOX;
}

// Some circuit C of M with C inside s meets X oddly.
inline bool contains_ox_circuit(const SplitContext& ctx, LabelSet s) {
  ctx.base().ground().check(s);
  const auto& circuits = ctx.base().circuits();
  return std::any_of(circuits.begin(), circuits.end(),
                     [&](LabelSet c) { return c.subset_of(s) && is_ox(ctx, c); });
}

// T(A): elements x of E - A, x != e, lying with e on an OX-circuit inside
// A + e + x.
inline LabelSet set_T(const SplitContext& ctx, LabelSet a) {
  ctx.base().ground().check(a);
  const std::size_t e = ctx.e();
  LabelSet out;
  for (LabelSet c : ctx.base().circuits()) {
    if (!c.contains(e) || !is_ox(ctx, c)) continue;
    // C - (A + e) must be a single element x, which then lies on C with e.
    const LabelSet outside = c - a.with(e);
    if (outside.size() == 1) out = out | outside;
  }
  return out;
}

// F(A): elements x of cl(A) - A lying on an OX-circuit contained in cl(A).
// Containment is read as non-strict.
inline LabelSet set_F(const SplitContext& ctx, LabelSet a) {
  ctx.base().ground().check(a);
  const LabelSet closure = ctx.base().closure_of(a);
  LabelSet covered;
  for (LabelSet c : ctx.base().circuits()) {
    if (c.subset_of(closure) && is_ox(ctx, c)) covered = covered | c;
  }
  return (closure - a) & covered;
}

// ---------------------------------------------------------------------------
// Circuits.

struct CircuitFamily {
  std::vector<LabelSet> c0;  // EX-circuits of M
  std::vector<LabelSet> c1;  // minimal unions of two disjoint OX-circuits
  std::vector<LabelSet> c2;  // OX-circuit + a
  std::vector<LabelSet> c3;  // the three gamma-bearing classes
  LabelSet delta;            // {e, a, gamma}

  // Union of all classes, deduplicated, canonical order.
  std::vector<LabelSet> flatten() const {
    std::vector<LabelSet> out;
    for (const auto* part : {&c0, &c1, &c2, &c3}) out.insert(out.end(), part->begin(), part->end());
    out.push_back(delta);
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {
inline void sorted_unique(std::vector<LabelSet>& sets) {
  sort_canonical(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}
}  // namespace detail

inline CircuitFamily predict_circuits(const SplitContext& ctx) {
  const auto& circuits = ctx.base().circuits();
  const std::size_t e = ctx.e();
  const LabelSet x = ctx.x_set();
  CircuitFamily family;
  family.delta = ctx.delta();

  std::vector<LabelSet> ox;
  for (LabelSet c : circuits) {
    if (is_ox(ctx, c)) {
      ox.push_back(c);
    } else {
      family.c0.push_back(c);
    }
  }

  std::vector<LabelSet> unions;
  for (std::size_t i = 0; i < ox.size(); ++i) {
    for (std::size_t j = i + 1; j < ox.size(); ++j) {
      if (ox[i].intersects(ox[j])) continue;
      const LabelSet u = ox[i] | ox[j];
      const bool holds_even = std::any_of(family.c0.begin(), family.c0.end(),
                                          [&](LabelSet c) { return c.subset_of(u); });
      if (!holds_even) unions.push_back(u);
    }
  }
  detail::sorted_unique(unions);
  for (LabelSet u : unions) {
    const bool minimal = std::none_of(unions.begin(), unions.end(),
                                      [&](LabelSet v) { return v.proper_subset_of(u); });
    if (minimal) family.c1.push_back(u);
  }

  for (LabelSet c : ox) family.c2.push_back(c | ctx.a_set());

  for (LabelSet c : circuits) {
    const bool odd = is_ox(ctx, c);
    if (!c.contains(e)) {
      if (odd) family.c3.push_back(c | ctx.e_set() | ctx.gamma_set());
      continue;
    }
    const LabelSet rest = c.without(e);
    if (odd) family.c3.push_back(rest | ctx.gamma_set());
    if ((rest & x).size() % 2 == 1) family.c3.push_back(rest | ctx.a_set() | ctx.gamma_set());
  }
  detail::sorted_unique(family.c2);
  detail::sorted_unique(family.c3);
  return family;
}

// ---------------------------------------------------------------------------
// Rank.

inline std::size_t predict_rank(const SplitContext& ctx, const SplitQuery& q) {
  const BinaryMatroid& m = ctx.base();
  const LabelSet a = q.a;
  const std::size_t r = m.rank_of(a);
  if (!q.has_a && !q.has_gamma) return contains_ox_circuit(ctx, a) ? r + 1 : r;
  if (q.has_a && !q.has_gamma) return r + 1;
  const bool e_in_closure = m.closure_of(a).contains(ctx.e());
  if (q.has_gamma && !q.has_a) {
    const bool ox_in_a = contains_ox_circuit(ctx, a);
    if (!ox_in_a && contains_ox_circuit(ctx, a.with(ctx.e()))) return r;
    if (ox_in_a && !e_in_closure) return r + 2;
    return r + 1;
  }
  return e_in_closure ? r + 1 : r + 2;
}

// ---------------------------------------------------------------------------
// Odd circuit inside the symmetric difference of an OX- and an EX-circuit
// through e.

inline LabelSet find_ox_subcircuit(const SplitContext& ctx, LabelSet c_ox, LabelSet c_ex,
                                   LabelSet a) {
  const BinaryMatroid& m = ctx.base();
  m.ground().check(c_ox | c_ex | a);
  const LabelSet bound = a.with(ctx.e());
  if (!m.is_circuit(c_ox) || !is_ox(ctx, c_ox)) {
    throw PreconditionViolated(m.ground().format(c_ox) + " is not an OX-circuit");
  }
  if (!m.is_circuit(c_ex) || is_ox(ctx, c_ex)) {
    throw PreconditionViolated(m.ground().format(c_ex) + " is not an EX-circuit");
  }
  if (!c_ox.contains(ctx.e()) || !c_ex.contains(ctx.e())) {
    throw PreconditionViolated("both circuits must contain e");
  }
  if (!c_ox.subset_of(bound) || !c_ex.subset_of(bound)) {
    throw PreconditionViolated("both circuits must lie inside A + e");
  }
  const LabelSet diff = c_ox ^ c_ex;
  for (LabelSet c : m.circuits()) {
    if (c.subset_of(diff) && is_ox(ctx, c)) return c;
  }
  // An odd-parity cycle is a disjoint union of circuits, one of them odd.
  throw std::logic_error("no OX-circuit inside " + m.ground().format(diff));
}

// ---------------------------------------------------------------------------
// Closure.

// Case identifiers. Wire names are given by case_id().
enum class ClosureCase {
  kPlainNoOddWithE,       // A' = A, A + e holds no OX-circuit
  kPlainClosureNoOdd,     // A' = A, cl(A) holds no OX-circuit
  kPlainOddEOutside,      // A' = A, A holds an OX-circuit, e not in cl(A)
  kWithAEOutside,         // A' = A + a, e not in cl(A)
  kPlainOddOnlyWithE,     // A' = A, A + e holds an OX-circuit but A does not
  kGammaOddInClosure,     // A' = A + gamma, e not in cl(A), cl(A) but not A holds one
  kGammaClosureNoOdd,     // A' = A + gamma, cl(A) holds none, e not in cl(A)
  kBoth,                  // A' = A + {a, gamma}
  kWithAEInClosure,       // A' = A + a, e in cl(A)
  kGammaOdd,              // A' = A + gamma, A holds an OX-circuit
  kGammaEInClosure,       // A' = A + gamma, e in cl(A)
  kPlainOddEInClosure,    // A' = A, A holds an OX-circuit, e in cl(A)
};

inline constexpr std::array<ClosureCase, 12> kAllClosureCases = {
    ClosureCase::kPlainNoOddWithE,  ClosureCase::kPlainClosureNoOdd,
    ClosureCase::kPlainOddEOutside, ClosureCase::kWithAEOutside,
    ClosureCase::kPlainOddOnlyWithE, ClosureCase::kGammaOddInClosure,
    ClosureCase::kGammaClosureNoOdd, ClosureCase::kBoth,
    ClosureCase::kWithAEInClosure,  ClosureCase::kGammaOdd,
    ClosureCase::kGammaEInClosure,  ClosureCase::kPlainOddEInClosure,
};

constexpr const char* case_id(ClosureCase c) {
  switch (c) {
    case ClosureCase::kPlainNoOddWithE: return "L3.2";
    case ClosureCase::kPlainClosureNoOdd: return "L3.3";
    case ClosureCase::kPlainOddEOutside: return "L3.4.1";
    case ClosureCase::kWithAEOutside: return "L3.4.2";
    case ClosureCase::kPlainOddOnlyWithE: return "L3.5";
    case ClosureCase::kGammaOddInClosure: return "L3.6";
    case ClosureCase::kGammaClosureNoOdd: return "L3.7";
    case ClosureCase::kBoth: return "L3.8.1";
    case ClosureCase::kWithAEInClosure: return "L3.8.2";
    case ClosureCase::kGammaOdd: return "L3.8.3";
    case ClosureCase::kGammaEInClosure: return "L3.8.4";
    case ClosureCase::kPlainOddEInClosure: return "L3.8.5";
  }
  return "?";
}

struct ClosureCaseReport {
  SplitQuery query;
  std::vector<ClosureCase> matched;
  std::optional<LabelSet> formula_result;
  std::optional<LabelSet> oracle_result;
  std::optional<bool> agreement;

  bool no_lemma_applies() const { return matched.empty(); }
};

// Quantities of M that every closure and flat rule is phrased in.
struct BaseFacts {
  LabelSet a;
  LabelSet closure;
  LabelSet f;
  LabelSet t;
  bool ox_in_a = false;
  bool ox_in_a_with_e = false;
  bool ox_in_closure = false;
  bool e_in_closure = false;

  static BaseFacts of(const SplitContext& ctx, LabelSet a) {
    BaseFacts facts;
    facts.a = a;
    facts.closure = ctx.base().closure_of(a);
    facts.f = set_F(ctx, a);
    facts.t = set_T(ctx, a);
    facts.ox_in_a = contains_ox_circuit(ctx, a);
    facts.ox_in_a_with_e = contains_ox_circuit(ctx, a.with(ctx.e()));
    facts.ox_in_closure = contains_ox_circuit(ctx, facts.closure);
    facts.e_in_closure = facts.closure.contains(ctx.e());
    return facts;
  }
};

// The seven candidate values of cl'(A') determined by A alone.
inline std::array<LabelSet, 7> closure_shapes(const SplitContext& ctx, const BaseFacts& f) {
  const LabelSet trimmed = f.closure - f.f;
  return {trimmed,
          f.closure,
          f.closure | ctx.a_set(),
          trimmed | ctx.gamma_set(),
          trimmed | ctx.gamma_set() | f.t,
          f.closure | ctx.gamma_set() | f.t,
          f.closure | ctx.delta()};
}

// Evaluates every case precondition in order, records all that hold, and
// checks that they agree. When with_oracle is set the closure in the split
// matroid is attached for comparison.
inline ClosureCaseReport predict_closure(const SplitContext& ctx, const SplitQuery& q,
                                         bool with_oracle) {
  const BaseFacts f = BaseFacts::of(ctx, q.a);
  const bool plain = !q.has_a && !q.has_gamma;
  const bool only_a = q.has_a && !q.has_gamma;
  const bool only_gamma = q.has_gamma && !q.has_a;
  const LabelSet trimmed = f.closure - f.f;

  std::vector<std::pair<ClosureCase, LabelSet>> hits;
  auto rule = [&](bool holds, ClosureCase c, LabelSet value) {
    if (holds) hits.emplace_back(c, value);
  };
  const LabelSet with_delta = f.closure | ctx.delta();
  rule(plain && !f.ox_in_a_with_e, ClosureCase::kPlainNoOddWithE, trimmed);
  rule(plain && !f.ox_in_closure, ClosureCase::kPlainClosureNoOdd, f.closure);
  rule(plain && f.ox_in_a && !f.e_in_closure, ClosureCase::kPlainOddEOutside,
       f.closure | ctx.a_set());
  rule(only_a && !f.e_in_closure, ClosureCase::kWithAEOutside, f.closure | ctx.a_set());
  rule(plain && f.ox_in_a_with_e && !f.ox_in_a, ClosureCase::kPlainOddOnlyWithE,
       trimmed | ctx.gamma_set());
  rule(only_gamma && !f.e_in_closure && f.ox_in_closure && !f.ox_in_a,
       ClosureCase::kGammaOddInClosure, trimmed | ctx.gamma_set() | f.t);
  rule(only_gamma && !f.ox_in_closure && !f.e_in_closure, ClosureCase::kGammaClosureNoOdd,
       f.closure | ctx.gamma_set() | f.t);
  rule(q.has_a && q.has_gamma, ClosureCase::kBoth, with_delta);
  rule(only_a && f.e_in_closure, ClosureCase::kWithAEInClosure, with_delta);
  rule(only_gamma && f.ox_in_a, ClosureCase::kGammaOdd, with_delta);
  rule(only_gamma && f.e_in_closure, ClosureCase::kGammaEInClosure, with_delta);
  rule(plain && f.ox_in_a && f.e_in_closure, ClosureCase::kPlainOddEInClosure, with_delta);

  ClosureCaseReport report;
  report.query = q;
  for (const auto& [c, value] : hits) {
    report.matched.push_back(c);
    if (!report.formula_result) {
      report.formula_result = value;
    } else if (*report.formula_result != value) {
      const Ground& g = ctx.split_ground();
      throw FormulaDisagreement(std::string("closure of ") + g.format(q.a_prime) + ": " +
                                case_id(hits.front().first) + " gives " +
                                g.format(*report.formula_result) + " but " + case_id(c) +
                                " gives " + g.format(value));
    }
  }
  if (with_oracle) {
    report.oracle_result = ctx.split().closure_of(q.a_prime);
    if (report.formula_result) report.agreement = *report.formula_result == *report.oracle_result;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Flats.

enum class FlatCondition {
  kPlainNoOddWithE = 1,   // A' = A, A + e holds no OX-circuit, F(A) empty
  kPlainClosureNoOdd,     // A' = A, cl(A) holds no OX-circuit
  kWithAEOutside,         // A' = A + a, e not in cl(A)
  kGammaOddInClosure,     // A' = A + gamma, e not in cl(A), cl(A) but not A holds one,
                          // F(A) and T(A) empty
  kGammaClosureNoOdd,     // A' = A + gamma, cl(A) holds none, e not in cl(A), T(A) empty
  kBothEInA,              // A' = A + {a, gamma}, e in A
};

constexpr int condition_number(FlatCondition c) { return static_cast<int>(c); }

// First sufficient flat condition that holds, or nullopt. Requires A to be a
// flat of M.
inline std::optional<FlatCondition> predict_is_flat(const SplitContext& ctx,
                                                    const SplitQuery& q) {
  if (!ctx.base().is_flat(q.a)) {
    throw BaseNotFlat(ctx.base().ground().format(q.a) + " is not a flat of the base matroid");
  }
  const BaseFacts f = BaseFacts::of(ctx, q.a);
  const bool plain = !q.has_a && !q.has_gamma;
  const bool only_a = q.has_a && !q.has_gamma;
  const bool only_gamma = q.has_gamma && !q.has_a;
  if (plain && !f.ox_in_a_with_e && f.f.empty()) return FlatCondition::kPlainNoOddWithE;
  if (plain && !f.ox_in_closure) return FlatCondition::kPlainClosureNoOdd;
  if (only_a && !f.e_in_closure) return FlatCondition::kWithAEOutside;
  if (only_gamma && !f.e_in_closure && f.ox_in_closure && !f.ox_in_a && f.f.empty() &&
      f.t.empty()) {
    return FlatCondition::kGammaOddInClosure;
  }
  if (only_gamma && !f.ox_in_closure && !f.e_in_closure && f.t.empty()) {
    return FlatCondition::kGammaClosureNoOdd;
  }
  if (q.has_a && q.has_gamma && q.a.contains(ctx.e())) return FlatCondition::kBothEInA;
  return std::nullopt;
}

}  // namespace essplit

#endif  // ESSPLIT_ES_SPLITTING_HPP_
