#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgebal/balance.h"
#include "edgebal/graph.h"
#include "edgebal/report_json.h"

namespace edgebal {

// PASS: every instance agrees with the claim. COUNTEREXAMPLE: a concrete
// instance contradicts it. DISCREPANCY: a claimed closed form differs from
// the brute-force value.
enum class Verdict { kPass, kCounterexample, kDiscrepancy };

std::string_view to_string(Verdict v);

// One evaluated instance. `graph6` (plus `edge` where relevant) is enough to
// recompute `values` from scratch.
struct Record {
  std::string instance;
  std::string graph6;
  std::optional<OrientedEdge> edge;
  Json values = Json::object();
  bool holds = true;
};

// Result of one reading of a claim, typically one counting convention.
struct Outcome {
  std::string label;
  std::optional<Convention> convention;
  Verdict verdict = Verdict::kPass;
  int instances = 0;    // graphs (or graph pairs) evaluated
  int comparisons = 0;  // elementary equalities/implications checked
  int failures = 0;
  bool complete_records = false;  // records holds every instance, not only failures
  std::vector<Record> records;
};

struct CheckResult {
  std::string id;
  std::string claim;
  std::string instance_set;
  std::string convention;  // "strict", "augmented" or "both"
  Verdict verdict = Verdict::kPass;
  std::vector<Outcome> outcomes;

  int instances() const;
  // Failing records across all outcomes.
  std::vector<Record> witnesses() const;
};

struct VerifyConfig {
  int atlas_n_max = 7;  // `--budget`: largest vertex count of exhaustive scans
  int kntn_n_max = 4;   // K_{n,tn} family: n in [1, kntn_n_max]
  int kntn_t_min = 1;
  int kntn_t_max = 4;
  int formula_t_min = 2;  // closed-form Szeged audit uses t in [formula_t_min, kntn_t_max]
  int product_t_max = 3;  // product iff checks use t in [1, product_t_max]
  int empty_factor_max = 3;
  int witness_cap = 10;
  int threads = 0;  // 0: EDGEBAL_THREADS, else hardware concurrency
  std::vector<std::string> checks;  // empty runs C1..C12
  std::vector<std::string> product_corpus = {
      "complete(2)", "path(3)", "cycle(4)",
      "complete_bipartite(1,2)", "cycle(5)", "complete_bipartite(2,3)"};
  std::vector<std::string> edb_corpus = {
      "complete(2)", "complete_bipartite(1,2)", "complete_bipartite(1,3)", "cycle(4)",
      "complete_bipartite(2,3)", "complete_bipartite(2,4)", "cycle(6)", "hypercube(3)"};
  std::vector<std::string> edged_factors = {"complete(2)", "path(3)", "complete(3)"};
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckResult> results;
};

std::vector<std::string> all_check_ids();

// Throws BudgetExceeded when atlas_n_max is outside [2, 8] or a corpus
// product would exceed the vertex budget; ParameterOutOfRange for unknown
// ids. Claim verdicts never throw.
void validate(const VerifyConfig& config);
CheckResult run_check(std::string_view id, const VerifyConfig& config = {});
VerificationReport run_all(const VerifyConfig& config = {});

Json to_json(const Record& r);
Json to_json(const CheckResult& r);
Json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace edgebal
