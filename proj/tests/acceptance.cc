// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "edgebal/atlas.h"
#include "edgebal/balance.h"
#include "edgebal/classify.h"
#include "edgebal/generators.h"
#include "edgebal/verifier.h"
#include "oracle.h"

namespace {

using namespace edgebal;

struct Finding {
  bool pass = true;
  std::string detail;
};

Finding fail_with(std::string detail) { return {false, std::move(detail)}; }

const Outcome* outcome(const CheckResult& r, const std::string& label) {
  for (const auto& o : r.outcomes) {
    if (o.label == label) return &o;
  }
  return nullptr;
}

// STRICT accounting and partition sums over the n <= 6 atlas.
Finding accounting_identity() {
  long edges_checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const DistanceMatrix d(g);
      const auto fw = oracle::floyd_warshall(g);
      const auto pairs = oracle::edge_pairs(g);
      for (const auto& e : g.edges()) {
        const OrientedEdge f = oriented(e);
        const EdgeCounts c = edge_counts(g, d, f, Convention::kStrict);
        if (c.m_alpha + c.m_beta + c.m_zero != g.edge_count() - 1) {
          return fail_with("sum mismatch on " + std::to_string(n) + "-vertex graph");
        }
        const auto want = oracle::counts(fw, pairs, f.alpha, f.beta);
        if (c != EdgeCounts{want.m_alpha, want.m_beta, want.m_zero}) {
          return fail_with("counts differ from oracle");
        }
        int near_a = 0, near_b = 0, tied = 0;
        const EdgePartition partition = distance_partition(g, d, f);
        for (const auto& [key, members] : partition.cells()) {
          const int size = static_cast<int>(members.size());
          if (key.first < key.second) near_a += size;
          if (key.first > key.second) near_b += size;
          if (key.first == key.second) tied += size;
        }
        if (near_a != c.m_alpha || near_b != c.m_beta || tied != c.m_zero) {
          return fail_with("partition cells do not reproduce counts");
        }
        ++edges_checked;
      }
    }
  }
  return {true, std::to_string(edges_checked) + " edges"};
}

// K_{n,tn}: AUGMENTED (tn, n) on every edge, t in gt_edb_values.
Finding complete_bipartite_example() {
  int graphs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 1; t <= 4; ++t) {
      const Graph g = complete_bipartite(n, t * n);
      const DistanceMatrix d(g);
      for (const auto& e : g.edges()) {
        const EdgeCounts c = edge_counts(g, d, oriented(e), Convention::kAugmented);
        if (c.m_alpha != t * n || c.m_beta != n) {
          return fail_with("K_{" + std::to_string(n) + "," + std::to_string(t * n) +
                           "} edge counts differ");
        }
      }
      if (!gt_edb_values(g, d, Convention::kAugmented).contains(t)) {
        return fail_with("t missing from gt_edb_values");
      }
      ++graphs;
    }
  }
  return {true, std::to_string(graphs) + " graphs"};
}

Finding product_formula_audit() {
  const CheckResult r = run_check("C5");
  const Outcome* o = outcome(r, "strict");
  if (o == nullptr) return fail_with("no strict outcome");
  const std::string detail = std::to_string(o->instances) + " products, " +
                             std::to_string(o->comparisons) + " equalities, " +
                             std::to_string(o->failures) + " failing";
  if (r.verdict != edgebal::Verdict::kPass || o->failures != 0 || o->instances < 36) {
    return fail_with(detail);
  }
  return {true, detail};
}

Finding szeged_formula_audit() {
  const CheckResult r = run_check("C4");
  const Outcome* strict = outcome(r, "strict");
  const Outcome* aug = outcome(r, "augmented");
  if (strict == nullptr || aug == nullptr) return fail_with("missing outcome");
  auto computed = [](const Outcome& o) -> const Record* {
    for (const auto& rec : o.records) {
      if (rec.values.value("n", 0) == 2 && rec.values.value("t", 0) == 2) return &rec;
    }
    return nullptr;
  };
  const Record* s = computed(*strict);
  const Record* a = computed(*aug);
  if (s == nullptr || a == nullptr) return fail_with("no (2,2) record");
  const auto s_val = s->values["computed"].get<std::int64_t>();
  const auto a_val = a->values["computed"].get<std::int64_t>();
  const auto claimed = s->values["claimed"].get<std::string>();
  std::ostringstream detail;
  detail << "strict " << s_val << ", augmented " << a_val << ", formula " << claimed
         << ", verdict " << to_string(r.verdict);
  const bool ok = s_val == 24 && a_val == 64 && claimed == "784/9" &&
                  a->values["claimed"] == "784/9" &&
                  r.verdict == edgebal::Verdict::kDiscrepancy;
  return {ok, detail.str()};
}

Finding bipartite_diameter_two_audit() {
  const CheckResult r = run_check("C3");
  std::size_t naive = 0;
  for (int n = 3; n <= 7; ++n) {
    naive += oracle::naive_classes(n, oracle::bipartite_diameter_two).size();
  }
  const int scanned = r.instances();
  std::ostringstream detail;
  detail << scanned << " classes scanned, naive oracle " << naive << ", verdict "
         << to_string(r.verdict);
  const bool ok = r.verdict == edgebal::Verdict::kPass && scanned == static_cast<int>(naive);
  return {ok, detail.str()};
}

Finding strong_balance_audit() {
  const CheckResult r = run_check("C12");
  const Outcome* d2 = outcome(r, "augmented/diameter_2");
  const Outcome* t1 = outcome(r, "strict/t_1");
  if (d2 == nullptr || t1 == nullptr) return fail_with("missing outcome");
  std::ostringstream detail;
  detail << "t=1: " << t1->instances << " graphs, " << t1->failures
         << " counterexamples; diameter 2: " << d2->instances << " graphs, " << d2->failures
         << " counterexamples";
  return {d2->failures == 0 && t1->failures == 0, detail.str()};
}

Finding enumeration_counts() {
  const std::size_t expected[] = {0, 0, 0, 2, 6, 21, 112};
  std::ostringstream detail;
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    const std::size_t got = enumerate_connected(n).size();
    const std::size_t naive = oracle::naive_connected_classes(n).size();
    ok = ok && got == expected[n] && naive == expected[n];
    detail << (n > 3 ? ", " : "") << "n=" << n << ": " << got << "/" << naive;
  }
  return {ok, detail.str()};
}

Finding determinism() {
  auto run_verify = [] {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"verify"}, in, out, err);
    return code == 0 ? out.str() : std::string();
  };
  const std::string first = run_verify();
  const std::string second = run_verify();
  if (first.empty()) return fail_with("verify failed");
  if (first != second) return fail_with("reports differ");
  return {true, std::to_string(first.size()) + " bytes identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Finding()>>> criteria = {
      {"accounting identity over n<=6 atlas", accounting_identity},
      {"K_{n,tn} augmented counts (tn, n)", complete_bipartite_example},
      {"product edge-count formulas (C5)", product_formula_audit},
      {"edge-Szeged closed form discrepancy (C4)", szeged_formula_audit},
      {"bipartite diameter-2 classification (C3)", bipartite_diameter_two_audit},
      {"strong balance implies edge balance (C12)", strong_balance_audit},
      {"connected class counts n=3..6", enumeration_counts},
      {"verify output is byte-identical", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Finding v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = fail_with(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s  [%s] (%.1fs)\n", index, v.pass ? "PASS" : "FAIL", name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
