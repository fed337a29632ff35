// Acceptance suite: runs every acceptance criterion end to end, printing
// one pass/fail line per criterion.  Exit code 0 iff all pass.
//
// Usage: acceptance [path-to-cli-binary]
// The CLI path enables the command-line refusal checks; without it those
// assertions fall back to the library level.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "artin/graph_io.hpp"
#include "artin/harness.hpp"
#include "artin/normal_form.hpp"
#include "artin/oracle.hpp"

using namespace artin;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  const char* title;
  bool passed;
  double seconds;
  std::string note;
};

std::vector<Criterion> results;

template <typename Fn>
void run(int id, const char* title, Fn&& fn) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string note;
  try {
    note = fn();
    ok = true;
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  results.push_back(Criterion{id, title, ok, seconds_since(t0), std::move(note)});
  const Criterion& c = results.back();
  std::printf("[%2d] %s  %-58s (%.2fs)%s%s\n", c.id, c.passed ? "PASS" : "FAIL", c.title,
              c.seconds, c.note.empty() ? "" : "  -- ", c.note.c_str());
  std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

void require_under(double seconds, double budget, const std::string& what) {
  std::ostringstream msg;
  msg << what << " took " << seconds << "s, budget " << budget << "s";
  require(seconds <= budget, msg.str());
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) throw std::runtime_error("could not spawn CLI");
  return WEXITSTATUS(status);
}

PositiveWord random_word(const CoxeterGraph& g, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(1, g.rank());
  std::vector<int> letters(static_cast<std::size_t>(len_dist(rng)));
  for (int& s : letters) s = gen_dist(rng);
  return PositiveWord(g, std::move(letters));
}

PositiveWord random_word_of_length(const CoxeterGraph& g, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen_dist(1, g.rank());
  std::vector<int> letters(len);
  for (int& s : letters) s = gen_dist(rng);
  return PositiveWord(g, std::move(letters));
}

PositiveWord random_equal_variant(const PositiveWord& w, std::mt19937_64& rng) {
  const CoxeterGraph& g = w.graph();
  std::vector<int> cur = w.letters();
  for (int step = 0; step < 8; ++step) {
    std::vector<std::pair<std::size_t, int>> sites;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      int s = cur[i], t = cur[i + 1];
      if (s == t) continue;
      int m = g.label(s, t);
      if (m == kNoRelation || i + static_cast<std::size_t>(m) > cur.size()) continue;
      bool match = true;
      for (int j = 0; j < m && match; ++j)
        match = cur[i + static_cast<std::size_t>(j)] == (j % 2 == 0 ? s : t);
      if (match) sites.emplace_back(i, m);
    }
    if (sites.empty()) break;
    auto [i, m] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    int s = cur[i], t = cur[i + 1];
    for (int j = 0; j < m; ++j) cur[i + static_cast<std::size_t>(j)] = (j % 2 == 0 ? t : s);
  }
  return PositiveWord(g, std::move(cur));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  run(1, "even-chain tables, k = 2..5, iff period 2k+4", [] {
    auto t0 = Clock::now();
    for (int k = 2; k <= 5; ++k) {
      VerdictTable t = check_even_chain(k, 3 * (2 * k + 4));
      require(t.all_agree, "k=" + std::to_string(k) + " disagrees");
      require(periodicity_consistent(t), "periodicity broken at k=" + std::to_string(k));
    }
    double s = seconds_since(t0);
    require_under(s, 60.0, "even-chain sweep");
    return std::string();
  });

  run(2, "odd-chain tables, k = 1..4, iff period 2k+1", [] {
    auto t0 = Clock::now();
    for (int k = 1; k <= 4; ++k) {
      VerdictTable t = check_odd_chain(k, 3 * (2 * k + 1));
      require(t.all_agree, "k=" + std::to_string(k) + " disagrees");
      require(periodicity_consistent(t), "periodicity broken at k=" + std::to_string(k));
    }
    require_under(seconds_since(t0), 60.0, "odd-chain sweep");
    return std::string();
  });

  run(3, "fold-A k = 3..7 and fold-D k = 4..7, with lcm-hom verification", [] {
    auto t0 = Clock::now();
    for (int k = 3; k <= 7; ++k) {
      FoldCheck f = check_fold(FoldFamily::A, k);
      require(f.table.period == k, "fold-A period wrong");
      require(f.table.all_agree, "fold-A table k=" + std::to_string(k));
      require(f.folding.relation_at_h, "fold-A relation k=" + std::to_string(k));
      require(f.folding.divisibility, "fold-A divisibility k=" + std::to_string(k));
      require(!f.folding.first_shorter_relation, "fold-A shorter relation k=" + std::to_string(k));
    }
    for (int k = 4; k <= 7; ++k) {
      FoldCheck f = check_fold(FoldFamily::D, k);
      require(f.table.period == 2 * k - 2, "fold-D period wrong");
      require(f.table.all_agree, "fold-D table k=" + std::to_string(k));
      require(f.folding.relation_at_h, "fold-D relation k=" + std::to_string(k));
      require(f.folding.divisibility, "fold-D divisibility k=" + std::to_string(k));
      require(!f.folding.first_shorter_relation, "fold-D shorter relation k=" + std::to_string(k));
    }
    require_under(seconds_since(t0), 120.0, "fold sweep");
    return std::string();
  });

  run(4, "conjecture brute force, k = 2..4, every permutation", [] {
    auto t0 = Clock::now();
    for (int k = 2; k <= 4; ++k) {
      ConjectureReport r = check_conjecture(k, 3 * (2 * k + 4));
      std::size_t expected_perms = 1;
      for (int i = 2; i <= k; ++i) expected_perms *= static_cast<std::size_t>(i);
      require(r.entries.size() == expected_perms, "permutation count wrong");
      require(r.all_pass, "conjecture fails at k=" + std::to_string(k));
    }
    require_under(seconds_since(t0), 600.0, "conjecture sweep");
    return std::string();
  });

  run(5, "corollary: (a^3 b)^3 = (b a^3)^3, r = 1, 2 unequal", [] {
    auto t0 = Clock::now();
    CorollaryReport r = check_corollary();
    require(r.rows.size() == 3, "row count");
    require(!r.rows[0].equal && !r.rows[1].equal && r.rows[2].equal, "wrong verdicts");
    require(r.all_agree, "corollary disagrees");
    require_under(seconds_since(t0), 1.0, "corollary");
    return std::string();
  });

  run(6, "claims equivalences for k <= 5, both chain families", [] {
    for (int k = 2; k <= 5; ++k) {
      require(check_claims(ChainParity::even, k).all_agree,
              "even claims k=" + std::to_string(k));
      require(check_claims(ChainParity::odd, k).all_agree, "odd claims k=" + std::to_string(k));
    }
    return std::string();
  });

  run(7, "oracle equivalence: 1000 random pairs per graph, length <= 12", [] {
    std::mt19937_64 rng(0xA11CE5EEDull);
    std::vector<CoxeterGraph> graphs{CoxeterGraph::type_a(2),  CoxeterGraph::type_a(3),
                                     CoxeterGraph::type_a(4),  CoxeterGraph::type_d(4),
                                     CoxeterGraph::dihedral(3), CoxeterGraph::dihedral(5)};
    long disagreements = 0, skipped = 0, total = 0;
    for (const CoxeterGraph& g : graphs) {
      for (int trial = 0; trial < 1000; ++trial) {
        // half the pairs are rewrite-equal, half independent but
        // length-matched so the closures genuinely run
        PositiveWord u = random_word(g, 12, rng);
        PositiveWord v = (trial % 2 == 0) ? random_equal_variant(u, rng)
                                          : random_word_of_length(g, u.size(), rng);
        OracleResult r = brute_force_equal(u, v);
        ++total;
        if (r == OracleResult::budget_exceeded) {
          ++skipped;
          continue;
        }
        if ((r == OracleResult::equal) != words_equal(u, v)) ++disagreements;
      }
    }
    require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    require(skipped == 0, std::to_string(skipped) + " budget exhaustions at desk scale");
    return std::to_string(total) + " pairs";
  });

  run(8, "Coxeter numbers match n+1 / 2n-2 / m for ranks <= 8", [] {
    for (int n = 1; n <= 8; ++n)
      require(coxeter_number(CoxeterGraph::type_a(n)) == n + 1, "A_" + std::to_string(n));
    for (int n = 4; n <= 8; ++n)
      require(coxeter_number(CoxeterGraph::type_d(n)) == 2 * n - 2, "D_" + std::to_string(n));
    for (int m = 3; m <= 8; ++m)
      require(coxeter_number(CoxeterGraph::dihedral(m)) == m, "I2(" + std::to_string(m) + ")");
    return std::string();
  });

  run(9, "surface types: closed forms for n <= 12, chi = -e on random trees", [] {
    for (int n = 2; n <= 12; ++n) {
      SurfaceType st = surface_of(CurveGraph::chain(n));
      SurfaceType want = (n % 2 == 0) ? SurfaceType{n / 2, 1, 1 - n}
                                      : SurfaceType{(n - 1) / 2, 2, 1 - n};
      require(st == want, "chain " + std::to_string(n));
    }
    for (int n = 4; n <= 12; ++n) {
      SurfaceType st = surface_of(CurveGraph::d_shape(n));
      SurfaceType want = (n % 2 == 0) ? SurfaceType{(n - 2) / 2, 3, 1 - n}
                                      : SurfaceType{(n - 1) / 2, 2, 1 - n};
      require(st == want, "d-shape " + std::to_string(n));
    }
    std::mt19937_64 rng(0xBEEF);
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<int> size(1, 12);
      int v = size(rng);
      std::vector<std::array<int, 3>> edges;
      for (int w = 2; w <= v; ++w)
        edges.push_back({std::uniform_int_distribution<int>(1, w - 1)(rng), w, 1});
      CurveGraph tree = CurveGraph::from_edges(v, edges);
      SurfaceType st = surface_of(tree);
      require(st.euler == -tree.edge_count(), "chi != -e");
      require(st.euler == 2 - 2 * st.genus - st.boundary, "chi identity");
      for (int s = 0; s < 20; ++s)
        require(surface_of(tree, rng()) == st, "plumbing order changed the verdict");
    }
    return std::string();
  });

  run(10, "transvections: M^T J M = J and twist relations, ranks <= 7", [] {
    std::vector<CurveGraph> shapes;
    for (int n = 1; n <= 7; ++n) shapes.push_back(CurveGraph::chain(n));
    for (int n = 4; n <= 7; ++n) shapes.push_back(CurveGraph::d_shape(n));
    for (const CurveGraph& cg : shapes) {
      TransvectionRep rep = transvection_rep(cg);
      int v = cg.curve_count();
      for (int c = 0; c < v; ++c) {
        const IntMatrix& m = rep.twists[static_cast<std::size_t>(c)];
        require(m.transpose() * rep.pairing * m == rep.pairing, "pairing not preserved");
      }
      for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b) {
          if (cg.intersections(a, b) == 0)
            require(evaluate_letters(rep, {a, b}) == evaluate_letters(rep, {b, a}),
                    "commutation fails");
          else
            require(evaluate_letters(rep, {a, b, a}) == evaluate_letters(rep, {b, a, b}),
                    "braid fails");
        }
    }
    return std::string();
  });

  run(11, "negative control: k = 1 even chain breaks the iff; CLI refuses it", [&cli] {
    bool refused = false;
    try {
      check_even_chain(1);
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    require(refused, "library accepted k = 1 without the override");
    VerdictTable t = check_even_chain(1, 0, {}, true);
    require(t.rows.at(2).relation_holds, "relation should hold at length 3");
    require(!t.rows.at(2).expected, "3 is not a multiple of 6");
    require(!t.all_agree, "the iff should break for k = 1");
    if (!cli.empty()) {
      require(run_cli(cli, "check even --k 1") == 2, "CLI should refuse k = 1");
      require(run_cli(cli, "check even --k 1 --allow-k1") == 1,
              "CLI override should run and report the broken iff");
      require(run_cli(cli, "check even --k 2") == 0, "CLI k = 2 should pass");
      return std::string("CLI refusal verified");
    }
    return std::string("library-level only (no CLI path given)");
  });

  int failed = 0;
  for (const Criterion& c : results)
    if (!c.passed) ++failed;
  std::printf("acceptance: %zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
