#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchrom/representation.hpp"

using namespace qchrom;

namespace {

Design fano() { return hadamard_design(1); }

int inner(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("representation from the Fano family") {
  const FlatRep rep = rep_from_family(fano(), 4);
  CHECK(rep.dimension == 8);
  const std::vector<int> zero(7, 0);
  CHECK(rep.evaluate(zero) == std::vector<int>(8, 1));

  // Difference e_1 + e_2: the four separating blocks contribute -1 each,
  // the other three +1, and one padding coordinate +1.
  std::vector<int> v(7, 0);
  v[0] = v[1] = 1;
  CHECK(inner(rep.evaluate(zero), rep.evaluate(v)) == 0);

  for (const int entry : rep.evaluate(v)) {
    CHECK((entry == 1 || entry == -1));
  }
}

TEST_CASE("character product law on the block coordinates") {
  const FlatRep rep = rep_from_family(paley_design(11), 6);
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> u(11), w(11), sum(11);
    for (int i = 0; i < 11; ++i) {
      u[i] = bit(rng);
      w[i] = bit(rng);
      sum[i] = u[i] ^ w[i];
    }
    const auto phi_u = rep.evaluate(u), phi_w = rep.evaluate(w),
               phi_sum = rep.evaluate(sum);
    for (size_t i = 0; i < rep.blocks.size(); ++i) {
      CHECK(phi_sum[i] == phi_u[i] * phi_w[i]);
    }
  }
}

TEST_CASE("flat orthogonality verdicts") {
  CHECK(verify_flat_orthogonal(rep_from_family(fano(), 4), 7).pass);
  CHECK(verify_flat_orthogonal(rep_from_family(fano(), 4), 7)
            .differences_checked == 21);
  CHECK(verify_flat_orthogonal(rep_from_family(paley_design(11), 6), 11).pass);

  // Dropping a block without adjusting theta breaks some difference class.
  FlatRep corrupted = rep_from_family(fano(), 4);
  corrupted.blocks.pop_back();
  const OrthogonalityVerdict verdict = verify_flat_orthogonal(corrupted, 7);
  CHECK_FALSE(verdict.pass);
  CHECK_FALSE(verdict.violations.empty());
}

TEST_CASE("representation preconditions name the failed hypothesis") {
  Design lopsided;
  lopsided.n = 3;
  lopsided.blocks = {{0, 1}};
  CHECK_THROWS_WITH_AS(rep_from_family(lopsided, 1),
                       doctest::Contains("not constant"), parameter_error);

  Design singletons;
  singletons.n = 5;
  singletons.blocks = {{0}, {1}, {2}, {3}, {4}};
  // Every pair is separated exactly twice, but 2*theta = 4 < b = 5.
  CHECK_THROWS_WITH_AS(rep_from_family(singletons, 2),
                       doctest::Contains("2*theta >= family size"),
                       parameter_error);

  CHECK_THROWS_AS(rep_from_family(fano(), 3), parameter_error);
}

TEST_CASE("natural representation checks") {
  const NaturalRepVerdict o33 = natural_rep_check(balanced_generator_spec(3, 3));
  CHECK(o33.pass);
  CHECK(o33.upper_bound == 3);
  CHECK(o33.edges_checked == 81);

  const NaturalRepVerdict h4 = natural_rep_check(hamming_distance2_spec(4));
  CHECK(h4.pass);
  CHECK(h4.upper_bound == 4);

  // Negative control: +-1 vectors of length 6 at Hamming distance 2 are not
  // orthogonal, so H(6,2) is not an orthogonality graph.
  const NaturalRepVerdict h6 = natural_rep_check(hamming_distance2_spec(6));
  CHECK_FALSE(h6.pass);
  REQUIRE_FALSE(h6.failing_types.empty());
  CHECK(h6.failing_types[0] == TypeVector{4, 2});
}

TEST_CASE("check bit embedding") {
  CHECK(check_bit_embed(std::vector<int>{1, 2, 0, 2, 1}, 3) ==
        std::vector<int>{1, 2, 0, 2, 1, 0});
  CHECK(check_bit_embed(std::vector<int>{1, 0, 1, 1}, 2) ==
        std::vector<int>{1, 0, 1, 1, 1});
  CHECK(check_bit_embed(std::vector<int>{1, 1}, 3) == std::vector<int>{1, 1, 1});
  CHECK(zero_pad_embed(std::vector<int>{2, 1}) == std::vector<int>{2, 1, 0});
}

TEST_CASE("g5 smallest eigenvalue closed form") {
  CHECK(g5_min_eigenvalue_closed_form(2) == -6);
  CHECK(g5_min_eigenvalue_closed_form(3) == -70);
  CHECK(full_spectrum(g5_spec(3)).lambda_min == -70);
  CHECK_THROWS_AS(g5_min_eigenvalue_closed_form(1), parameter_error);
}

TEST_CASE("subgraph theorem verification at the smallest parameters") {
  const SubgraphVerdict verdict = verify_subgraph_theorems(2, 1);
  CHECK(verdict.pass);
  CHECK(verdict.complete);
  CHECK(verdict.g5_closed_form_matches);
  REQUIRE(verdict.graphs.size() == 5);
  for (const SubgraphRecord& g : verdict.graphs) {
    CHECK(g.pass);
    CHECK(g.spectral_bound == g.advertised);
  }
  CHECK(verdict.graphs[0].advertised == 4);  // G1 at t=1
  CHECK(verdict.graphs[3].lambda_min == -6);  // G5 at l=2
  CHECK(verdict.graphs[3].advertised == 6);
  for (const EmbeddingRecord& e : verdict.embeddings) {
    CHECK(e.pass);
    CHECK_FALSE(e.skipped_budget);
  }
}

TEST_CASE("budget-limited embeddings yield a partial verdict") {
  OracleBudget tiny;
  tiny.max_products = 100;
  const SubgraphVerdict verdict = verify_subgraph_theorems(2, 1, tiny);
  CHECK_FALSE(verdict.complete);
  bool any_skipped = false;
  for (const EmbeddingRecord& e : verdict.embeddings) {
    any_skipped |= e.skipped_budget;
  }
  CHECK(any_skipped);
}
