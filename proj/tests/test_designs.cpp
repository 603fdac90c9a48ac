#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qchrom/designs.hpp"

using namespace qchrom;

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(7) == std::make_pair(7, 1));
  CHECK(prime_power_decompose(27) == std::make_pair(3, 3));
  CHECK(prime_power_decompose(121) == std::make_pair(11, 2));
  CHECK_FALSE(prime_power_decompose(6).has_value());
  CHECK_FALSE(prime_power_decompose(1).has_value());
}

TEST_CASE("field construction picks the first irreducible modulus") {
  const GaloisField gf9(3, 2);
  CHECK(gf9.modulus() == std::vector<int>{1, 0});  // x^2 + 1
  const GaloisField gf27(3, 3);
  CHECK(gf27.modulus() == std::vector<int>{1, 2, 0});  // x^3 + 2x + 1
  const GaloisField gf4(2, 2);
  CHECK(gf4.modulus() == std::vector<int>{1, 1});  // x^2 + x + 1
}

TEST_CASE("field arithmetic satisfies the Frobenius identity") {
  for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 25LL, 27LL}) {
    const GaloisField field = GaloisField::of_order(q);
    for (GaloisField::Elem x = 0; x < static_cast<GaloisField::Elem>(q); ++x) {
      CHECK(field.pow(x, q) == x);
    }
    CHECK(static_cast<long long>(field.nonzero_squares().size()) == (q - 1) / 2);
  }
}

TEST_CASE("square detection needs odd order") {
  const GaloisField gf4(2, 2);
  CHECK_THROWS_AS(gf4.is_square(1), parameter_error);
}

TEST_CASE("paley designs") {
  const Design d7 = paley_design(7);
  CHECK(d7.verified_params == BibdParams{3, 1, 3, 7});
  // Squares mod 7 are {1, 2, 4}; the blocks are their translates.
  CHECK(std::find(d7.blocks.begin(), d7.blocks.end(),
                  std::vector<int>{1, 2, 4}) != d7.blocks.end());

  CHECK(paley_design(11).verified_params == BibdParams{5, 2, 5, 11});
  CHECK(paley_design(27).verified_params == BibdParams{13, 6, 13, 27});

  CHECK_THROWS_AS(paley_design(5), parameter_error);   // 5 = 1 mod 4
  CHECK_THROWS_AS(paley_design(15), parameter_error);  // not a prime power
}

TEST_CASE("hadamard designs from Kronecker doubling") {
  CHECK(hadamard_design(1).verified_params == BibdParams{3, 1, 3, 7});
  CHECK(hadamard_design(2).verified_params == BibdParams{7, 3, 7, 15});
  CHECK(hadamard_design(3).verified_params == BibdParams{15, 7, 15, 31});
  CHECK_THROWS_AS(hadamard_design(0), parameter_error);
}

TEST_CASE("twin prime designs") {
  CHECK(twin_prime_design(3).verified_params == BibdParams{7, 3, 7, 15});
  CHECK(twin_prime_design(5).verified_params == BibdParams{17, 8, 17, 35});
  CHECK(twin_prime_design(9).verified_params == BibdParams{49, 24, 49, 99});
  CHECK_THROWS_AS(twin_prime_design(13), parameter_error);  // 15 = 3*5
  CHECK_THROWS_AS(twin_prime_design(4), parameter_error);   // even
}

TEST_CASE("menon designs from regular Hadamard powers") {
  const Design d1 = menon_design(1);
  CHECK(d1.verified_params == BibdParams{1, 0, 1, 4});  // lambda = 0 accepted
  CHECK(menon_design(2).verified_params == BibdParams{6, 2, 6, 16});
  CHECK(menon_design(3).verified_params == BibdParams{28, 12, 28, 64});
  CHECK_THROWS_AS(menon_design(0), parameter_error);
}

TEST_CASE("verify_bibd reports failures with names") {
  Design fano = hadamard_design(1);
  SUBCASE("dropping a block undercovers a pair") {
    fano.blocks.pop_back();
    const BibdCheck check = verify_bibd(fano);
    CHECK_FALSE(check.ok);
    CHECK(check.failure.find("pair") != std::string::npos);
  }
  SUBCASE("uneven block sizes are named") {
    fano.blocks[0].pop_back();
    const BibdCheck check = verify_bibd(fano);
    CHECK_FALSE(check.ok);
    CHECK(check.failure.find("size") != std::string::npos);
  }
  SUBCASE("fano itself verifies as (3,1,3,7)") {
    const BibdCheck check = verify_bibd(fano);
    CHECK(check.ok);
    CHECK(check.params == BibdParams{3, 1, 3, 7});
  }
}

TEST_CASE("separation profiles") {
  CHECK(separation_profile(hadamard_design(1)).theta == 4);
  CHECK(separation_profile(paley_design(11)).theta == 6);

  Design singletons;
  singletons.n = 2;
  singletons.blocks = {{0}, {1}};
  CHECK(separation_profile(singletons).theta == 2);

  Design lopsided;
  lopsided.n = 3;
  lopsided.blocks = {{0, 1}};
  const SeparationProfile profile = separation_profile(lopsided);
  CHECK_FALSE(profile.theta.has_value());
  CHECK(profile.counts.at({0, 1}) == 0);
  CHECK(profile.counts.at({0, 2}) == 1);
}

TEST_CASE("theta equals 2(r - lambda) on every constructed family") {
  for (const Design& d : {paley_design(7), paley_design(11), hadamard_design(1),
                          hadamard_design(2), twin_prime_design(3),
                          menon_design(1), menon_design(2)}) {
    const BibdParams& params = *d.verified_params;
    const SeparationProfile profile = separation_profile(d);
    REQUIRE(profile.theta.has_value());
    CHECK(*profile.theta == 2 * (params.r - params.lambda));
    // Symmetric families with enough separation for the representation step.
    CHECK(params.b == d.n);
    CHECK(2 * *profile.theta >= params.b);
  }
}

TEST_CASE("counting upper bound") {
  CHECK(design_upper_bound(paley_design(7)).bound == 8);
  CHECK(design_upper_bound(paley_design(11)).bound == 12);
  CHECK(design_upper_bound(menon_design(2)).bound == 16);
  CHECK(design_upper_bound(hadamard_design(1)).bound == 8);

  CHECK_FALSE(design_upper_bound(menon_design(1)).applicable);  // k = 1

  // All 2-subsets of [7]: a (7,2,1) design failing 4k(n-k) >= n(n-1).
  Design pairs;
  pairs.n = 7;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) pairs.blocks.push_back({i, j});
  }
  const BibdCheck check = verify_bibd(pairs);
  REQUIRE(check.ok);
  CHECK(check.params == BibdParams{2, 1, 6, 21});
  pairs.verified_params = check.params;
  CHECK_FALSE(design_upper_bound(pairs).applicable);

  Design unverified;
  unverified.n = 4;
  CHECK_THROWS_AS(design_upper_bound(unverified), parameter_error);
}

TEST_CASE("designs serialize canonically") {
  Design d = paley_design(7);
  for (const auto& block : d.blocks) {
    CHECK(std::is_sorted(block.begin(), block.end()));
  }
  CHECK(std::is_sorted(d.blocks.begin(), d.blocks.end()));
}
