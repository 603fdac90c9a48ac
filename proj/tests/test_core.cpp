#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchrom/core.hpp"

using namespace qchrom;

TEST_CASE("multinomial on exact partitions") {
  CHECK(multinomial(6, TypeVector{2, 2, 2}) == 90);
  CHECK(multinomial(3, TypeVector{1, 1, 1}) == 6);
  CHECK(multinomial(7, TypeVector{0, 7}) == 1);
  CHECK(multinomial(90, TypeVector{30, 30, 30}) ==
        Int("79607789567531236214574346454361782651136"));
  CHECK_THROWS_AS(multinomial(5, TypeVector{2, 2}), parameter_error);
}

TEST_CASE("type enumeration matches the small cases") {
  CHECK(enumerate_types(2, 2) ==
        std::vector<TypeVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(enumerate_types(3, 3, /*canonical=*/true) ==
        std::vector<TypeVector>{{0, 0, 3}, {0, 1, 2}, {1, 1, 1}});
  CHECK(enumerate_types(3, 0) == std::vector<TypeVector>{{0, 0, 0}});
}

TEST_CASE("ordered type count and total class size") {
  for (int p : {2, 3, 5}) {
    for (int n : {0, 1, 4, 7}) {
      const auto types = enumerate_types(p, n);
      CHECK(Int(static_cast<long>(types.size())) == ordered_type_count(p, n));
      Int total = 0;
      Int expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), p, n);
      for (const TypeVector& t : types) total += multinomial(n, t);
      CHECK(total == expected);
    }
  }
}

TEST_CASE("canonical enumeration is the sorted subset") {
  const auto ordered = enumerate_types(3, 6);
  const auto canonical = enumerate_types(3, 6, true);
  size_t sorted_count = 0;
  for (const TypeVector& t : ordered) {
    if (t.is_canonical()) {
      CHECK(t == canonical[sorted_count]);
      ++sorted_count;
    }
  }
  CHECK(sorted_count == canonical.size());
}

TEST_CASE("type_of counts symbols") {
  CHECK(type_of(std::vector<int>{1, 2, 0, 2, 1}, 3) == TypeVector{1, 2, 2});
  CHECK(type_of(std::vector<int>{0, 0, 0, 0}, 2) == TypeVector{4, 0});
  CHECK(type_of(std::vector<int>{1, 1, 1}, 3) == TypeVector{0, 3, 0});
  CHECK_THROWS_AS(type_of(std::vector<int>{0, 3}, 3), parameter_error);
  CHECK_THROWS_AS(type_of(std::vector<int>{-1}, 2), parameter_error);
}

TEST_CASE("TypeVector normal forms") {
  const TypeVector t{4, 0, 2};
  CHECK(t.canonical() == TypeVector{0, 2, 4});
  CHECK_FALSE(t.is_canonical());
  CHECK(t.canonical().is_canonical());
  CHECK(TypeVector{1, 2, 3}.negated() == TypeVector{1, 3, 2});
  CHECK(TypeVector{2, 5, 0, 1}.negated() == TypeVector{2, 1, 0, 5});
  CHECK(TypeVector{3, 0, 0}.is_zero_type());
  CHECK_FALSE(TypeVector{2, 1, 0}.is_zero_type());
  CHECK_THROWS_AS((TypeVector{-1, 1}), parameter_error);
}

TEST_CASE("krawtchouk values and closed forms") {
  CHECK(krawtchouk(6, 2, 0) == 15);
  CHECK(krawtchouk(6, 2, 1) == 5);
  CHECK(krawtchouk(6, 2, 3) == -3);
  CHECK_THROWS_AS(krawtchouk(4, 5, 0), parameter_error);
  CHECK_THROWS_AS(krawtchouk(4, 1, 5), parameter_error);

  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(krawtchouk(n, r, 0) == binomial(n, r));
      const Int at_n = krawtchouk(n, r, n);
      CHECK((r % 2 == 0 ? at_n : -at_n) == binomial(n, r));
    }
    // K_2(w) = (n-2w)^2/2 - n/2
    if (n >= 2) {
      for (int w = 0; w <= n; ++w) {
        const long d = n - 2 * w;
        CHECK(2 * krawtchouk(n, 2, w) == Int(d * d - n));
      }
    }
  }
}

TEST_CASE("cyclotomic arithmetic in prime fields") {
  for (int p : {2, 3, 5, 7}) {
    Cyclotomic sum(p);
    for (int e = 0; e < p; ++e) sum += Cyclotomic::zeta_power(p, e);
    CHECK(sum.is_zero());

    // zeta^p = 1
    Cyclotomic power(p, 1);
    for (int i = 0; i < p; ++i) power *= Cyclotomic::zeta_power(p, 1);
    CHECK(power == Cyclotomic(p, 1));

    // conjugation inverts the root
    const Cyclotomic z = Cyclotomic::zeta_power(p, 1);
    CHECK(z * z.conjugate() == Cyclotomic(p, 1));
  }
  CHECK_THROWS_AS(Cyclotomic(4), parameter_error);
  CHECK_THROWS_AS(Cyclotomic(3, 1) + Cyclotomic(5, 1), parameter_error);
}

TEST_CASE("p=3 identities") {
  const Cyclotomic one(3, 1);
  const Cyclotomic z = Cyclotomic::zeta_power(3, 1);
  const Cyclotomic z2 = Cyclotomic::zeta_power(3, 2);
  CHECK((one + z) * (one + z2) == one);
  CHECK(z * z == z2);
  CHECK_FALSE(z.is_rational_integer());
  CHECK((z + z2 + one + one).is_rational_integer());
  CHECK((z + z2 + one + one).rational_value() == 1);
  CHECK_THROWS_AS(z.rational_value(), invariant_violation);
}

namespace {

// Reference multiplication in Z[x]/(x^p - 1), reduced at the end.
Cyclotomic reference_product(int p, const std::vector<long>& a,
                             const std::vector<long>& b) {
  std::vector<long> conv(2 * p, 0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) conv[(i + j) % p] += a[i] * b[j];
  }
  Cyclotomic out(p);
  for (int e = 0; e < p; ++e) out.add_scaled_zeta(Int(conv[e]), e);
  return out;
}

}  // namespace

TEST_CASE("multiplication commutes with exponent reduction") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long> a(p), b(p);
      for (int i = 0; i < p; ++i) {
        a[i] = coeff(rng);
        b[i] = coeff(rng);
      }
      Cyclotomic ra(p), rb(p);
      for (int e = 0; e < p; ++e) {
        ra.add_scaled_zeta(Int(a[e]), e);
        rb.add_scaled_zeta(Int(b[e]), e);
      }
      CHECK(ra * rb == reference_product(p, a, b));
    }
  }
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(27));
}
