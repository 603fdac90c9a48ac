#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qchrom/certify.hpp"

using namespace qchrom;

namespace {

const Certificate& row_containing(const std::vector<Certificate>& rows,
                                  const std::string& needle) {
  for (const Certificate& cert : rows) {
    if (cert.claim.find(needle) != std::string::npos) return cert;
  }
  REQUIRE_MESSAGE(false, "no certificate matches '" << needle << "'");
  static Certificate unreachable;
  return unreachable;
}

}  // namespace

TEST_CASE("table2 rows certify the advertised quantum chromatic numbers") {
  const auto rows = certify_table2({});
  const std::map<std::string, long> expected = {
      {"paley q=7", 8},   {"paley q=11", 12},   {"hadamard t=1", 8},
      {"hadamard t=2", 16}, {"twinprime q=3", 16}, {"menon a=1", 4},
      {"menon a=2", 16}};
  for (const auto& [needle, value] : expected) {
    const Certificate& cert = row_containing(rows, needle);
    CHECK(cert.verdict == Verdict::certified_equal);
    REQUIRE(cert.lower.has_value());
    REQUIRE(cert.upper.has_value());
    CHECK(cert.lower->value == value);
    CHECK(cert.upper->value == value);
    CHECK(cert.lower->internal);
    CHECK(cert.upper->internal);
  }
}

TEST_CASE("table2 bundles are byte-identical across runs") {
  const Json a = certificate_bundle("table2", certify_table2({}));
  const Json b = certificate_bundle("table2", certify_table2({}));
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("table2 markdown reproduces the parameter triples") {
  const std::string md = certificates_markdown("table2", certify_table2({}));
  CHECK(md.find("(7,3,1)") != std::string::npos);
  CHECK(md.find("(15,7,3)") != std::string::npos);
  CHECK(md.find("(16,6,2)") != std::string::npos);
  CHECK(md.find("certified-equal") != std::string::npos);
}

TEST_CASE("table3 verdicts and bounds per length") {
  const auto rows = certify_table3({});
  REQUIRE(rows.size() == 15);

  const std::map<int, std::pair<long, long>> expected_bounds = {
      {2, {2, 2}},   {3, {4, 4}},   {4, {4, 4}},   {5, {6, 8}},
      {6, {6, 8}},   {7, {8, 8}},   {8, {8, 8}},   {9, {10, 12}},
      {10, {10, 12}}, {11, {12, 12}}, {12, {12, 16}}, {13, {14, 16}},
      {14, {14, 16}}, {15, {16, 16}}, {16, {16, 16}}};
  const std::map<int, Verdict> expected_verdict = {
      {2, Verdict::certified_equal},  {3, Verdict::certified_equal},
      {4, Verdict::certified_equal},  {5, Verdict::bounded},
      {6, Verdict::bounded},          {7, Verdict::certified_equal},
      {8, Verdict::external_dependency}, {9, Verdict::bounded},
      {10, Verdict::bounded},         {11, Verdict::certified_equal},
      {12, Verdict::bounded},         {13, Verdict::bounded},
      {14, Verdict::bounded},         {15, Verdict::certified_equal},
      {16, Verdict::certified_equal}};

  for (int n = 2; n <= 16; ++n) {
    const Certificate& cert = rows[n - 2];
    CAPTURE(n);
    REQUIRE(cert.lower.has_value());
    REQUIRE(cert.upper.has_value());
    CHECK(cert.lower->value == expected_bounds.at(n).first);
    CHECK(cert.upper->value == expected_bounds.at(n).second);
    CHECK(cert.verdict == expected_verdict.at(n));
    CHECK(cert.lower->internal);
  }

  // The length-9..11 chain rests on verified embeddings plus the Paley(11)
  // representation, with everything internal.
  for (int n : {9, 10}) {
    const Certificate& cert = rows[n - 2];
    CHECK(cert.upper->internal);
    CHECK(cert.upper->provenance.find("H(11,2)") != std::string::npos);
  }
}

TEST_CASE("table1 families certify and external rows stay external") {
  Table1Options options;
  options.l_max = 2;
  options.t_max = 1;
  const auto rows = certify_table1(options);

  for (const char* needle : {"O_{4,2}", "O_{3,3}", "O_{6,3}", "G1(t=1)",
                             "G2(t=1)", "G3(l=1)", "G3(l=2)", "G5(l=2)",
                             "G6(l=2)", "L_2)) = 4"}) {
    const Certificate& cert = row_containing(rows, needle);
    CAPTURE(needle);
    CHECK(cert.verdict == Verdict::certified_equal);
  }

  for (const char* needle : {"K_n", "bipartite", "chi(G) = 3", "O_{4,4}",
                             "Z_p^{lp}", "F_q^{q^l}", "G4(p >= 4"}) {
    const Certificate& cert = row_containing(rows, needle);
    CAPTURE(needle);
    CHECK(cert.verdict == Verdict::external_dependency);
  }
}

TEST_CASE("certificate invariants reject dishonest rows") {
  Certificate bogus;
  bogus.claim = "nonsense";
  bogus.verdict = Verdict::certified_equal;
  CHECK_THROWS_AS(bogus.check_invariants(), invariant_violation);

  bogus.lower = BoundRecord{Int(4), "spectral", true};
  bogus.upper = BoundRecord{Int(5), "rep", true};
  CHECK_THROWS_AS(bogus.check_invariants(), invariant_violation);

  bogus.upper = BoundRecord{Int(4), "literature", false};
  CHECK_THROWS_AS(bogus.check_invariants(), invariant_violation);

  bogus.upper = BoundRecord{Int(4), "rep", true};
  CHECK_NOTHROW(bogus.check_invariants());
}

TEST_CASE("timing is excluded from canonical serialization") {
  Certificate cert;
  cert.claim = "demo";
  cert.timing_ms = 123.0;
  const Json without = certificate_to_json(cert);
  const Json with = certificate_to_json(cert, /*include_timing=*/true);
  CHECK_FALSE(without.contains("timing_ms"));
  CHECK(with.contains("timing_ms"));
}
