#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchrom/json_io.hpp"
#include "qchrom/oracle.hpp"

namespace qchrom {

inline constexpr const char* kEngineVersion = "qchrom 0.1.0";

// certified-equal: lower = upper, both produced in-process.
// bounded: both bounds in-process but not equal.
// external-dependency: the claimed value leans on a cited result.
enum class Verdict { certified_equal, bounded, external_dependency };
std::string verdict_name(Verdict v);

struct BoundRecord {
  Int value;
  std::string provenance;
  bool internal = false;
};

struct Certificate {
  std::string claim;
  std::optional<BoundRecord> lower, upper;
  Verdict verdict = Verdict::external_dependency;
  std::vector<std::string> notes;
  double timing_ms = 0.0;

  // certified-equal demands equal bounds with both provenances internal.
  void check_invariants() const;
};

// Timing is serialized only on request so that reruns stay byte-identical.
Json certificate_to_json(const Certificate& cert, bool include_timing = false);
Json certificate_bundle(const std::string& table,
                        const std::vector<Certificate>& rows,
                        bool include_timing = false);

struct Table1Options {
  int l_max = 3;
  int t_max = 2;
  std::string family;  // empty = every family
  OracleBudget oracle_budget;
};
std::vector<Certificate> certify_table1(const Table1Options& options = {});

struct Table2Options {
  std::vector<long long> paley_qs = {7, 11};
  std::vector<int> hadamard_ts = {1, 2};
  std::vector<long long> twinprime_qs = {3};
  std::vector<int> menon_as = {1, 2};
};
std::vector<Certificate> certify_table2(const Table2Options& options = {});

struct Table3Options {
  int n_min = 2;
  int n_max = 16;
  OracleBudget oracle_budget;
};
std::vector<Certificate> certify_table3(const Table3Options& options = {});

std::string certificates_markdown(const std::string& table,
                                  const std::vector<Certificate>& rows);

}  // namespace qchrom
