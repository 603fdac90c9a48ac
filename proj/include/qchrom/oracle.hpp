#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qchrom/spectrum.hpp"

namespace qchrom {

// Brute-force work cap, counted in character-generator products (p^n * |S|).
struct OracleBudget {
  std::uint64_t max_products = std::uint64_t{1} << 24;
};

// Desk-scale packed vector of Z_p^n: one machine word, bit-packed for p = 2
// and radix-packed base-p digits otherwise. Round-trips with type_of.
class DenseGroupVector {
 public:
  DenseGroupVector(int p, int n, std::uint64_t packed = 0);
  static DenseGroupVector from_digits(int p, std::span<const int> digits);

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t packed() const { return packed_; }

  int digit(int i) const;
  std::vector<int> digits() const;
  TypeVector type() const;

  DenseGroupVector add(const DenseGroupVector& o) const;
  DenseGroupVector negated() const;
  int dot(const DenseGroupVector& o) const;  // residue mod p

  friend bool operator==(const DenseGroupVector&, const DenseGroupVector&) = default;

 private:
  int p_ = 2;
  int n_ = 0;
  std::uint64_t packed_ = 0;
};

// Direct character sums over every vertex of Z_p^n, grouped by type with a
// within-type constancy assertion. Exact for prime p; for non-prime p the
// sums run in complex doubles with tolerance 1e-6 and the report is marked
// not certified.
SpectrumReport brute_spectrum(const CayleySpec& spec,
                              const OracleBudget& budget = {});

// Visits each unordered edge {u, u+s} exactly once (as packed indices) until
// the visitor returns false.
void for_each_edge(const CayleySpec& spec, const OracleBudget& budget,
                   const std::function<bool(std::uint64_t, std::uint64_t)>& visit);
std::vector<std::pair<std::uint64_t, std::uint64_t>> adjacency_pairs(
    const CayleySpec& spec, const OracleBudget& budget = {});

struct HomomorphismVerdict {
  bool pass = true;
  // First violating edge, as digit vectors, when pass is false.
  std::vector<int> src_u, src_w, image_u, image_w;
};

// Checks that every edge of src maps to an edge of dst under the given vertex
// map (digits -> digits). Violations are verdicts, not exceptions.
HomomorphismVerdict check_homomorphism(
    const std::function<std::vector<int>(const std::vector<int>&)>& map,
    const CayleySpec& src, const CayleySpec& dst,
    const OracleBudget& budget = {});

// Proper 2-coloring of the graph if one exists (all components bipartite).
std::optional<std::vector<std::uint8_t>> two_coloring(
    const CayleySpec& spec, const OracleBudget& budget = {});

}  // namespace qchrom
