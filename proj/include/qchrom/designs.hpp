#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchrom/bigint.hpp"
#include "qchrom/errors.hpp"

namespace qchrom {

// q = p^m for prime p, or nothing.
std::optional<std::pair<int, int>> prime_power_decompose(long long q);

// GF(p^m) with elements encoded as radix-p coefficient vectors packed into an
// index in [0, q). The modulus is the lexicographically first monic
// irreducible polynomial of degree m (by the packed value of its lower
// coefficients), so designs built on top are reproducible across runs.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(int p, int m);
  static GaloisField of_order(long long q);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  long long order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;

  // Nonzero quadratic residues, via a^((q-1)/2) = 1. Odd q only.
  bool is_square(Elem a) const;
  std::vector<Elem> nonzero_squares() const;

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;

 private:
  bool is_irreducible(const std::vector<int>& f) const;
  void find_modulus();
  void verify_multiplicative_order();

  int p_, m_;
  long long q_;
  std::vector<int> modulus_;  // monic, coefficients c_0..c_{m-1} stored
};

struct BibdParams {
  int k = 0;
  int lambda = 0;
  int r = 0;
  int b = 0;

  friend bool operator==(const BibdParams&, const BibdParams&) = default;
};

// Point set is {0, ..., n-1}; blocks are kept sorted, and the block list
// itself is sorted so serialization is canonical. Equality of designs is
// multiset equality of blocks.
struct Design {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::optional<BibdParams> verified_params;

  void canonicalize();  // sort each block, then the block list
};

struct BibdCheck {
  bool ok = false;
  BibdParams params;
  std::string failure;  // names the offending pair/block when !ok
};

// Uniform block size, uniform pair coverage, uniform replication, and the
// standard counting identities b*k = n*r, lambda*(n-1) = r*(k-1).
// lambda = 0 designs are accepted. Failures are reports, not exceptions.
BibdCheck verify_bibd(const Design& d);

// Blocks containing exactly one point of each pair; theta is set when the
// count is the same for every pair.
struct SeparationProfile {
  int family_size = 0;
  std::optional<int> theta;
  std::map<std::pair<int, int>, int> counts;  // filled when non-constant
};

SeparationProfile separation_profile(const Design& d);

// The four symmetric-BIBD families. Every constructor verifies its output
// against the advertised parameters before returning.
Design paley_design(long long q);       // (q, (q-1)/2, (q-3)/4), q = 3 mod 4
Design hadamard_design(int t);          // (2^{t+2}-1, 2^{t+1}-1, 2^t-1)
Design twin_prime_design(long long q);  // (q^2+2q, (q^2+2q-1)/2, (q^2+2q-3)/4)
Design menon_design(int a);             // (4s^2, 2s^2-s, s^2-s), s = 2^{a-1}

struct DesignBound {
  bool applicable = false;
  Int bound;          // 4*lambda*(n-k)/(k-1) when applicable
  bool exact = true;  // false if the division needed a ceiling
};

// Upper bound on chi_q(H(n,2)) from a verified design with 4k(n-k) >= n(n-1).
DesignBound design_upper_bound(const Design& d);

}  // namespace qchrom
