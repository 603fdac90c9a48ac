#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchrom/core.hpp"

namespace qchrom {

// Cay(Z_p^n, union of type classes). The generator set must be closed under
// negation as a union of type classes (type (t_0,...,t_{p-1}) together with
// (t_0, t_{p-1}, ..., t_1)), which makes the graph undirected and every
// eigenvalue a rational integer.
class CayleySpec {
 public:
  CayleySpec(int p, int n, std::vector<TypeVector> generator_types);

  int p() const { return p_; }
  int n() const { return n_; }
  bool p_is_prime() const { return p_prime_; }
  const std::vector<TypeVector>& generators() const { return generators_; }
  bool has_generator(const TypeVector& t) const;

  Int degree() const;        // sum of |type class| over generator types
  Int vertex_count() const;  // p^n

  std::string to_string() const;

  friend bool operator==(const CayleySpec&, const CayleySpec&) = default;

 private:
  int p_ = 2;
  int n_ = 1;
  bool p_prime_ = false;
  std::vector<TypeVector> generators_;  // sorted, unique
};

// Named graph families. Weights build p=2 specs from Hamming-weight classes.
CayleySpec weight_class_spec(int n, const std::vector<int>& weights);
CayleySpec hamming_distance2_spec(int n);          // H(n,2) = Cay(Z_2^n, L_2)
CayleySpec balanced_generator_spec(int p, int n);  // Cay(Z_p^n, (n/p,...,n/p))
CayleySpec g1_spec(int t);  // Cay(Z_2^{4t-1}, L_{2t-1} u L_{2t})
CayleySpec g2_spec(int t);  // Cay(Z_2^{4t-2}, L_{2t-1} u L_{2t})
CayleySpec g3_spec(int l);  // Cay(Z_3^{3l-1}, (l-1,l,l) u (l,l-1,l) u (l,l,l-1))
CayleySpec g5_spec(int l);  // Cay(Z_3^{3l-1}, (l-1,l,l))
CayleySpec g6_spec(int l);  // Cay(Z_3^{3l-2}, (l-2,l,l) u (l-1,l-1,l) u (l-1,l,l-1))

struct SpectrumEntry {
  TypeVector type;
  Int eigenvalue;
  Int multiplicity;  // multinomial(n, type)
};

// Full spectrum keyed by ordered eigenvector type. `certified` is false only
// for floating-point oracle runs at non-prime p.
struct SpectrumReport {
  int p = 0;
  int n = 0;
  std::vector<TypeVector> generators;
  std::vector<SpectrumEntry> entries;  // lexicographic by type
  Int lambda_max, lambda_min;
  TypeVector lambda_max_witness, lambda_min_witness;
  Int degree;
  bool certified = true;

  // Trace identities: sum m = p^n, sum m*lambda = 0,
  // sum m*lambda^2 = p^n * degree. Throws invariant_violation on failure.
  void validate() const;

  const SpectrumEntry* find(const TypeVector& t) const;
};

// How many ordered types full_spectrum may enumerate before refusing.
struct TypeBudget {
  Int max_ordered_types = 10'000'000;
};

// Counts, for a fixed vector v of type v_type, how many s of type gen_type
// achieve each dot-product residue v.s = a in Z_p. Pure convolution over the
// symbol classes of v; never enumerates p^n vectors. Works for any p >= 2.
std::vector<Int> character_count_by_residue(const TypeVector& v_type,
                                            const TypeVector& gen_type);

// sum over s of type gen_type of zeta_p^{v.s}, exact. Requires prime p.
Cyclotomic character_sum_by_type(const TypeVector& v_type,
                                 const TypeVector& gen_type);

// Eigenvalue of the character indexed by any vector of type v_type; asserts
// the cyclotomic sum reduces to a rational integer.
Int eigenvalue_of_type(const CayleySpec& spec, const TypeVector& v_type);

// Coefficient of x^{t0} y^{t1} z^{t2} in (x^3 + y^3 + z^3 - 3xyz)^l.
Int balanced_coefficient(int l, const TypeVector& t);

SpectrumReport full_spectrum(const CayleySpec& spec,
                             const TypeBudget& budget = {});

// ceil(1 - lambda_max/lambda_min), exact. Requires lambda_min < 0.
Int spectral_lower_bound(const SpectrumReport& report);

// Complete weight enumerator of a ternary code: coefficient A[(r,s,t)] counts
// codewords of type (r,s,t).
struct WeightEnumerator {
  int n = 0;
  std::map<TypeVector, Int> coeffs;

  Int coeff(const TypeVector& t) const;
  Int total() const;  // sum of coefficients = |C|

  static WeightEnumerator from_codewords(
      int n, const std::vector<std::vector<int>>& words);

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

// (1/|C|) A(x+y+z, x+zy+z^2 z, x+z^2 y+z z) with zeta_3 arithmetic, expanded
// exactly. Throws parameter_error if any resulting coefficient fails to be a
// non-negative rational integer (i.e. the input was not the enumerator of a
// linear code of the claimed size).
WeightEnumerator macwilliams_transform(const WeightEnumerator& enumerator,
                                       const Int& code_size);

// Both sides of the duality identity
//   binom(n;S) * A_{dual(S)}[T] = binom(n;T) * A_{dual(T)}[S],
// computed independently from character-sum counts. Equality is the contract.
std::pair<Int, Int> duality_check(int n, const TypeVector& s,
                                  const TypeVector& t);

struct ExtremalViolation {
  TypeVector type;
  Int lambda;
  Int reference;  // the bound that was exceeded
  std::string claim;
};

// Per-n verdict for the two extremal-eigenvalue theorems over O_{3l,3}.
struct ExtremalVerdict {
  int l = 0;
  int n = 0;
  bool pass = false;
  bool pass_smallest = true;  // lambda(1,1,n-2) has the second largest |.|
  bool pass_third = true;     // lambda(2,2,n-4) has the third largest |.|
  Int lambda_largest;             // lambda(0,0,n) = multinomial(n; l,l,l)
  Int lambda_second_abs;          // lambda(1,1,n-2), the smallest eigenvalue
  std::optional<Int> lambda_third_abs;  // lambda(2,2,n-4), defined for n >= 9
  TypeVector second_witness, third_witness;
  std::vector<ExtremalViolation> violations;
  int engine_cross_checked_types = 0;
};

struct ExtremalOptions {
  // Additionally recompute every lambda(T) through the character-sum engine
  // and compare (slower; exercised for small l).
  bool cross_check_engine = false;
};

// Enumerates all canonical types of Z_3^{3l} and checks, with exact
// arithmetic: lambda(1,1,n-2) = -binom(n;l,l,l)/(n-1) is the second largest
// absolute eigenvalue, and (n >= 9) lambda(2,2,n-4) =
// 2 binom(n;l,l,l)/((n-1)(n-2)) the third largest. Violations are reported,
// not thrown.
ExtremalVerdict verify_extremal_claims(int l, const ExtremalOptions& opts = {});

struct AppendixClaimVerdict {
  int l = 0;
  int n = 0;
  bool pass = false;
  long long cases_checked = 0;
  std::vector<std::string> failures;
};

// The closed-form base-case inequalities behind the extremal theorems, checked
// as exact integer comparisons for every canonical type with t_0 <= 2, plus
// the matching closed forms for lambda on those types.
AppendixClaimVerdict verify_appendix_claims(int l);

}  // namespace qchrom
