#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qchrom/bigint.hpp"
#include "qchrom/errors.hpp"

namespace qchrom {

bool is_prime(long long v);

// Ordered non-negative p-partition of n: counts[i] = number of coordinates of
// a vector in Z_p^n equal to i. Every spectrum in this library is indexed by
// these, never by the p^n individual vectors. Stored ordered; canonical()
// (sorted ascending) is an explicit operation so that symmetry under
// reordering stays a testable property.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> counts);
  TypeVector(std::initializer_list<int> counts)
      : TypeVector(std::vector<int>(counts)) {}

  int p() const { return static_cast<int>(counts_.size()); }
  int n() const { return n_; }
  int count(int symbol) const { return counts_.at(symbol); }
  const std::vector<int>& counts() const { return counts_; }

  TypeVector canonical() const;
  bool is_canonical() const;

  // Type of -v for v of this type: (t_0, t_{p-1}, ..., t_1).
  TypeVector negated() const;

  // (n, 0, ..., 0) -- the type of the zero vector.
  bool is_zero_type() const { return counts_.empty() || counts_[0] == n_; }

  std::string to_string() const;

  friend auto operator<=>(const TypeVector& a, const TypeVector& b) {
    return a.counts_ <=> b.counts_;
  }
  friend bool operator==(const TypeVector& a, const TypeVector& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<int> counts_;
  int n_ = 0;
};

// Counts symbol occurrences; entries must lie in [0, p).
TypeVector type_of(std::span<const int> v, int p);

// Visits every ordered p-partition of n in lexicographic order; with
// canonical=true only the ascending ones. The ordered case visits exactly
// binom(n+p-1, p-1) types.
void for_each_type(int p, int n, bool canonical,
                   const std::function<void(const TypeVector&)>& visit);
std::vector<TypeVector> enumerate_types(int p, int n, bool canonical = false);

Int factorial(int n);
Int binomial(int n, int k);
Int multinomial(int n, const TypeVector& parts);
Int ordered_type_count(int p, int n);  // binom(n+p-1, p-1)

// Krawtchouk value K_r(w) over Z_2^n: sum_j (-1)^j C(w,j) C(n-w, r-j), the
// eigenvalue of Cay(Z_2^n, L_r) at weight-w characters.
Int krawtchouk(int n, int r, int w);

// Exact element of Z[zeta_p] (p prime) in the basis {1, zeta, ..., zeta^{p-2}},
// reduced via 1 + zeta + ... + zeta^{p-1} = 0. Values are immutable in spirit:
// the mutating operators exist only so accumulation loops stay cheap.
class Cyclotomic {
 public:
  explicit Cyclotomic(int p);
  Cyclotomic(int p, Int rational);
  static Cyclotomic zeta_power(int p, long exponent);

  int p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational_integer() const;  // coeffs[1..] all zero
  const Int& rational_value() const;

  Cyclotomic conjugate() const;  // zeta -> zeta^{-1}

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& add_scaled_zeta(const Int& scale, long exponent);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void require_same_field(const Cyclotomic& o) const;

  int p_ = 2;
  std::vector<Int> c_;  // length p-1
};

}  // namespace qchrom
