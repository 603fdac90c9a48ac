#include "qchrom/core.hpp"

#include <algorithm>
#include <sstream>

namespace qchrom {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) {
    throw parameter_error("type vector needs p >= 2 entries, got " +
                          std::to_string(counts_.size()));
  }
  n_ = 0;
  for (int c : counts_) {
    if (c < 0) throw parameter_error("type vector entries must be >= 0");
    n_ += c;
  }
}

TypeVector TypeVector::canonical() const {
  std::vector<int> c = counts_;
  std::sort(c.begin(), c.end());
  return TypeVector(std::move(c));
}

bool TypeVector::is_canonical() const {
  return std::is_sorted(counts_.begin(), counts_.end());
}

TypeVector TypeVector::negated() const {
  std::vector<int> c(counts_.size());
  c[0] = counts_[0];
  for (size_t k = 1; k < counts_.size(); ++k) c[k] = counts_[counts_.size() - k];
  return TypeVector(std::move(c));
}

std::string TypeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << ')';
  return os.str();
}

TypeVector type_of(std::span<const int> v, int p) {
  if (p < 2) throw parameter_error("type_of: p must be >= 2");
  std::vector<int> counts(p, 0);
  for (int x : v) {
    if (x < 0 || x >= p) {
      throw parameter_error("type_of: entry " + std::to_string(x) +
                            " out of range [0," + std::to_string(p) + ")");
    }
    ++counts[x];
  }
  return TypeVector(std::move(counts));
}

namespace {

void enumerate_rec(int parts_left, int remaining, int lo, bool canonical,
                   std::vector<int>& acc,
                   const std::function<void(const TypeVector&)>& visit) {
  if (parts_left == 1) {
    if (remaining >= lo) {
      acc.push_back(remaining);
      visit(TypeVector(acc));
      acc.pop_back();
    }
    return;
  }
  for (int t = lo; t <= remaining; ++t) {
    if (canonical && t * parts_left > remaining) break;
    acc.push_back(t);
    enumerate_rec(parts_left - 1, remaining - t, canonical ? t : 0, canonical,
                  acc, visit);
    acc.pop_back();
  }
}

}  // namespace

void for_each_type(int p, int n, bool canonical,
                   const std::function<void(const TypeVector&)>& visit) {
  if (p < 2) throw parameter_error("for_each_type: p must be >= 2");
  if (n < 0) throw parameter_error("for_each_type: n must be >= 0");
  std::vector<int> acc;
  acc.reserve(p);
  enumerate_rec(p, n, 0, canonical, acc, visit);
}

std::vector<TypeVector> enumerate_types(int p, int n, bool canonical) {
  std::vector<TypeVector> out;
  for_each_type(p, n, canonical, [&](const TypeVector& t) { out.push_back(t); });
  return out;
}

Int factorial(int n) {
  if (n < 0) throw parameter_error("factorial of negative argument");
  thread_local std::vector<Int> cache{1_mpz};
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int multinomial(int n, const TypeVector& parts) {
  if (parts.n() != n) {
    throw parameter_error("multinomial: parts sum to " +
                          std::to_string(parts.n()) + ", expected " +
                          std::to_string(n));
  }
  Int r = factorial(n);
  for (int t : parts.counts()) {
    if (t > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(t).get_mpz_t());
  }
  return r;
}

Int ordered_type_count(int p, int n) { return binomial(n + p - 1, p - 1); }

Int krawtchouk(int n, int r, int w) {
  if (n < 0 || r < 0 || w < 0 || r > n || w > n) {
    throw parameter_error("krawtchouk: need 0 <= r, w <= n");
  }
  Int sum = 0;
  for (int j = std::max(0, r - (n - w)); j <= std::min(r, w); ++j) {
    Int term = binomial(w, j) * binomial(n - w, r - j);
    if (j & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

Cyclotomic::Cyclotomic(int p) : p_(p), c_(p - 1) {
  if (!is_prime(p)) throw parameter_error("Cyclotomic: p must be prime");
}

Cyclotomic::Cyclotomic(int p, Int rational) : Cyclotomic(p) {
  c_[0] = std::move(rational);
}

Cyclotomic Cyclotomic::zeta_power(int p, long exponent) {
  Cyclotomic z(p);
  z.add_scaled_zeta(1, exponent);
  return z;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

bool Cyclotomic::is_rational_integer() const {
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const Int& v) { return v == 0; });
}

const Int& Cyclotomic::rational_value() const {
  if (!is_rational_integer()) {
    throw invariant_violation("cyclotomic value is not a rational integer: " +
                              to_string());
  }
  return c_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  Cyclotomic r(p_);
  for (int e = 0; e < p_ - 1; ++e) {
    if (c_[e] != 0) r.add_scaled_zeta(c_[e], (p_ - e) % p_);
  }
  return r;
}

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
  if (p_ != o.p_) {
    throw parameter_error("cyclotomic arithmetic across different p");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same_field(o);
  for (int i = 0; i < p_ - 1; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same_field(o);
  for (int i = 0; i < p_ - 1; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  require_same_field(o);
  // Convolve, then fold exponents >= p-1 back into the basis.
  std::vector<Int> raw(2 * p_ - 3);
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < p_ - 1; ++j) {
      if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
    }
  }
  std::fill(c_.begin(), c_.end(), 0);
  for (int e = 0; e < static_cast<int>(raw.size()); ++e) {
    if (raw[e] != 0) add_scaled_zeta(raw[e], e);
  }
  return *this;
}

Cyclotomic& Cyclotomic::add_scaled_zeta(const Int& scale, long exponent) {
  long e = exponent % p_;
  if (e < 0) e += p_;
  if (e <= p_ - 2) {
    c_[e] += scale;
  } else {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (int i = 0; i < p_ - 1; ++i) c_[i] -= scale;
  }
  return *this;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e < p_ - 1; ++e) {
    if (c_[e] == 0) continue;
    if (!first) os << " + ";
    os << dec(c_[e]);
    if (e >= 1) os << "*z^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qchrom
