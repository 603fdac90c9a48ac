#include "qchrom/designs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qchrom/core.hpp"

namespace qchrom {

std::optional<std::pair<int, int>> prime_power_decompose(long long q) {
  if (q < 2) return std::nullopt;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int m = 0;
    long long rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(static_cast<int>(p), m);
  }
  return std::make_pair(static_cast<int>(q), 1);  // q itself prime
}

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw parameter_error("GaloisField: p must be prime");
  if (m < 1) throw parameter_error("GaloisField: m must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    if (q_ > (1LL << 30) / p) {
      throw parameter_error("GaloisField: order too large");
    }
    q_ *= p;
  }
  find_modulus();
  verify_multiplicative_order();
}

GaloisField GaloisField::of_order(long long q) {
  auto pm = prime_power_decompose(q);
  if (!pm) {
    throw parameter_error("GF(" + std::to_string(q) + "): not a prime power");
  }
  return GaloisField(pm->first, pm->second);
}

std::vector<int> GaloisField::coeffs(Elem a) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= static_cast<Elem>(p_);
  }
  return c;
}

GaloisField::Elem GaloisField::from_coeffs(const std::vector<int>& c) const {
  Elem a = 0;
  for (size_t i = c.size(); i-- > 0;) {
    int d = ((c[i] % p_) + p_) % p_;
    a = a * static_cast<Elem>(p_) + static_cast<Elem>(d);
  }
  return a;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += scale * static_cast<Elem>((a % p_ + b % p_) % p_);
    a /= static_cast<Elem>(p_);
    b /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += scale * static_cast<Elem>((p_ - a % p_) % p_);
    a /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  // Schoolbook product reduced modulo the field polynomial.
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = -modulus_tail * x^{d-m}
    for (int i = 0; i < m_; ++i) {
      prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
  }
  prod.resize(m_);
  return from_coeffs(prod);
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const {
  if (e < 0) throw parameter_error("GaloisField::pow: negative exponent");
  Elem r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool GaloisField::is_square(Elem a) const {
  if (q_ % 2 == 0) {
    throw parameter_error("is_square: quadratic residues need odd q");
  }
  if (a == 0) return false;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::vector<GaloisField::Elem> GaloisField::nonzero_squares() const {
  std::vector<Elem> sq;
  for (Elem a = 1; a < static_cast<Elem>(q_); ++a) {
    if (is_square(a)) sq.push_back(a);
  }
  return sq;
}

bool GaloisField::is_irreducible(const std::vector<int>& f) const {
  // f is monic of degree m, coefficients f[0..m-1] stored. Reject on any root,
  // then trial-divide by every monic polynomial of degree 2..m/2.
  auto eval = [&](int x) {
    long long acc = 1;  // leading monic term
    for (int i = m_ - 1; i >= 0; --i) acc = (acc * x + f[i]) % p_;
    return static_cast<int>(acc);
  };
  for (int x = 0; x < p_; ++x) {
    if (eval(x) == 0) return false;
  }
  for (int d = 2; 2 * d <= m_; ++d) {
    // All monic divisor candidates g = x^d + g[d-1] x^{d-1} + ... + g[0].
    std::vector<int> g(d, 0);
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p_;
    for (long long enc = 0; enc < count; ++enc) {
      long long v = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p_);
        v /= p_;
      }
      // Remainder of f mod g.
      std::vector<int> rem(f.begin(), f.end());
      rem.push_back(1);  // monic leading coefficient
      for (int deg = m_; deg >= d; --deg) {
        const int c = rem[deg];
        if (c == 0) continue;
        rem[deg] = 0;
        for (int i = 0; i < d; ++i) {
          rem[deg - d + i] = ((rem[deg - d + i] - c * g[i]) % p_ + p_) % p_;
        }
      }
      if (std::all_of(rem.begin(), rem.begin() + d,
                      [](int c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

void GaloisField::find_modulus() {
  if (m_ == 1) {
    modulus_ = {0};  // x
    return;
  }
  std::vector<int> f(m_);
  for (long long enc = 0; enc < q_; ++enc) {
    long long v = enc;
    for (int i = 0; i < m_; ++i) {
      f[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    if (is_irreducible(f)) {
      modulus_ = f;
      return;
    }
  }
  throw invariant_violation("no irreducible polynomial of degree " +
                            std::to_string(m_) + " over Z_" +
                            std::to_string(p_) + " found");
}

void GaloisField::verify_multiplicative_order() {
  // Some element must have order exactly q-1.
  long long group = q_ - 1;
  std::vector<long long> prime_factors;
  long long rest = group;
  for (long long d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);
  for (Elem g = 1; g < static_cast<Elem>(q_); ++g) {
    if (pow(g, group) != 1) {
      throw invariant_violation("GF(" + std::to_string(q_) +
                                "): element violates x^(q-1) = 1");
    }
    bool primitive = true;
    for (long long f : prime_factors) {
      if (pow(g, group / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return;
  }
  if (group > 0) {
    throw invariant_violation("GF(" + std::to_string(q_) +
                              "): multiplicative group has no generator");
  }
}

void Design::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

BibdCheck verify_bibd(const Design& d) {
  BibdCheck check;
  if (d.n < 2) {
    check.failure = "design needs at least 2 points";
    return check;
  }
  if (d.blocks.empty()) {
    check.failure = "design has no blocks";
    return check;
  }
  const int k = static_cast<int>(d.blocks[0].size());
  std::vector<int> replication(d.n, 0);
  std::vector<std::vector<int>> pair_count(d.n, std::vector<int>(d.n, 0));
  for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto& block = d.blocks[bi];
    if (static_cast<int>(block.size()) != k) {
      check.failure = "block " + std::to_string(bi) + " has size " +
                      std::to_string(block.size()) + ", expected " +
                      std::to_string(k);
      return check;
    }
    for (size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= d.n) {
        check.failure = "block " + std::to_string(bi) + " contains point " +
                        std::to_string(block[i]) + " outside [0," +
                        std::to_string(d.n) + ")";
        return check;
      }
      if (i > 0 && block[i] == block[i - 1]) {
        check.failure = "block " + std::to_string(bi) + " repeats point " +
                        std::to_string(block[i]);
        return check;
      }
      ++replication[block[i]];
      for (size_t j = i + 1; j < block.size(); ++j) {
        ++pair_count[block[i]][block[j]];
        ++pair_count[block[j]][block[i]];
      }
    }
  }
  const int lambda = pair_count[0][1];
  for (int i = 0; i < d.n; ++i) {
    for (int j = i + 1; j < d.n; ++j) {
      if (pair_count[i][j] != lambda) {
        check.failure = "pair {" + std::to_string(i) + "," + std::to_string(j) +
                        "} covered " + std::to_string(pair_count[i][j]) +
                        " times, expected " + std::to_string(lambda);
        return check;
      }
    }
  }
  const int r = replication[0];
  for (int i = 0; i < d.n; ++i) {
    if (replication[i] != r) {
      check.failure = "point " + std::to_string(i) + " lies in " +
                      std::to_string(replication[i]) + " blocks, expected " +
                      std::to_string(r);
      return check;
    }
  }
  const int b = static_cast<int>(d.blocks.size());
  if (static_cast<long long>(b) * k != static_cast<long long>(d.n) * r) {
    check.failure = "counting identity b*k = n*r fails";
    return check;
  }
  if (static_cast<long long>(lambda) * (d.n - 1) !=
      static_cast<long long>(r) * (k - 1)) {
    check.failure = "counting identity lambda*(n-1) = r*(k-1) fails";
    return check;
  }
  check.ok = true;
  check.params = BibdParams{k, lambda, r, b};
  return check;
}

SeparationProfile separation_profile(const Design& d) {
  SeparationProfile profile;
  profile.family_size = static_cast<int>(d.blocks.size());
  if (d.n < 2) return profile;
  std::vector<std::vector<int>> sep(d.n, std::vector<int>(d.n, 0));
  std::vector<char> in_block(d.n, 0);
  for (const auto& block : d.blocks) {
    for (int x : block) in_block[x] = 1;
    for (int i = 0; i < d.n; ++i) {
      for (int j = i + 1; j < d.n; ++j) {
        if (in_block[i] != in_block[j]) ++sep[i][j];
      }
    }
    for (int x : block) in_block[x] = 0;
  }
  bool constant = true;
  const int theta = sep[0][1];
  for (int i = 0; i < d.n && constant; ++i) {
    for (int j = i + 1; j < d.n; ++j) {
      if (sep[i][j] != theta) {
        constant = false;
        break;
      }
    }
  }
  if (constant) {
    profile.theta = theta;
  } else {
    for (int i = 0; i < d.n; ++i) {
      for (int j = i + 1; j < d.n; ++j) profile.counts[{i, j}] = sep[i][j];
    }
  }
  return profile;
}

namespace {

Design verified_or_throw(Design d, const BibdParams& expected,
                         const std::string& what) {
  d.canonicalize();
  BibdCheck check = verify_bibd(d);
  if (!check.ok) {
    throw invariant_violation(what + ": construction failed verification: " +
                              check.failure);
  }
  if (check.params != expected) {
    std::ostringstream os;
    os << what << ": verified (k=" << check.params.k
       << ", lambda=" << check.params.lambda << ", r=" << check.params.r
       << ", b=" << check.params.b << ") but expected (k=" << expected.k
       << ", lambda=" << expected.lambda << ", r=" << expected.r
       << ", b=" << expected.b << ")";
    throw invariant_violation(os.str());
  }
  d.verified_params = check.params;
  return d;
}

}  // namespace

Design paley_design(long long q) {
  if (!prime_power_decompose(q)) {
    throw parameter_error("paley_design: " + std::to_string(q) +
                          " is not a prime power");
  }
  if (q % 4 != 3) {
    throw parameter_error("paley_design: need q = 3 (mod 4), got " +
                          std::to_string(q));
  }
  GaloisField field = GaloisField::of_order(q);
  const auto squares = field.nonzero_squares();
  if (static_cast<long long>(squares.size()) != (q - 1) / 2) {
    throw invariant_violation("GF(" + std::to_string(q) + ") has " +
                              std::to_string(squares.size()) +
                              " nonzero squares, expected (q-1)/2");
  }
  Design d;
  d.n = static_cast<int>(q);
  for (GaloisField::Elem c = 0; c < static_cast<GaloisField::Elem>(q); ++c) {
    std::vector<int> block;
    block.reserve(squares.size());
    for (GaloisField::Elem x : squares) {
      block.push_back(static_cast<int>(field.add(x, c)));
    }
    d.blocks.push_back(std::move(block));
  }
  const int k = static_cast<int>((q - 1) / 2);
  const int lambda = static_cast<int>((q - 3) / 4);
  return verified_or_throw(std::move(d), BibdParams{k, lambda, k, d.n},
                           "paley_design(" + std::to_string(q) + ")");
}

Design hadamard_design(int t) {
  if (t < 1) throw parameter_error("hadamard_design: t must be >= 1");
  if (t > 20) throw parameter_error("hadamard_design: order 2^(t+2) too large");
  const int order = 1 << (t + 2);
  // Sylvester matrix by Kronecker doubling.
  std::vector<std::vector<int>> h(1, std::vector<int>(1, 1));
  while (static_cast<int>(h.size()) < order) {
    const int m = static_cast<int>(h.size());
    std::vector<std::vector<int>> next(2 * m, std::vector<int>(2 * m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        next[i][j] = h[i][j];
        next[i][j + m] = h[i][j];
        next[i + m][j] = h[i][j];
        next[i + m][j + m] = -h[i][j];
      }
    }
    h = std::move(next);
  }
  // Normalize so the first row and column are all +1 (Sylvester already is;
  // the pass keeps the derivation honest for any Hadamard input).
  for (int j = 0; j < order; ++j) {
    if (h[0][j] < 0) {
      for (int i = 0; i < order; ++i) h[i][j] = -h[i][j];
    }
  }
  for (int i = 0; i < order; ++i) {
    if (h[i][0] < 0) {
      for (int j = 0; j < order; ++j) h[i][j] = -h[i][j];
    }
  }
  // Drop row/column 0; points are the remaining rows, one block per column.
  Design d;
  d.n = order - 1;
  for (int j = 1; j < order; ++j) {
    std::vector<int> block;
    for (int i = 1; i < order; ++i) {
      if (h[i][j] == 1) block.push_back(i - 1);
    }
    d.blocks.push_back(std::move(block));
  }
  return verified_or_throw(
      std::move(d),
      BibdParams{(1 << (t + 1)) - 1, (1 << t) - 1, (1 << (t + 1)) - 1, order - 1},
      "hadamard_design(" + std::to_string(t) + ")");
}

Design twin_prime_design(long long q) {
  const auto pm1 = prime_power_decompose(q);
  const auto pm2 = prime_power_decompose(q + 2);
  if (!pm1 || !pm2 || q % 2 == 0) {
    throw parameter_error("twin_prime_design: " + std::to_string(q) + " and " +
                          std::to_string(q + 2) +
                          " must both be odd prime powers");
  }
  GaloisField f1 = GaloisField::of_order(q);
  GaloisField f2 = GaloisField::of_order(q + 2);
  const long long n = q * (q + 2);
  auto index = [&](GaloisField::Elem x, GaloisField::Elem y) {
    return static_cast<int>(static_cast<long long>(x) * (q + 2) + y);
  };
  // Twin prime power difference set: both coordinates nonzero with matching
  // quadratic character, together with the {(x, 0)} line.
  std::vector<std::pair<GaloisField::Elem, GaloisField::Elem>> base;
  for (GaloisField::Elem x = 1; x < static_cast<GaloisField::Elem>(q); ++x) {
    for (GaloisField::Elem y = 1; y < static_cast<GaloisField::Elem>(q + 2); ++y) {
      if (f1.is_square(x) == f2.is_square(y)) base.emplace_back(x, y);
    }
  }
  for (GaloisField::Elem x = 0; x < static_cast<GaloisField::Elem>(q); ++x) {
    base.emplace_back(x, 0);
  }
  Design d;
  d.n = static_cast<int>(n);
  for (GaloisField::Elem u = 0; u < static_cast<GaloisField::Elem>(q); ++u) {
    for (GaloisField::Elem v = 0; v < static_cast<GaloisField::Elem>(q + 2); ++v) {
      std::vector<int> block;
      block.reserve(base.size());
      for (const auto& [x, y] : base) {
        block.push_back(index(f1.add(x, u), f2.add(y, v)));
      }
      d.blocks.push_back(std::move(block));
    }
  }
  const int k = static_cast<int>((n - 1) / 2);
  const int lambda = static_cast<int>((n - 3) / 4);
  return verified_or_throw(std::move(d), BibdParams{k, lambda, k, d.n},
                           "twin_prime_design(" + std::to_string(q) + ")");
}

Design menon_design(int a) {
  if (a < 1) throw parameter_error("menon_design: a must be >= 1");
  if (a > 7) throw parameter_error("menon_design: order 4^a too large");
  // Base regular Hadamard matrix of order 4 (every row sum +2); Kronecker
  // powers stay regular with row sum 2^a.
  const std::vector<std::vector<int>> base = {
      {-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}};
  std::vector<std::vector<int>> h(1, std::vector<int>(1, 1));
  for (int step = 0; step < a; ++step) {
    const int m = static_cast<int>(h.size());
    std::vector<std::vector<int>> next(4 * m, std::vector<int>(4 * m));
    for (int bi = 0; bi < 4; ++bi) {
      for (int bj = 0; bj < 4; ++bj) {
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            next[bi * m + i][bj * m + j] = base[bi][bj] * h[i][j];
          }
        }
      }
    }
    h = std::move(next);
  }
  const int order = static_cast<int>(h.size());  // 4^a = 4s^2, s = 2^{a-1}
  const int s = 1 << (a - 1);
  Design d;
  d.n = order;
  for (int j = 0; j < order; ++j) {
    std::vector<int> block;
    for (int i = 0; i < order; ++i) {
      if (h[i][j] == -1) block.push_back(i);
    }
    d.blocks.push_back(std::move(block));
  }
  return verified_or_throw(
      std::move(d),
      BibdParams{2 * s * s - s, s * s - s, 2 * s * s - s, order},
      "menon_design(" + std::to_string(a) + ")");
}

DesignBound design_upper_bound(const Design& d) {
  if (!d.verified_params) {
    throw parameter_error("design_upper_bound: design is not verified");
  }
  DesignBound out;
  const BibdParams& params = *d.verified_params;
  const long long n = d.n, k = params.k;
  if (k <= 1) return out;  // the Observation's ratio is undefined at k = 1
  if (4 * k * (n - k) < n * (n - 1)) return out;
  out.applicable = true;
  const Int numerator = Int(4) * params.lambda * Int(static_cast<long>(n - k));
  const Int denominator = Int(static_cast<long>(k - 1));
  if (divides(denominator, numerator)) {
    out.bound = numerator / denominator;
    out.exact = true;
  } else {
    out.bound = ceil_div(numerator, denominator);
    out.exact = false;
  }
  return out;
}

}  // namespace qchrom
