#include "qchrom/oracle.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

namespace qchrom {

namespace {

constexpr double kNumericTolerance = 1e-6;

std::uint64_t checked_pow(int p, int n) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) {
      throw budget_error("oracle", "p^n does not fit the packed representation");
    }
    v *= static_cast<std::uint64_t>(p);
  }
  return v;
}

std::uint64_t generator_count(const CayleySpec& spec) {
  Int d = spec.degree();
  if (!d.fits_ulong_p()) {
    throw budget_error("oracle", "generator set of size " + dec(d) +
                                     " is beyond brute-force scale");
  }
  return d.get_ui();
}

void check_budget(const CayleySpec& spec, const OracleBudget& budget) {
  const Int products = spec.vertex_count() * spec.degree();
  if (products > Int(budget.max_products)) {
    throw budget_error("oracle", dec(products) +
                                     " character-generator products exceed "
                                     "max_products = " +
                                     dec(Int(budget.max_products)));
  }
}

// All vectors of the generator type classes, as digit vectors.
std::vector<std::vector<int>> materialize_generators(const CayleySpec& spec) {
  std::vector<std::vector<int>> out;
  std::vector<int> digits(spec.n(), 0);
  const std::uint64_t total = checked_pow(spec.p(), spec.n());
  for (std::uint64_t v = 0; v < total; ++v) {
    if (spec.has_generator(type_of(digits, spec.p()))) out.push_back(digits);
    for (int i = 0; i < spec.n(); ++i) {
      if (++digits[i] < spec.p()) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace

DenseGroupVector::DenseGroupVector(int p, int n, std::uint64_t packed)
    : p_(p), n_(n), packed_(packed) {
  if (p < 2) throw parameter_error("DenseGroupVector: p must be >= 2");
  const std::uint64_t total = checked_pow(p, n);
  if (packed >= total) {
    throw parameter_error("DenseGroupVector: packed value out of range");
  }
}

DenseGroupVector DenseGroupVector::from_digits(int p, std::span<const int> digits) {
  std::uint64_t packed = 0;
  for (size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= p) {
      throw parameter_error("DenseGroupVector: digit out of range");
    }
    packed = packed * static_cast<std::uint64_t>(p) +
             static_cast<std::uint64_t>(digits[i]);
  }
  return DenseGroupVector(p, static_cast<int>(digits.size()), packed);
}

int DenseGroupVector::digit(int i) const {
  if (i < 0 || i >= n_) throw parameter_error("DenseGroupVector: index");
  if (p_ == 2) return static_cast<int>((packed_ >> i) & 1);
  std::uint64_t v = packed_;
  for (int j = 0; j < i; ++j) v /= static_cast<std::uint64_t>(p_);
  return static_cast<int>(v % static_cast<std::uint64_t>(p_));
}

std::vector<int> DenseGroupVector::digits() const {
  std::vector<int> out(n_);
  std::uint64_t v = packed_;
  for (int i = 0; i < n_; ++i) {
    out[i] = static_cast<int>(v % static_cast<std::uint64_t>(p_));
    v /= static_cast<std::uint64_t>(p_);
  }
  return out;
}

TypeVector DenseGroupVector::type() const { return type_of(digits(), p_); }

DenseGroupVector DenseGroupVector::add(const DenseGroupVector& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    throw parameter_error("DenseGroupVector: dimension mismatch");
  }
  if (p_ == 2) return DenseGroupVector(2, n_, packed_ ^ o.packed_);
  std::vector<int> a = digits(), b = o.digits();
  for (int i = 0; i < n_; ++i) a[i] = (a[i] + b[i]) % p_;
  return from_digits(p_, a);
}

DenseGroupVector DenseGroupVector::negated() const {
  if (p_ == 2) return *this;
  std::vector<int> a = digits();
  for (int& d : a) d = (p_ - d) % p_;
  return from_digits(p_, a);
}

int DenseGroupVector::dot(const DenseGroupVector& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    throw parameter_error("DenseGroupVector: dimension mismatch");
  }
  if (p_ == 2) return std::popcount(packed_ & o.packed_) & 1;
  long long s = 0;
  std::uint64_t a = packed_, b = o.packed_;
  for (int i = 0; i < n_; ++i) {
    s += static_cast<long long>(a % p_) * static_cast<long long>(b % p_);
    a /= static_cast<std::uint64_t>(p_);
    b /= static_cast<std::uint64_t>(p_);
  }
  return static_cast<int>(s % p_);
}

SpectrumReport brute_spectrum(const CayleySpec& spec, const OracleBudget& budget) {
  check_budget(spec, budget);
  const int p = spec.p();
  const int n = spec.n();
  const std::uint64_t total = checked_pow(p, n);
  const bool prime = spec.p_is_prime();

  const auto generators = materialize_generators(spec);
  if (generators.size() != generator_count(spec)) {
    throw invariant_violation("materialized generator count mismatch");
  }
  // Nonzero-support lists keep the inner product loops short.
  struct PackedGen {
    std::vector<std::pair<int, int>> support;  // (position, digit)
    std::uint64_t mask = 0;                    // p = 2 only
  };
  std::vector<PackedGen> packed(generators.size());
  for (size_t g = 0; g < generators.size(); ++g) {
    for (int i = 0; i < n; ++i) {
      if (generators[g][i] != 0) {
        packed[g].support.emplace_back(i, generators[g][i]);
        packed[g].mask |= std::uint64_t{1} << i;
      }
    }
  }

  struct TypeAccumulator {
    bool seen = false;
    long long exact = 0;
    double numeric = 0.0;
    std::uint64_t count = 0;
  };
  std::map<TypeVector, TypeAccumulator> groups;

  std::vector<double> cos_table(p), sin_table(p);
  for (int r = 0; r < p; ++r) {
    cos_table[r] = std::cos(2 * std::numbers::pi * r / p);
    sin_table[r] = std::sin(2 * std::numbers::pi * r / p);
  }

  std::vector<int> digits(n, 0);
  std::vector<long long> residue_count(p);
  for (std::uint64_t v = 0; v < total; ++v) {
    TypeAccumulator& acc = groups[type_of(digits, p)];
    if (prime) {
      std::fill(residue_count.begin(), residue_count.end(), 0);
      if (p == 2) {
        for (const PackedGen& g : packed) {
          ++residue_count[std::popcount(g.mask & v) & 1];
        }
      } else {
        for (const PackedGen& g : packed) {
          int r = 0;
          for (const auto& [pos, d] : g.support) r += digits[pos] * d;
          ++residue_count[r % p];
        }
      }
      for (int a = 2; a < p; ++a) {
        if (residue_count[a] != residue_count[1]) {
          throw invariant_violation(
              "character sum at vertex " + std::to_string(v) +
              " is not a rational integer; negation closure broken");
        }
      }
      const long long lambda = residue_count[0] - residue_count[1];
      if (!acc.seen) {
        acc.seen = true;
        acc.exact = lambda;
      } else if (acc.exact != lambda) {
        throw invariant_violation(
            "within-type eigenvalue disagreement at vertex " +
            std::to_string(v) + ": " + std::to_string(lambda) + " vs " +
            std::to_string(acc.exact) +
            " (would falsify type-determined eigenvalues)");
      }
    } else {
      double re = 0.0, im = 0.0;
      for (const PackedGen& g : packed) {
        long long r = 0;
        for (const auto& [pos, d] : g.support) r += digits[pos] * d;
        re += cos_table[r % p];
        im += sin_table[r % p];
      }
      if (std::abs(im) > kNumericTolerance) {
        throw invariant_violation("complex character sum has imaginary part " +
                                  std::to_string(im) +
                                  "; generator set not negation-closed");
      }
      if (!acc.seen) {
        acc.seen = true;
        acc.numeric = re;
      } else if (std::abs(acc.numeric - re) > kNumericTolerance) {
        throw invariant_violation(
            "within-type eigenvalue disagreement (numeric) at vertex " +
            std::to_string(v));
      }
    }
    ++acc.count;
    for (int i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }

  SpectrumReport report;
  report.p = p;
  report.n = n;
  report.generators = spec.generators();
  report.degree = spec.degree();
  report.certified = prime;
  bool first = true;
  for (const auto& [type, acc] : groups) {
    SpectrumEntry e;
    e.type = type;
    e.eigenvalue = prime ? Int(static_cast<long>(acc.exact))
                         : Int(static_cast<long>(std::llround(acc.numeric)));
    e.multiplicity = Int(static_cast<unsigned long>(acc.count));
    if (e.multiplicity != multinomial(n, type)) {
      throw invariant_violation("type class " + type.to_string() + " has " +
                                dec(e.multiplicity) + " vectors, expected " +
                                dec(multinomial(n, type)));
    }
    if (first || e.eigenvalue > report.lambda_max) {
      report.lambda_max = e.eigenvalue;
      report.lambda_max_witness = type;
    }
    if (first || e.eigenvalue < report.lambda_min) {
      report.lambda_min = e.eigenvalue;
      report.lambda_min_witness = type;
    }
    first = false;
    report.entries.push_back(std::move(e));
  }
  report.validate();
  return report;
}

void for_each_edge(const CayleySpec& spec, const OracleBudget& budget,
                   const std::function<bool(std::uint64_t, std::uint64_t)>& visit) {
  check_budget(spec, budget);
  const int p = spec.p();
  const int n = spec.n();
  const std::uint64_t total = checked_pow(p, n);
  const auto generators = materialize_generators(spec);

  std::vector<std::uint64_t> gen_packed;
  gen_packed.reserve(generators.size());
  for (const auto& g : generators) {
    gen_packed.push_back(DenseGroupVector::from_digits(p, g).packed());
  }

  std::vector<int> digits(n, 0);
  for (std::uint64_t v = 0; v < total; ++v) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      std::uint64_t w;
      if (p == 2) {
        w = v ^ gen_packed[gi];
      } else {
        std::uint64_t acc = 0, scale = 1;
        for (int i = 0; i < n; ++i) {
          acc += scale *
                 static_cast<std::uint64_t>((digits[i] + generators[gi][i]) % p);
          scale *= static_cast<std::uint64_t>(p);
        }
        w = acc;
      }
      if (v < w && !visit(v, w)) return;
    }
    for (int i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> adjacency_pairs(
    const CayleySpec& spec, const OracleBudget& budget) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for_each_edge(spec, budget, [&](std::uint64_t u, std::uint64_t w) {
    edges.emplace_back(u, w);
    return true;
  });
  return edges;
}

HomomorphismVerdict check_homomorphism(
    const std::function<std::vector<int>(const std::vector<int>&)>& map,
    const CayleySpec& src, const CayleySpec& dst, const OracleBudget& budget) {
  if (src.p() != dst.p()) {
    throw parameter_error("check_homomorphism: src and dst must share p");
  }
  const int p = src.p();
  HomomorphismVerdict verdict;
  for_each_edge(src, budget, [&](std::uint64_t u, std::uint64_t w) {
    const auto ud = DenseGroupVector(p, src.n(), u).digits();
    const auto wd = DenseGroupVector(p, src.n(), w).digits();
    std::vector<int> fu = map(ud), fw = map(wd);
    if (static_cast<int>(fu.size()) != dst.n() ||
        static_cast<int>(fw.size()) != dst.n()) {
      throw parameter_error("check_homomorphism: image length != dst.n");
    }
    std::vector<int> diff(dst.n());
    for (int i = 0; i < dst.n(); ++i) diff[i] = ((fu[i] - fw[i]) % p + p) % p;
    if (!dst.has_generator(type_of(diff, p))) {
      verdict.pass = false;
      verdict.src_u = ud;
      verdict.src_w = wd;
      verdict.image_u = std::move(fu);
      verdict.image_w = std::move(fw);
      return false;
    }
    return true;
  });
  return verdict;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const CayleySpec& spec,
                                                      const OracleBudget& budget) {
  check_budget(spec, budget);
  const std::uint64_t total = checked_pow(spec.p(), spec.n());
  std::vector<std::uint8_t> color(total, 2);  // 2 = unassigned
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges =
      adjacency_pairs(spec, budget);
  std::vector<std::vector<std::uint64_t>> adj(total);
  for (auto [u, w] : edges) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  std::vector<std::uint64_t> stack;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::uint64_t u = stack.back();
      stack.pop_back();
      for (std::uint64_t w : adj[u]) {
        if (color[w] == 2) {
          color[w] = static_cast<std::uint8_t>(1 - color[u]);
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace qchrom
