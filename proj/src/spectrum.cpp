#include "qchrom/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qchrom {

namespace {

TypeVector weight_type(int n, int w) {
  return TypeVector{std::vector<int>{n - w, w}};
}

// Coefficient table of (x^3+y^3+z^3 + xyz_coeff*xyz)^l: poly[ex][ey] is the
// coefficient of x^ex y^ey z^{3l-ex-ey}.
std::vector<std::vector<Int>> cubic_power_poly(int l, int xyz_coeff) {
  std::vector<std::vector<Int>> poly(1, std::vector<Int>(1, Int(1)));
  for (int j = 0; j < l; ++j) {
    const int deg = 3 * j;
    std::vector<std::vector<Int>> next(deg + 4, std::vector<Int>(deg + 4));
    for (int ex = 0; ex <= deg; ++ex) {
      for (int ey = 0; ex + ey <= deg; ++ey) {
        const Int& c = poly[ex][ey];
        if (c == 0) continue;
        next[ex + 3][ey] += c;
        next[ex][ey + 3] += c;
        next[ex][ey] += c;
        next[ex + 1][ey + 1] += xyz_coeff * c;
      }
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<std::vector<Int>> balanced_poly(int l) {
  return cubic_power_poly(l, -3);
}

}  // namespace

CayleySpec::CayleySpec(int p, int n, std::vector<TypeVector> generator_types)
    : p_(p), n_(n), p_prime_(is_prime(p)), generators_(std::move(generator_types)) {
  if (p_ < 2) throw parameter_error("CayleySpec: p must be >= 2");
  if (n_ < 1) throw parameter_error("CayleySpec: n must be >= 1");
  if (generators_.empty()) {
    throw parameter_error("CayleySpec: generator set must be non-empty");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  for (const TypeVector& t : generators_) {
    if (t.p() != p_ || t.n() != n_) {
      throw parameter_error("CayleySpec: generator type " + t.to_string() +
                            " does not match p=" + std::to_string(p_) +
                            ", n=" + std::to_string(n_));
    }
    if (t.is_zero_type()) {
      throw parameter_error("CayleySpec: generator type " + t.to_string() +
                            " is the zero-vector type");
    }
    if (!has_generator(t.negated())) {
      throw parameter_error("CayleySpec: generator set not negation-closed, " +
                            t.to_string() + " present but " +
                            t.negated().to_string() + " missing");
    }
  }
}

bool CayleySpec::has_generator(const TypeVector& t) const {
  return std::binary_search(generators_.begin(), generators_.end(), t);
}

Int CayleySpec::degree() const {
  Int d = 0;
  for (const TypeVector& t : generators_) d += multinomial(n_, t);
  return d;
}

Int CayleySpec::vertex_count() const {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(n_));
  return v;
}

std::string CayleySpec::to_string() const {
  std::ostringstream os;
  os << "Cay(Z_" << p_ << "^" << n_ << ",";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << " u ";
    os << generators_[i].to_string();
  }
  os << ")";
  return os.str();
}

CayleySpec weight_class_spec(int n, const std::vector<int>& weights) {
  std::vector<TypeVector> gens;
  for (int w : weights) {
    if (w < 1 || w > n) {
      throw parameter_error("weight class " + std::to_string(w) +
                            " out of range [1," + std::to_string(n) + "]");
    }
    gens.push_back(weight_type(n, w));
  }
  return CayleySpec(2, n, std::move(gens));
}

CayleySpec hamming_distance2_spec(int n) { return weight_class_spec(n, {2}); }

CayleySpec balanced_generator_spec(int p, int n) {
  if (p < 2 || n < 1 || n % p != 0) {
    throw parameter_error("balanced generators need p | n, got p=" +
                          std::to_string(p) + ", n=" + std::to_string(n));
  }
  return CayleySpec(p, n, {TypeVector(std::vector<int>(p, n / p))});
}

CayleySpec g1_spec(int t) {
  if (t < 1) throw parameter_error("g1_spec: t must be >= 1");
  return weight_class_spec(4 * t - 1, {2 * t - 1, 2 * t});
}

CayleySpec g2_spec(int t) {
  if (t < 1) throw parameter_error("g2_spec: t must be >= 1");
  return weight_class_spec(4 * t - 2, {2 * t - 1, 2 * t});
}

CayleySpec g3_spec(int l) {
  if (l < 1) throw parameter_error("g3_spec: l must be >= 1");
  return CayleySpec(3, 3 * l - 1,
                    {TypeVector{l - 1, l, l}, TypeVector{l, l - 1, l},
                     TypeVector{l, l, l - 1}});
}

CayleySpec g5_spec(int l) {
  if (l < 1) throw parameter_error("g5_spec: l must be >= 1");
  return CayleySpec(3, 3 * l - 1, {TypeVector{l - 1, l, l}});
}

CayleySpec g6_spec(int l) {
  if (l < 2) throw parameter_error("g6_spec: l must be >= 2");
  return CayleySpec(3, 3 * l - 2,
                    {TypeVector{l - 2, l, l}, TypeVector{l - 1, l - 1, l},
                     TypeVector{l - 1, l, l - 1}});
}

void SpectrumReport::validate() const {
  if (!certified) return;  // floating oracle entries round, skip exact traces
  Int vertices;
  mpz_ui_pow_ui(vertices.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(n));
  Int mult_sum = 0, trace = 0, trace_sq = 0;
  for (const SpectrumEntry& e : entries) {
    mult_sum += e.multiplicity;
    trace += e.multiplicity * e.eigenvalue;
    trace_sq += e.multiplicity * e.eigenvalue * e.eigenvalue;
  }
  if (mult_sum != vertices) {
    throw invariant_violation("spectrum multiplicities sum to " + dec(mult_sum) +
                              ", expected p^n = " + dec(vertices));
  }
  if (trace != 0) {
    throw invariant_violation("spectrum trace is " + dec(trace) + ", expected 0");
  }
  if (trace_sq != vertices * degree) {
    throw invariant_violation("sum m*lambda^2 is " + dec(trace_sq) +
                              ", expected p^n * degree = " +
                              dec(vertices * degree));
  }
}

const SpectrumEntry* SpectrumReport::find(const TypeVector& t) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), t,
      [](const SpectrumEntry& e, const TypeVector& key) { return e.type < key; });
  if (it == entries.end() || it->type != t) return nullptr;
  return &*it;
}

std::vector<Int> character_count_by_residue(const TypeVector& v_type,
                                            const TypeVector& gen_type) {
  const int p = v_type.p();
  if (gen_type.p() != p || gen_type.n() != v_type.n()) {
    throw parameter_error("character sum: types over different groups, " +
                          v_type.to_string() + " vs " + gen_type.to_string());
  }
  const int n = v_type.n();

  // State: used counts m_k of generator symbols k = 1..p-1 among the
  // coordinates where v is nonzero (symbol-0 usage is implied), together with
  // the running dot-product residue. Coordinates where v = i contribute i*k
  // per generator symbol k; the v = 0 class never moves the residue and is
  // folded in combinatorially at the end.
  std::vector<long> stride(p, 0);
  long size = p;
  for (int k = p - 1; k >= 1; --k) {
    stride[k] = size;
    size *= gen_type.count(k) + 1;
  }
  std::vector<Int> state(size);
  state[0] = 1;

  for (int i = 1; i < p; ++i) {
    const int class_size = v_type.count(i);
    for (int c = 0; c < class_size; ++c) {
      // In-place, descending: symbol 0 keeps the cell, symbols k >= 1 pull
      // from strictly smaller indices.
      for (long idx = size - 1; idx >= 0; --idx) {
        const int a = static_cast<int>(idx % p);
        Int acc = std::move(state[idx]);
        for (int k = 1; k < p; ++k) {
          const long used = (idx / stride[k]) % (gen_type.count(k) + 1);
          if (used == 0) continue;
          const int prev_a = static_cast<int>(((a - i * k) % p + p) % p);
          const long src = idx - stride[k] + (prev_a - a);
          acc += state[src];
        }
        state[idx] = std::move(acc);
      }
    }
  }

  // Close over the v = 0 class: distribute its coordinates over the remaining
  // symbol budget.
  const int zero_class = v_type.count(0);
  std::vector<Int> counts(p, 0);
  std::vector<int> leftover(p);
  for (long idx = 0; idx < size; ++idx) {
    if (state[idx] == 0) continue;
    const int a = static_cast<int>(idx % p);
    int assigned = 0;
    for (int k = 1; k < p; ++k) {
      const int used = static_cast<int>((idx / stride[k]) % (gen_type.count(k) + 1));
      leftover[k] = gen_type.count(k) - used;
      assigned += leftover[k];
    }
    leftover[0] = zero_class - assigned;
    if (leftover[0] < 0) continue;
    counts[a] += state[idx] * multinomial(zero_class, TypeVector(leftover));
  }

  Int total = 0;
  for (const Int& c : counts) total += c;
  if (total != multinomial(n, gen_type)) {
    throw invariant_violation("character-sum counts for v " + v_type.to_string() +
                              ", class " + gen_type.to_string() + " total " +
                              dec(total) + ", expected |class| = " +
                              dec(multinomial(n, gen_type)));
  }
  return counts;
}

Cyclotomic character_sum_by_type(const TypeVector& v_type,
                                 const TypeVector& gen_type) {
  const int p = v_type.p();
  if (!is_prime(p)) {
    throw parameter_error("exact character sums need prime p, got " +
                          std::to_string(p));
  }
  std::vector<Int> counts = character_count_by_residue(v_type, gen_type);
  Cyclotomic sum(p);
  for (int a = 0; a < p; ++a) {
    if (counts[a] != 0) sum.add_scaled_zeta(counts[a], a);
  }
  return sum;
}

Int eigenvalue_of_type(const CayleySpec& spec, const TypeVector& v_type) {
  if (!spec.p_is_prime()) {
    throw parameter_error("eigenvalue_of_type: exact spectra need prime p "
                          "(use the oracle for non-prime p)");
  }
  if (v_type.p() != spec.p() || v_type.n() != spec.n()) {
    throw parameter_error("eigenvalue_of_type: type " + v_type.to_string() +
                          " does not index " + spec.to_string());
  }
  std::vector<Int> counts(spec.p(), 0);
  for (const TypeVector& gen : spec.generators()) {
    std::vector<Int> c = character_count_by_residue(v_type, gen);
    for (int a = 0; a < spec.p(); ++a) counts[a] += c[a];
  }
  Cyclotomic sum(spec.p());
  for (int a = 0; a < spec.p(); ++a) {
    if (counts[a] != 0) sum.add_scaled_zeta(counts[a], a);
  }
  if (!sum.is_rational_integer()) {
    throw invariant_violation(
        "eigenvalue at type " + v_type.to_string() + " of " + spec.to_string() +
        " is not a rational integer (" + sum.to_string() +
        "): negation closure broken");
  }
  return sum.rational_value();
}

Int balanced_coefficient(int l, const TypeVector& t) {
  if (l < 0) throw parameter_error("balanced_coefficient: l must be >= 0");
  if (t.p() != 3 || t.n() != 3 * l) {
    throw parameter_error("balanced_coefficient: " + t.to_string() +
                          " is not a 3-partition of " + std::to_string(3 * l));
  }
  return balanced_poly(l)[t.count(0)][t.count(1)];
}

SpectrumReport full_spectrum(const CayleySpec& spec, const TypeBudget& budget) {
  if (!spec.p_is_prime()) {
    throw parameter_error("full_spectrum: exact spectra need prime p "
                          "(use the oracle for non-prime p)");
  }
  const Int type_count = ordered_type_count(spec.p(), spec.n());
  if (type_count > budget.max_ordered_types) {
    throw budget_error("ordered-type",
                       dec(type_count) + " types exceed max_ordered_types = " +
                           dec(budget.max_ordered_types));
  }

  // For the balanced p=3 graph the closed-form coefficient route provides an
  // independent expression for every entry; cross-check against it.
  const bool balanced3 = spec.p() == 3 && spec.generators().size() == 1 &&
                         spec.generators()[0] ==
                             TypeVector(std::vector<int>(3, spec.n() / 3)) &&
                         spec.n() % 3 == 0;
  std::vector<std::vector<Int>> poly;
  Int balanced_class_size;
  if (balanced3) {
    poly = balanced_poly(spec.n() / 3);
    balanced_class_size = multinomial(spec.n(), spec.generators()[0]);
  }

  SpectrumReport report;
  report.p = spec.p();
  report.n = spec.n();
  report.generators = spec.generators();
  report.degree = spec.degree();

  bool first = true;
  for_each_type(spec.p(), spec.n(), /*canonical=*/false,
                [&](const TypeVector& t) {
    SpectrumEntry entry;
    entry.type = t;
    entry.eigenvalue = eigenvalue_of_type(spec, t);
    entry.multiplicity = multinomial(spec.n(), t);
    if (balanced3) {
      Rat closed(balanced_class_size * poly[t.count(0)][t.count(1)],
                 entry.multiplicity);
      closed.canonicalize();
      if (closed.get_den() != 1 || closed.get_num() != entry.eigenvalue) {
        throw invariant_violation(
            "engine eigenvalue " + dec(entry.eigenvalue) + " at type " +
            t.to_string() + " disagrees with the coefficient closed form " +
            closed.get_str());
      }
    }
    if (first || entry.eigenvalue > report.lambda_max) {
      report.lambda_max = entry.eigenvalue;
      report.lambda_max_witness = t;
    }
    if (first || entry.eigenvalue < report.lambda_min) {
      report.lambda_min = entry.eigenvalue;
      report.lambda_min_witness = t;
    }
    first = false;
    report.entries.push_back(std::move(entry));
  });

  report.validate();
  return report;
}

Int spectral_lower_bound(const SpectrumReport& report) {
  if (report.lambda_min >= 0) {
    throw parameter_error("spectral bound needs lambda_min < 0 (graph with at "
                          "least one edge); got lambda_min = " +
                          dec(report.lambda_min));
  }
  Rat bound = 1 - Rat(report.lambda_max) / Rat(report.lambda_min);
  bound.canonicalize();
  return ceil_div(bound.get_num(), bound.get_den());
}

Int WeightEnumerator::coeff(const TypeVector& t) const {
  auto it = coeffs.find(t);
  return it == coeffs.end() ? Int(0) : it->second;
}

Int WeightEnumerator::total() const {
  Int s = 0;
  for (const auto& [t, c] : coeffs) s += c;
  return s;
}

WeightEnumerator WeightEnumerator::from_codewords(
    int n, const std::vector<std::vector<int>>& words) {
  WeightEnumerator e;
  e.n = n;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != n) {
      throw parameter_error("codeword length mismatch");
    }
    e.coeffs[type_of(w, 3)] += 1;
  }
  return e;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& enumerator,
                                       const Int& code_size) {
  if (code_size <= 0) throw parameter_error("|C| must be positive");
  const int n = enumerator.n;

  // acc[ex][ey] accumulates the coefficient of x^ex y^ey z^{n-ex-ey}.
  std::vector<std::vector<Cyclotomic>> acc(
      n + 1, std::vector<Cyclotomic>(n + 1, Cyclotomic(3)));

  const Cyclotomic one(3, 1);
  const Cyclotomic zeta = Cyclotomic::zeta_power(3, 1);
  const Cyclotomic zeta2 = Cyclotomic::zeta_power(3, 2);

  for (const auto& [t, a] : enumerator.coeffs) {
    if (t.n() != n) {
      throw parameter_error("enumerator coefficient " + t.to_string() +
                            " has degree " + std::to_string(t.n()) +
                            ", expected " + std::to_string(n));
    }
    // Expand (x+y+z)^{t0} (x+zy+z^2 z)^{t1} (x+z^2 y+z z)^{t2}.
    std::vector<std::vector<Cyclotomic>> poly(
        1, std::vector<Cyclotomic>(1, Cyclotomic(3, 1)));
    auto multiply_linear = [&](const Cyclotomic& cy, const Cyclotomic& cz,
                               int times) {
      for (int rep = 0; rep < times; ++rep) {
        const int deg = static_cast<int>(poly.size()) - 1;
        std::vector<std::vector<Cyclotomic>> next(
            deg + 2, std::vector<Cyclotomic>(deg + 2, Cyclotomic(3)));
        for (int ex = 0; ex <= deg; ++ex) {
          for (int ey = 0; ex + ey <= deg; ++ey) {
            const Cyclotomic& c = poly[ex][ey];
            if (c.is_zero()) continue;
            next[ex + 1][ey] += c;  // x has coefficient 1 in every form
            next[ex][ey + 1] += c * cy;
            next[ex][ey] += c * cz;
          }
        }
        poly = std::move(next);
      }
    };
    multiply_linear(one, one, t.count(0));
    multiply_linear(zeta, zeta2, t.count(1));
    multiply_linear(zeta2, zeta, t.count(2));

    const Cyclotomic scale(3, a);
    for (int ex = 0; ex <= n; ++ex) {
      for (int ey = 0; ex + ey <= n; ++ey) {
        if (!poly[ex][ey].is_zero()) acc[ex][ey] += poly[ex][ey] * scale;
      }
    }
  }

  WeightEnumerator dual;
  dual.n = n;
  for (int ex = 0; ex <= n; ++ex) {
    for (int ey = 0; ex + ey <= n; ++ey) {
      const Cyclotomic& c = acc[ex][ey];
      if (c.is_zero()) continue;
      TypeVector t{ex, ey, n - ex - ey};
      if (!c.is_rational_integer() || !divides(code_size, c.coeffs()[0]) ||
          c.coeffs()[0] < 0) {
        throw parameter_error(
            "MacWilliams transform: coefficient at " + t.to_string() + " is " +
            c.to_string() + " / " + dec(code_size) +
            ", not a non-negative integer; input is not the enumerator of a "
            "linear code of size " + dec(code_size));
      }
      dual.coeffs[t] = exact_div(c.coeffs()[0], code_size);
    }
  }
  return dual;
}

std::pair<Int, Int> duality_check(int n, const TypeVector& s,
                                  const TypeVector& t) {
  if (s.p() != 3 || t.p() != 3 || s.n() != n || t.n() != n) {
    throw parameter_error("duality_check: need 3-partitions of n");
  }
  Int lhs = multinomial(n, s) * character_count_by_residue(s, t)[0];
  Int rhs = multinomial(n, t) * character_count_by_residue(t, s)[0];
  return {lhs, rhs};
}

ExtremalVerdict verify_extremal_claims(int l, const ExtremalOptions& opts) {
  if (l < 1) throw parameter_error("verify_extremal_claims: l must be >= 1");
  const int n = 3 * l;
  ExtremalVerdict verdict;
  verdict.l = l;
  verdict.n = n;
  verdict.pass = true;

  const auto poly = balanced_poly(l);
  const Int class_size = multinomial(n, TypeVector{l, l, l});

  auto lambda_of = [&](const TypeVector& t) {
    Rat v(class_size * poly[t.count(0)][t.count(1)], multinomial(n, t));
    v.canonicalize();
    if (v.get_den() != 1) {
      throw invariant_violation("eigenvalue at " + t.to_string() +
                                " is not integral: " + v.get_str());
    }
    return Int(v.get_num());
  };

  const TypeVector top{0, 0, n};
  const TypeVector second{1, 1, n - 2};

  verdict.lambda_largest = lambda_of(top);
  if (verdict.lambda_largest != class_size) {
    verdict.pass = false;
    verdict.pass_smallest = false;
    verdict.violations.push_back({top, verdict.lambda_largest, class_size,
                                  "lambda(0,0,n) = binom(n;l,l,l)"});
  }

  const Int lambda_second = lambda_of(second);
  verdict.lambda_second_abs = lambda_second;
  const Int expected_second = -exact_div(class_size, Int(n - 1));
  if (lambda_second != expected_second) {
    verdict.pass = false;
    verdict.pass_smallest = false;
    verdict.violations.push_back({second, lambda_second, expected_second,
                                  "lambda(1,1,n-2) = -binom(n;l,l,l)/(n-1)"});
  }

  const TypeVector third = n >= 9 ? TypeVector{2, 2, n - 4} : TypeVector{0, 0};
  Int lambda_third;
  if (n >= 9) {
    lambda_third = lambda_of(third);
    verdict.lambda_third_abs = lambda_third;
    const Int expected_third =
        exact_div(2 * class_size, Int(n - 1) * Int(n - 2));
    if (lambda_third != expected_third) {
      verdict.pass = false;
      verdict.pass_third = false;
      verdict.violations.push_back(
          {third, lambda_third, expected_third,
           "lambda(2,2,n-4) = 2 binom(n;l,l,l)/((n-1)(n-2))"});
    }
  }

  const Int abs_second = abs_int(lambda_second);
  const Int abs_third = n >= 9 ? abs_int(lambda_third) : Int(0);
  Int best_second(-1), best_third(-1);

  std::optional<CayleySpec> engine_spec;
  if (opts.cross_check_engine) engine_spec = balanced_generator_spec(3, n);

  for_each_type(3, n, /*canonical=*/true, [&](const TypeVector& t) {
    const Int lambda = lambda_of(t);
    if (engine_spec) {
      const Int engine = eigenvalue_of_type(*engine_spec, t);
      if (engine != lambda) {
        throw invariant_violation("engine eigenvalue " + dec(engine) +
                                  " at type " + t.to_string() +
                                  " disagrees with closed form " + dec(lambda));
      }
      ++verdict.engine_cross_checked_types;
    }
    if (t == top) return;
    const Int abs_lambda = abs_int(lambda);
    if (abs_lambda > abs_second) {
      verdict.pass = false;
      verdict.pass_smallest = false;
      verdict.violations.push_back(
          {t, lambda, lambda_second, "|lambda(T)| <= |lambda(1,1,n-2)|"});
    }
    if (abs_lambda > best_second) {
      best_second = abs_lambda;
      verdict.second_witness = t;
    }
    if (n >= 9 && t != second) {
      if (abs_lambda > abs_third) {
        verdict.pass = false;
        verdict.pass_third = false;
        verdict.violations.push_back(
            {t, lambda, lambda_third, "|lambda(T)| <= |lambda(2,2,n-4)|"});
      }
      if (abs_lambda > best_third) {
        best_third = abs_lambda;
        verdict.third_witness = t;
      }
    }
  });

  return verdict;
}

AppendixClaimVerdict verify_appendix_claims(int l) {
  if (l < 1) throw parameter_error("verify_appendix_claims: l must be >= 1");
  const int n = 3 * l;
  AppendixClaimVerdict verdict;
  verdict.l = l;
  verdict.n = n;
  verdict.pass = true;

  const auto poly = balanced_poly(l);
  auto fail = [&](std::string msg) {
    verdict.pass = false;
    verdict.failures.push_back(std::move(msg));
  };
  auto coefficient_matches = [&](int t0, int t1, const Int& expected,
                                 const char* label) {
    ++verdict.cases_checked;
    if (poly[t0][t1] != expected) {
      fail(std::string(label) + " closed form at (" + std::to_string(t0) + "," +
           std::to_string(t1) + "," + std::to_string(n - t0 - t1) +
           "): coefficient " + dec(poly[t0][t1]) + " != " + dec(expected));
    }
  };
  auto require_le = [&](const Int& lhs, const Int& rhs, const char* label,
                        int t0, int t1) {
    ++verdict.cases_checked;
    if (lhs > rhs) {
      fail(std::string(label) + " fails at (" + std::to_string(t0) + "," +
           std::to_string(t1) + "," + std::to_string(n - t0 - t1) + "): " +
           dec(lhs) + " > " + dec(rhs));
    }
  };

  // t0 = 0: lambda(0,t1,t2) = binom(n;l,l,l)/binom(n,t1) * binom(l, t1/3)
  for (int t1 = 3; 2 * t1 <= n; t1 += 3) {
    coefficient_matches(0, t1, binomial(l, t1 / 3), "t0=0");
    require_le(Int(n - 1) * binomial(l, t1 / 3), binomial(n, t1),
               "claim t0=0 (|lambda| <= |lambda(1,1,n-2)|)", 0, t1);
    if (l >= 3) {
      require_le(Int(n - 1) * Int(n - 2) * binomial(l, t1 / 3),
                 2 * binomial(n, t1),
                 "claim t0=0 (|lambda| <= |lambda(2,2,n-4)|)", 0, t1);
    }
  }
  // t0 = 1: lambda(1,t1,t2) = -n binom(n;l,l,l)/binom(n;1,t1,t2) binom(l-1,(t1-1)/3)
  for (int t1 = 1; 2 * t1 <= n - 1; t1 += 3) {
    coefficient_matches(1, t1, Int(-3) * l * binomial(l - 1, (t1 - 1) / 3),
                        "t0=1");
    require_le(Int(n - 1) * binomial(l - 1, (t1 - 1) / 3), binomial(n - 1, t1),
               "claim t0=1 (|lambda| <= |lambda(1,1,n-2)|)", 1, t1);
    if (l >= 3 && t1 > 1) {
      require_le(Int(n - 1) * Int(n - 2) * binomial(l - 1, (t1 - 1) / 3),
                 2 * binomial(n - 1, t1),
                 "claim t0=1 (|lambda| <= |lambda(2,2,n-4)|)", 1, t1);
    }
  }
  // t0 = 2: lambda(2,t1,t2) = 9 binom(n;l,l,l) binom(l,2)/binom(n;2,t1,t2) binom(l-2,(t1-2)/3)
  for (int t1 = 2; 2 * t1 <= n - 2; t1 += 3) {
    coefficient_matches(2, t1,
                        Int(9) * binomial(l, 2) * binomial(l - 2, (t1 - 2) / 3),
                        "t0=2");
    require_le(Int(n - 3) * binomial(l - 2, (t1 - 2) / 3), binomial(n - 2, t1),
               "claim t0=2 (|lambda| <= |lambda(1,1,n-2)|)", 2, t1);
    if (l >= 3) {
      require_le(Int(n - 2) * Int(n - 3) * binomial(l - 2, (t1 - 2) / 3),
                 2 * binomial(n - 2, t1),
                 "claim t0=2 (|lambda| <= |lambda(2,2,n-4)|)", 2, t1);
    }
  }

  // The |lambda| upper bound through (x^3+y^3+z^3+3xyz)^l holds with equality
  // when t0 <= 2: checked empirically, never assumed.
  const auto plus_poly = cubic_power_poly(l, 3);
  for_each_type(3, n, /*canonical=*/true, [&](const TypeVector& t) {
    if (t.count(0) > 2) return;
    ++verdict.cases_checked;
    const Int& minus = poly[t.count(0)][t.count(1)];
    const Int& plus = plus_poly[t.count(0)][t.count(1)];
    if (abs_int(minus) != plus) {
      fail("equality |coefficient| = plus-form coefficient fails at " +
           t.to_string() + ": |" + dec(minus) + "| != " + dec(plus));
    }
  });

  return verdict;
}

}  // namespace qchrom
