#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qchrom/certify.hpp"
#include "qchrom/json_io.hpp"
#include "qchrom/representation.hpp"

namespace py = pybind11;
using namespace qchrom;

namespace {

py::object to_py_int(const Int& v) {
  const std::string s = dec(v);
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

CayleySpec make_spec(int p, int n, const std::vector<std::vector<int>>& gens) {
  std::vector<TypeVector> types;
  types.reserve(gens.size());
  for (const auto& g : gens) types.emplace_back(g);
  return CayleySpec(p, n, std::move(types));
}

py::dict report_to_py(const SpectrumReport& report) {
  py::dict out;
  out["p"] = report.p;
  out["n"] = report.n;
  py::list entries;
  for (const SpectrumEntry& e : report.entries) {
    py::dict entry;
    entry["type"] = py::tuple(py::cast(e.type.counts()));
    entry["eigenvalue"] = to_py_int(e.eigenvalue);
    entry["multiplicity"] = to_py_int(e.multiplicity);
    entries.append(entry);
  }
  out["entries"] = entries;
  out["lambda_max"] = to_py_int(report.lambda_max);
  out["lambda_min"] = to_py_int(report.lambda_min);
  out["bound"] = to_py_int(spectral_lower_bound(report));
  out["certified"] = report.certified;
  return out;
}

py::dict design_to_py(const Design& d) {
  py::dict out;
  out["n"] = d.n;
  out["blocks"] = d.blocks;
  if (d.verified_params) {
    out["k"] = d.verified_params->k;
    out["lambda"] = d.verified_params->lambda;
    out["r"] = d.verified_params->r;
    out["b"] = d.verified_params->b;
  }
  const SeparationProfile profile = separation_profile(d);
  if (profile.theta) out["theta"] = *profile.theta;
  const DesignBound bound = design_upper_bound(d);
  if (bound.applicable) out["upper_bound"] = to_py_int(bound.bound);
  return out;
}

Design design_from_py(int n, const std::vector<std::vector<int>>& blocks) {
  Design d;
  d.n = n;
  d.blocks = blocks;
  d.canonicalize();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact spectra of type-generated Cayley graphs over Z_p^n, block-design "
      "constructions, flat orthogonal representations and quantum-chromatic "
      "certificates.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<parameter_error>(m, "ParameterError",
                                          PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<invariant_violation>(m, "InvariantViolation",
                                              PyExc_AssertionError);

  m.def("multinomial",
        [](int n, const std::vector<int>& parts) {
          return to_py_int(multinomial(n, TypeVector(parts)));
        },
        py::arg("n"), py::arg("parts"), "n! / prod(parts_i!), exact");
  m.def("binomial",
        [](int n, int k) { return to_py_int(binomial(n, k)); });
  m.def("krawtchouk",
        [](int n, int r, int w) { return to_py_int(krawtchouk(n, r, w)); },
        py::arg("n"), py::arg("r"), py::arg("w"),
        "Krawtchouk value K_r(w) over Z_2^n");
  m.def("type_of",
        [](const std::vector<int>& v, int p) {
          return py::tuple(py::cast(type_of(v, p).counts()));
        },
        py::arg("v"), py::arg("p"));
  m.def("enumerate_types",
        [](int p, int n, bool canonical) {
          py::list out;
          for_each_type(p, n, canonical, [&](const TypeVector& t) {
            out.append(py::tuple(py::cast(t.counts())));
          });
          return out;
        },
        py::arg("p"), py::arg("n"), py::arg("canonical") = false);
  m.def("balanced_coefficient",
        [](int l, const std::vector<int>& t) {
          return to_py_int(balanced_coefficient(l, TypeVector(t)));
        },
        py::arg("l"), py::arg("t"),
        "coefficient of x^t0 y^t1 z^t2 in (x^3+y^3+z^3-3xyz)^l");

  m.def("eigenvalue_of_type",
        [](int p, int n, const std::vector<std::vector<int>>& gens,
           const std::vector<int>& v_type) {
          return to_py_int(
              eigenvalue_of_type(make_spec(p, n, gens), TypeVector(v_type)));
        },
        py::arg("p"), py::arg("n"), py::arg("generators"), py::arg("v_type"));
  m.def("full_spectrum",
        [](int p, int n, const std::vector<std::vector<int>>& gens) {
          return report_to_py(full_spectrum(make_spec(p, n, gens)));
        },
        py::arg("p"), py::arg("n"), py::arg("generators"));
  m.def("brute_spectrum",
        [](int p, int n, const std::vector<std::vector<int>>& gens,
           std::uint64_t budget) {
          OracleBudget b;
          b.max_products = budget;
          return report_to_py(brute_spectrum(make_spec(p, n, gens), b));
        },
        py::arg("p"), py::arg("n"), py::arg("generators"),
        py::arg("budget") = std::uint64_t{1} << 24);
  m.def("spectral_lower_bound",
        [](int p, int n, const std::vector<std::vector<int>>& gens) {
          return to_py_int(spectral_lower_bound(full_spectrum(make_spec(p, n, gens))));
        },
        py::arg("p"), py::arg("n"), py::arg("generators"),
        "ceil(1 - lambda_max/lambda_min) for the given graph");

  m.def("macwilliams_transform",
        [](int n, const std::map<std::vector<int>, long long>& coeffs,
           long long size) {
          WeightEnumerator e;
          e.n = n;
          for (const auto& [t, c] : coeffs) {
            e.coeffs[TypeVector(t)] = Int(static_cast<long>(c));
          }
          const WeightEnumerator dual =
              macwilliams_transform(e, Int(static_cast<long>(size)));
          py::dict out;
          for (const auto& [t, c] : dual.coeffs) {
            out[py::tuple(py::cast(t.counts()))] = to_py_int(c);
          }
          return out;
        },
        py::arg("n"), py::arg("coeffs"), py::arg("code_size"));
  m.def("duality_check",
        [](int n, const std::vector<int>& s, const std::vector<int>& t) {
          const auto [lhs, rhs] = duality_check(n, TypeVector(s), TypeVector(t));
          return py::make_tuple(to_py_int(lhs), to_py_int(rhs));
        },
        py::arg("n"), py::arg("S"), py::arg("T"));

  m.def("verify_extremal_claims",
        [](int l, bool cross_check) {
          ExtremalOptions opts;
          opts.cross_check_engine = cross_check;
          return json_to_py(
              extremal_verdict_to_json(verify_extremal_claims(l, opts)));
        },
        py::arg("l"), py::arg("cross_check") = false);
  m.def("verify_appendix_claims", [](int l) {
    return json_to_py(appendix_verdict_to_json(verify_appendix_claims(l)));
  });
  m.def("verify_subgraph_theorems",
        [](int l, int t) {
          return json_to_py(
              subgraph_verdict_to_json(verify_subgraph_theorems(l, t)));
        },
        py::arg("l") = 2, py::arg("t") = 1);

  m.def("paley_design", [](long long q) { return design_to_py(paley_design(q)); });
  m.def("hadamard_design", [](int t) { return design_to_py(hadamard_design(t)); });
  m.def("twin_prime_design",
        [](long long q) { return design_to_py(twin_prime_design(q)); });
  m.def("menon_design", [](int a) { return design_to_py(menon_design(a)); });
  m.def("verify_bibd",
        [](int n, const std::vector<std::vector<int>>& blocks) {
          const BibdCheck check = verify_bibd(design_from_py(n, blocks));
          py::dict out;
          out["ok"] = check.ok;
          if (check.ok) {
            out["k"] = check.params.k;
            out["lambda"] = check.params.lambda;
            out["r"] = check.params.r;
            out["b"] = check.params.b;
          } else {
            out["failure"] = check.failure;
          }
          return out;
        },
        py::arg("n"), py::arg("blocks"));
  m.def("separation_profile",
        [](int n, const std::vector<std::vector<int>>& blocks) {
          const SeparationProfile profile =
              separation_profile(design_from_py(n, blocks));
          py::dict out;
          out["family_size"] = profile.family_size;
          out["theta"] = profile.theta ? py::object(py::int_(*profile.theta))
                                       : py::object(py::none());
          return out;
        },
        py::arg("n"), py::arg("blocks"));

  m.def("flat_representation",
        [](int n, const std::vector<std::vector<int>>& blocks) {
          Design d = design_from_py(n, blocks);
          const SeparationProfile profile = separation_profile(d);
          if (!profile.theta) {
            throw parameter_error("family does not separate pairs uniformly");
          }
          const FlatRep rep = rep_from_family(d, *profile.theta);
          const OrthogonalityVerdict verdict = verify_flat_orthogonal(rep, n);
          py::dict out;
          out["n"] = rep.n;
          out["theta"] = rep.theta;
          out["dimension"] = rep.dimension;
          out["orthogonal"] = verdict.pass;
          return out;
        },
        py::arg("n"), py::arg("blocks"),
        "dimension-2*theta sign representation from a pair-separating family");
  m.def("evaluate_flat_representation",
        [](int n, const std::vector<std::vector<int>>& blocks,
           const std::vector<int>& vertex) {
          Design d = design_from_py(n, blocks);
          const SeparationProfile profile = separation_profile(d);
          if (!profile.theta) {
            throw parameter_error("family does not separate pairs uniformly");
          }
          return rep_from_family(d, *profile.theta).evaluate(vertex);
        },
        py::arg("n"), py::arg("blocks"), py::arg("vertex"));
  m.def("natural_rep_check",
        [](int p, int n, const std::vector<std::vector<int>>& gens) {
          const NaturalRepVerdict verdict =
              natural_rep_check(make_spec(p, n, gens));
          py::dict out;
          out["pass"] = verdict.pass;
          out["upper_bound"] = verdict.upper_bound;
          out["edges_checked"] = verdict.edges_checked;
          return out;
        },
        py::arg("p"), py::arg("n"), py::arg("generators"));
  m.def("check_bit_embed",
        [](const std::vector<int>& x, int p) { return check_bit_embed(x, p); },
        py::arg("x"), py::arg("p"));

  m.def("certify_table1", [](int l_max, int t_max) {
    Table1Options options;
    options.l_max = l_max;
    options.t_max = t_max;
    return json_to_py(certificate_bundle("table1", certify_table1(options)));
  }, py::arg("l_max") = 2, py::arg("t_max") = 1);
  m.def("certify_table2", []() {
    return json_to_py(certificate_bundle("table2", certify_table2({})));
  });
  m.def("certify_table3", [](int n_min, int n_max) {
    Table3Options options;
    options.n_min = n_min;
    options.n_max = n_max;
    return json_to_py(certificate_bundle("table3", certify_table3(options)));
  }, py::arg("n_min") = 2, py::arg("n_max") = 16);
}
