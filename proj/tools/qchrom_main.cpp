#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qchrom/certify.hpp"
#include "qchrom/json_io.hpp"
#include "qchrom/representation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFalsified = 4;

using namespace qchrom;

TypeVector parse_type(const std::string& s) {
  std::vector<int> counts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      counts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw parameter_error("cannot parse type entry '" + item + "' in '" + s +
                            "'");
    }
  }
  return TypeVector(std::move(counts));
}

CayleySpec spec_from_flags(int p, int n, const std::vector<std::string>& gens) {
  if (gens.empty()) {
    throw parameter_error("at least one --gen t0,t1,... is required");
  }
  std::vector<TypeVector> types;
  types.reserve(gens.size());
  for (const std::string& g : gens) types.push_back(parse_type(g));
  return CayleySpec(p, n, std::move(types));
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
    std::cout << "wrote " << out_path << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw parameter_error("cannot open " + out_path);
    f << text;
    std::cout << "wrote " << out_path << "\n";
  }
}

void print_spectrum_summary(const SpectrumReport& report) {
  std::cout << "lambda_max = " << dec(report.lambda_max) << " at type "
            << report.lambda_max_witness.to_string() << "\n";
  std::cout << "lambda_min = " << dec(report.lambda_min) << " at type "
            << report.lambda_min_witness.to_string() << "\n";
  if (report.lambda_min == -report.lambda_max) {
    std::cout << "bipartite (spectrum symmetric about 0)\n";
  }
  std::cout << "chi_q lower bound = " << dec(spectral_lower_bound(report))
            << "\n";
  if (!report.certified) {
    std::cout << "note: numeric spectrum (non-prime p), not certified\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact Cayley-graph spectra, block designs and "
               "quantum-chromatic-number certificates over Z_p^n"};
  app.require_subcommand(1);

  // ---- spectrum ----
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "type-indexed exact spectrum and spectral bound");
  int sp_p = 2, sp_n = 1;
  std::vector<std::string> sp_gens;
  std::string sp_out;
  long long sp_budget = 10'000'000;
  spectrum_cmd->add_option("--p", sp_p, "modulus p (prime)")->required();
  spectrum_cmd->add_option("--n", sp_n, "vector length n")->required();
  spectrum_cmd->add_option("--gen", sp_gens,
                           "generator type t0,t1,... (repeatable)")
      ->required();
  spectrum_cmd->add_option("--out", sp_out, "write the report JSON here");
  spectrum_cmd->add_option("--budget", sp_budget, "max ordered types");

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force spectrum over all p^n characters");
  int or_p = 2, or_n = 1;
  std::vector<std::string> or_gens;
  std::string or_out;
  long long or_budget = 1LL << 24;
  oracle_cmd->add_option("--p", or_p, "modulus p")->required();
  oracle_cmd->add_option("--n", or_n, "vector length n")->required();
  oracle_cmd->add_option("--gen", or_gens,
                         "generator type t0,t1,... (repeatable)")
      ->required();
  oracle_cmd->add_option("--out", or_out, "write the report JSON here");
  oracle_cmd->add_option("--budget", or_budget,
                         "max character-generator products");

  // ---- design ----
  auto* design_cmd =
      app.add_subcommand("design", "construct and verify a BIBD family member");
  std::string design_family;
  long long design_param = 0;
  std::string design_out;
  design_cmd
      ->add_option("family", design_family,
                   "one of paley, hadamard, twinprime, menon")
      ->required();
  design_cmd->add_option("parameter", design_param, "family parameter")
      ->required();
  design_cmd->add_option("--out", design_out, "write the design JSON here");

  // ---- represent ----
  auto* rep_cmd = app.add_subcommand(
      "represent", "flat orthogonal representation from a design");
  std::string rep_family, rep_design_file, rep_out;
  long long rep_param = 0;
  bool rep_emit_matrix = false;
  rep_cmd->add_option("--family", rep_family,
                      "paley, hadamard, twinprime or menon");
  rep_cmd->add_option("--param", rep_param, "family parameter");
  rep_cmd->add_option("--design", rep_design_file, "design JSON file");
  rep_cmd->add_option("--out", rep_out, "write the representation JSON here");
  rep_cmd->add_flag("--emit-matrix", rep_emit_matrix,
                    "materialize all 2^n rows (n <= 20)");

  // ---- certify ----
  auto* certify_cmd = app.add_subcommand(
      "certify", "machine-checked certificates for a results table");
  std::string certify_target, certify_out, certify_format = "json";
  int certify_lmax = 3, certify_tmax = 2, certify_n = 0;
  long long certify_paley_qmax = 11;
  int certify_hadamard_tmax = 2;
  long long certify_twinprime_qmax = 3;
  int certify_menon_amax = 2;
  bool certify_timings = false;
  long long certify_budget = 1LL << 24;
  certify_cmd->add_option("target", certify_target, "table1, table2 or table3")
      ->required();
  certify_cmd->add_option("--l-max", certify_lmax, "largest l (table1)");
  certify_cmd->add_option("--t-max", certify_tmax, "largest t (table1)");
  certify_cmd->add_option("--paley-qmax", certify_paley_qmax,
                          "largest Paley q (table2)");
  certify_cmd->add_option("--hadamard-tmax", certify_hadamard_tmax,
                          "largest Hadamard t (table2)");
  certify_cmd->add_option("--twinprime-qmax", certify_twinprime_qmax,
                          "largest twin-prime q (table2)");
  certify_cmd->add_option("--menon-amax", certify_menon_amax,
                          "largest Menon exponent a (table2)");
  certify_cmd->add_option("--n", certify_n, "single row n (table3)");
  certify_cmd->add_option("--format", certify_format, "json or md")
      ->check(CLI::IsMember({"json", "md"}));
  certify_cmd->add_option("--out", certify_out, "output file");
  certify_cmd->add_flag("--timings", certify_timings,
                        "include timings (breaks byte-identical reruns)");
  certify_cmd->add_option("--budget", certify_budget,
                          "oracle budget for embedding checks");
  std::string certify_family;
  certify_cmd->add_option("--family", certify_family,
                          "restrict table1 to one family");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive per-n verification of a theorem");
  std::string verify_id, verify_out, verify_format = "json";
  int verify_l = 0, verify_lmax = 0, verify_n = 6;
  verify_cmd
      ->add_option("theorem", verify_id,
                   "goal, second-largest, g5-min, duality or appendix-claims")
      ->required();
  verify_cmd->add_option("--l", verify_l, "single l");
  verify_cmd->add_option("--l-max", verify_lmax, "verify l = 1..l-max");
  verify_cmd->add_option("--n", verify_n, "length n (duality)");
  verify_cmd->add_option("--out", verify_out, "write the verdicts here");
  verify_cmd->add_option("--format", verify_format, "json or md")
      ->check(CLI::IsMember({"json", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (spectrum_cmd->parsed()) {
    TypeBudget budget;
    budget.max_ordered_types = Int(static_cast<long>(sp_budget));
    const SpectrumReport report =
        full_spectrum(spec_from_flags(sp_p, sp_n, sp_gens), budget);
    print_spectrum_summary(report);
    if (!sp_out.empty()) emit(spectrum_report_to_json(report), sp_out);
    return kExitOk;
  }

  if (oracle_cmd->parsed()) {
    OracleBudget budget;
    budget.max_products = static_cast<std::uint64_t>(or_budget);
    const SpectrumReport report =
        brute_spectrum(spec_from_flags(or_p, or_n, or_gens), budget);
    print_spectrum_summary(report);
    if (!or_out.empty()) emit(spectrum_report_to_json(report), or_out);
    return kExitOk;
  }

  auto build_design = [](const std::string& family, long long param) {
    if (family == "paley") return paley_design(param);
    if (family == "hadamard") return hadamard_design(static_cast<int>(param));
    if (family == "twinprime") return twin_prime_design(param);
    if (family == "menon") return menon_design(static_cast<int>(param));
    throw parameter_error("unknown design family '" + family + "'");
  };

  if (design_cmd->parsed()) {
    const Design d = build_design(design_family, design_param);
    const BibdParams& params = *d.verified_params;
    const SeparationProfile profile = separation_profile(d);
    std::cout << "verified (n=" << d.n << ", k=" << params.k
              << ", lambda=" << params.lambda << ", r=" << params.r
              << ", b=" << params.b << ")";
    if (profile.theta) std::cout << ", theta=" << *profile.theta;
    std::cout << "\n";
    const DesignBound bound = design_upper_bound(d);
    if (bound.applicable) {
      std::cout << "chi_q(H(" << d.n << ",2)) <= " << dec(bound.bound)
                << (bound.exact ? "" : " (ceiling)") << "\n";
    } else {
      std::cout << "counting bound not applicable\n";
    }
    if (!design_out.empty()) emit(design_to_json(d), design_out);
    return kExitOk;
  }

  if (rep_cmd->parsed()) {
    Design d;
    if (!rep_design_file.empty()) {
      d = design_from_json(read_json_file(rep_design_file));
      const BibdCheck check = verify_bibd(d);
      if (!check.ok) {
        std::cerr << "design failed verification: " << check.failure << "\n";
        return kExitFalsified;
      }
      d.verified_params = check.params;
    } else if (!rep_family.empty()) {
      d = build_design(rep_family, rep_param);
    } else {
      throw parameter_error("represent needs --family/--param or --design");
    }
    const SeparationProfile profile = separation_profile(d);
    if (!profile.theta) {
      std::cerr << "family does not separate pairs uniformly\n";
      return kExitFalsified;
    }
    const FlatRep rep = rep_from_family(d, *profile.theta);
    const OrthogonalityVerdict verdict = verify_flat_orthogonal(rep, rep.n);
    std::cout << "dimension " << rep.dimension << " representation of H("
              << rep.n << ",2): "
              << (verdict.pass ? "orthogonal on all " : "FAILED on ")
              << (verdict.pass ? std::to_string(verdict.differences_checked)
                               : std::to_string(verdict.violations.size()))
              << (verdict.pass ? " difference classes" : " difference classes")
              << "\n";
    if (!rep_out.empty()) emit(flat_rep_to_json(rep, rep_emit_matrix), rep_out);
    return verdict.pass ? kExitOk : kExitFalsified;
  }

  if (certify_cmd->parsed()) {
    std::vector<Certificate> rows;
    if (certify_target == "table1") {
      Table1Options options;
      options.l_max = certify_lmax;
      options.t_max = certify_tmax;
      options.family = certify_family;
      options.oracle_budget.max_products =
          static_cast<std::uint64_t>(certify_budget);
      rows = certify_table1(options);
    } else if (certify_target == "table2") {
      Table2Options options;
      options.paley_qs.clear();
      for (long long q = 3; q <= certify_paley_qmax; ++q) {
        if (q % 4 == 3 && prime_power_decompose(q)) options.paley_qs.push_back(q);
      }
      options.hadamard_ts.clear();
      for (int t = 1; t <= certify_hadamard_tmax; ++t) {
        options.hadamard_ts.push_back(t);
      }
      options.twinprime_qs.clear();
      for (long long q = 3; q <= certify_twinprime_qmax; ++q) {
        if (q % 2 == 1 && prime_power_decompose(q) && prime_power_decompose(q + 2)) {
          options.twinprime_qs.push_back(q);
        }
      }
      options.menon_as.clear();
      for (int a = 1; a <= certify_menon_amax; ++a) options.menon_as.push_back(a);
      rows = certify_table2(options);
    } else if (certify_target == "table3") {
      Table3Options options;
      if (certify_n != 0) options.n_min = options.n_max = certify_n;
      options.oracle_budget.max_products =
          static_cast<std::uint64_t>(certify_budget);
      rows = certify_table3(options);
    } else {
      throw parameter_error("unknown certify target '" + certify_target + "'");
    }
    for (const Certificate& cert : rows) {
      std::cout << cert.claim << ": " << verdict_name(cert.verdict);
      if (cert.lower) std::cout << ", lower " << dec(cert.lower->value);
      if (cert.upper && (cert.upper->internal || cert.upper->value != 0)) {
        std::cout << ", upper " << dec(cert.upper->value);
      }
      std::cout << "\n";
    }
    if (certify_format == "md") {
      emit_text(certificates_markdown(certify_target, rows), certify_out);
    } else {
      const Json bundle =
          certificate_bundle(certify_target, rows, certify_timings);
      if (!certify_out.empty()) {
        emit(bundle, certify_out);
      } else if (rows.empty()) {
        std::cout << bundle.dump(2) << "\n";
      }
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    int l_lo = 1, l_hi = 0;
    if (verify_l > 0) l_lo = l_hi = verify_l;
    if (verify_lmax > 0) l_hi = verify_lmax;

    Json out = Json::array();
    bool all_pass = true;

    if (verify_id == "goal" || verify_id == "second-largest") {
      const bool third = verify_id == "second-largest";
      if (l_hi == 0) l_hi = 8;
      if (third && l_hi < 3) {
        throw parameter_error("second-largest is stated for n = 3l >= 9; "
                              "need l >= 3");
      }
      if (third) l_lo = std::max(l_lo, 3);
      for (int l = l_lo; l <= l_hi; ++l) {
        const ExtremalVerdict v = verify_extremal_claims(l);
        const bool pass = third ? v.pass_third : v.pass_smallest;
        all_pass &= pass;
        Json j = extremal_verdict_to_json(v);
        j["checked"] = third ? "third-largest-absolute-eigenvalue"
                             : "second-largest-absolute-eigenvalue";
        j["pass"] = pass;
        out.push_back(std::move(j));
        std::cout << "l=" << l << ": " << (pass ? "pass" : "FAIL") << "\n";
      }
    } else if (verify_id == "g5-min") {
      if (l_hi == 0) l_hi = 4;
      l_lo = std::max(l_lo, 2);
      for (int l = l_lo; l <= l_hi; ++l) {
        const SpectrumReport report = full_spectrum(g5_spec(l));
        const Int closed = g5_min_eigenvalue_closed_form(l);
        const bool pass = report.lambda_min == closed;
        all_pass &= pass;
        Json j;
        j["l"] = l;
        j["lambda_min"] = dec(report.lambda_min);
        j["closed_form"] = dec(closed);
        j["spectral_bound"] = dec(spectral_lower_bound(report));
        j["pass"] = pass;
        out.push_back(std::move(j));
        std::cout << "l=" << l << ": lambda_min = " << dec(report.lambda_min)
                  << " (" << (pass ? "pass" : "FAIL") << ")\n";
      }
    } else if (verify_id == "duality") {
      const auto types = enumerate_types(3, verify_n, /*canonical=*/true);
      long long checked = 0;
      Json failures = Json::array();
      for (size_t i = 0; i < types.size(); ++i) {
        for (size_t j = i; j < types.size(); ++j) {
          const auto [lhs, rhs] = duality_check(verify_n, types[i], types[j]);
          ++checked;
          if (lhs != rhs) {
            all_pass = false;
            Json f;
            f["S"] = type_to_json(types[i]);
            f["T"] = type_to_json(types[j]);
            f["lhs"] = dec(lhs);
            f["rhs"] = dec(rhs);
            failures.push_back(std::move(f));
          }
        }
      }
      Json j;
      j["n"] = verify_n;
      j["pairs_checked"] = checked;
      j["pass"] = all_pass;
      j["failures"] = std::move(failures);
      out.push_back(std::move(j));
      std::cout << "n=" << verify_n << ": " << checked << " canonical pairs, "
                << (all_pass ? "pass" : "FAIL") << "\n";
    } else if (verify_id == "appendix-claims") {
      if (l_hi == 0) l_hi = 30;
      for (int l = l_lo; l <= l_hi; ++l) {
        const AppendixClaimVerdict v = verify_appendix_claims(l);
        all_pass &= v.pass;
        out.push_back(appendix_verdict_to_json(v));
        std::cout << "l=" << l << ": " << v.cases_checked << " cases, "
                  << (v.pass ? "pass" : "FAIL") << "\n";
      }
    } else {
      throw parameter_error("unknown theorem id '" + verify_id + "'");
    }

    if (verify_format == "md") {
      std::ostringstream md;
      md << "# verify " << verify_id << "\n\n| case | pass |\n|---|---|\n";
      for (const Json& row : out) {
        md << "| ";
        if (row.contains("l")) md << "l=" << row["l"].get<int>();
        if (row.contains("n") && !row.contains("l")) {
          md << "n=" << row["n"].get<int>();
        }
        md << " | " << (row["pass"].get<bool>() ? "yes" : "NO") << " |\n";
      }
      emit_text(md.str(), verify_out);
    } else if (!verify_out.empty()) {
      emit(out, verify_out);
    }
    return all_pass ? kExitOk : kExitFalsified;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qchrom::budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const qchrom::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qchrom::invariant_violation& e) {
    std::cerr << "FALSIFIED: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
