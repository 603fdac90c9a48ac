#include "qchrom/json_io.hpp"

#include <fstream>

namespace qchrom {

Json type_to_json(const TypeVector& t) { return Json(t.counts()); }

TypeVector type_from_json(const Json& j) {
  if (!j.is_array()) throw parameter_error("type must be a JSON array");
  return TypeVector(j.get<std::vector<int>>());
}

Json spectrum_report_to_json(const SpectrumReport& report) {
  Json j;
  j["p"] = report.p;
  j["n"] = report.n;
  Json gens = Json::array();
  for (const TypeVector& g : report.generators) gens.push_back(type_to_json(g));
  j["generators"] = std::move(gens);
  j["degree"] = dec(report.degree);
  Json entries = Json::array();
  for (const SpectrumEntry& e : report.entries) {
    Json entry;
    entry["type"] = type_to_json(e.type);
    entry["eigenvalue"] = dec(e.eigenvalue);
    entry["multiplicity"] = dec(e.multiplicity);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  j["lambda_max"] = dec(report.lambda_max);
  j["lambda_max_type"] = type_to_json(report.lambda_max_witness);
  j["lambda_min"] = dec(report.lambda_min);
  j["lambda_min_type"] = type_to_json(report.lambda_min_witness);
  j["bound"] = dec(spectral_lower_bound(report));
  j["certified"] = report.certified;
  return j;
}

Json design_to_json(const Design& d) {
  Json j;
  j["n"] = d.n;
  j["blocks"] = d.blocks;
  if (d.verified_params) {
    Json params;
    params["k"] = d.verified_params->k;
    params["lambda"] = d.verified_params->lambda;
    params["r"] = d.verified_params->r;
    params["b"] = d.verified_params->b;
    j["params"] = std::move(params);
  }
  return j;
}

Design design_from_json(const Json& j) {
  Design d;
  if (!j.contains("n") || !j.contains("blocks")) {
    throw parameter_error("design JSON needs fields n and blocks");
  }
  d.n = j.at("n").get<int>();
  d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  d.canonicalize();
  if (j.contains("params")) {
    const Json& p = j.at("params");
    d.verified_params = BibdParams{p.at("k").get<int>(), p.at("lambda").get<int>(),
                                   p.at("r").get<int>(), p.at("b").get<int>()};
  }
  return d;
}

Json flat_rep_to_json(const FlatRep& rep, bool emit_matrix) {
  Json j;
  j["n"] = rep.n;
  j["theta"] = rep.theta;
  j["blocks"] = rep.blocks;
  j["dimension"] = rep.dimension;
  if (emit_matrix) {
    if (rep.n > 20) {
      throw parameter_error("--emit-matrix materializes 2^n rows; refusing n = " +
                            std::to_string(rep.n) + " > 20");
    }
    Json rows = Json::array();
    std::vector<int> vertex(rep.n, 0);
    const std::uint64_t total = std::uint64_t{1} << rep.n;
    for (std::uint64_t v = 0; v < total; ++v) {
      for (int i = 0; i < rep.n; ++i) vertex[i] = static_cast<int>((v >> i) & 1);
      rows.push_back(rep.evaluate(vertex));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

Json extremal_verdict_to_json(const ExtremalVerdict& v) {
  Json j;
  j["l"] = v.l;
  j["n"] = v.n;
  j["pass"] = v.pass;
  j["pass_smallest"] = v.pass_smallest;
  j["pass_third"] = v.pass_third;
  j["lambda_largest"] = dec(v.lambda_largest);
  j["lambda_second_largest_abs"] = dec(v.lambda_second_abs);
  j["second_witness"] = type_to_json(v.second_witness);
  if (v.lambda_third_abs) {
    j["lambda_third_largest_abs"] = dec(*v.lambda_third_abs);
    j["third_witness"] = type_to_json(v.third_witness);
  }
  j["engine_cross_checked_types"] = v.engine_cross_checked_types;
  Json violations = Json::array();
  for (const ExtremalViolation& violation : v.violations) {
    Json item;
    item["type"] = type_to_json(violation.type);
    item["lambda"] = dec(violation.lambda);
    item["reference"] = dec(violation.reference);
    item["claim"] = violation.claim;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json appendix_verdict_to_json(const AppendixClaimVerdict& v) {
  Json j;
  j["l"] = v.l;
  j["n"] = v.n;
  j["pass"] = v.pass;
  j["cases_checked"] = v.cases_checked;
  j["failures"] = v.failures;
  return j;
}

Json subgraph_verdict_to_json(const SubgraphVerdict& v) {
  Json j;
  j["l"] = v.l;
  j["t"] = v.t;
  j["pass"] = v.pass;
  j["complete"] = v.complete;
  Json graphs = Json::array();
  for (const SubgraphRecord& g : v.graphs) {
    Json item;
    item["name"] = g.name;
    item["n"] = g.n;
    item["lambda_min"] = dec(g.lambda_min);
    item["spectral_bound"] = dec(g.spectral_bound);
    item["advertised"] = dec(g.advertised);
    item["pass"] = g.pass;
    graphs.push_back(std::move(item));
  }
  j["graphs"] = std::move(graphs);
  Json embeddings = Json::array();
  for (const EmbeddingRecord& e : v.embeddings) {
    Json item;
    item["name"] = e.name;
    item["pass"] = e.pass;
    item["skipped_budget"] = e.skipped_budget;
    embeddings.push_back(std::move(item));
  }
  j["embeddings"] = std::move(embeddings);
  j["g5_closed_form_matches"] = v.g5_closed_form_matches;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parameter_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace qchrom
