#include "starcount/report_json.hpp"

namespace starcount {

Json big_to_json(const BigInt& v) {
  if (fits_u64(v)) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json to_json(const QueryLedger& ledger) {
  Json j;
  j["degree"] = ledger.degree_queries;
  j["neighbor"] = ledger.neighbor_queries;
  j["random_edge"] = ledger.random_edge_queries;
  j["magnitude"] = ledger.magnitude_queries;
  j["row_samples"] = ledger.row_samples;
  j["total"] = ledger.total();
  return j;
}

Json to_json(const EstimateReport& report) {
  Json j;
  j["estimate"] = report.estimate;
  j["p"] = report.params.p;
  j["epsilon"] = report.params.epsilon;
  j["seed"] = report.params.seed;
  j["iterations"] = report.iterations;
  j["iteration_cap"] = report.iteration_cap;
  j["initial_guess"] = report.initial_guess;
  j["final_guess"] = report.final_guess;
  j["trials_per_round"] = report.trials_per_round;
  j["queries"] = to_json(report.ledger);
  j["warnings"] = report.warnings;
  return j;
}

Json to_json(const Path2Report& report) {
  Json j;
  j["estimate"] = report.estimate;
  j["L_prime"] = report.l_prime;
  j["L_prime_source"] = report.l_prime_source;
  j["r"] = report.r;
  j["epsilon"] = report.epsilon;
  j["samples_per_trial"] = report.samples_per_trial;
  j["trials"] = report.trials;
  j["accepted"] = report.accepted;
  j["rejected"] = report.rejected;
  j["queries"] = to_json(report.ledger);
  j["seed"] = report.seed;
  j["ratio_violations"] = report.ratio_violations.size();
  j["warnings"] = report.warnings;
  return j;
}

Json to_json(const ExactCounts& counts) {
  Json j;
  j["source"] = counts.source;
  j["n"] = counts.n;
  j["m"] = counts.m;
  auto per_p = [&](const std::vector<BigInt>& values) {
    Json o = Json::object();
    for (std::size_t i = 0; i < values.size(); ++i) o[std::to_string(counts.ps[i])] = big_to_json(values[i]);
    return o;
  };
  if (!counts.ps.empty()) j["p"] = counts.ps.front();
  if (!counts.star_counts.empty()) {
    j["S_p"] = big_to_json(counts.star_counts.front());
    j["star_counts"] = per_p(counts.star_counts);
  }
  if (!counts.in_star_counts.empty()) {
    j["S_p_in"] = big_to_json(counts.in_star_counts.front());
    j["S_p_out"] = big_to_json(counts.out_star_counts.front());
    j["in_star_counts"] = per_p(counts.in_star_counts);
    j["out_star_counts"] = per_p(counts.out_star_counts);
  }
  if (counts.path2) j["L"] = big_to_json(*counts.path2);
  if (counts.self_join) j["self_join"] = big_to_json(*counts.self_join);
  if (counts.join) j["join"] = big_to_json(*counts.join);
  Json hist = Json::object();
  for (const auto& [name, h] : counts.histograms) {
    Json rows = Json::array();
    for (const auto& [value, freq] : h) rows.push_back(Json::array({value, freq}));
    hist[name] = rows;
  }
  j["histograms"] = hist;
  return j;
}

Json to_json(const JensenReport& report) {
  Json j = Json::array();
  for (const auto& c : report.checks) {
    Json o;
    o["name"] = c.name;
    o["applicable"] = c.applicable;
    o["passed"] = c.passed;
    o["detail"] = c.detail;
    j.push_back(o);
  }
  return j;
}

}  // namespace starcount
