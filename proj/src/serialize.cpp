#include "infoq/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace infoq {

Json number(double v) {
  if (std::isnan(v)) {
    return nullptr;
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json to_json(const ExtendedReal& v) {
  switch (v.kind()) {
    case ExtendedReal::Kind::pos_infinity:
      return "inf";
    case ExtendedReal::Kind::neg_infinity:
      return "-inf";
    case ExtendedReal::Kind::undefined:
      return nullptr;
    case ExtendedReal::Kind::finite:
      break;
  }
  return number(v.value());
}

Json to_json(const InfoValue& v) { return to_json(v.as_extended()); }

Json to_json(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) {
    return *i;
  }
  return std::get<std::string>(label);
}

Json to_json(const Distribution& d) {
  Json values = Json::array();
  Json probs = Json::array();
  for (std::size_t k = 0; k < d.size(); ++k) {
    values.push_back(d.labels().empty() ? Json(k) : to_json(d.labels()[k]));
    probs.push_back(number(d[k]));
  }
  Json out;
  out["values"] = std::move(values);
  out["probabilities"] = std::move(probs);
  if (d.exact()) {
    out["counts"] = d.exact()->numerators;
    out["total"] = d.exact()->denominator;
  }
  return out;
}

Json to_json(const JointModel& j) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < j.rows(); ++k) {
    Json row = Json::array();
    for (std::size_t i = 0; i < j.cols(); ++i) {
      row.push_back(number(j.at(k, i)));
    }
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = j.rows();
  out["cols"] = j.cols();
  out["matrix"] = std::move(rows);
  return out;
}

Json to_json(const EntropySequence& s) {
  Json levels = Json::array();
  for (const auto& l : s.levels) {
    levels.push_back({{"level", l.level}, {"entropy", number(l.entropy)}});
  }
  Json out;
  out["shift"] = number(s.shift);
  out["levels"] = std::move(levels);
  out["converged"] = s.converged;
  out["converged_at"] = s.converged ? Json(s.converged_at) : Json(nullptr);
  return out;
}

Json to_json(const ComplexityReport& r) {
  Json out;
  out["event"] = r.event;
  out["event_prob"] = number(r.event_prob);
  out["event_info"] = to_json(r.event_info);
  out["event_mi"] = to_json(r.event_mi);
  out["avg_mi"] = to_json(r.avg_mi);
  out["entropy_f"] = to_json(r.entropy_f);
  out["least_queries"] = to_json(r.least_queries);
  out["avg_queries"] = to_json(r.avg_queries);
  out["expected_queries"] = to_json(r.expected_queries);
  out["lower_bound"] = to_json(r.lower_bound);
  out["brute_force_bound"] = number(r.brute_force_bound);
  out["benchmark_ok"] = r.benchmark_ok;
  return out;
}

Json to_json(const MarkovBound& m) {
  Json out;
  out["epsilon"] = number(m.epsilon);
  out["raw_bound"] = number(m.raw_bound);
  out["bound"] = number(m.bound);
  out["vacuous"] = m.vacuous;
  return out;
}

Json to_json(const SatTrialsBound& b) {
  Json out;
  out["variables"] = b.variables;
  out["satisfying"] = b.satisfying;
  out["exact"] = to_json(b.exact);
  out["approx"] = to_json(b.approx);
  out["relative_gap"] = to_json(b.relative_gap);
  return out;
}

Json to_json(const IdealEngineCheck& c) {
  Json avg = Json::array();
  for (const auto& a : c.avg_queries) {
    avg.push_back(to_json(a));
  }
  Json out;
  out["ideal"] = c.ideal;
  out["gap"] = number(c.gap);
  out["avg_queries"] = std::move(avg);
  out["identity_holds"] = c.identity_holds;
  return out;
}

Json to_json(const ModProfile& p) {
  Json out;
  out["modulus"] = p.modulus;
  out["domain_size"] = p.domain_size;
  out["H"] = to_json(p.entropy);
  out["closed_form"] = number(p.closed_form);
  out["distribution"] = to_json(p.distribution);
  return out;
}

Json to_json(const BoolProfile& p) {
  Json out;
  out["variables"] = p.variables;
  out["sat_count"] = p.sat_count;
  out["p1"] = number(p.p1);
  out["H"] = to_json(p.entropy);
  out["info_true"] = to_json(p.info_true);
  return out;
}

Json to_json(const TotientProfile& p) {
  Json out;
  out["bound"] = p.bound;
  out["distinct_values"] = p.distribution.size();
  out["H"] = to_json(p.entropy);
  out["carmichael_ok"] = p.carmichael_ok;
  out["preimage_bound"] = p.preimage_bound;
  out["singleton_value"] = p.carmichael_ok ? Json(nullptr) : Json(p.singleton_value);
  if (p.distribution.size() <= 64) {
    out["distribution"] = to_json(p.distribution);
  }
  return out;
}

Json to_json(const DiscreteLogProfile& p) {
  Json out;
  out["prime"] = p.prime;
  out["base"] = p.base;
  out["H"] = to_json(p.entropy);
  out["closed_form"] = number(p.closed_form);
  out["equiprobable_info"] = p.equiprobable_info;
  return out;
}

Json to_json(const RabinProfile& p) {
  Json hist = Json::object();
  for (const auto& [pre, images] : p.preimage_histogram) {
    hist[std::to_string(pre)] = images;
  }
  Json out;
  out["q1"] = p.q1;
  out["q2"] = p.q2;
  out["modulus"] = p.modulus;
  out["phi"] = p.phi;
  out["H"] = to_json(p.entropy);
  out["closed_form"] = number(p.closed_form);
  out["preimage_histogram"] = std::move(hist);
  out["four_to_one"] = p.four_to_one;
  return out;
}

Json to_json(const RsaProfile& p) {
  Json out;
  out["q1"] = p.q1;
  out["q2"] = p.q2;
  out["exponent"] = p.exponent;
  out["modulus"] = p.modulus;
  out["phi"] = p.phi;
  out["trapdoor"] = p.trapdoor;
  out["H"] = to_json(p.entropy);
  out["closed_form"] = number(p.closed_form);
  out["bijection_ok"] = p.bijection_ok;
  out["trapdoor_ok"] = p.trapdoor_ok;
  return out;
}

Json to_json(const MultiplicationProfile& p) {
  Json out;
  out["n"] = p.n;
  out["divisors"] = p.divisors;
  out["summatory"] = p.summatory;
  out["summatory_hyperbola"] = p.summatory_hyperbola;
  out["probability"] = number(p.probability);
  out["info"] = to_json(p.info);
  out["asymptotic"] = number(p.asymptotic);
  out["dirichlet_gap"] = number(p.dirichlet_gap);
  out["envelope"] = number(p.envelope);
  out["within_envelope"] = p.within_envelope;
  return out;
}

Json to_json(const SubsetSumProfile& p, bool with_histogram) {
  Json out;
  out["weights"] = p.weights;
  out["mode"] = p.meet_in_middle ? "meet-in-middle" : "exhaustive";
  out["total"] = p.total;
  out["distinct_sums"] = p.histogram.sums.size();
  out["H"] = to_json(p.entropy);
  out["zero_info"] = to_json(p.zero_info);
  out["ratio"] = to_json(p.ratio);
  out["nonzero_zero_prob"] = number(p.nonzero_zero_prob);
  if (with_histogram) {
    Json hist = Json::array();
    for (std::size_t i = 0; i < p.histogram.sums.size(); ++i) {
      hist.push_back({p.histogram.sums[i], p.histogram.counts[i]});
    }
    out["histogram"] = std::move(hist);
  }
  return out;
}

Json to_json(const BinaryChannel& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  out["p1"] = number(c.p1);
  out["eps"] = number(c.eps);
  return out;
}

Json to_json(const BppAnalysis& a) {
  Json out;
  out["input_entropy"] = number(a.input_entropy);
  out["output_entropy"] = number(a.output_entropy);
  out["conditional_entropy"] = number(a.conditional_entropy);
  out["mutual_information"] = number(a.mutual_information);
  out["expected_queries"] = to_json(a.expected_queries);
  out["avg_queries"] = to_json(a.avg_queries);
  out["factors"] = {{"event_ratio", to_json(a.event_ratio)},
                    {"output_ratio", to_json(a.output_ratio)},
                    {"entropy_ratio", to_json(a.entropy_ratio)},
                    {"expected_queries", to_json(a.expected_queries)},
                    {"product", to_json(a.factor_product)}};
  return out;
}

Json to_json(const PpAnalysis& a) {
  Json out;
  out["input_entropy"] = number(a.input_entropy);
  out["output_entropy"] = number(a.output_entropy);
  out["conditional_entropy"] = number(a.conditional_entropy);
  out["mutual_information"] = number(a.mutual_information);
  out["approx"] = number(a.approx);
  out["approx_margin_form"] = number(a.approx_margin_form);
  out["approx_forms_agree"] = a.approx_forms_agree;
  out["repetitions"] = to_json(a.repetitions);
  out["repetitions_approx"] = to_json(a.repetitions_approx);
  out["approx_rel_error"] = to_json(a.approx_rel_error);
  return out;
}

Json to_json(const ErrorThreshold& t) {
  Json out;
  out["p1"] = number(t.p1);
  out["target"] = number(t.target);
  out["solvable"] = t.solvable;
  out["eps_exact"] = t.solvable ? number(t.eps_exact) : Json("no solution in (0, 1/2)");
  out["eps_grid"] = number(t.eps_grid);
  out["eps_approx"] = number(t.eps_approx);
  out["gap"] = number(t.gap);
  return out;
}

Json to_json(const QueryTrace& t) {
  Json out;
  out["instance"] = t.instance;
  out["queries"] = t.queries;
  out["predicted"] = number(t.predicted);
  out["outcomes"] = t.outcomes;
  if (t.bracket_hi > t.bracket_lo) {
    out["bracket"] = {number(t.bracket_lo), number(t.bracket_hi)};
  }
  return out;
}

Json to_json(const GeometricResult& g) {
  Json out;
  out["p"] = number(g.p);
  out["trials"] = g.trials;
  out["mean"] = number(g.mean);
  out["expected"] = number(g.expected);
  out["sigma"] = number(g.sigma);
  out["tolerance"] = number(g.tolerance);
  out["within"] = g.within;
  return out;
}

Json to_json(const AmplificationResult& a) {
  Json out;
  out["eps"] = number(a.eps);
  out["repetitions"] = a.repetitions;
  out["trials"] = a.trials;
  out["errors"] = a.errors;
  out["error_rate"] = number(a.error_rate);
  out["exact_error"] = number(a.exact_error);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace infoq
