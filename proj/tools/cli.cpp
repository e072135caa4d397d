#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "infoq/channels.hpp"
#include "infoq/cnf.hpp"
#include "infoq/complexity.hpp"
#include "infoq/csv.hpp"
#include "infoq/error.hpp"
#include "infoq/joint.hpp"
#include "infoq/measure.hpp"
#include "infoq/reduction_sim.hpp"
#include "infoq/serialize.hpp"
#include "infoq/simple_approx.hpp"
#include "infoq/verify.hpp"
#include "infoq/zoo.hpp"

namespace infoq::cli {

namespace {

// Rows of JSON cells under a header; rendered as CSV, an aligned table or
// an array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  Report() = default;
  Report(Json j) : json(std::move(j)) {}

  Json json;
  std::optional<Table> table;
  std::string default_format = "json";
  bool failed = false;  // exit 1 after emitting (verify-paper)
};

std::string cell_text(const Json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_null()) {
    return "";
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') {
      q += '"';
    }
  }
  return q + "\"";
}

void flatten(const Json& j, const std::string& prefix, Table& t) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), t);
    }
    return;
  }
  t.rows.push_back({prefix, j.is_array() ? Json(j.dump()) : j});
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    os << (c ? "," : "") << csv_field(t.header[c]);
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << csv_field(cell_text(row[c]));
    }
    os << "\n";
  }
  return os.str();
}

std::string render_table(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    width[c] = t.header[c].size();
  }
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], cell_text(row[c]).size());
    }
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) {
        s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
    }
    os << s << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) {
      cells.push_back(cell_text(v));
    }
    line(cells);
  }
  return os.str();
}

std::string render(const Report& r, const std::string& requested) {
  const std::string format = requested.empty() ? r.default_format : requested;
  if (r.table) {
    if (format == "csv") {
      return render_csv(*r.table);
    }
    if (format == "table") {
      return render_table(*r.table);
    }
    Json arr = Json::array();
    for (const auto& row : r.table->rows) {
      Json obj;
      for (std::size_t c = 0; c < row.size(); ++c) {
        obj[r.table->header[c]] = row[c];
      }
      arr.push_back(std::move(obj));
    }
    Json out = r.json.is_null() ? Json::object() : r.json;
    out["rows"] = std::move(arr);
    return dump(out);
  }
  if (format == "json") {
    return dump(r.json);
  }
  Table t{{"key", "value"}, {}};
  flatten(r.json, "", t);
  return format == "csv" ? render_csv(t) : render_table(t);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "a,b;c,d" -> row-major joint matrix.
JointModel parse_matrix(const std::string& text) {
  std::vector<double> probs;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    const std::vector<double> values = parse_double_list(row);
    if (rows == 0) {
      cols = values.size();
    } else if (values.size() != cols) {
      throw DomainError("matrix rows have different lengths");
    }
    probs.insert(probs.end(), values.begin(), values.end());
    ++rows;
  }
  return JointModel(rows, cols, std::move(probs));
}

struct MatrixInput {
  std::string matrix;
  std::string csv;

  void add_to(CLI::App* app) {
    auto* m = app->add_option("--matrix", matrix, "Joint probabilities, rows split by ';' (e.g. 0.5,0;0,0.5)");
    auto* c = app->add_option("--csv", csv, "CSV file with the joint matrix, one row per f value");
    m->excludes(c);
  }

  JointModel load() const {
    if (!matrix.empty()) {
      return parse_matrix(matrix);
    }
    if (!csv.empty()) {
      std::istringstream in(read_file(csv));
      return read_joint_csv(in);
    }
    throw DomainError("give --matrix or --csv");
  }
};

Json pmi_json(const JointModel& j) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < j.rows(); ++k) {
    Json row = Json::array();
    for (std::size_t i = 0; i < j.cols(); ++i) {
      if (j.row_marginal(k) == 0.0 || j.col_marginal(i) == 0.0) {
        row.push_back(nullptr);
      } else {
        row.push_back(to_json(pmi(j, k, i)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Report joint_report(const JointModel& j) {
  Json out;
  out["rows"] = j.rows();
  out["cols"] = j.cols();
  out["H_f"] = to_json(entropy(j.f_distribution()));
  out["H_g"] = to_json(entropy(j.g_distribution()));
  out["H_f_given_g"] = to_json(conditional_entropy(j));
  out["H_g_given_f"] = to_json(conditional_entropy(j.transpose()));
  out["I"] = to_json(mutual_information(j));
  Json events = Json::array();
  for (std::size_t k = 0; k < j.rows(); ++k) {
    events.push_back(j.row_marginal(k) == 0.0 ? Json(nullptr) : to_json(event_mi(j, k)));
  }
  out["event_mi"] = std::move(events);
  out["pmi"] = pmi_json(j);
  return {out};
}

double builtin_function(const std::string& name, double x) {
  if (name == "identity") {
    return x;
  }
  if (name == "square") {
    return x * x;
  }
  if (name == "sin") {
    return std::sin(x);
  }
  if (name == "exp") {
    return std::exp(x);
  }
  throw DomainError("unknown function '" + name + "'");
}

Table ksat_table(const std::vector<KsatPoint>& points) {
  Table t{{"density", "fraction_sat", "mean_H", "mean_bound", "clauses", "instances", "std_error"}, {}};
  for (const auto& p : points) {
    t.rows.push_back({number(p.density), number(p.fraction_sat), number(p.mean_entropy), to_json(p.mean_bound),
                      Json(p.clauses), Json(p.instances), number(p.std_error)});
  }
  return t;
}

Report verify_report(const std::vector<VerifyCheck>& checks) {
  Table t{{"status", "id", "computed", "expected", "description"}, {}};
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass ? 1 : 0;
    t.rows.push_back({c.pass ? "PASS" : "FAIL", c.id, c.computed, c.expected, c.description});
  }
  Report r;
  r.json = Json::object();
  r.json["passed"] = passed;
  r.json["total"] = checks.size();
  r.table = std::move(t);
  r.default_format = "table";
  r.failed = passed != checks.size();
  return r;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information measures, query-count estimates and their numerical checks.", "infoq"};
  app.require_subcommand(1);
  std::string format;
  std::string out_path;
  app.add_option("--format", format, "Output format (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", out_path, std::string("Write the report to this file; relative paths resolve against $") +
                                        kOutputDirEnv);

  std::function<Report()> action;
  auto bind = [&action](CLI::App* sub, std::function<Report()> f) {
    sub->fallthrough();
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  // entropy
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy and self-information of a finite distribution");
  std::string dist_text, counts_text, values_file;
  auto* dist_opt = entropy_cmd->add_option("--dist", dist_text, "Probabilities, comma separated");
  auto* counts_opt = entropy_cmd->add_option("--counts", counts_text, "Nonnegative integer masses, comma separated");
  auto* values_opt = entropy_cmd->add_option("--values", values_file, "File of observed integer values (one per line)");
  dist_opt->excludes(counts_opt)->excludes(values_opt);
  counts_opt->excludes(values_opt);
  bind(entropy_cmd, [&]() -> Report {
    std::optional<Distribution> d;
    if (!dist_text.empty()) {
      d = Distribution(parse_double_list(dist_text));
    } else if (!counts_text.empty()) {
      std::vector<std::uint64_t> counts;
      for (std::int64_t c : parse_int_list(counts_text)) {
        if (c < 0) {
          throw DomainError("counts must be nonnegative");
        }
        counts.push_back(static_cast<std::uint64_t>(c));
      }
      d = Distribution::from_counts(counts);
    } else if (!values_file.empty()) {
      std::istringstream in(read_file(values_file));
      const std::vector<std::int64_t> values = read_int_column(in);
      d = distribution_of(FiniteFunction::from_outputs(std::span<const std::int64_t>(values)));
    } else {
      throw DomainError("give --dist, --counts or --values");
    }
    Json info = Json::array();
    for (std::size_t k = 0; k < d->size(); ++k) {
      info.push_back(to_json(self_information(*d, k)));
    }
    Json o;
    o["H"] = to_json(entropy(*d));
    o["self_information"] = std::move(info);
    o["total_information"] = to_json(total_information(*d));
    o["distribution"] = to_json(*d);
    return {o};
  });

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "Entropy of dyadic simple-function approximations of a sampled function");
  std::string approx_csv, approx_fn;
  double approx_a = 0.0, approx_b = 1.0;
  std::size_t approx_samples = 4096;
  int approx_levels = 10;
  auto* acsv = approx_cmd->add_option("--csv", approx_csv, "Two-column CSV of samples (x, f(x))");
  auto* afn = approx_cmd->add_option("--function", approx_fn, "Built-in function: identity, square, sin, exp");
  acsv->excludes(afn);
  approx_cmd->add_option("--a", approx_a, "Left end of the sampling interval")->capture_default_str();
  approx_cmd->add_option("--b", approx_b, "Right end of the sampling interval")->capture_default_str();
  approx_cmd->add_option("--samples", approx_samples, "Number of uniform samples")->capture_default_str();
  approx_cmd->add_option("--max-level", approx_levels, "Finest dyadic level")->capture_default_str();
  bind(approx_cmd, [&]() -> Report {
    std::optional<SampledFunction> f;
    if (!approx_csv.empty()) {
      std::istringstream in(read_file(approx_csv));
      f = read_sampled_csv(in);
    } else if (!approx_fn.empty()) {
      builtin_function(approx_fn, approx_a);
      f = SampledFunction::on_grid(approx_a, approx_b, approx_samples,
                                   [&](double x) { return builtin_function(approx_fn, x); });
    } else {
      throw DomainError("give --csv or --function");
    }
    Json o = to_json(entropy_sequence(*f, approx_levels));
    o["samples"] = f->size();
    return {o};
  });

  // joint
  auto* joint_cmd = app.add_subcommand("joint", "Entropies, mutual information and pmi of a joint matrix");
  MatrixInput joint_in;
  joint_in.add_to(joint_cmd);
  bind(joint_cmd, [&]() -> Report { return joint_report(joint_in.load()); });

  // complexity
  auto* complexity_cmd = app.add_subcommand("complexity", "Query-count estimates");
  complexity_cmd->require_subcommand(1);
  complexity_cmd->fallthrough();
  auto* report_cmd = complexity_cmd->add_subcommand("report", "Full query-count report for one event");
  MatrixInput report_in;
  report_in.add_to(report_cmd);
  std::size_t report_event = 0;
  report_cmd->add_option("--event", report_event, "Row index k of the event f = y_k")->capture_default_str();
  bind(report_cmd, [&]() -> Report {
    Report r{to_json(report(report_in.load(), report_event))};
    r.default_format = "table";
    return r;
  });
  auto* ideal_cmd = complexity_cmd->add_subcommand("ideal", "Ideal-oracle check: I(f;g) = H(f)");
  MatrixInput ideal_in;
  ideal_in.add_to(ideal_cmd);
  bind(ideal_cmd, [&]() -> Report { return {to_json(ideal_engine_check(ideal_in.load()))}; });
  auto* markov_cmd = complexity_cmd->add_subcommand("markov", "Markov bound for a polynomial query budget");
  double budget = 0.0, ratio = 0.0;
  markov_cmd->add_option("--budget", budget, "Assumed query budget")->required();
  markov_cmd->add_option("--ratio", ratio, "I(f = y_k) / H(f)")->required();
  bind(markov_cmd, [&]() -> Report { return {to_json(markov_bound(budget, ratio))}; });
  auto* satb_cmd = complexity_cmd->add_subcommand("sat-bound", "Average trials I(BOOL=1)/H(BOOL) against 2^n / k");
  int satb_n = 0;
  std::uint64_t satb_k = 0;
  satb_cmd->add_option("--n", satb_n, "Variable count")->required();
  satb_cmd->add_option("--k", satb_k, "Satisfying assignments")->required();
  bind(satb_cmd, [&]() -> Report { return {to_json(sat_trials_bound(satb_n, satb_k))}; });
  auto* bench_cmd = complexity_cmd->add_subcommand("benchmark", "Compare against brute-force search 1/p_k");
  double bench_p = 0.0, bench_info = 0.0, bench_mi = 0.0;
  bench_cmd->add_option("--pk", bench_p, "Pr(f = y_k)")->required();
  bench_cmd->add_option("--info", bench_info, "I(f = y_k) in bits")->required();
  bench_cmd->add_option("--mi", bench_mi, "I(f;g) in bits")->required();
  bind(bench_cmd, [&]() -> Report {
    const BenchmarkVerdict v = brute_force_benchmark(bench_p, InfoValue::bits(bench_info), InfoValue::bits(bench_mi));
    Json o;
    o["holds"] = v.holds;
    o["brute_force_expectation"] = number(v.brute_force_expectation);
    o["avg_queries"] = to_json(v.avg_queries);
    o["brute_force_wins"] = v.brute_force_wins;
    return {o};
  });
  auto* time_cmd = complexity_cmd->add_subcommand("time", "Pointwise query count I(f = y_k) / pmi");
  double time_info = 0.0, time_pmi = 0.0;
  time_cmd->add_option("--info", time_info, "I(f = y_k) in bits")->required();
  time_cmd->add_option("--pmi", time_pmi, "Pointwise mutual information in bits")->required();
  bind(time_cmd, [&]() -> Report {
    Json o;
    o["queries"] = to_json(pointwise_time(InfoValue::bits(time_info), time_pmi));
    return {o};
  });

  // zoo
  auto* zoo_cmd = app.add_subcommand("zoo", "Exact value distributions of concrete functions");
  zoo_cmd->require_subcommand(1);
  zoo_cmd->fallthrough();
  auto* dir_cmd = zoo_cmd->add_subcommand("dirichlet", "Indicator of the rationals on [0, 1]");
  bool dir_complement = false;
  dir_cmd->add_flag("--complement", dir_complement, "Swap the 0/1 labels");
  bind(dir_cmd, [&]() -> Report { return {Json{{"H", to_json(dirichlet_entropy(dir_complement))}}}; });
  auto* mod_cmd = zoo_cmd->add_subcommand("mod", "x mod n over full residue systems");
  std::uint64_t mod_n = 0, mod_domain = 0;
  mod_cmd->add_option("--n", mod_n, "Modulus")->required();
  mod_cmd->add_option("--domain", mod_domain, "Domain size, a multiple of n (default n)");
  bind(mod_cmd, [&]() -> Report { return {to_json(mod_profile(mod_n, mod_domain == 0 ? mod_n : mod_domain))}; });
  auto* bool_cmd = zoo_cmd->add_subcommand("bool", "Satisfying-assignment count and entropy of a CNF formula");
  std::string cnf_path;
  bool_cmd->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  bind(bool_cmd, [&]() -> Report {
    std::istringstream in(read_file(cnf_path));
    return {to_json(bool_profile(read_dimacs(in)))};
  });
  auto* tot_cmd = zoo_cmd->add_subcommand("totient", "Value distribution of Euler's phi on 1..N");
  std::uint64_t tot_n = 0;
  tot_cmd->add_option("--N", tot_n, "Upper end of the domain")->required();
  bind(tot_cmd, [&]() -> Report { return {to_json(totient_profile(tot_n))}; });
  auto* dlog_cmd = zoo_cmd->add_subcommand("dlog", "Modular exponentiation b^x mod p");
  std::uint64_t dlog_p = 0, dlog_b = 0;
  dlog_cmd->add_option("--p", dlog_p, "Odd prime modulus")->required();
  dlog_cmd->add_option("--b", dlog_b, "Primitive root base")->required();
  bind(dlog_cmd, [&]() -> Report { return {to_json(discrete_log_profile(dlog_p, dlog_b))}; });
  auto* rabin_cmd = zoo_cmd->add_subcommand("rabin", "Squaring modulo a product of two odd primes");
  std::uint64_t rabin_p = 0, rabin_q = 0;
  rabin_cmd->add_option("--p", rabin_p, "First odd prime")->required();
  rabin_cmd->add_option("--q", rabin_q, "Second odd prime")->required();
  bind(rabin_cmd, [&]() -> Report { return {to_json(rabin_profile(rabin_p, rabin_q))}; });
  auto* rsa_cmd = zoo_cmd->add_subcommand("rsa", "x^e modulo a product of two odd primes");
  std::uint64_t rsa_p = 0, rsa_q = 0, rsa_e = 0;
  rsa_cmd->add_option("--p", rsa_p, "First odd prime")->required();
  rsa_cmd->add_option("--q", rsa_q, "Second odd prime")->required();
  rsa_cmd->add_option("--e", rsa_e, "Public exponent")->required();
  bind(rsa_cmd, [&]() -> Report { return {to_json(rsa_profile(rsa_p, rsa_q, rsa_e))}; });
  auto* mult_cmd = zoo_cmd->add_subcommand("mult", "Multiplication below the hyperbola uv = n");
  std::uint64_t mult_n = 0;
  mult_cmd->add_option("--n", mult_n, "Bound n")->required();
  bind(mult_cmd, [&]() -> Report { return {to_json(multiplication_profile(mult_n))}; });
  auto* ss_cmd = zoo_cmd->add_subcommand("subset-sum", "Distribution of subset sums");
  std::string ss_weights, ss_file;
  bool ss_mitm = false, ss_hist = false;
  auto* ssw = ss_cmd->add_option("--weights", ss_weights, "Nonzero integer weights, comma separated");
  auto* ssf = ss_cmd->add_option("--weights-file", ss_file, "File of weights, one per line");
  ssw->excludes(ssf);
  ss_cmd->add_flag("--mitm", ss_mitm, "Meet-in-the-middle enumeration (up to 40 weights)");
  ss_cmd->add_flag("--histogram", ss_hist, "Include the full sum histogram");
  bind(ss_cmd, [&]() -> Report {
    SubsetSumInstance s;
    if (!ss_weights.empty()) {
      s.weights = parse_int_list(ss_weights);
    } else if (!ss_file.empty()) {
      std::istringstream in(read_file(ss_file));
      s.weights = read_int_column(in);
    } else {
      throw DomainError("give --weights or --weights-file");
    }
    return {to_json(subset_sum_profile(s, ss_mitm), ss_hist)};
  });

  // channel
  auto* channel_cmd = app.add_subcommand("channel", "Noisy decider channels rp, bpp and pp");
  channel_cmd->fallthrough();
  std::string channel_kind;
  double ch_p1 = 0.5, ch_eps = -1.0;
  bool ch_sweep = false, ch_threshold = false;
  std::string ch_p1_grid, ch_eps_grid;
  channel_cmd->add_option("kind", channel_kind, "rp, bpp or pp")->required()->check(CLI::IsMember({"rp", "bpp", "pp"}));
  channel_cmd->add_option("--p1", ch_p1, "Probability of membership")->capture_default_str();
  channel_cmd->add_option("--eps", ch_eps, "Error parameter");
  channel_cmd->add_flag("--sweep", ch_sweep, "CSV of exact against approximate values over a grid");
  channel_cmd->add_option("--p1-grid", ch_p1_grid, "Sweep: p1 values (default: --p1)");
  channel_cmd->add_option("--eps-grid", ch_eps_grid, "Sweep: eps values (default: 1..20 multiples of --eps)");
  channel_cmd->add_flag("--threshold", ch_threshold, "pp only: smallest eps meeting I >= -p1 log2 p1");
  bind(channel_cmd, [&]() -> Report {
    const ChannelKind kind = parse_channel_kind(channel_kind);
    if (ch_threshold) {
      if (kind != ChannelKind::pp) {
        throw DomainError("--threshold applies to the pp channel");
      }
      return {to_json(pp_error_threshold(ch_p1))};
    }
    if (ch_sweep) {
      const std::vector<double> p1s = ch_p1_grid.empty() ? std::vector<double>{ch_p1} : parse_double_list(ch_p1_grid);
      std::vector<double> epss;
      if (!ch_eps_grid.empty()) {
        epss = parse_double_list(ch_eps_grid);
      } else {
        if (!(ch_eps > 0.0)) {
          throw DomainError("--sweep needs --eps > 0 or --eps-grid");
        }
        for (int m = 1; m <= 20; ++m) {
          const double e = ch_eps * m;
          if (kind == ChannelKind::pp ? e < 0.5 : e <= 0.5) {
            epss.push_back(e);
          }
        }
      }
      Table t{{"p1", "eps", "output_entropy", "conditional_entropy", "mi_exact", "mi_closed_form"}, {}};
      if (kind == ChannelKind::pp) {
        t.header.emplace_back("mi_approx");
        t.header.emplace_back("approx_rel_error");
      }
      for (const SweepRow& row : sweep(kind, p1s, epss)) {
        std::vector<Json> cells = {number(row.p1),       number(row.eps),      number(row.output_entropy),
                                   number(row.conditional_entropy), number(row.mi_exact), number(row.mi_closed)};
        if (kind == ChannelKind::pp) {
          cells.push_back(number(row.mi_approx));
          cells.push_back(row.mi_exact > 0.0 ? number(std::fabs(row.mi_exact - row.mi_approx) / row.mi_exact)
                                             : Json(nullptr));
        }
        t.rows.push_back(std::move(cells));
      }
      Report r;
      r.table = std::move(t);
      r.default_format = "csv";
      return r;
    }
    if (ch_eps < 0.0) {
      throw DomainError("give --eps");
    }
    const BinaryChannel c = make_channel(kind, ch_p1, ch_eps);
    const JointModel j = channel_joint(c);
    Json o;
    o["channel"] = to_json(c);
    o["joint"] = to_json(j);
    o["output_entropy"] = number(output_entropy_closed_form(c));
    o["conditional_entropy"] = number(conditional_entropy_closed_form(c));
    o["mutual_information"] = to_json(mutual_information(j));
    if (kind == ChannelKind::bpp) {
      o["analysis"] = to_json(bpp_analysis(c));
      o["ideal"] = to_json(ideal_engine_check(j));
    } else if (kind == ChannelKind::pp) {
      o["analysis"] = to_json(pp_analysis(c));
    }
    return {o};
  });

  // sim
  auto* sim_cmd = app.add_subcommand("sim", "Query processes with counted oracle calls");
  sim_cmd->require_subcommand(1);
  sim_cmd->fallthrough();
  auto* coins_cmd = sim_cmd->add_subcommand("coins", "Find a light coin with a balance");
  std::uint64_t coins_n = 27;
  std::int64_t coins_light = -1;
  coins_cmd->add_option("--n", coins_n, "Number of coins")->capture_default_str();
  coins_cmd->add_option("--light", coins_light, "Index of the light coin (default: every index)");
  bind(coins_cmd, [&]() -> Report {
    if (coins_light >= 0) {
      return {to_json(coin_weighing_sim(coins_n, static_cast<std::uint64_t>(coins_light)))};
    }
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::uint64_t i = 0; i < coins_n; ++i) {
      const std::size_t q = coin_weighing_sim(coins_n, i).queries;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    Json o;
    o["coins"] = coins_n;
    o["min_queries"] = lo;
    o["max_queries"] = hi;
    o["ceil_log3"] = ceil_log3(coins_n);
    o["predicted"] = number(std::log2(static_cast<double>(coins_n)) / std::log2(3.0));
    return {o};
  });
  auto* bisect_cmd = sim_cmd->add_subcommand("bisect", "Bisection with sign queries");
  double bis_a = 0.0, bis_b = 1.0, bis_tol = std::ldexp(1.0, -10), bis_root = 1.0 / 3.0;
  std::string bis_csv;
  bisect_cmd->add_option("--a", bis_a, "Left end")->capture_default_str();
  bisect_cmd->add_option("--b", bis_b, "Right end")->capture_default_str();
  bisect_cmd->add_option("--tol", bis_tol, "Stop once the bracket is this narrow")->capture_default_str();
  auto* broot = bisect_cmd->add_option("--root", bis_root, "Root of the linear test function x - root");
  auto* bcsv = bisect_cmd->add_option("--csv", bis_csv, "Two-column CSV of samples instead of a linear function");
  broot->excludes(bcsv);
  bind(bisect_cmd, [&]() -> Report {
    if (!bis_csv.empty()) {
      std::istringstream in(read_file(bis_csv));
      return {to_json(bisection_sim(read_sampled_csv(in), bis_tol))};
    }
    return {to_json(bisection_sim([&](double x) { return x - bis_root; }, bis_a, bis_b, bis_tol))};
  });
  std::uint64_t seed = 0;
  auto* geo_cmd = sim_cmd->add_subcommand("geometric", "Draws until the first success");
  double geo_p = 0.25;
  std::size_t geo_trials = 100000;
  geo_cmd->add_option("--p", geo_p, "Success probability")->capture_default_str();
  geo_cmd->add_option("--trials", geo_trials, "Independent runs")->capture_default_str();
  geo_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bind(geo_cmd, [&]() -> Report { return {to_json(geometric_search_sim(geo_p, geo_trials, seed))}; });
  auto* amp_cmd = sim_cmd->add_subcommand("amplify", "Majority vote over repeated pp channel uses");
  double amp_eps = 0.1, amp_p1 = 0.5;
  std::size_t amp_r = 201, amp_trials = 10000;
  amp_cmd->add_option("--eps", amp_eps, "pp error parameter")->capture_default_str();
  amp_cmd->add_option("--p1", amp_p1, "Probability of membership")->capture_default_str();
  amp_cmd->add_option("--r", amp_r, "Odd number of repetitions")->capture_default_str();
  amp_cmd->add_option("--trials", amp_trials, "Independent runs")->capture_default_str();
  amp_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bind(amp_cmd, [&]() -> Report {
    return {to_json(amplification_sim(make_channel(ChannelKind::pp, amp_p1, amp_eps), amp_r, amp_trials, seed))};
  });

  // ksat
  auto* ksat_cmd = app.add_subcommand("ksat", "Random K-SAT satisfiability across clause densities");
  int ks_n = 16, ks_k = 3;
  std::string ks_densities = "3,3.5,4,4.27,4.5,5,5.5";
  std::size_t ks_instances = 200;
  ksat_cmd->add_option("--n", ks_n, "Variables")->capture_default_str();
  ksat_cmd->add_option("--K", ks_k, "Literals per clause")->capture_default_str();
  ksat_cmd->add_option("--densities", ks_densities, "Clause/variable ratios")->capture_default_str();
  ksat_cmd->add_option("--instances", ks_instances, "Instances per density")->capture_default_str();
  ksat_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bind(ksat_cmd, [&]() -> Report {
    Report r;
    r.table = ksat_table(ksat_experiment(ks_n, ks_k, parse_double_list(ks_densities), ks_instances, seed));
    r.default_format = "csv";
    return r;
  });

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every golden-value and property check");
  std::string fault;
  verify_cmd->add_option("--inject-fault", fault, "Corrupt the expected value of this check id (harness self-test)");
  bind(verify_cmd, [&]() -> Report { return verify_report(run_verification(VerifyOptions{fault})); });

  std::vector<const char*> argv{"infoq"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.get_name() << ": " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }
  if (!action) {
    err << "no command given\n";
    return kExitUsage;
  }
  try {
    const Report r = action();
    const std::string text = render(r, format);
    if (out_path.empty()) {
      out << text;
    } else {
      const std::filesystem::path p = resolve_output(out_path);
      std::ofstream file(p, std::ios::binary);
      if (!file || !(file << text)) {
        throw DomainError("cannot write '" + p.string() + "'");
      }
    }
    return r.failed ? kExitDomainError : kExitOk;
  } catch (const DomainError& e) {
    Json rec;
    rec["error"] = "domain";
    rec["message"] = e.what();
    err << rec.dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace infoq::cli
