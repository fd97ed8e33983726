#include "locbez/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "locbez/corpus.hpp"
#include "locbez/errors.hpp"

namespace locbez::cli {

namespace {

using nlohmann::ordered_json;

struct Settings {
  std::string field = "q";
  std::string format = "text";
  unsigned max_n = 64;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
};

struct Outcome {
  int code = kPass;
  std::optional<BezoutReport> report;
  std::string message;
  std::vector<std::string> mismatches;
};

Outcome evaluate(const std::string& f, const std::string& g, Field field, const ReportOptions& options) {
  Outcome o;
  try {
    o.report = full_report(CurvePair::parse(f, g, field), options);
    if (!o.report->all_verdicts_hold()) {
      o.code = kVerdictFailure;
      o.message = "verdict failure";
    }
  } catch (const ParseError& e) {
    o = {kInputError, std::nullopt, e.what(), {}};
  } catch (const InvalidInput& e) {
    o = {kInputError, std::nullopt, e.what(), {}};
  } catch (const RingMismatch& e) {
    o = {kInputError, std::nullopt, e.what(), {}};
  } catch (const DomainError& e) {
    o = {kInputError, std::nullopt, e.what(), {}};
  } catch (const ResourceExhausted& e) {
    o = {kResourceExhausted, std::nullopt, e.what(), {}};
  } catch (const NotStabilized& e) {
    o = {kResourceExhausted, std::nullopt, e.what(), {}};
  } catch (const EngineDisagreement& e) {
    o = {kVerdictFailure, std::nullopt, e.what(), {}};
  }
  return o;
}

// Evaluates tasks on a small pool; results come back in input order.
template <typename Task>
std::vector<Outcome> evaluate_all(const std::vector<Task>& tasks, unsigned jobs,
                                  const std::function<Outcome(const Task&)>& work) {
  std::vector<Outcome> results(tasks.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = work(tasks[i]);
  };
  if (jobs <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  pool.clear();
  return results;
}

ordered_json to_json(const BezoutReport& r) {
  ordered_json j;
  j["field"] = r.field.to_string();
  j["f"] = r.f;
  j["g"] = r.g;
  j["e"] = r.e;
  j["c"] = r.c;
  j["d"] = r.d;
  j["t"] = r.t;
  j["ell"] = r.ell;
  j["lambda"] = r.lambda;
  j["e1"] = r.e1;
  j["e2"] = r.e2;
  j["e3"] = r.e3;
  j["transversal"] = r.transversal;
  j["axis_tangent"] = r.axis_tangent;
  j["tangents_on_axes"] = r.tangents_on_axes;
  j["e_maximal"] = r.e_maximal;
  j["e_oracle"] = r.e_oracle;
  ordered_json verdicts = ordered_json::object();
  ordered_json sides = ordered_json::object();
  for (const auto& [name, v] : r.verdicts) {
    verdicts[name] = v.holds;
    sides[name] = {v.left, v.right};
  }
  j["verdicts"] = verdicts;
  j["verdict_sides"] = sides;
  ordered_json stab = ordered_json::object();
  for (const auto& [name, s] : r.stabilization) {
    ordered_json probes = ordered_json::array();
    for (const auto& [n, v] : s.probes) probes.push_back({n, v});
    stab[name] = {{"value", s.value},
                  {"n_stop", s.n_stop},
                  {"extra_probes", s.extra_probes},
                  {"extra_agree", s.extra_agree},
                  {"probes", probes}};
  }
  j["stabilization"] = stab;
  j["diagnostics"] = r.diagnostics;
  return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_text(std::ostream& out, const BezoutReport& r) {
  out << "f = " << r.f << "\n"
      << "g = " << r.g << "\n"
      << "field = " << r.field.to_string() << "\n"
      << "e = " << r.e << "  c = " << r.c << "  d = " << r.d << "  t = " << r.t << "  ell = " << r.ell
      << "  lambda = " << r.lambda << "\n"
      << "e1 = " << r.e1 << "  e2 = " << r.e2 << "  e3 = " << r.e3 << "\n"
      << "transversal = " << yes_no(r.transversal) << "  axis_tangent = " << yes_no(r.axis_tangent)
      << "  tangents_on_axes = " << yes_no(r.tangents_on_axes) << "\n";
  for (const auto& [name, v] : r.verdicts)
    out << "  " << std::left << std::setw(7) << name << (v.holds ? "holds " : "FAILS ") << v.left << " vs " << v.right
        << "\n";
  for (const auto& d : r.diagnostics) out << "  diagnostic: " << d << "\n";
}

const char* const kCsvColumns = "name,field,f,g,e,c,d,t,ell,lambda,e1,e2,e3,transversal,axis_tangent,"
                                "tangents_on_axes,THM61,THM51,PROP52,THM72,THM74A,THM74B,LEM21,status";

void write_csv_row(std::ostream& out, const std::string& name, const Outcome& o) {
  out << name << ",";
  if (o.report) {
    const BezoutReport& r = *o.report;
    out << r.field.to_string() << "," << r.f << "," << r.g << "," << r.e << "," << r.c << "," << r.d << "," << r.t
        << "," << r.ell << "," << r.lambda << "," << r.e1 << "," << r.e2 << "," << r.e3 << "," << r.transversal << ","
        << r.axis_tangent << "," << r.tangents_on_axes;
    for (const auto& [n, v] : r.verdicts) out << "," << v.holds;
  } else {
    out << std::string(22, ',');
  }
  out << "," << (o.code == kPass && o.mismatches.empty() ? "pass" : "fail") << "\n";
}

std::string verdict_summary(const BezoutReport& r) {
  std::string s;
  for (const auto& [name, v] : r.verdicts)
    if (!v.holds) s += (s.empty() ? "" : " ") + name;
  return s.empty() ? "all hold" : "FAIL " + s;
}

int first_failure(const std::vector<Outcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (o.code != kPass) return o.code;
    if (!o.mismatches.empty()) return kVerdictFailure;
  }
  return kPass;
}

int cmd_report(const Settings& s, const std::string& f, const std::string& g, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(s.field);
  ReportOptions options;
  options.max_n = s.max_n;
  const Outcome o = evaluate(f, g, field, options);
  if (!o.report) {
    err << "error: " << o.message << "\n";
    return o.code;
  }
  if (s.format == "json") {
    out << to_json(*o.report).dump(2) << "\n";
  } else if (s.format == "csv") {
    out << kCsvColumns << "\n";
    write_csv_row(out, "report", o);
  } else {
    write_text(out, *o.report);
  }
  return o.code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read corpus file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_corpus(const Settings& s, const std::string& source, std::ostream& out, std::ostream&) {
  const Field field = Field::parse(s.field);
  const std::vector<CorpusEntry> entries = source == "paper" ? builtin_corpus("paper") : parse_corpus(read_file(source));
  if (entries.empty()) throw InvalidInput("corpus has no entries");
  ReportOptions options;
  options.max_n = s.max_n;
  std::vector<Outcome> outcomes = evaluate_all<CorpusEntry>(entries, s.jobs, [&](const CorpusEntry& e) {
    Outcome o = evaluate(e.f_text, e.g_text, field, options);
    if (o.report) o.mismatches = expected_mismatches(e, *o.report);
    return o;
  });

  if (s.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      ordered_json row;
      row["name"] = entries[i].name;
      row["status"] = outcomes[i].code == kPass && outcomes[i].mismatches.empty() ? "pass" : "fail";
      row["mismatches"] = outcomes[i].mismatches;
      if (outcomes[i].report) row["report"] = to_json(*outcomes[i].report);
      if (!outcomes[i].message.empty()) row["error"] = outcomes[i].message;
      rows.push_back(row);
    }
    out << rows.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << kCsvColumns << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) write_csv_row(out, entries[i].name, outcomes[i]);
  } else {
    std::size_t width = 4;
    for (const auto& e : entries) width = std::max(width, e.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "name" << std::right;
    for (const char* col : {"e", "c", "d", "t", "ell", "e1", "e2", "e3"}) out << std::setw(5) << col;
    out << "  verdicts\n";
    std::size_t passed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Outcome& o = outcomes[i];
      out << std::left << std::setw(static_cast<int>(width)) << entries[i].name << std::right;
      if (o.report) {
        const BezoutReport& r = *o.report;
        for (long v : {r.e, r.c, r.d, r.t, r.ell, r.e1, r.e2, r.e3}) out << std::setw(5) << v;
        out << "  " << verdict_summary(r);
        for (const auto& m : o.mismatches) out << "; mismatch " << m;
      } else {
        out << "  error: " << o.message;
      }
      out << "\n";
      if (o.code == kPass && o.mismatches.empty()) ++passed;
    }
    out << passed << "/" << entries.size() << " entries pass\n";
  }
  return first_failure(outcomes);
}

int cmd_random(const Settings& s, long count, long max_degree, std::ostream& out, std::ostream& err) {
  if (count < 1) throw InvalidInput("count must be at least 1");
  if (max_degree < 1) throw InvalidInput("max_degree must be at least 1");
  const Field field = Field::parse(s.field);
  std::mt19937_64 rng(s.seed);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (long k = 0; k < count; ++k) {
    const CurvePair p = random_pair(rng, static_cast<unsigned>(max_degree), field);
    pairs.emplace_back(p.f().to_string(), p.g().to_string());
  }
  ReportOptions options;
  options.max_n = s.max_n;
  using Task = std::pair<std::string, std::string>;
  const std::vector<Outcome> outcomes =
      evaluate_all<Task>(pairs, s.jobs, [&](const Task& t) { return evaluate(t.first, t.second, field, options); });

  // Stop at the first failure in generation order.
  std::size_t processed = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (outcomes[i].code != kPass) {
      processed = i + 1;
      break;
    }
  const std::size_t passed = static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.begin() + static_cast<long>(processed),
                    [](const Outcome& o) { return o.code == kPass; }));
  const int code = first_failure(outcomes);

  if (s.format == "json") {
    ordered_json j;
    j["count"] = count;
    j["max_degree"] = max_degree;
    j["seed"] = s.seed;
    j["field"] = field.to_string();
    j["processed"] = processed;
    j["passed"] = passed;
    j["failed"] = processed - passed;
    ordered_json reports = ordered_json::array();
    for (std::size_t i = 0; i < processed; ++i) {
      if (outcomes[i].report) {
        reports.push_back(to_json(*outcomes[i].report));
      } else {
        reports.push_back({{"f", pairs[i].first}, {"g", pairs[i].second}, {"error", outcomes[i].message}});
      }
    }
    j["reports"] = reports;
    out << j.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << kCsvColumns << "\n";
    for (std::size_t i = 0; i < processed; ++i) write_csv_row(out, "random-" + std::to_string(i + 1), outcomes[i]);
  } else {
    out << "random: " << processed << " of " << count << " pairs evaluated, " << passed << " passed, "
        << processed - passed << " failed (max_degree " << max_degree << ", seed " << s.seed << ", field "
        << field.to_string() << ")\n";
  }
  if (code != kPass) {
    const std::size_t i = processed - 1;
    err << "failure on pair " << i + 1 << ": " << outcomes[i].message << "\n"
        << "rerun: locbez report --field " << field.to_string() << " '" << pairs[i].first << "' '"
        << pairs[i].second << "'\n";
  }
  return code;
}

}  // namespace

std::string report_json(const BezoutReport& report, int indent) { return to_json(report).dump(indent); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Bezout decomposition of plane curve pairs at the origin", "locbez"};
  Settings s;
  app.add_option("--field", s.field, "coefficient field: q or fp:<prime>")->capture_default_str();
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-n", s.max_n, "cap for the stabilization index")
      ->check(CLI::Range(2u, 4000u))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "seed for random pairs")->capture_default_str();
  app.add_option("--jobs", s.jobs, "worker threads (0: one per core)")->capture_default_str();
  app.require_subcommand(1);

  std::string f, g, source;
  long count = 0, max_degree = 0;
  CLI::App* report = app.add_subcommand("report", "decompose one pair f, g");
  report->add_option("f", f, "first curve")->required();
  report->add_option("g", g, "second curve")->required();
  report->fallthrough();
  CLI::App* corpus = app.add_subcommand("corpus", "run a corpus file, or the builtin 'paper' corpus");
  corpus->add_option("source", source, "path or 'paper'")->required();
  corpus->fallthrough();
  CLI::App* random = app.add_subcommand("random", "check the identities on seeded random pairs");
  random->add_option("count", count, "number of pairs")->required();
  random->add_option("max_degree", max_degree, "maximal total degree")->required();
  random->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*report) return cmd_report(s, f, g, out, err);
    if (*corpus) return cmd_corpus(s, source, out, err);
    return cmd_random(s, count, max_degree, out, err);
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const NotStabilized& e) {
    err << "error: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace locbez::cli
