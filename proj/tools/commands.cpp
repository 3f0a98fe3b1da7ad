#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "permq/cycle_type.hpp"
#include "permq/errors.hpp"
#include "permq/permanent.hpp"
#include "permq/prob_poly.hpp"
#include "permq/sequences.hpp"
#include "permq/term_dist.hpp"
#include "svg.hpp"

namespace permq::cli {

using permq::to_string;

namespace {

constexpr int kDistMaxN = 30;

// Published values of W_n(m), n = 1..6, and V_n(m), n = 1..8.
const std::vector<std::vector<int>> kPublishedW = {
    {1, 0},
    {1, 0, 1},
    {1, 0, 3, 2},
    {1, 0, 6, 8, 9},
    {1, 0, 10, 20, 45, 44},
    {1, 0, 15, 40, 135, 264, 265},
};

const std::vector<std::vector<int>> kPublishedV = {
    {0, 1},
    {0, 1, 1},
    {0, 1, 2, 3},
    {0, 1, 3, 9, 11},
    {0, 1, 4, 18, 44, 53},
    {0, 1, 5, 30, 110, 265, 309},
    {0, 1, 6, 45, 220, 795, 1854, 2119},
    {0, 1, 7, 63, 385, 1855, 6489, 14833, 16687},
};

// Published exact coefficient lists at n = 3 (trailing zeros omitted).
struct PublishedExact {
  Family family;
  std::vector<int> counts;
};
const std::vector<PublishedExact> kPublishedExact = {
    {Family::A, {1, 9, 36, 78, 90, 45, 6}},
    {Family::B, {1, 6, 13, 10, 2}},
    {Family::C, {1, 6, 12, 6}},
};

Limits limits_of(const RunConfig& config) {
  Limits limits;
  limits.force = config.force;
  return limits;
}

EnumerationOptions enumeration_of(const RunConfig& config) {
  return EnumerationOptions{limits_of(config), config.threads};
}

// Writes through `emit` to the configured path, or to `out` when none is set.
int write_output(const RunConfig& config, std::ostream& out, std::ostream& err,
                 const std::function<void(std::ostream&)>& emit) {
  if (config.output_path.empty()) {
    emit(out);
    return kSuccess;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.output_path << "' for writing\n";
    return kUsageError;
  }
  emit(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << config.output_path << "' failed\n";
    return kUsageError;
  }
  return kSuccess;
}

std::vector<Family> families_of(const RunConfig& config) {
  if (config.family) {
    return {*config.family};
  }
  return {std::begin(kAllFamilies), std::end(kAllFamilies)};
}

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

using Check = std::function<std::optional<std::string>()>;

CheckResult run_check(const std::string& name, const Check& check) {
  try {
    if (auto failure = check()) {
      return {name, false, *failure};
    }
    return {name, true, {}};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string at(int n, int m) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

std::optional<std::string> check_published_tables() {
  for (std::size_t i = 0; i < kPublishedW.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto dist = e_table(Family::C, n);
    for (int m = 0; m <= n; ++m) {
      if (dist.counts[m] != kPublishedW[i][m]) {
        return "W" + at(n, m) + " = " + to_string(dist.counts[m]);
      }
    }
  }
  for (std::size_t i = 0; i < kPublishedV.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto dist = e_table(Family::B, n);
    for (int m = 0; m <= n; ++m) {
      if (dist.counts[m] != kPublishedV[i][m]) {
        return "V" + at(n, m) + " = " + to_string(dist.counts[m]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_w_routes(int n_max) {
  const auto table = w_recurrence_table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto closed = w_closed_form(n, m);
      if (closed != table[n][m]) {
        return "recurrence differs at " + at(n, m);
      }
      if (closed != w_via_cycles(n, m)) {
        return "cycle count differs at " + at(n, m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_v_routes(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      if (v_closed_form(n, m) != v_via_w(n, m)) {
        return "differs at " + at(n, m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_bruteforce(int n_max) {
  for (Family family : kAllFamilies) {
    for (int n = 1; n <= n_max; ++n) {
      if (e_table(family, n) != e_table_bruteforce(family, n)) {
        return std::string("family ") + to_char(family) + " differs at n=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_sum_identity(int n_max) {
  for (Family family : kAllFamilies) {
    for (int n = 1; n <= n_max; ++n) {
      if (e_table(family, n).total() != factorial(n)) {
        return std::string("family ") + to_char(family) + " at n=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_permanent_identities(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const auto derangement_matrix = BinaryMatrix::ones_minus_identity(n);
    if (permanent_ryser(derangement_matrix) != w_closed_form(n, n)) {
      return "per(J - I) != W_n(n) at n=" + std::to_string(n);
    }
    const auto b_matrix = derangement_matrix.with_entry(0, 0, 1);
    if (permanent_ryser(b_matrix) != v_closed_form(n, n)) {
      return "B-variant permanent != V_n(n) at n=" + std::to_string(n);
    }
    if (n <= 8 && BigInt(permanent_naive(b_matrix)) != permanent_ryser(b_matrix)) {
      return "naive and Ryser permanents differ at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_exact_polynomials(unsigned threads) {
  for (const auto& published : kPublishedExact) {
    const auto counts = exact_counts(published.family, 3, {Limits{}, threads});
    for (int i = 0; i <= counts.variables; ++i) {
      const int expected = i < static_cast<int>(published.counts.size()) ? published.counts[i] : 0;
      if (counts.counts[i] != expected) {
        return std::string("family ") + to_char(published.family) + ": N_" + std::to_string(i) +
               " = " + to_string(counts.counts[i]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_table_file(const std::string& path, Family family) {
  std::ifstream in(path);
  if (!in) {
    return "cannot open '" + path + "'";
  }
  const auto rows = read_dist_csv(in);
  if (rows.empty()) {
    return "table file has no rows";
  }
  for (const auto& row : rows) {
    if (row.n < 1 || row.m < 0 || row.m > row.n) {
      return "row with invalid index " + at(row.n, row.m);
    }
    const auto expected = e_table(family, row.n).counts[row.m];
    if (row.count != expected) {
      return "mismatch at " + at(row.n, row.m) + ": file has " + to_string(row.count) +
             ", expected " + to_string(expected);
    }
  }
  return std::nullopt;
}

std::vector<SequenceRef> load_refs(const RunConfig& config) {
  if (config.refs_path.empty()) {
    return builtin_sequence_refs();
  }
  std::ifstream in(config.refs_path);
  if (!in) {
    throw std::invalid_argument("cannot open reference file '" + config.refs_path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sequence_refs(buffer.str());
}

std::string join(const std::vector<BigInt>& values) {
  std::string text;
  for (const auto& v : values) {
    text += (text.empty() ? "" : ",") + to_string(v);
  }
  return text;
}

std::string describe(const SequenceCheck& check) {
  const auto& ref = check.ref;
  const int last_n = ref.first_n + static_cast<int>(ref.terms.size()) - 1;
  std::string text = ref.oeis_id + " " + ref.description() + " n=" + std::to_string(ref.first_n) +
                     ".." + std::to_string(last_n) + " (" + std::to_string(ref.tabled_terms) +
                     " tabled, " + std::to_string(ref.terms.size() - ref.tabled_terms) + " " +
                     ref.source + ")";
  if (check.mismatch_n) {
    const auto i = static_cast<std::size_t>(*check.mismatch_n - ref.first_n);
    text += ": mismatch at n=" + std::to_string(*check.mismatch_n) + ", reference " +
            to_string(ref.terms[i]) + ", generated " + to_string(check.generated[i]);
  }
  return text;
}

struct LookupLine {
  std::string label;
  std::vector<BigInt> prefix;
  std::string expected_id;
};

std::vector<LookupLine> lookup_plan(const std::vector<SequenceRef>& refs) {
  std::vector<LookupLine> plan;
  for (const auto& ref : refs) {
    plan.push_back({ref.description(), generate_slice(ref.selector, ref.first_n, 6), ref.oeis_id});
  }
  // Slices reported as absent from OEIS when the tables were published.
  for (int m : {4, 5, 6}) {
    Selector v{Selector::Table::V, m};
    plan.push_back({"{V_n(" + std::to_string(m) + ")}", generate_slice(v, m, 6), ""});
  }
  for (int m : {6, 7}) {
    Selector w{Selector::Table::W, m};
    plan.push_back({"{W_n(" + std::to_string(m) + ")}", generate_slice(w, m, 6), ""});
  }
  return plan;
}

void run_lookups(const RunConfig& config, const std::vector<SequenceRef>& refs, std::ostream& out) {
  for (const auto& line : lookup_plan(refs)) {
    const auto result = oeis_lookup(line.prefix, config.oeis);
    out << "[OEIS " << to_string(result.status) << "] " << line.label << " " << join(line.prefix)
        << " @ " << result.timestamp << ": ";
    if (result.status == LookupStatus::Ok) {
      if (result.ids.empty()) {
        out << "not listed";
      } else {
        for (std::size_t i = 0; i < result.ids.size(); ++i) {
          out << (i ? " " : "") << result.ids[i];
        }
      }
      if (!line.expected_id.empty()) {
        const bool found = std::find(result.ids.begin(), result.ids.end(), line.expected_id) !=
                           result.ids.end();
        out << (found ? " (includes " : " (does not include ") << line.expected_id << ")";
      }
    } else {
      out << result.message;
    }
    out << '\n';
  }
}

} // namespace

int cmd_dist(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < 1) {
    err << "error: --n must be at least 1\n";
    return kUsageError;
  }
  if (config.n > kDistMaxN && !config.force) {
    err << "error: dist is limited to n <= " << kDistMaxN << "; pass --force to go further\n";
    return kGuardViolation;
  }
  if (config.format == OutputFormat::Svg) {
    err << "error: dist supports csv and json output only\n";
    return kUsageError;
  }
  const Family family = config.family.value_or(Family::C);
  const auto rows = dist_rows(family, config.n);
  return write_output(config, out, err, [&](std::ostream& os) {
    if (config.format == OutputFormat::Csv) {
      write_dist_csv(os, rows);
    } else {
      os << dist_json(family, rows).dump(2) << '\n';
    }
  });
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < 1 || config.grid_points < 2) {
    err << "error: compare needs --n >= 1 and --grid >= 2\n";
    return kUsageError;
  }
  std::vector<Series> series;
  for (Family family : families_of(config)) {
    series.push_back({family, compare_grid(family, config.n, config.grid_points,
                                           enumeration_of(config))});
  }
  return write_output(config, out, err, [&](std::ostream& os) {
    switch (config.format) {
    case OutputFormat::Csv:
      write_real_csv(os, compare_table(series));
      break;
    case OutputFormat::Json:
      os << compare_json(config.n, series).dump(2) << '\n';
      break;
    case OutputFormat::Svg:
      os << render_comparison_svg(config.n, series);
      break;
    }
  });
}

int cmd_exact(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < 1) {
    err << "error: --n must be at least 1\n";
    return kUsageError;
  }
  if (config.format == OutputFormat::Svg) {
    err << "error: exact supports csv and json output only\n";
    return kUsageError;
  }
  const Family family = config.family.value_or(Family::C);
  const auto counts = exact_counts(family, config.n, enumeration_of(config));
  const int status = write_output(config, out, err, [&](std::ostream& os) {
    if (config.format == OutputFormat::Csv) {
      write_exact_csv(os, counts);
    } else {
      os << exact_json(counts).dump(2) << '\n';
    }
  });
  if (status == kSuccess && config.format == OutputFormat::Csv) {
    // Keep piped CSV clean: the rendered polynomial goes to stderr then.
    auto& poly_out = config.output_path.empty() ? err : out;
    poly_out << "P(r) = " << render_bernstein(counts) << '\n';
  }
  return status;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  std::vector<CheckResult> results;
  results.push_back(run_check("published W (n<=6) and V (n<=8) tables", check_published_tables));
  results.push_back(run_check("W closed form = recurrences = cycle types (n<=12)",
                              [] { return check_w_routes(12); }));
  results.push_back(run_check("V closed form = W identity (n<=12)", [] { return check_v_routes(12); }));
  results.push_back(run_check("term tables = permutation brute force (n<=10)",
                              [] { return check_bruteforce(10); }));
  results.push_back(run_check("sum of E_n(m) = n! (n<=12)", [] { return check_sum_identity(12); }));
  results.push_back(run_check("permanent identities for W_n(n) and V_n(n) (n<=12)",
                              [] { return check_permanent_identities(12); }));
  results.push_back(run_check("exact n=3 polynomials", [&] {
    return check_exact_polynomials(config.threads);
  }));
  if (!config.input_path.empty()) {
    const Family family = config.family.value_or(Family::C);
    results.push_back(run_check(std::string("table file ") + config.input_path + " (family " +
                                    to_char(family) + ")",
                                [&] { return check_table_file(config.input_path, family); }));
  }

  std::vector<SequenceRef> refs;
  try {
    refs = load_refs(config);
    for (const auto& check : check_sequences(refs)) {
      results.push_back({"sequence " + describe(check), check.passed, {}});
    }
  } catch (const std::exception& e) {
    results.push_back({"sequence reference data", false, e.what()});
  }

  bool all_passed = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) {
      out << ": " << r.detail;
    }
    out << '\n';
    all_passed = all_passed && r.passed;
  }
  if (config.oeis_enabled) {
    run_lookups(config, refs, out);
  }
  out << (all_passed ? "all checks passed\n" : "validation FAILED\n");
  return all_passed ? kSuccess : kValidationFailure;
}

int cmd_seq(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == OutputFormat::Svg) {
    err << "error: seq supports csv-style text and json output only\n";
    return kUsageError;
  }
  const auto refs = load_refs(config);
  const auto checks = check_sequences(refs);
  bool all_passed = true;
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed;
  }
  const int status = write_output(config, out, err, [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& c : checks) {
        doc.push_back({{"id", c.ref.oeis_id},
                       {"selector", c.ref.selector.to_string()},
                       {"first_n", c.ref.first_n},
                       {"source", c.ref.source},
                       {"tabled_terms", c.ref.tabled_terms},
                       {"passed", c.passed},
                       {"generated", join(c.generated)}});
      }
      os << doc.dump(2) << '\n';
    } else {
      for (const auto& c : checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << describe(c) << '\n';
      }
    }
  });
  if (status != kSuccess) {
    return status;
  }
  if (config.oeis_enabled) {
    run_lookups(config, refs, out);
  }
  return all_passed ? kSuccess : kValidationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permanent-expansion term distributions and the probability that a random "
               "0/1 matrix has a given permanent",
               "permq"};
  app.require_subcommand(1);

  struct Flags {
    std::string family;
    int n = 0;
    int grid = 0;
    std::string format;
    std::string out;
    bool force = false;
    bool oeis = false;
    unsigned threads = 0;
    std::string config;
    std::string in;
    std::string refs;
  } flags;

  std::vector<CLI::App*> subcommands;
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--family", flags.family, "Matrix family: A, B or C")
        ->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
    sub->add_option("--n", flags.n, "Matrix dimension")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid", flags.grid, "Number of grid points on [0, 1]")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", flags.format, "Output format: csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", flags.out, "Output file (default: standard output)");
    sub->add_flag("--force", flags.force, "Lift the default size guards");
    sub->add_flag("--oeis", flags.oeis, "Also query the OEIS search endpoint");
    sub->add_option("--threads", flags.threads, "Worker threads for enumeration (0 = all cores)");
    sub->add_option("--config", flags.config, "key=value config file");
    sub->add_option("--in", flags.in, "Table CSV to check (validate)");
    sub->add_option("--refs", flags.refs, "Reference sequence data file (seq, validate)");
    subcommands.push_back(sub);
    return sub;
  };
  add("dist", "Write the E_n(m) triangle for a family");
  add("compare", "Tabulate or plot Q(r) against the exact P(r)");
  add("exact", "Count assignments with the target permanent by exhaustive enumeration");
  add("validate", "Run every cross-check; non-zero exit on failure");
  add("seq", "Compare generated slices with reference integer sequences");

  std::vector<std::string> argv_storage{"permq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  RunConfig config;
  config.oeis = OeisConfig::from_environment();
  try {
    const std::string config_path = flags.config.empty() ? default_config_path() : flags.config;
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) {
        err << "error: cannot read config file '" << config_path << "'\n";
        return kUsageError;
      }
      std::stringstream text;
      text << file.rdbuf();
      apply_config_text(config, text.str());
      // Environment settings for the OEIS client still win over the file.
      config.oeis = OeisConfig::from_environment(config.oeis);
    }
    CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--family")) config.family = parse_family(flags.family);
    if (sub->count("--n")) config.n = flags.n;
    if (sub->count("--grid")) config.grid_points = flags.grid;
    if (sub->count("--format")) config.format = parse_format(flags.format);
    if (sub->count("--out")) config.output_path = flags.out;
    if (sub->count("--force")) config.force = flags.force;
    if (sub->count("--oeis")) config.oeis_enabled = flags.oeis;
    if (sub->count("--threads")) config.threads = flags.threads;
    if (sub->count("--in")) config.input_path = flags.in;
    if (sub->count("--refs")) config.refs_path = flags.refs;

    const std::string name = sub->get_name();
    if (name == "dist") return cmd_dist(config, out, err);
    if (name == "compare") return cmd_compare(config, out, err);
    if (name == "exact") return cmd_exact(config, out, err);
    if (name == "validate") return cmd_validate(config, out, err);
    return cmd_seq(config, out, err);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

} // namespace permq::cli
