// cptkit command line: evaluate acts under non-additive functionals,
// verify black-box functionals against the CPT characterization, run the
// built-in hedging demo, and batch-elicit loss-aversion coefficients.
//
// Exit codes: 0 success, 2 input error, 3 invalid capacity,
// 4 representation failure (extraction failed or a required class was
// violated).

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cptkit/elicitation.hpp"
#include "cptkit/errors.hpp"
#include "cptkit/integration.hpp"
#include "cptkit/io.hpp"
#include "cptkit/representation.hpp"

using namespace cptkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitRepresentation = 4;

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string compact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string payoffs_compact(const std::vector<double>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += compact(xs[i]);
  }
  return out + ")";
}

struct FunctionalSpec {
  std::string functional = "choquet";  // choquet | sipos | cpt
  std::string capacity_path;
  std::string capacity_loss_path;
  bool symmetric = false;
  double lambda = 1.0;
  std::string lambda_text;  // as typed, for the exact side channel
  double tolerance = kDefaultTolerance;
};

void add_functional_options(CLI::App* cmd, FunctionalSpec& spec, bool lambda_matters) {
  cmd->add_option("--functional", spec.functional, "Functional to apply")
      ->check(CLI::IsMember({"choquet", "sipos", "cpt"}))
      ->required();
  cmd->add_option("--capacity", spec.capacity_path,
                  "Capacity JSON file (the gain-side capacity for cpt)")
      ->required();
  cmd->add_option("--capacity-loss", spec.capacity_loss_path,
                  "Loss-side capacity JSON file (cpt only)");
  cmd->add_flag("--symmetric", spec.symmetric,
                "cpt only: reuse the gain-side capacity for losses");
  if (lambda_matters) {
    cmd->add_option("--lambda", spec.lambda_text, "Loss-aversion coefficient (cpt only)");
  }
  cmd->add_option("--tolerance", spec.tolerance, "Comparison tolerance override");
}

// Resolves the functional selector to CPT parameters (the Choquet integral
// is the lambda = 1, conjugate-losses member of the family).
CptParams load_params(const FunctionalSpec& spec) {
  if (spec.functional == "cpt") {
    if (spec.capacity_loss_path.empty() == !spec.symmetric) {
      throw ParseError("cpt needs --capacity-loss or --symmetric (not both)");
    }
    if (spec.lambda_text.empty()) {
      throw ParseError("cpt needs --lambda");
    }
  } else {
    if (!spec.capacity_loss_path.empty() || spec.symmetric || !spec.lambda_text.empty()) {
      throw ParseError("--capacity-loss, --symmetric and --lambda apply to --functional cpt only");
    }
  }

  Capacity gains = load_capacity_json(std::filesystem::path(spec.capacity_path), spec.tolerance);
  if (spec.functional == "choquet") return choquet_params(gains);
  if (spec.functional == "sipos") return sipos_params(gains);

  const std::string& text = spec.lambda_text;
  double lambda = 0.0;
  auto result = std::from_chars(text.data(), text.data() + text.size(), lambda);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw ParseError("--lambda is not a decimal number: '" + text + "'");
  }
  std::optional<Rational> exact_lambda;
  try {
    exact_lambda = Rational::from_decimal_string(text);
  } catch (const Error&) {
  }
  Capacity losses = spec.symmetric
                        ? gains
                        : load_capacity_json(std::filesystem::path(spec.capacity_loss_path),
                                             spec.tolerance);
  return CptParams(std::move(gains), std::move(losses), lambda, std::move(exact_lambda));
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOptions {
  FunctionalSpec spec;
  std::string acts_path;
  std::string format = "table";
};

int run_eval(const EvalOptions& options) {
  const CptParams params = load_params(options.spec);
  const auto table = load_acts_csv(std::filesystem::path(options.acts_path));
  const bool as_json = options.format == "json";

  json doc{{"functional", options.spec.functional}, {"acts", json::array()}};
  if (options.spec.functional == "cpt") doc["lambda"] = params.lambda();

  std::vector<std::array<std::string, 5>> rows;
  if (table) {
    if (table->space != params.space()) {
      throw ParseError("acts file and capacity file use different state spaces");
    }
    doc["states"] = table->space.labels();
    for (const auto& named : table->acts) {
      const double value = cpt(named.act, params);
      const double ce = certainty_equivalent(named.act, params);
      const Act plus = positive_part(named.act);
      const Act minus = negative_part(named.act);

      std::optional<Rational> exact_value, exact_ce;
      if (named.exact) {
        exact_value = cpt_exact(*named.exact, params);
        exact_ce = certainty_equivalent_exact(*named.exact, params);
      }

      if (as_json) {
        json row{{"name", named.name},
                 {"payoffs", named.act.payoffs()},
                 {"value", value},
                 {"certainty_equivalent", ce},
                 {"positive_part", plus.payoffs()},
                 {"negative_part", minus.payoffs()}};
        if (exact_value) row["value_fraction"] = exact_value->to_string();
        if (exact_ce) row["certainty_equivalent_fraction"] = exact_ce->to_string();
        doc["acts"].push_back(std::move(row));
      } else {
        rows.push_back({named.name, fixed6(value), fixed6(ce),
                        payoffs_compact(plus.payoffs()), payoffs_compact(minus.payoffs())});
      }
    }
  }

  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else if (table) {
    std::array<std::string, 5> head{"act", "value", "cert.equiv", "positive part",
                                    "negative part"};
    std::array<std::size_t, 5> width{};
    for (std::size_t c = 0; c < 5; ++c) width[c] = head[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::array<std::string, 5>& row) {
      std::string line;
      for (std::size_t c = 0; c < 5; ++c) {
        std::string cell = row[c];
        if (c == 1 || c == 2) {  // numbers right-aligned
          cell.insert(0, width[c] - cell.size(), ' ');
        } else if (c + 1 < 5) {
          cell.resize(width[c], ' ');
        }
        line += cell;
        if (c + 1 < 5) line += "  ";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      std::cout << line << "\n";
    };
    emit(head);
    for (const auto& row : rows) emit(row);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  FunctionalSpec spec;
  std::uint64_t seed = 1;
  std::size_t pairs = 10000;
  int grid_min = -2;
  int grid_max = 2;
};

int run_verify(const VerifyOptions& options) {
  // The oracle is assembled from raw ingredients rather than CptParams so
  // that corrupted specifications (for example a negative lambda) are
  // detected by the verifier instead of being rejected at the door.
  const FunctionalSpec& spec = options.spec;
  Capacity gains = load_capacity_json(std::filesystem::path(spec.capacity_path), spec.tolerance);
  std::optional<Capacity> losses;
  double lambda = 1.0;
  if (spec.functional == "cpt") {
    if (spec.capacity_loss_path.empty() == !spec.symmetric) {
      throw ParseError("cpt needs --capacity-loss or --symmetric (not both)");
    }
    if (spec.lambda_text.empty()) throw ParseError("cpt needs --lambda");
    const std::string& text = spec.lambda_text;
    auto result = std::from_chars(text.data(), text.data() + text.size(), lambda);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
      throw ParseError("--lambda is not a decimal number: '" + text + "'");
    }
    losses = spec.symmetric
                 ? gains
                 : load_capacity_json(std::filesystem::path(spec.capacity_loss_path),
                                      spec.tolerance);
  } else if (!spec.capacity_loss_path.empty() || spec.symmetric || !spec.lambda_text.empty()) {
    throw ParseError("--capacity-loss, --symmetric and --lambda apply to --functional cpt only");
  }

  json doc{{"oracle",
            json{{"functional", spec.functional}, {"capacity", spec.capacity_path}}}};
  if (spec.functional == "cpt") {
    doc["oracle"]["lambda"] = lambda;
    doc["oracle"]["capacity_loss"] = spec.symmetric ? spec.capacity_path
                                                    : spec.capacity_loss_path;
  }

  VerificationConfig config;
  config.tolerance = spec.tolerance;
  config.seed = options.seed;
  config.random_pairs = options.pairs;
  config.random_acts = options.pairs;
  config.grid_min = options.grid_min;
  config.grid_max = options.grid_max;

  int code = kExitOk;
  try {
    const FunctionalOracle oracle = [&] {
      if (spec.functional == "choquet") return make_choquet_oracle(gains);
      if (spec.functional == "sipos") return make_sipos_oracle(gains);
      const Capacity loss_side = *losses;
      StateSpace space = gains.space();
      return FunctionalOracle(
          std::move(space),
          [gains, loss_side, lambda](const Act& f) {
            return choquet(positive_part(f), gains) -
                   lambda * choquet(negative_part(f), loss_side);
          },
          spec.tolerance);
    }();

    const auto monotonicity = check_monotonicity(oracle, config);
    const auto additivity = check_restricted_comonotonic_additivity(oracle, config);
    doc["monotonicity"] = to_json(monotonicity);
    doc["additivity"] = to_json(additivity);

    try {
      const auto extraction = extract_cpt(oracle, config);
      doc["extraction"] = to_json(extraction);
      doc["extraction"]["ok"] = true;
      doc["symmetry"] = to_json(check_symmetry(extraction.params, spec.tolerance));
      doc["attitudes"] = to_json(check_uncertainty_attitudes(extraction.params, spec.tolerance));
    } catch (const ReconstructionMismatchError& e) {
      doc["extraction"] =
          json{{"ok", false}, {"error", e.what()}, {"witness", e.witness_payoffs},
               {"deviation", e.deviation}};
      code = kExitRepresentation;
    } catch (const Error& e) {
      doc["extraction"] = json{{"ok", false}, {"error", e.what()}};
      code = kExitRepresentation;
    }

    const bool required_clean = monotonicity.clean() && additivity.restricted_clean();
    doc["verdict"] = json{{"monotone_clean", monotonicity.clean()},
                          {"restricted_classes_clean", additivity.restricted_clean()},
                          {"extraction_ok", doc["extraction"]["ok"].get<bool>()}};
    if (!required_clean) code = kExitRepresentation;
  } catch (const OracleError& e) {
    doc["error"] = e.what();
    code = kExitRepresentation;
  }

  doc["exit_code"] = code;
  std::cout << doc.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// demo
// ---------------------------------------------------------------------------

Capacity demo_capacity(const StateSpace& space) {
  const Rational zero(0, 1), one(1, 1), third(1, 3), two_thirds(2, 3);
  std::vector<Rational> exact(8, zero);
  exact[0b001] = two_thirds;
  exact[0b010] = third;
  exact[0b011] = two_thirds;
  exact[0b101] = one;
  exact[0b110] = two_thirds;
  exact[0b111] = one;
  std::vector<double> table(8);
  for (int m = 0; m < 8; ++m) table[m] = exact[m].to_double();
  return Capacity::validate(space, std::move(table), std::move(exact));
}

const char* relation_name(Preference p) {
  switch (p) {
    case Preference::f_strict:
      return "left";
    case Preference::g_strict:
      return "right";
    default:
      return "indifferent";
  }
}

int run_demo(bool as_json) {
  const StateSpace space({"s1", "s2", "s3"});
  const Capacity v = demo_capacity(space);
  const CptParams under_sipos = sipos_params(v);
  const CptParams under_choquet = choquet_params(v);

  struct Row {
    const char* name;
    std::vector<Rational> exact;
  };
  const std::vector<Row> rows = {
      {"f", {Rational(3, 1), Rational(4, 1), Rational(4, 1)}},
      {"g", {Rational(0, 1), Rational(11, 1), Rational(0, 1)}},
      {"h", {Rational(-3, 1), Rational(0, 1), Rational(-1, 1)}},
      {"f+h", {Rational(0, 1), Rational(4, 1), Rational(3, 1)}},
      {"g+h", {Rational(-3, 1), Rational(11, 1), Rational(-1, 1)}},
  };
  auto to_act = [&](const Row& row) {
    std::vector<double> payoffs;
    for (const auto& q : row.exact) payoffs.push_back(q.to_double());
    return Act(space, std::move(payoffs));
  };

  json doc;
  std::string text;
  text += "Three comonotonic acts under one non-additive capacity: combining\n";
  text += "gains with overlapping losses hedges under the Sipos integral but\n";
  text += "not under the Choquet integral.\n\n";

  // Capacity table, subsets ordered by size then position.
  std::vector<SubsetMask> masks;
  for (SubsetMask m = 0; m < 8; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [&](SubsetMask a, SubsetMask b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return a < b;
  });
  text += "Capacity v (= gain and loss weights, lambda = 1):\n";
  for (const SubsetMask m : masks) {
    const std::string label = m == 0 ? "{}" : space.subset_label(m);
    std::string line = "  " + label;
    line.resize(14, ' ');
    line += (*v.exact_table())[m].to_string();
    line.resize(22, ' ');
    line += "= " + fixed6(v.value(m));
    text += line + "\n";
  }

  text += "\nActs:\n";
  for (const auto& row : rows) {
    std::string line = "  ";
    line += row.name;
    line.resize(7, ' ');
    line += payoffs_compact(to_act(row).payoffs());
    text += line + "\n";
  }

  text += "\nValues:\n";
  text += "  act    choquet                sipos\n";
  json values = json::object();
  for (const auto& row : rows) {
    const Act act = to_act(row);
    const double c = cpt(act, under_choquet);
    const double s = cpt(act, under_sipos);
    const Rational c_exact = *cpt_exact(row.exact, under_choquet);
    const Rational s_exact = *cpt_exact(row.exact, under_sipos);
    std::string line = "  ";
    line += row.name;
    line.resize(9, ' ');
    line += fixed6(c) + " (" + c_exact.to_string() + ")";
    line.resize(32, ' ');
    line += fixed6(s) + " (" + s_exact.to_string() + ")";
    text += line + "\n";
    values[row.name] = json{
        {"choquet", json{{"value", c}, {"fraction", c_exact.to_string()}}},
        {"sipos", json{{"value", s}, {"fraction", s_exact.to_string()}}}};
  }

  const Act f = to_act(rows[0]);
  const Act g = to_act(rows[1]);
  const Act h = to_act(rows[2]);
  json preferences = json::array();
  auto record = [&](const char* left, const char* right, const Act& a, const Act& b) {
    const Preference ps = prefers(a, b, under_sipos);
    const Preference pc = prefers(a, b, under_choquet);
    preferences.push_back(json{{"left", left},
                               {"right", right},
                               {"sipos", relation_name(ps)},
                               {"choquet", relation_name(pc)}});
    auto describe = [&](Preference p) {
      if (p == Preference::indifferent) return std::string(left) + " ~ " + right;
      if (p == Preference::f_strict) return std::string(left) + " > " + right;
      return std::string(right) + " > " + left;
    };
    text += "  " + describe(ps) + " under Sipos, " + describe(pc) + " under Choquet\n";
  };
  text += "\nPreferences:\n";
  record("f", "g", f, g);
  record("f+h", "g+h", f + h, g + h);
  text += "\nMixing h into f offsets losses against gains on the shared support;\n";
  text += "the Sipos value of f+h rises above the sum of the parts while the\n";
  text += "Choquet value stays exactly additive.\n";

  if (as_json) {
    doc["states"] = space.labels();
    doc["capacity"] = capacity_to_json(v);
    json acts = json::object();
    for (const auto& row : rows) acts[row.name] = to_act(row).payoffs();
    doc["acts"] = std::move(acts);
    doc["values"] = std::move(values);
    doc["preferences"] = std::move(preferences);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// elicit
// ---------------------------------------------------------------------------

struct ElicitOptions {
  std::string input_path;
  std::string output_path;
  double tolerance = kDefaultTolerance;
};

int run_elicit(const ElicitOptions& options) {
  const auto triples = load_triples_csv(std::filesystem::path(options.input_path));

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!options.output_path.empty()) {
    file.open(options.output_path);
    if (!file) throw ParseError("cannot open output file: " + options.output_path);
    out = &file;
  }

  *out << "kind,lambda\n";
  std::vector<double> determined;
  for (const auto& triple : triples) {
    try {
      const auto result = elicit_lambda(triple, options.tolerance);
      switch (result.kind) {
        case LossAversionKind::neutral:
          *out << "neutral,1\n";
          determined.push_back(1.0);
          break;
        case LossAversionKind::determined:
          *out << "determined," << shortest(*result.lambda) << "\n";
          determined.push_back(*result.lambda);
          break;
        case LossAversionKind::indeterminate:
          *out << "indeterminate,\n";
          break;
      }
    } catch (const InconsistentTripleError&) {
      *out << "inconsistent,\n";
    }
  }

  // Disjoint independence pins a single coefficient; real answers rarely
  // oblige, so the spread across determined rows is the consistency
  // diagnostic. Aggregation is left to the caller.
  if (!determined.empty()) {
    const auto [lo, hi] = std::minmax_element(determined.begin(), determined.end());
    std::cerr << "lambda spread over " << determined.size() << " identified row(s): min "
              << shortest(*lo) << ", max " << shortest(*hi) << ", spread "
              << shortest(*hi - *lo) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-additive integration and decision evaluation on finite state spaces"};
  app.require_subcommand(1);

  EvalOptions eval_options;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate acts from a CSV file");
  add_functional_options(eval_cmd, eval_options.spec, true);
  eval_cmd->add_option("--acts", eval_options.acts_path, "Acts CSV file")->required();
  eval_cmd->add_option("--format", eval_options.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  VerifyOptions verify_options;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a functional against the CPT characterization");
  add_functional_options(verify_cmd, verify_options.spec, true);
  verify_cmd->add_option("--seed", verify_options.seed, "Seed for sampled pairs");
  verify_cmd->add_option("--pairs", verify_options.pairs, "Number of sampled pairs");
  verify_cmd->add_option("--grid-min", verify_options.grid_min, "Grid payoff minimum (n <= 3)");
  verify_cmd->add_option("--grid-max", verify_options.grid_max, "Grid payoff maximum (n <= 3)");

  bool demo_json = false;
  CLI::App* demo_cmd = app.add_subcommand("demo", "Built-in three-state hedging example");
  demo_cmd->add_flag("--json", demo_json, "Machine-readable output with exact fractions");

  ElicitOptions elicit_options;
  CLI::App* elicit_cmd =
      app.add_subcommand("elicit", "Recover loss-aversion coefficients from CE triples");
  elicit_cmd->add_option("--input", elicit_options.input_path, "CSV of alpha,beta,gamma rows")
      ->required();
  elicit_cmd->add_option("--output", elicit_options.output_path,
                         "Output CSV path (stdout if omitted)");
  elicit_cmd->add_option("--tolerance", elicit_options.tolerance, "Comparison tolerance override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_options);
    if (verify_cmd->parsed()) return run_verify(verify_options);
    if (demo_cmd->parsed()) return run_demo(demo_json);
    if (elicit_cmd->parsed()) return run_elicit(elicit_options);
  } catch (const CapacityError& e) {
    std::cerr << "invalid capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
