#include "cptkit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cptkit/errors.hpp"

namespace cptkit {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

double parse_payoff(const std::string& token, const std::string& where) {
  if (token.empty()) throw ParseError(where + ": empty numeric cell");
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw ParseError(where + ": not a decimal number: '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(where + ": non-finite values are not allowed: '" + token + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  return in;
}

}  // namespace

std::optional<ActsTable> load_acts_csv(std::istream& in, const std::string& context) {
  std::string line;
  std::size_t row = 0;
  std::optional<StateSpace> space;
  std::vector<NamedAct> acts;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    const std::string where = context + ", row " + std::to_string(row);
    if (!space) {
      if (cells.size() < 2) {
        throw ParseError(where + ": header needs a corner cell plus at least one state label");
      }
      try {
        space.emplace(std::vector<std::string>(cells.begin() + 1, cells.end()));
      } catch (const InvalidStateSpaceError& e) {
        throw ParseError(where + ": " + e.what());
      }
      continue;
    }
    if (cells.size() != static_cast<std::size_t>(space->size()) + 1) {
      throw ParseError(where + ": expected " + std::to_string(space->size() + 1) +
                       " cells, got " + std::to_string(cells.size()));
    }
    std::vector<double> payoffs(space->size());
    std::vector<Rational> exact(space->size());
    bool exact_ok = true;
    for (int i = 0; i < space->size(); ++i) {
      payoffs[i] = parse_payoff(cells[i + 1], where);
      if (exact_ok) {
        try {
          exact[i] = Rational::from_decimal_string(cells[i + 1]);
        } catch (const Error&) {
          exact_ok = false;
        }
      }
    }
    acts.push_back(NamedAct{cells[0], Act(*space, std::move(payoffs)),
                            exact_ok ? std::optional(std::move(exact)) : std::nullopt});
  }
  if (!space) return std::nullopt;
  return ActsTable{*space, std::move(acts)};
}

std::optional<ActsTable> load_acts_csv(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_acts_csv(in, path.string());
}

namespace {

SubsetMask parse_subset_key(const std::string& key, const StateSpace& space,
                            const std::string& where) {
  if (trim(key).empty()) return 0;
  SubsetMask mask = 0;
  for (const auto& cell : split_csv_line(key)) {
    if (!space.has_label(cell)) {
      throw ParseError(where + ": subset key '" + key + "' names unknown state '" + cell + "'");
    }
    const SubsetMask bit = state_bit(space.index_of(cell));
    if (mask & bit) {
      throw ParseError(where + ": subset key '" + key + "' repeats state '" + cell + "'");
    }
    mask |= bit;
  }
  return mask;
}

std::string canonical_subset_key(const StateSpace& space, SubsetMask m) {
  return m == 0 ? "" : space.subset_label(m);
}

}  // namespace

Capacity load_capacity_json(std::istream& in, const std::string& context, double tolerance) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(context + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("states") || !doc.contains("values")) {
    throw ParseError(context + ": expected an object with 'states' and 'values'");
  }
  std::vector<std::string> labels;
  for (const auto& s : doc["states"]) {
    if (!s.is_string()) throw ParseError(context + ": state labels must be strings");
    labels.push_back(s.get<std::string>());
  }
  StateSpace space = [&] {
    try {
      return StateSpace(std::move(labels));
    } catch (const InvalidStateSpaceError& e) {
      throw ParseError(context + ": " + e.what());
    }
  }();

  const bool fractions = doc.value("fractions", false);
  const std::uint32_t count = space.subset_count();
  std::vector<double> table(count, 0.0);
  std::vector<Rational> exact(count);
  std::vector<bool> seen(count, false);

  if (!doc["values"].is_object()) throw ParseError(context + ": 'values' must be an object");
  for (const auto& [key, value] : doc["values"].items()) {
    const SubsetMask mask = parse_subset_key(key, space, context);
    if (seen[mask]) {
      throw ParseError(context + ": duplicate value for subset '" +
                       canonical_subset_key(space, mask) + "'");
    }
    seen[mask] = true;
    if (fractions) {
      Rational r;
      if (value.is_string()) {
        const std::string text = value.get<std::string>();
        try {
          r = text.find('/') != std::string::npos ? Rational::from_fraction_string(text)
                                                  : Rational::from_decimal_string(text);
        } catch (const Error& e) {
          throw ParseError(context + ": value for '" + key + "': " + e.what());
        }
      } else if (value.is_number_integer()) {
        r = Rational::from_integer(value.get<std::int64_t>());
      } else {
        throw ParseError(context + ": with fractions enabled, value for '" + key +
                         "' must be a string or integer");
      }
      exact[mask] = r;
      table[mask] = r.to_double();
    } else {
      if (!value.is_number()) {
        throw ParseError(context + ": value for '" + key +
                         "' must be a number (set \"fractions\": true for strings)");
      }
      table[mask] = value.get<double>();
    }
  }
  for (SubsetMask m = 0; m < count; ++m) {
    if (!seen[m]) {
      throw MissingSubsetError(context + ": no value for subset '" +
                               canonical_subset_key(space, m) + "'");
    }
  }
  if (fractions) {
    return Capacity::validate(std::move(space), std::move(table), std::move(exact), tolerance);
  }
  return Capacity::validate(std::move(space), std::move(table), tolerance);
}

Capacity load_capacity_json(const std::filesystem::path& path, double tolerance) {
  auto in = open_or_throw(path);
  return load_capacity_json(in, path.string(), tolerance);
}

nlohmann::json capacity_to_json(const Capacity& v) {
  json values = json::object();
  const StateSpace& space = v.space();
  for (SubsetMask m = 0; m < space.subset_count(); ++m) {
    if (v.exact_table()) {
      values[canonical_subset_key(space, m)] = (*v.exact_table())[m].to_string();
    } else {
      values[canonical_subset_key(space, m)] = v.value(m);
    }
  }
  json out{{"states", space.labels()}, {"values", std::move(values)}};
  if (v.exact_table()) out["fractions"] = true;
  return out;
}

std::vector<ElicitationTriple> load_triples_csv(std::istream& in, const std::string& context) {
  std::vector<ElicitationTriple> triples;
  std::string line;
  std::size_t row = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    const std::string where = context + ", row " + std::to_string(row);
    if (first_content_line) {
      first_content_line = false;
      // Optional header: skip if the first cell is not numeric.
      double probe = 0.0;
      auto result = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), probe);
      if (result.ec != std::errc() || result.ptr != cells[0].data() + cells[0].size()) continue;
    }
    if (cells.size() != 3) {
      throw ParseError(where + ": expected alpha,beta,gamma, got " + std::to_string(cells.size()) +
                       " cells");
    }
    try {
      triples.emplace_back(parse_payoff(cells[0], where), parse_payoff(cells[1], where),
                           parse_payoff(cells[2], where));
    } catch (const WrongSignError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return triples;
}

std::vector<ElicitationTriple> load_triples_csv(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_triples_csv(in, path.string());
}

namespace {

json payoffs_json(const Act& f) { return json(f.payoffs()); }

json class_stats_json(const AdditivityClassStats& stats) {
  json violations = json::array();
  for (const auto& v : stats.violations) {
    violations.push_back(json{{"f", payoffs_json(v.f)}, {"g", payoffs_json(v.g)}, {"gap", v.gap}});
  }
  return json{{"pairs_tested", stats.pairs_tested},
              {"violation_count", stats.violations.size()},
              {"violations", std::move(violations)}};
}

}  // namespace

nlohmann::json to_json(const AdditivityReport& report) {
  return json{{"same_sign_comonotone", class_stats_json(report.same_sign)},
              {"opposite_sign_disjoint", class_stats_json(report.opposite_disjoint)},
              {"general_comonotone", class_stats_json(report.general)},
              {"pairs_skipped", report.pairs_skipped},
              {"restricted_clean", report.restricted_clean()}};
}

nlohmann::json to_json(const MonotonicityReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(json{{"f", payoffs_json(v.f)}, {"g", payoffs_json(v.g)}, {"gap", v.gap}});
  }
  return json{{"pairs_tested", report.pairs_tested},
              {"violation_count", report.violations.size()},
              {"violations", std::move(violations)},
              {"clean", report.clean()}};
}

nlohmann::json to_json(const SymmetryResult& result) {
  json out{{"symmetric", result.symmetric}};
  if (result.witness) {
    out["witness"] = payoffs_json(*result.witness);
    out["gap"] = result.gap;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

nlohmann::json to_json(const UncertaintyAttitudes& attitudes) {
  return json{{"convex_gains", attitudes.convex_gains},
              {"convex_losses", attitudes.convex_losses},
              {"conjugate_loss_concave", attitudes.conjugate_loss_concave}};
}

nlohmann::json to_json(const ExtractionResult& result) {
  return json{{"lambda", result.params.lambda()},
              {"v_plus", capacity_to_json(result.params.v_plus())},
              {"v_minus", capacity_to_json(result.params.v_minus())},
              {"max_deviation", result.max_deviation},
              {"acts_checked", result.acts_checked}};
}

}  // namespace cptkit
