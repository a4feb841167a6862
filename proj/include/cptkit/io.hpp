#ifndef CPTKIT_IO_HPP
#define CPTKIT_IO_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cptkit/act.hpp"
#include "cptkit/capacity.hpp"
#include "cptkit/elicitation.hpp"
#include "cptkit/representation.hpp"

namespace cptkit {

struct NamedAct {
  std::string name;
  Act act;
  /// Exact payoffs, present when every token of the row parsed as an
  /// exact decimal.
  std::optional<std::vector<Rational>> exact;
};

struct ActsTable {
  StateSpace space;
  std::vector<NamedAct> acts;
};

/// Acts CSV: header row is an ignored corner cell followed by the state
/// labels; each data row is an act name followed by one decimal payoff
/// per state. NaN/inf tokens are rejected. Returns nullopt for a file
/// with no content at all.
std::optional<ActsTable> load_acts_csv(std::istream& in, const std::string& context);
std::optional<ActsTable> load_acts_csv(const std::filesystem::path& path);

/// Capacity JSON:
///   {"states": ["s1","s2"], "values": {"": 0, "s1": 0.5, "s2": 0.5, "s1,s2": 1}}
/// Keys are comma-joined state labels ("" for the empty set); every
/// subset must be present. With "fractions": true, values are exact
/// strings ("2/3", "0.25") or integers, kept as an exact shadow table.
Capacity load_capacity_json(std::istream& in, const std::string& context,
                            double tolerance = kDefaultTolerance);
Capacity load_capacity_json(const std::filesystem::path& path,
                            double tolerance = kDefaultTolerance);

/// The same schema, emitted from a capacity (numeric values; exact
/// fraction strings and the "fractions" flag when an exact table exists).
nlohmann::json capacity_to_json(const Capacity& v);

/// Elicitation triples CSV: rows of alpha,beta,gamma with an optional
/// header. Malformed rows (arity, non-decimal tokens, sign violations)
/// throw ParseError naming the 1-based row.
std::vector<ElicitationTriple> load_triples_csv(std::istream& in, const std::string& context);
std::vector<ElicitationTriple> load_triples_csv(const std::filesystem::path& path);

nlohmann::json to_json(const AdditivityReport& report);
nlohmann::json to_json(const MonotonicityReport& report);
nlohmann::json to_json(const SymmetryResult& result);
nlohmann::json to_json(const UncertaintyAttitudes& attitudes);
nlohmann::json to_json(const ExtractionResult& result);

}  // namespace cptkit

#endif
