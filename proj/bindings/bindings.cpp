#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "cptkit/elicitation.hpp"
#include "cptkit/errors.hpp"
#include "cptkit/integration.hpp"
#include "cptkit/io.hpp"
#include "cptkit/random.hpp"
#include "cptkit/representation.hpp"

namespace py = pybind11;
using namespace cptkit;

namespace {

std::string act_repr(const Act& a) {
  std::ostringstream out;
  out << "Act([";
  for (int i = 0; i < a.size(); ++i) {
    if (i) out << ", ";
    out << a[i];
  }
  out << "])";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_cptkit, m) {
  m.doc() = "Choquet, Sipos and piecewise-linear CPT functionals on finite state "
            "spaces, plus representation verifiers and loss-aversion elicitation";
  m.attr("__version__") = "0.1.0";
  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
  m.attr("MAX_STATES") = kMaxStates;

  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SpaceMismatchError>(m, "SpaceMismatchError", base);
  py::register_exception<InvalidActError>(m, "InvalidActError", base);
  py::register_exception<InvalidStateSpaceError>(m, "InvalidStateSpaceError", base);
  py::register_exception<InvalidParamsError>(m, "InvalidParamsError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<OracleError>(m, "OracleError", base);
  py::register_exception<DegenerateLambdaError>(m, "DegenerateLambdaError", base);
  py::register_exception<InvalidCapacityError>(m, "InvalidCapacityError", base);
  py::register_exception<ReconstructionMismatchError>(m, "ReconstructionMismatchError", base);
  py::register_exception<PositiveEntryError>(m, "PositiveEntryError", base);
  py::register_exception<InconsistentTripleError>(m, "InconsistentTripleError", base);
  py::register_exception<OverlappingSupportsError>(m, "OverlappingSupportsError", base);
  py::register_exception<WrongSignError>(m, "WrongSignError", base);
  py::register_exception<RationalOverflowError>(m, "RationalOverflowError", base);

  py::class_<StateSpace>(m, "StateSpace")
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_property_readonly("labels", &StateSpace::labels)
      .def_property_readonly("size", &StateSpace::size)
      .def("index_of", &StateSpace::index_of, py::arg("label"))
      .def("subset_label", &StateSpace::subset_label, py::arg("mask"))
      .def_property_readonly("full_mask", &StateSpace::full_mask)
      .def_property_readonly("subset_count", &StateSpace::subset_count)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", [](const StateSpace& s) {
        std::string out = "StateSpace([";
        for (int i = 0; i < s.size(); ++i) {
          if (i) out += ", ";
          out += "'" + s.label(i) + "'";
        }
        return out + "])";
      });

  py::class_<Act>(m, "Act")
      .def(py::init<StateSpace, std::vector<double>>(), py::arg("space"), py::arg("payoffs"))
      .def_static("zero", &Act::zero, py::arg("space"))
      .def_static("constant", &Act::constant, py::arg("space"), py::arg("value"))
      .def_static("indicator", &Act::indicator, py::arg("space"), py::arg("subset"))
      .def_property_readonly("payoffs", &Act::payoffs)
      .def_property_readonly("space", &Act::space)
      .def("__len__", &Act::size)
      .def("__getitem__", [](const Act& a, int i) {
        if (i < 0 || i >= a.size()) throw py::index_error();
        return a[i];
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const Act& a, double s) { return s * a; })
      .def("__rmul__", [](const Act& a, double s) { return s * a; })
      .def("__repr__", &act_repr);

  m.def("positive_part", &positive_part, py::arg("f"));
  m.def("negative_part", &negative_part, py::arg("f"));
  m.def("support", &support, py::arg("f"), "Bitmask of states with nonzero payoff");
  m.def("is_nonnegative", &is_nonnegative, py::arg("f"));
  m.def("is_nonpositive", &is_nonpositive, py::arg("f"));
  m.def("is_comonotonic", &is_comonotonic, py::arg("f"), py::arg("g"));
  m.def("is_cosigned", &is_cosigned, py::arg("f"), py::arg("g"));
  m.def("have_disjoint_supports", &have_disjoint_supports, py::arg("f"), py::arg("g"));

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("numerator"), py::arg("denominator"))
      .def_property_readonly("numerator", &Rational::numerator)
      .def_property_readonly("denominator", &Rational::denominator)
      .def("__float__", &Rational::to_double)
      .def("__str__", &Rational::to_string)
      .def(py::self == py::self)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; });

  py::class_<Capacity>(m, "Capacity")
      .def_static(
          "validate",
          [](StateSpace space, std::vector<double> table, double tolerance) {
            return Capacity::validate(std::move(space), std::move(table), tolerance);
          },
          py::arg("space"), py::arg("table"), py::arg("tolerance") = kDefaultTolerance,
          "Validate a table of 2**n values indexed by subset bitmask")
      .def_static("additive", &Capacity::additive, py::arg("space"), py::arg("weights"),
                  py::arg("tolerance") = kDefaultTolerance)
      .def_property_readonly("space", &Capacity::space)
      .def_property_readonly("table", &Capacity::table)
      .def("value", &Capacity::value, py::arg("subset"))
      .def("__repr__", [](const Capacity& v) {
        return "Capacity(on " + std::to_string(v.space().size()) + " states)";
      });

  m.def("conjugate", &conjugate, py::arg("v"));

  py::class_<ConvexityWitness>(m, "ConvexityWitness")
      .def_readonly("a", &ConvexityWitness::a)
      .def_readonly("b", &ConvexityWitness::b)
      .def_readonly("gap", &ConvexityWitness::gap);

  py::class_<ConvexityResult>(m, "ConvexityResult")
      .def_readonly("holds", &ConvexityResult::holds)
      .def_readonly("witness", &ConvexityResult::witness)
      .def("__bool__", [](const ConvexityResult& r) { return r.holds; });

  m.def("is_convex", &is_convex, py::arg("v"), py::arg("tolerance") = kDefaultTolerance);
  m.def("is_concave", &is_concave, py::arg("v"), py::arg("tolerance") = kDefaultTolerance);

  py::class_<CptParams>(m, "CptParams")
      .def(py::init<Capacity, Capacity, double>(), py::arg("v_plus"), py::arg("v_minus"),
           py::arg("loss_aversion"))
      .def_property_readonly("v_plus", &CptParams::v_plus)
      .def_property_readonly("v_minus", &CptParams::v_minus)
      .def_property_readonly("loss_aversion", &CptParams::lambda)
      .def_property_readonly("space", &CptParams::space);

  m.def("sipos_params", &sipos_params, py::arg("v"));
  m.def("choquet_params", &choquet_params, py::arg("v"));

  m.def("choquet", &choquet, py::arg("f"), py::arg("v"));
  m.def("sipos", &sipos, py::arg("f"), py::arg("v"));
  m.def("cpt", &cpt, py::arg("f"), py::arg("params"));
  m.def("certainty_equivalent", &certainty_equivalent, py::arg("f"), py::arg("params"));
  m.def("hedging_gap", &hedging_gap, py::arg("f"), py::arg("g"), py::arg("params"));

  py::class_<FunctionalOracle>(m, "FunctionalOracle")
      .def(py::init<StateSpace, std::function<double(const Act&)>, double>(), py::arg("space"),
           py::arg("eval"), py::arg("tolerance") = kDefaultTolerance,
           "Wrap a callable Act -> float; must send the unit act to 1")
      .def("__call__", &FunctionalOracle::operator())
      .def_property_readonly("space", &FunctionalOracle::space);

  m.def("make_choquet_oracle", &make_choquet_oracle, py::arg("v"));
  m.def("make_sipos_oracle", &make_sipos_oracle, py::arg("v"));
  m.def("make_cpt_oracle", &make_cpt_oracle, py::arg("params"));

  py::class_<VerificationConfig>(m, "VerificationConfig")
      .def(py::init<>())
      .def_readwrite("tolerance", &VerificationConfig::tolerance)
      .def_readwrite("grid_min", &VerificationConfig::grid_min)
      .def_readwrite("grid_max", &VerificationConfig::grid_max)
      .def_readwrite("random_pairs", &VerificationConfig::random_pairs)
      .def_readwrite("random_acts", &VerificationConfig::random_acts)
      .def_readwrite("payoff_range", &VerificationConfig::payoff_range)
      .def_readwrite("seed", &VerificationConfig::seed)
      .def_readwrite("extra_pairs", &VerificationConfig::extra_pairs);

  m.def("integer_grid_acts", &integer_grid_acts, py::arg("space"), py::arg("lo"), py::arg("hi"));
  m.def("layer_decomposition", &layer_decomposition, py::arg("f"));

  py::class_<ExtractionResult>(m, "ExtractionResult")
      .def_readonly("params", &ExtractionResult::params)
      .def_readonly("max_deviation", &ExtractionResult::max_deviation)
      .def_readonly("acts_checked", &ExtractionResult::acts_checked);

  m.def("extract_cpt", &extract_cpt, py::arg("oracle"),
        py::arg("config") = VerificationConfig{});

  py::enum_<PairClass>(m, "PairClass")
      .value("same_sign_comonotone", PairClass::same_sign_comonotone)
      .value("opposite_sign_disjoint", PairClass::opposite_sign_disjoint)
      .value("general_comonotone", PairClass::general_comonotone);

  m.def("classify_pair", &classify_pair, py::arg("f"), py::arg("g"));

  py::class_<AdditivityViolation>(m, "AdditivityViolation")
      .def_readonly("f", &AdditivityViolation::f)
      .def_readonly("g", &AdditivityViolation::g)
      .def_readonly("gap", &AdditivityViolation::gap);

  py::class_<AdditivityClassStats>(m, "AdditivityClassStats")
      .def_readonly("pairs_tested", &AdditivityClassStats::pairs_tested)
      .def_readonly("violations", &AdditivityClassStats::violations);

  py::class_<AdditivityReport>(m, "AdditivityReport")
      .def_readonly("same_sign", &AdditivityReport::same_sign)
      .def_readonly("opposite_disjoint", &AdditivityReport::opposite_disjoint)
      .def_readonly("general", &AdditivityReport::general)
      .def_readonly("pairs_skipped", &AdditivityReport::pairs_skipped)
      .def("restricted_clean", &AdditivityReport::restricted_clean);

  m.def("check_restricted_comonotonic_additivity", &check_restricted_comonotonic_additivity,
        py::arg("oracle"), py::arg("config") = VerificationConfig{});

  py::class_<MonotonicityViolation>(m, "MonotonicityViolation")
      .def_readonly("f", &MonotonicityViolation::f)
      .def_readonly("g", &MonotonicityViolation::g)
      .def_readonly("gap", &MonotonicityViolation::gap);

  py::class_<MonotonicityReport>(m, "MonotonicityReport")
      .def_readonly("pairs_tested", &MonotonicityReport::pairs_tested)
      .def_readonly("violations", &MonotonicityReport::violations)
      .def("clean", &MonotonicityReport::clean);

  m.def("check_monotonicity", &check_monotonicity, py::arg("oracle"),
        py::arg("config") = VerificationConfig{});

  py::class_<SymmetryResult>(m, "SymmetryResult")
      .def_readonly("symmetric", &SymmetryResult::symmetric)
      .def_readonly("witness", &SymmetryResult::witness)
      .def_readonly("gap", &SymmetryResult::gap)
      .def("__bool__", [](const SymmetryResult& r) { return r.symmetric; });

  m.def("check_symmetry", &check_symmetry, py::arg("params"),
        py::arg("tolerance") = kDefaultTolerance);

  py::class_<UncertaintyAttitudes>(m, "UncertaintyAttitudes")
      .def_readonly("convex_gains", &UncertaintyAttitudes::convex_gains)
      .def_readonly("convex_losses", &UncertaintyAttitudes::convex_losses)
      .def_readonly("conjugate_loss_concave", &UncertaintyAttitudes::conjugate_loss_concave);

  m.def("check_uncertainty_attitudes", &check_uncertainty_attitudes, py::arg("params"),
        py::arg("tolerance") = kDefaultTolerance);

  py::class_<ElicitationTriple>(m, "ElicitationTriple")
      .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
           py::arg("gamma"))
      .def_readonly("alpha", &ElicitationTriple::alpha)
      .def_readonly("beta", &ElicitationTriple::beta)
      .def_readonly("gamma", &ElicitationTriple::gamma);

  py::enum_<LossAversionKind>(m, "LossAversionKind")
      .value("neutral", LossAversionKind::neutral)
      .value("determined", LossAversionKind::determined)
      .value("indeterminate", LossAversionKind::indeterminate);

  py::class_<LossAversionResult>(m, "LossAversionResult")
      .def_readonly("kind", &LossAversionResult::kind)
      .def_readonly("loss_aversion", &LossAversionResult::lambda);

  m.def("elicit_lambda", &elicit_lambda, py::arg("triple"),
        py::arg("tolerance") = kDefaultTolerance);
  m.def("simulate_elicitation_triple", &simulate_elicitation_triple, py::arg("f"), py::arg("g"), py::arg("params"));

  py::enum_<Preference>(m, "Preference")
      .value("f_strict", Preference::f_strict)
      .value("g_strict", Preference::g_strict)
      .value("indifferent", Preference::indifferent);

  m.def("prefers", &prefers, py::arg("f"), py::arg("g"), py::arg("params"),
        py::arg("tolerance") = kDefaultTolerance);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", py::overload_cast<>(&Rng::uniform))
      .def("uniform", py::overload_cast<double, double>(&Rng::uniform));

  m.def("random_capacity", &random_capacity, py::arg("space"), py::arg("rng"));
  m.def("random_act", &random_act, py::arg("space"), py::arg("rng"), py::arg("lo"),
        py::arg("hi"));
  m.def("random_comonotone_pair", &random_comonotone_pair, py::arg("space"), py::arg("rng"),
        py::arg("lo"), py::arg("hi"));
  m.def("random_cpt_params", &random_cpt_params, py::arg("space"), py::arg("rng"),
        py::arg("lambda_lo"), py::arg("lambda_hi"));

  m.def(
      "load_capacity_json",
      [](const std::filesystem::path& path, double tolerance) {
        return load_capacity_json(path, tolerance);
      },
      py::arg("path"), py::arg("tolerance") = kDefaultTolerance);

  py::class_<NamedAct>(m, "NamedAct")
      .def_readonly("name", &NamedAct::name)
      .def_readonly("act", &NamedAct::act);

  py::class_<ActsTable>(m, "ActsTable")
      .def_readonly("space", &ActsTable::space)
      .def_readonly("acts", &ActsTable::acts);

  m.def(
      "load_acts_csv",
      [](const std::filesystem::path& path) { return load_acts_csv(path); }, py::arg("path"));

  m.def(
      "capacity_to_json",
      [](const Capacity& v) { return capacity_to_json(v).dump(2); }, py::arg("v"),
      "Capacity file schema as a JSON string");
}
