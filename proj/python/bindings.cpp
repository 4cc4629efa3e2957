#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "actcond/activation.hpp"
#include "actcond/engine.hpp"
#include "actcond/errors.hpp"
#include "actcond/parser.hpp"

namespace py = pybind11;
using namespace actcond;

namespace {

// Rationals cross the boundary as fractions.Fraction. Inputs may be
// anything whose str() parses as a rational: Fraction, int, "2.3", "4/15".
py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_fraction_string(value)));
}

Rational from_python(const py::handle& value) { return parse_rational(std::string(py::str(value))); }

py::dict levels_to_dict(const std::map<std::string, Rational>& levels) {
  py::dict out;
  for (const auto& [id, level] : levels) out[py::str(id)] = to_fraction(level);
  return out;
}

std::map<std::string, Rational> levels_from_dict(const py::dict& levels) {
  std::map<std::string, Rational> out;
  for (const auto& [id, level] : levels) out[py::str(id)] = from_python(level);
  return out;
}

py::dict labels_to_dict(const TriggeringLabels& labels) {
  py::dict out;
  for (const auto& [atom, tau] : labels.tau) {
    const auto step = labels.step.at(atom);
    out[py::str(atom)] = py::make_tuple(to_fraction(tau), step == TriggeringLabels::kUnreachedStep
                                                               ? py::object(py::none())
                                                               : py::object(py::int_(step)));
  }
  return out;
}

py::list profile_to_list(const ActivationProfile& profile) {
  py::list out;
  for (const auto& e : profile.entries) {
    py::dict row;
    row["id"] = e.id;
    row["base_level"] = to_fraction(e.base_level);
    row["weighting"] = to_fraction(e.weighting);
    row["spreading"] = to_fraction(e.spreading);
    row["total"] = to_fraction(e.total);
    out.append(row);
  }
  return out;
}

Conditional as_conditional(const py::handle& q, const BeliefBase& base) {
  if (py::isinstance<py::str>(q)) return parse_conditional(std::string(py::str(q)), "q", base.signature());
  return q.cast<Conditional>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Activation-based conditional inference";

  static py::exception<Error> error(m, "Error");
  py::register_exception<SyntaxError>(m, "SyntaxError", error);
  py::register_exception<SignatureMismatch>(m, "SignatureMismatch", error);
  py::register_exception<CapacityError>(m, "CapacityError", error);
  py::register_exception<InconsistentBase>(m, "InconsistentBase", error);
  py::register_exception<IdError>(m, "IdError", error);
  py::register_exception<RangeError>(m, "RangeError", error);

  py::class_<Conditional>(m, "Conditional")
      .def_property_readonly("id", &Conditional::id)
      .def_property_readonly("consequent", [](const Conditional& r) { return r.consequent().to_string(); })
      .def_property_readonly("antecedent", [](const Conditional& r) { return r.antecedent().to_string(); })
      .def_property_readonly("atoms", &Conditional::atoms)
      .def("negated", &Conditional::negated, py::arg("id"))
      .def("__str__", &Conditional::to_string)
      .def("__repr__", [](const Conditional& r) { return "<Conditional " + r.id() + ": " + r.to_string() + ">"; });

  py::class_<BeliefBase>(m, "BeliefBase")
      .def_property_readonly("atoms", [](const BeliefBase& b) { return b.signature().atoms(); })
      .def_property_readonly("conditionals", &BeliefBase::conditionals)
      .def("ids", &BeliefBase::ids)
      .def("subset", &BeliefBase::subset, py::arg("ids"))
      .def("__getitem__", &BeliefBase::at, py::return_value_policy::copy)
      .def("__contains__", &BeliefBase::contains)
      .def("__len__", &BeliefBase::size)
      .def("__str__", [](const BeliefBase& b) { return format_belief_base({b, true}); });

  m.def("parse_belief_base", [](const std::string& text) { return parse_belief_base(text).base; }, py::arg("text"));
  m.def("parse_conditional", [](const std::string& text, const std::string& id) { return parse_conditional(text, id); },
        py::arg("text"), py::arg("id") = "q");
  m.def("parse_formula", [](const std::string& text) { return parse_formula(text).to_string(); }, py::arg("text"),
        "Parses a formula and returns its canonical text.");

  m.def("is_consistent", &is_consistent, py::arg("base"));
  m.def(
      "z_partition",
      [](const BeliefBase& base) {
        const auto result = z_partition(base);
        if (!result.consistent()) {
          std::string ids;
          for (const auto& id : result.stuck) ids += " " + id;
          throw InconsistentBase("no tolerance partition; stuck:" + ids);
        }
        return py::make_tuple(result.partition->layers, result.partition->vacuous);
      },
      py::arg("base"), "Returns (layers, vacuous).");
  m.def("system_p_infers",
        [](const BeliefBase& base, const Conditional& q) { return system_p_infers(base, q); }, py::arg("base"),
        py::arg("query"));
  m.def(
      "answer", [](const BeliefBase& base, const Conditional& q) { return to_string(answer(base, q)); },
      py::arg("base"), py::arg("query"), "System P answer: 'yes', 'no' or 'unknown'.");
  m.def("focus", &iterated_focus, py::arg("base"), py::arg("query"), py::arg("depth") = 0);

  py::class_<KnowledgeBase, std::shared_ptr<KnowledgeBase>>(m, "KnowledgeBase")
      .def(py::init<BeliefBase>(), py::arg("base"))
      .def_property_readonly("base", &KnowledgeBase::base)
      .def_property_readonly("fingerprint", &KnowledgeBase::fingerprint)
      .def_property_readonly("initial_levels",
                             [](const KnowledgeBase& kb) { return levels_to_dict(kb.initial_levels()); })
      .def("z_rank", [](const KnowledgeBase& kb, const std::string& id) { return z_rank(kb.partition(), id); })
      .def("association", [](const KnowledgeBase& kb, const std::string& a, const std::string& b) {
        return to_fraction(kb.associations().at(a, b));
      })
      .def_property_readonly("edges", [](const KnowledgeBase& kb) { return kb.network().edges(); })
      .def(
          "labels", [](const KnowledgeBase& kb, const py::handle& q) {
            return labels_to_dict(label_network(kb.network(), as_conditional(q, kb.base())));
          },
          py::arg("query"), "Atom -> (triggering value, step or None).")
      .def(
          "activation",
          [](const KnowledgeBase& kb, const py::handle& q, std::optional<py::dict> levels) {
            const auto labels = label_network(kb.network(), as_conditional(q, kb.base()));
            const auto base_levels = levels ? levels_from_dict(*levels) : kb.initial_levels();
            return profile_to_list(activation_profile(kb.base(), base_levels, kb.associations(), labels));
          },
          py::arg("query"), py::arg("levels") = py::none())
      .def("dot", [](const KnowledgeBase& kb) {
        std::ostringstream out;
        out << "graph spreading_network {\n";
        for (const auto& [a, b] : kb.network().edges()) out << "  " << a << " -- " << b << ";\n";
        out << "}\n";
        return out.str();
      });

  py::class_<Session>(m, "Session")
      .def(py::init([](std::shared_ptr<KnowledgeBase> kb, std::optional<py::dict> levels, std::uint64_t queries) {
             if (!levels) return std::make_unique<Session>(kb);
             return std::make_unique<Session>(kb, ActivationState{levels_from_dict(*levels), queries});
           }),
           py::arg("knowledge"), py::arg("levels") = py::none(), py::arg("query_count") = 0)
      .def_property_readonly("levels", [](const Session& s) { return levels_to_dict(s.state().base_levels); })
      .def_property_readonly("query_count", [](const Session& s) { return s.state().query_count; })
      .def("reset", &Session::reset)
      .def("dumps", [](const Session& s) {
        return serialize_session(s.state(), {s.knowledge().fingerprint(), 0});
      })
      .def(
          "ask",
          [](Session& s, const py::handle& q, const py::handle& theta, const py::handle& delta,
             std::optional<std::vector<py::object>> schedule, bool forget) {
            EngineConfig cfg;
            cfg.theta = from_python(theta);
            cfg.delta = from_python(delta);
            cfg.forgetting_enabled = forget;
            if (schedule)
              for (const auto& t : *schedule) cfg.schedule.push_back(from_python(t));
            const Conditional query = as_conditional(q, s.knowledge().base());
            const QueryResult result = answer_query(s, query, cfg);
            py::list steps;
            for (const auto& step : result.trace.steps)
              steps.append(py::make_tuple(to_fraction(step.theta), step.selected, to_string(step.response)));
            py::dict out;
            out["response"] = to_string(result.response);
            out["steps"] = steps;
            out["labels"] = labels_to_dict(result.trace.labels);
            out["activation"] = profile_to_list(result.trace.profile);
            out["memory"] = result.trace.memory_selection;
            return out;
          },
          py::arg("query"), py::arg("theta"), py::arg("delta") = 0, py::arg("schedule") = py::none(),
          py::arg("forget") = true,
          "Activation-based answer with threshold lowering; updates the base levels unless forget=False.");
}
