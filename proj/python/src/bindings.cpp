#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monorr/box.hpp"
#include "monorr/errors.hpp"
#include "monorr/freiman.hpp"
#include "monorr/goodness.hpp"
#include "monorr/io.hpp"
#include "monorr/ratliff_rush.hpp"

namespace py = pybind11;
using namespace monorr;

namespace {

using Exps = std::vector<exponent_t>;

Monomial to_monomial(const Exps& e) { return Monomial(e); }

Exps to_exps(const Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

std::vector<Exps> to_exps(const std::vector<Monomial>& ms) {
  std::vector<Exps> out;
  out.reserve(ms.size());
  for (const auto& m : ms)
    out.push_back(to_exps(m));
  return out;
}

MonomialIdeal make_ideal(std::size_t n, const std::vector<Exps>& gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != n)
      throw dimension_mismatch(n, g.size());
    ms.emplace_back(g);
  }
  return reduce_generators(n, std::move(ms));
}

const char* verdict_name(Verdict v) { return v == Verdict::good ? "good" : "bad"; }

const char* rule_name(Rule r) {
  switch (r) {
  case Rule::necessary_failed:
    return "necessary-failed";
  case Rule::sufficient_passed:
    return "sufficient-passed";
  case Rule::exhaustive:
    return "exhaustive";
  }
  return "?";
}

py::dict report_dict(const ClassificationReport& r) {
  py::dict d;
  d["verdict"] = verdict_name(r.verdict);
  d["rule"] = rule_name(r.rule);
  d["non_corners"] = to_exps(r.non_corners);
  d["k_bounds"] = r.k_bounds;
  if (r.witness) {
    py::dict w;
    w["monomial"] = to_exps(r.witness->monomial);
    w["power"] = r.witness->power;
    w["box_sum"] = r.witness->box_sum;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

} // namespace

PYBIND11_MODULE(_monorr, m) {
  m.doc() = "Monomial ideal powers, good/bad classification and Ratliff-Rush closures";

  static py::exception<not_m_primary> not_m_primary_exc(m, "NotMPrimaryError", PyExc_ValueError);
  static py::exception<bad_ideal> bad_ideal_exc(m, "BadIdealError", PyExc_ValueError);
  static py::exception<parse_error> parse_exc(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const not_m_primary& e) {
      not_m_primary_exc(e.what());
    } catch (const bad_ideal& e) {
      bad_ideal_exc(e.what());
    } catch (const parse_error& e) {
      parse_exc(e.what());
    }
  });

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("n"), py::arg("generators"),
           "Ideal in n variables generated by exponent tuples; generators are reduced.")
      .def_static("unit", &MonomialIdeal::unit, py::arg("n"))
      .def_property_readonly("num_vars", &MonomialIdeal::num_vars)
      .def_property_readonly("generators", [](const MonomialIdeal& I) { return to_exps(I.generators()); })
      .def("__len__", &MonomialIdeal::size)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__contains__", [](const MonomialIdeal& I, const Exps& e) { return contains(I, to_monomial(e)); })
      .def("__add__", &ideal_sum)
      .def("__mul__", &ideal_product)
      .def("__pow__", [](const MonomialIdeal& I, exponent_t l) { return ideal_power(I, l); })
      .def("__and__", &intersect)
      .def("__le__", &is_subset)
      .def("__repr__", [](const MonomialIdeal& I) {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < I.num_vars(); ++i)
          vars.push_back("x" + std::to_string(i + 1));
        return "Ideal(" + format_ideal(I, vars) + ")";
      });

  m.def(
      "parse",
      [](const std::string& text) {
        auto spec = parse_ideal(text);
        return py::make_tuple(spec.variables, to_ideal(spec));
      },
      py::arg("text"), "Parses 'x^3, y^3, x*y' (optional 'vars: x,y' header). Returns (variables, ideal).");
  m.def("format", &format_ideal, py::arg("ideal"), py::arg("variables"));

  m.def("colon", &colon_ideal, py::arg("ideal"), py::arg("by"));
  m.def(
      "colon_monomial", [](const MonomialIdeal& I, const Exps& e) { return colon_monomial(I, to_monomial(e)); },
      py::arg("ideal"), py::arg("monomial"));
  m.def(
      "profile", [](const MonomialIdeal& I) { return mprimary_profile(I).d; }, py::arg("ideal"),
      "Exponents d_i of the pure powers x_i^d_i in the ideal.");

  m.def(
      "classify", [](const MonomialIdeal& I) { return report_dict(classify(I)); }, py::arg("ideal"));
  m.def("verify_box_decomposition", [](const MonomialIdeal& I, exponent_t l) {
    return verify_box_decomposition(I, l).holds;
  });
  m.def(
      "box_ideal", [](const MonomialIdeal& I, const Exps& a) { return box_ideal(I, BoxCoord{a}); },
      py::arg("ideal"), py::arg("box"));

  m.def(
      "closure",
      [](const MonomialIdeal& I, bool skip_classify, unsigned threads) {
        py::gil_scoped_release release;
        return rr_closure(I, {.skip_classify = skip_classify, .threads = threads});
      },
      py::arg("ideal"), py::arg("skip_classify") = false, py::arg("threads") = 1);
  m.def(
      "stabilize",
      [](const MonomialIdeal& I, std::size_t axis, bool skip_classify) {
        auto s = axis_stabilize(I, axis, {.skip_classify = skip_classify});
        py::dict d;
        d["axis"] = s.axis;
        d["q"] = s.q;
        d["ideal"] = s.ideal;
        std::vector<std::vector<Exps>> rounds;
        for (const auto& f : s.new_monomials)
          rounds.push_back(to_exps(f));
        d["new_monomials"] = rounds;
        return d;
      },
      py::arg("ideal"), py::arg("axis"), py::arg("skip_classify") = false);
  m.def(
      "oracle",
      [](const MonomialIdeal& I, exponent_t k_max, std::size_t window) {
        OracleReport r;
        {
          py::gil_scoped_release release;
          r = oracle_closure(I, k_max, window);
        }
        py::dict d;
        d["k_max"] = r.k_max;
        d["window"] = r.window;
        d["counts"] = r.generator_counts();
        d["quotients"] = r.quotients;
        d["union"] = r.union_ideal;
        d["stabilized"] = r.stabilized;
        return d;
      },
      py::arg("ideal"), py::arg("k_max") = default_oracle_depth, py::arg("window") = default_oracle_window);
  m.def("is_ratliff_rush", &is_ratliff_rush, py::arg("ideal"));
  m.def("is_very_good", &is_very_good, py::arg("ideal"));

  m.def(
      "freiman",
      [](const MonomialIdeal& I) {
        auto r = freiman_check(I);
        py::dict d;
        d["equigenerated"] = r.equigenerated;
        d["degree"] = r.degree ? py::cast(*r.degree) : py::none();
        d["m_primary"] = r.m_primary;
        d["n"] = r.n;
        d["g1"] = r.g1;
        d["g2"] = r.g2;
        d["bound"] = r.bound;
        d["very_good"] = r.very_good ? py::cast(*r.very_good) : py::none();
        d["verdict"] = r.verdict == FreimanVerdict::freiman       ? "freiman"
                       : r.verdict == FreimanVerdict::not_freiman ? "not-freiman"
                                                                   : "not-applicable";
        return d;
      },
      py::arg("ideal"));
}
