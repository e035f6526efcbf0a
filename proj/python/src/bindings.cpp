// Copyright 2026 The balcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "balcap/balance.hpp"
#include "balcap/error.hpp"
#include "balcap/functor.hpp"
#include "balcap/integrals.hpp"
#include "balcap/io.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction.
namespace pybind11::detail {

template <>
struct type_caster<balcap::Rational> {
  PYBIND11_TYPE_CASTER(balcap::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance(src, fraction) && !py::isinstance<py::int_>(src) && !py::isinstance<py::str>(src)) {
      return false;
    }
    try {
      const py::object q = fraction(src);
      value = balcap::parse_rational(py::str(q).cast<std::string>());
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const balcap::Rational& q, return_value_policy, handle) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(balcap::to_string(q)).release();
  }
};

}  // namespace pybind11::detail

namespace balcap {
namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Subset subset_of(const GroundSet& ground, const std::vector<std::string>& labels) {
  std::uint32_t mask = 0;
  for (const auto& label : labels) {
    const auto p = ground.index_of(label);
    if (!p) throw Error(ErrorKind::kBadPoint, "unknown label '" + label + "'");
    mask |= std::uint32_t{1} << *p;
  }
  return Subset(mask);
}

FuncOnX function_of(const GroundSet& ground, const std::map<std::string, Rational>& values) {
  FuncOnX f{ground, std::vector<Rational>(ground.size())};
  std::vector<bool> seen(ground.size());
  for (const auto& [label, v] : values) {
    const auto p = ground.index_of(label);
    if (!p) throw Error(ErrorKind::kBadPoint, "unknown label '" + label + "'");
    f.values[*p] = v;
    seen[*p] = true;
  }
  for (int p = 0; p < ground.size(); ++p) {
    if (!seen[p]) throw Error(ErrorKind::kParse, "missing value for label '" + ground.label(p) + "'");
  }
  return f;
}

std::map<std::string, Rational> weights_of(const ProbMeasure& mu) {
  std::map<std::string, Rational> out;
  for (int p = 0; p < mu.ground().size(); ++p) out[mu.ground().label(p)] = mu.weight(p);
  return out;
}

}  // namespace
}  // namespace balcap

PYBIND11_MODULE(_core, m) {
  using namespace balcap;
  m.doc() = "Balanced capacities, cores, Choquet and t-normed integrals";

  py::register_exception<Error>(m, "BalcapError", PyExc_ValueError);

  py::class_<Capacity>(m, "Capacity")
      .def_property_readonly("labels", [](const Capacity& c) { return c.ground().labels(); })
      .def("__call__", [](const Capacity& c, const std::vector<std::string>& labels) {
        return c(subset_of(c.ground(), labels));
      })
      .def("to_json", [](const Capacity& c) { return canonical_dump(to_json(c)); })
      .def("__eq__", [](const Capacity& a, const Capacity& b) { return a == b; });

  m.def("load_game", [](const std::string& path, int max_n) { return dense(game_from_json(read_json_file(path), max_n), max_n); },
        py::arg("path"), py::arg("max_n") = kDefaultMaxPoints);
  m.def("parse_game", [](const std::string& text, int max_n) { return dense(game_from_json(parse_json_text(text), max_n), max_n); },
        py::arg("text"), py::arg("max_n") = kDefaultMaxPoints);
  m.def("from_table",
        [](const std::vector<std::string>& labels, const std::map<std::string, Rational>& table) {
          const GroundSet ground(labels);
          std::map<Subset, Rational> entries;
          for (const auto& [key, v] : table) entries[ground.parse_key(key)] = v;
          return validate_capacity(entries, ground);
        });
  m.def("realize",
        [](const std::vector<std::string>& labels,
           const std::vector<std::pair<std::vector<std::string>, Rational>>& generators) {
          const GroundSet ground(labels);
          std::vector<Generator> gens;
          for (const auto& [set, value] : generators) gens.push_back({subset_of(ground, set), value});
          return realize(GeneratedCapacity(ground, std::move(gens)));
        });
  m.def("dirac", [](const std::vector<std::string>& labels, const std::string& point) {
    const GroundSet ground(labels);
    const auto p = ground.index_of(point);
    if (!p) throw Error(ErrorKind::kBadPoint, "unknown label '" + point + "'");
    return dirac(ground, *p);
  });

  m.def("balancedness_value", &balancedness_value);
  m.def("check_balanced",
        [](const Capacity& nu) { return to_python(to_json(check_balanced(nu), nu.ground())); });
  m.def("core_element", [](const Capacity& nu) -> std::optional<std::map<std::string, Rational>> {
    const auto mu = core_element(nu);
    if (!mu) return std::nullopt;
    return weights_of(*mu);
  });
  m.def("in_core", [](const std::map<std::string, Rational>& weights, const Capacity& nu) {
    const FuncOnX w = function_of(nu.ground(), weights);
    return in_core(ProbMeasure(nu.ground(), w.values), nu);
  });

  m.def("choquet", [](const Capacity& nu, const std::map<std::string, Rational>& f) {
    return choquet(nu, function_of(nu.ground(), f));
  });
  m.def(
      "tnorm_integral",
      [](const Capacity& nu, const std::map<std::string, Rational>& f, const std::string& tnorm) {
        const auto t = parse_tnorm(tnorm);
        if (!t) throw Error(ErrorKind::kParse, "unknown t-norm '" + tnorm + "'");
        return tnorm_integral(nu, function_of(nu.ground(), f), *t);
      },
      py::arg("nu"), py::arg("f"), py::arg("tnorm") = "min");

  m.def("pushforward",
        [](const Capacity& nu, const std::vector<std::string>& target,
           const std::map<std::string, std::string>& images) {
          const GroundSet tgt(target);
          std::vector<int> idx(nu.ground().size(), -1);
          for (const auto& [src, dst] : images) {
            const auto s = nu.ground().index_of(src);
            const auto t = tgt.index_of(dst);
            if (!s || !t) throw Error(ErrorKind::kBadPoint, "unknown label in map");
            idx[*s] = *t;
          }
          return pushforward(PointMap(nu.ground(), tgt, idx), nu);
        });
  m.def("monad_mult",
        [](const std::vector<std::string>& labels,
           const std::vector<std::tuple<std::vector<std::string>, Rational, Rational>>& generators) {
          const GroundSet ground(labels);
          std::vector<SecondLevelGenerator> gens;
          for (const auto& [set, s, v] : generators) gens.push_back({subset_of(ground, set), s, v});
          return monad_mult(SecondLevelCapacity(ground, std::move(gens)));
        });
  m.def("repro_counterexample", [] { return to_python(to_json(repro_counterexample())); });
}
