// Python surface over the core operations: Laurent arithmetic, seed
// mutation, exchange-graph exploration, cluster characters, and the
// verification suites.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "clusterforge/ccmap.hpp"
#include "clusterforge/verify.hpp"

namespace py = pybind11;
using namespace clusterforge;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

QuiverSpec quiver_arg(const std::string& quiver) { return preset_quiver(quiver); }

verify::VerifyOptions verify_options(uint64_t budget, uint32_t prime, uint64_t seed, int n_max,
                                     int cc_max, bool parallel) {
    verify::VerifyOptions opts;
    opts.budget = budget;
    opts.prime = prime;
    opts.seed = seed;
    opts.n_max = n_max;
    opts.cc_max = cc_max;
    opts.parallel = parallel;
    return opts;
}

CCOptions cc_options(uint64_t budget, uint32_t prime, uint64_t seed, bool parallel) {
    CCOptions opts;
    opts.chi.budget = budget;
    opts.chi.parallel = parallel;
    opts.structure_prime = prime;
    opts.generic_seed = seed;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cluster-algebra engine: mutation, exploration, cluster characters";

    py::register_exception<NotDivisibleError>(m, "NotDivisibleError");
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError");
    py::register_exception<NonIntegralInterpolationError>(m, "NonIntegralInterpolationError");

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_static("variable", &LaurentPoly::variable, py::arg("n"), py::arg("i"),
                    "the variable x_{i+1} among n variables (0-based index)")
        .def_static(
            "constant",
            [](int n, int64_t c) { return LaurentPoly::constant(n, Int(c)); },
            py::arg("n"), py::arg("c"))
        .def_static(
            "monomial",
            [](const Monomial& exps, int64_t c) { return LaurentPoly::monomial(exps, Int(c)); },
            py::arg("exponents"), py::arg("coefficient") = 1)
        .def_static(
            "from_json",
            [](const std::string& text) { return LaurentPoly::from_json(json::parse(text)); })
        .def_property_readonly("n", &LaurentPoly::var_count)
        .def("is_zero", &LaurentPoly::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("exact_div", &LaurentPoly::exact_div, py::arg("divisor"),
             "exact Laurent division; raises NotDivisibleError otherwise")
        .def("to_fraction",
             [](const LaurentPoly& p) {
                 auto f = p.to_fraction();
                 return py::make_tuple(f.numerator, f.denominator_exponents);
             })
        .def("to_json", [](const LaurentPoly& p) { return p.to_json().dump(); })
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__",
             [](const LaurentPoly& p) { return "<LaurentPoly " + p.to_string() + ">"; });

    m.def("is_weakly_positive_sufficient", &is_weakly_positive_sufficient, py::arg("poly"));
    m.def("sup_vector", &sup_vector, py::arg("d"), py::arg("e"));
    m.def("gaussian_binomial",
          [](int mm, int e, uint64_t q) { return py::int_(py::str(gaussian_binomial(mm, e, q).str())); },
          py::arg("m"), py::arg("e"), py::arg("q"));

    py::class_<Seed>(m, "Seed")
        .def_property_readonly("cluster", [](const Seed& s) { return s.cluster; })
        .def_property_readonly("matrix",
                               [](const Seed& s) {
                                   std::vector<std::vector<int64_t>> rows;
                                   for (int i = 0; i < s.n(); ++i) {
                                       std::vector<int64_t> row;
                                       for (int j = 0; j < s.n(); ++j) row.push_back(s.matrix.at(i, j));
                                       rows.push_back(std::move(row));
                                   }
                                   return rows;
                               })
        .def("mutate", [](const Seed& s, int j) { return seed_mutate(s, j); }, py::arg("j"),
             "mutation in direction j (0-based)")
        .def("canonical", &canonical_seed)
        .def(py::self == py::self)
        .def("to_json", [](const Seed& s) { return s.to_json().dump(); })
        .def("__repr__", [](const Seed& s) {
            return "<Seed n=" + std::to_string(s.n()) + ">";
        });

    m.def("presets", &preset_names);
    m.def("initial_seed", [](const std::string& quiver) { return initial_seed(quiver_arg(quiver)); },
          py::arg("quiver"));

    m.def(
        "explore",
        [](const std::string& quiver, int64_t max_seeds, int max_depth, bool parallel) {
            ExploreOptions opts;
            opts.max_seeds = max_seeds;
            opts.max_depth = max_depth;
            opts.parallel = parallel;
            auto g = explore(initial_seed(quiver_arg(quiver)), opts);
            return json_to_py(g.to_json());
        },
        py::arg("quiver"), py::arg("max_seeds") = 100000, py::arg("max_depth") = 64,
        py::arg("parallel") = false,
        "breadth-first exchange-graph closure; returns nodes, edges and counts");

    m.def(
        "cluster_variables",
        [](const std::string& quiver, int64_t max_seeds, int max_depth) {
            ExploreOptions opts;
            opts.max_seeds = max_seeds;
            opts.max_depth = max_depth;
            return cluster_variables(explore(initial_seed(quiver_arg(quiver)), opts));
        },
        py::arg("quiver"), py::arg("max_seeds") = 100000, py::arg("max_depth") = 64);

    m.def(
        "cluster_character",
        [](const std::string& quiver, const std::string& object, uint64_t budget, uint32_t prime,
           uint64_t seed, bool parallel) {
            auto ctx = make_context(quiver_arg(quiver));
            auto fam = parse_object_spec(ctx, object, seed);
            auto res = cc_of_object(fam, cc_options(budget, prime, seed, parallel));
            py::dict out = json_to_py(res.to_json());
            out["poly"] = py::cast(res.polynomial);
            return out;
        },
        py::arg("quiver"), py::arg("object"), py::arg("budget") = 10'000'000,
        py::arg("prime") = kDefaultPrime, py::arg("seed") = 0, py::arg("parallel") = false,
        "cluster character of an object spec like 'kronecker:W:1', 'SP:1', "
        "'interval:1:2', 'root:1,1' or sums 'S:1+SP:2'");

    m.def(
        "verify",
        [](const std::string& suite, const std::string& quiver, uint64_t budget, uint32_t prime,
           uint64_t seed, int n_max, int cc_max, bool parallel) {
            auto reports =
                verify::run_suite(suite, quiver, verify_options(budget, prime, seed, n_max,
                                                                cc_max, parallel));
            bool pass = true;
            py::list items;
            for (const auto& r : reports) {
                pass = pass && r.pass();
                items.append(json_to_py(r.to_json()));
            }
            py::dict out;
            out["pass"] = pass;
            out["suites"] = items;
            return out;
        },
        py::arg("suite"), py::arg("quiver") = "all", py::arg("budget") = 10'000'000,
        py::arg("prime") = kDefaultPrime, py::arg("seed") = 0, py::arg("n_max") = 10,
        py::arg("cc_max") = 5, py::arg("parallel") = false,
        "run a verification suite: denominator | exchange | bijection | laurent | "
        "connectivity | kronecker | properties");
}
