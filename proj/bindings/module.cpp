// Python extension module. Exact values cross the boundary as decimal
// strings (or Python ints where lossless); structured results cross as the
// same JSON shapes the CLI emits, converted to plain dicts/lists.

#include "cvlab/report_json.hpp"
#include "cvlab/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

py::int_ to_py_int(const cvlab::BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(cvlab::to_string(v).c_str(), nullptr, 10));
}

py::object json_to_py(const nlohmann::json& j) {
    using nlohmann::json;
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

nlohmann::json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto item : obj.cast<py::sequence>())
            out.push_back(py_to_json(item));
        return out;
    }
    throw std::invalid_argument("unsupported value type in item");
}

cvlab::MultisetSpec make_spec(const std::vector<std::string>& values,
                              const std::vector<std::int64_t>& mults) {
    std::vector<cvlab::GaussianRational> parsed;
    parsed.reserve(values.size());
    for (const auto& v : values) parsed.push_back(cvlab::parse_gaussian(v));
    return {std::move(parsed), cvlab::Caps(mults)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact subset-sum moments, identity checkers, and prime scans";

    py::register_exception<cvlab::BudgetExceeded>(m, "BudgetExceeded",
                                                  PyExc_RuntimeError);
    py::register_exception<cvlab::NotWolstenholme>(m, "NotWolstenholme",
                                                   PyExc_ValueError);

    m.attr("SCHEMA") = cvlab::kSchema;
    m.attr("DEFAULT_BUDGET") = cvlab::kDefaultBudget;

    m.def(
        "binomial",
        [](std::int64_t n, std::int64_t k) { return to_py_int(cvlab::binomial(n, k)); },
        py::arg("n"), py::arg("k"),
        "C(n, k) with the vanishing convention for k < 0 or k > n.");

    m.def(
        "count_compositions",
        [](const std::vector<std::int64_t>& caps, std::int64_t m,
           std::uint64_t budget) {
            return to_py_int(cvlab::count_compositions(cvlab::Caps(caps), m, budget));
        },
        py::arg("caps"), py::arg("m"), py::arg("budget") = cvlab::kDefaultBudget,
        "Sum of binomial weights over bounded compositions; equals C(N, m).");

    m.def(
        "bounded_compositions",
        [](const std::vector<std::int64_t>& caps, std::int64_t m,
           std::uint64_t budget) {
            cvlab::CompositionEnumerator en(cvlab::Caps(caps), m, budget);
            std::vector<std::vector<std::int64_t>> out;
            while (en.advance()) out.push_back(en.current());
            return out;
        },
        py::arg("caps"), py::arg("m"), py::arg("budget") = cvlab::kDefaultBudget,
        "All tuples k with sum(k) == m and 0 <= k[i] <= caps[i], in "
        "lexicographically descending order.");

    m.def(
        "composition_weight",
        [](const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& caps) {
            return to_py_int(cvlab::composition_weight(k, cvlab::Caps(caps)));
        },
        py::arg("k"), py::arg("caps"),
        "Product of C(caps[i], k[i]) over all positions.");

    m.def(
        "pmf",
        [](const std::vector<std::string>& values,
           const std::vector<std::int64_t>& mults, std::int64_t m,
           std::uint64_t budget) {
            const auto spec = make_spec(values, mults);
            return json_to_py(cvlab::to_json(cvlab::pmf(spec, m, budget), m));
        },
        py::arg("values"), py::arg("mults"), py::arg("m"),
        py::arg("budget") = cvlab::kDefaultBudget,
        "Exact distribution of the m-subset sum, values as strings.");

    m.def(
        "moment",
        [](const std::vector<std::string>& values,
           const std::vector<std::int64_t>& mults, std::int64_t m, int order,
           bool absolute, const std::string& method, std::uint64_t budget) {
            const auto spec = make_spec(values, mults);
            if (method == "oracle")
                return json_to_py(
                    cvlab::to_json(cvlab::moment_oracle(spec, m, order, absolute, budget)));
            if (method != "closed_form")
                throw std::invalid_argument("method must be oracle or closed_form");
            if (order == 1 && !absolute)
                return json_to_py(cvlab::to_json(cvlab::mean_closed(spec, m)));
            if (order == 2 && absolute)
                return json_to_py(
                    cvlab::to_json(cvlab::second_abs_moment_closed(spec, m)));
            if (order == 3 && !absolute)
                return json_to_py(cvlab::to_json(cvlab::third_moment_closed(spec, m)));
            throw std::invalid_argument(
                "closed forms cover order 1, absolute order 2, and order 3");
        },
        py::arg("values"), py::arg("mults"), py::arg("m"), py::arg("order"),
        py::arg("absolute") = false, py::arg("method") = "oracle",
        py::arg("budget") = cvlab::kDefaultBudget,
        "One exact moment of the subset-sum variable, as a report dict.");

    m.def(
        "sample_moments",
        [](const std::vector<std::string>& values,
           const std::vector<std::int64_t>& mults, std::int64_t m,
           std::uint64_t trials, std::uint64_t seed) {
            const auto spec = make_spec(values, mults);
            py::list out;
            for (const auto& report : cvlab::sample_moments(spec, m, trials, seed))
                out.append(json_to_py(cvlab::to_json(report)));
            return out;
        },
        py::arg("values"), py::arg("mults"), py::arg("m"), py::arg("trials"),
        py::arg("seed"),
        "Monte-Carlo estimates of the first three moments; deterministic per seed.");

    m.def(
        "check_identity",
        [](const py::dict& item, std::uint64_t budget) {
            return json_to_py(cvlab::run_suite_item(py_to_json(item), budget));
        },
        py::arg("item"), py::arg("budget") = cvlab::kDefaultBudget,
        "Runs one checker described by an item dict, e.g. "
        "{'id': 'eq8', 'caps': [2, 1], 'z': ['1', '0+1i'], 'm': 2}.");

    m.def("known_ids", [] { return cvlab::known_suite_ids(); },
          "Every id check_identity accepts.");

    m.def(
        "binom_mod_pk",
        [](std::int64_t a, std::int64_t b, std::uint64_t p, int k) {
            return json_to_py(cvlab::to_json(cvlab::binom_mod_pk(a, b, p, k)));
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("k"),
        "C(a, b) mod p^k as a residue dict, prime p, 1 <= k <= 5.");

    m.def(
        "check_glaisher",
        [](std::uint64_t p, std::int64_t s, int k) {
            return json_to_py(cvlab::to_json(cvlab::check_glaisher(p, s, k)));
        },
        py::arg("p"), py::arg("s"), py::arg("k") = 3,
        "C(sp, p) == s (mod p^k) for prime p >= 5.");

    m.def(
        "check_congruence18",
        [](std::uint64_t p, std::int64_t s, bool direct, std::uint64_t budget) {
            return json_to_py(
                cvlab::to_json(cvlab::check_congruence18(p, s, direct, budget)));
        },
        py::arg("p"), py::arg("s"), py::arg("direct") = false,
        py::arg("budget") = cvlab::kDefaultBudget,
        "The composition-sum congruence mod p^4; direct=True also enumerates.");

    m.def(
        "check_congruence20",
        [](std::uint64_t p, std::int64_t s) {
            return json_to_py(cvlab::to_json(cvlab::check_congruence20(p, s)));
        },
        py::arg("p"), py::arg("s"),
        "The mod-p^5 strengthening at a Wolstenholme prime.");

    m.def(
        "wolstenholme_scan",
        [](std::uint64_t max_p) {
            py::list out;
            for (const auto& rec : cvlab::wolstenholme_scan(max_p))
                out.append(json_to_py(cvlab::to_json(rec)));
            return out;
        },
        py::arg("max_p"),
        "Per-prime records of C(2p-1, p-1) mod p^4 for 5 <= p <= max_p.");

    m.def("is_prime", &cvlab::is_prime, py::arg("n"));
}
