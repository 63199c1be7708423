#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "redcyc/census.hpp"
#include "redcyc/counting.hpp"
#include "redcyc/cyclictest.hpp"
#include "redcyc/report_io.hpp"

namespace py = pybind11;
using namespace redcyc;

namespace {

Mat to_mat(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t n = rows.size();
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!f->contains(rows[i][j])) throw std::invalid_argument("entry outside the field");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_redcyc, m) {
    m.doc() = "Cyclic matrices in maximal reducible matrix algebras over finite fields";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    m.def(
        "bounds_json",
        [](unsigned n, unsigned r, const std::string& q) {
            const FieldPtr f = Field::parse(q);
            Json j = to_json(bounds_report(n, r, f->q()));
            j["field"] = field_json(*f);
            return dump(j);
        },
        py::arg("n"), py::arg("r"), py::arg("q"));

    m.def(
        "enumerate_json",
        [](unsigned n, unsigned r, const std::string& q, const std::string& mode, std::uint64_t budget, unsigned workers) {
            const FieldPtr f = Field::parse(q);
            DensityReport rep;
            {
                py::gil_scoped_release release;
                rep = enumerate_exact(n, r, f, parse_mode(mode), {budget, workers});
            }
            return dump(to_json(rep));
        },
        py::arg("n"), py::arg("r"), py::arg("q"), py::arg("mode") = "algebra", py::arg("budget") = RunOptions{}.budget,
        py::arg("workers") = 1u);

    m.def(
        "estimate_json",
        [](unsigned n, unsigned r, const std::string& q, std::uint64_t trials, std::uint64_t seed, const std::string& mode,
           double ci_level, unsigned workers) {
            const FieldPtr f = Field::parse(q);
            DensityReport rep;
            {
                py::gil_scoped_release release;
                rep = monte_carlo(n, r, f, parse_mode(mode), trials, seed, ci_level, {RunOptions{}.budget, workers});
            }
            return dump(to_json(rep));
        },
        py::arg("n"), py::arg("r"), py::arg("q"), py::arg("trials"), py::arg("seed") = 1u, py::arg("mode") = "algebra",
        py::arg("ci_level") = 0.99, py::arg("workers") = 1u);

    m.def(
        "probe_json",
        [](const std::string& generators, std::uint64_t max_tries, std::uint64_t seed) {
            std::istringstream in(generators);
            const GeneratedAlgebra alg = parse_generators(in);
            return dump(to_json(probe(alg, max_tries, seed)));
        },
        py::arg("generators"), py::arg("max_tries") = 1000u, py::arg("seed") = 1u);

    m.def(
        "is_cyclic", [](const std::vector<std::vector<Elem>>& rows, const std::string& q) { return is_cyclic(to_mat(Field::parse(q), rows)); },
        py::arg("matrix"), py::arg("q"));

    m.def(
        "char_poly", [](const std::vector<std::vector<Elem>>& rows, const std::string& q) { return char_poly(to_mat(Field::parse(q), rows)).coeffs(); },
        py::arg("matrix"), py::arg("q"));

    m.def(
        "min_poly", [](const std::vector<std::vector<Elem>>& rows, const std::string& q) { return min_poly(to_mat(Field::parse(q), rows)).coeffs(); },
        py::arg("matrix"), py::arg("q"));

    m.def(
        "coprime_count", [](unsigned r, unsigned s, unsigned long q) { return coprime_count(r, s, q).get_str(); }, py::arg("r"),
        py::arg("s"), py::arg("q"));

    m.def(
        "table_series",
        [](unsigned r, const std::string& mode) {
            const TableSeries t = table_series(r, parse_mode(mode));
            return std::vector<int>(t.coeffs.begin(), t.coeffs.end());
        },
        py::arg("r"), py::arg("mode") = "algebra");
}
