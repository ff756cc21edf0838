#include "capmoments/characters.hpp"
#include "capmoments/errors.hpp"
#include "capmoments/moments.hpp"
#include "capmoments/oracle.hpp"
#include "capmoments/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace capmoments;

namespace {

using Coeffs = std::vector<std::pair<std::string, std::string>>;

Coeffs coeffs_of(const QPoly& f) {
    Coeffs out;
    for (const auto& c : f.coeffs()) out.emplace_back(c.get_num().get_str(), c.get_den().get_str());
    return out;
}

py::int_ to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

Method parse_method(const std::string& s) {
    if (s == "collapsed") return Method::Collapsed;
    if (s == "theorem1") return Method::Theorem1;
    throw std::invalid_argument("method must be 'collapsed' or 'theorem1'");
}

py::dict moment_dict(int m, int n, int p, int r, const std::string& method) {
    const MomentResult res = parse_method(method) == Method::Collapsed ? moment_poly(m, n, r, p) : moment_via_theorem1(m, n, r, p);
    py::dict d;
    d["p"] = p;
    d["r"] = r;
    d["m"] = m;
    d["n"] = n;
    d["coeffs"] = coeffs_of(res.poly);
    d["text"] = render_poly(res.poly);
    d["ratio"] = render_text(factor_ratio(res.ratio()));
    d["ratio_latex"] = render_latex(factor_ratio(res.ratio()));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact moment polynomials for zero-sum subset counts in F_p^d";

    py::register_exception<ConsistencyError>(m, "ConsistencyError");
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

    m.def("moment", &moment_dict, py::arg("m"), py::arg("n"), py::arg("p") = 3, py::arg("r") = 3, py::arg("method") = "collapsed");

    m.def(
        "brute_force_moment",
        [](int p, int d, int r, int mo, int n, unsigned threads, double cap) {
            mpz_class v;
            {
                py::gil_scoped_release release;
                v = brute_force_moment(p, d, r, mo, n, OracleOptions{cap, threads});
            }
            return to_py(v);
        },
        py::arg("p"), py::arg("d"), py::arg("r"), py::arg("m"), py::arg("n"), py::arg("threads") = 1, py::arg("cap") = 1e10);

    m.def(
        "distribution",
        [](int p, int d, int r, int n, unsigned threads, double cap) {
            Histogram h;
            {
                py::gil_scoped_release release;
                h = distribution(p, d, r, n, OracleOptions{cap, threads});
            }
            py::dict out;
            for (const auto& [a, c] : h.counts) out[py::int_(a)] = to_py(c);
            return out;
        },
        py::arg("p"), py::arg("d"), py::arg("r"), py::arg("n"), py::arg("threads") = 1, py::arg("cap") = 1e10);

    m.def(
        "count_zero_sum_subsets",
        [](int p, int d, std::vector<std::uint32_t> points, int r) { return count_zero_sum_subsets(PointSet(p, d, std::move(points)), r); },
        py::arg("p"), py::arg("d"), py::arg("points"), py::arg("r"));
    m.def(
        "character_sum_a",
        [](int p, int d, std::vector<std::uint32_t> points, int r) { return character_sum_a(PointSet(p, d, std::move(points)), r); },
        py::arg("p"), py::arg("d"), py::arg("points"), py::arg("r"));

    m.def(
        "character", [](const std::vector<int>& mu, const std::vector<int>& nu) { return character(Partition(mu), Partition(nu)); },
        py::arg("mu"), py::arg("nu"));
    m.def(
        "dim_specht", [](const std::vector<int>& mu) { return dim_specht(Partition(mu)); }, py::arg("mu"));
    m.def(
        "connection_count",
        [](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
            return to_py(connection_count(Partition(a), Partition(b), Partition(c)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("partitions", [](int k) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(k)) out.push_back(p.parts());
        return out;
    });

    m.def("conventions", [] { return kFrozenConventions.to_string(); });
    m.def(
        "arbitrate_conventions",
        [](int p, int r) {
            const ConventionRecord rec = arbitrate_conventions(p, r);
            py::dict out;
            out["chosen"] = rec.chosen.to_string();
            py::list cands;
            for (const auto& c : rec.candidates) {
                py::dict d;
                d["conventions"] = c.conventions.to_string();
                d["survived"] = c.survived;
                d["detail"] = c.detail;
                cands.append(d);
            }
            out["candidates"] = cands;
            return out;
        },
        py::arg("p") = 3, py::arg("r") = 3);
}
