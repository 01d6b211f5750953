// Python bindings for the main operations. Exact integers cross the
// boundary as Python ints, exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chordstats/analysis.hpp"
#include "chordstats/exact.hpp"
#include "chordstats/oracle.hpp"
#include "chordstats/series.hpp"

namespace py = pybind11;

namespace {

using chordstats::Int;
using chordstats::Rat;
using chordstats::StatKind;

py::object to_py_int(const Int &v) {
    PyObject *obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const Rat &v) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py_int(v.get_num()), to_py_int(v.get_den()));
}

StatKind stat_arg(const std::string &s) { return chordstats::stat_from_symbol(s); }

py::list int_row(const std::vector<Int> &values) {
    py::list out;
    for (const Int &v : values) out.append(to_py_int(v));
    return out;
}

py::list fraction_row(const std::vector<Rat> &values) {
    py::list out;
    for (const Rat &v : values) out.append(to_py_fraction(v));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration and asymptotics of the four statistics of a "
              "marked chord in a linear chord diagram";

    m.def("double_factorial",
          [](long k) { return to_py_int(chordstats::exact::double_factorial(k)); },
          py::arg("k"), "k!! with (-1)!! = 0!! = 1");
    m.def("total_configurations",
          [](int n) { return to_py_int(chordstats::exact::total_configurations(n)); },
          py::arg("n"), "n * (2n-1)!!, the number of diagrams with one marked chord");
    m.def("count",
          [](const std::string &stat, int n, int p) {
              return to_py_int(chordstats::exact::count_stat(stat_arg(stat), n, p));
          },
          py::arg("stat"), py::arg("n"), py::arg("p"),
          "Exact count of configurations with exactly p chords in the given relation");
    m.def("count_row",
          [](const std::string &stat, int n) {
              return int_row(chordstats::exact::count_row(stat_arg(stat), n).counts);
          },
          py::arg("stat"), py::arg("n"));
    m.def("count_crossings_by_size",
          [](int n, int p, int d) {
              return to_py_int(chordstats::exact::count_crossings_by_size(n, p, d));
          },
          py::arg("n"), py::arg("p"), py::arg("d"));
    m.def("at_least_count",
          [](const std::string &stat, int n, int q, int r, const std::string &method) {
              auto mode = method == "direct" ? chordstats::exact::AtLeastMethod::DirectSum
                                             : chordstats::exact::AtLeastMethod::ClosedForm;
              return to_py_int(chordstats::exact::at_least_count(stat_arg(stat), n, q, r, mode));
          },
          py::arg("stat"), py::arg("n"), py::arg("q"), py::arg("r") = 0,
          py::arg("method") = "closed");
    m.def("size_distribution",
          [](int n) { return fraction_row(chordstats::exact::size_distribution(n).probs); },
          py::arg("n"), "Law of the marked chord's size d = 0..2n-2");

    m.def("gf_table",
          [](const std::string &stat, int order) {
              auto gf = chordstats::series::build_gf(stat_arg(stat), order);
              py::list out;
              for (int n = 1; n <= order; ++n) {
                  py::list row;
                  for (int p = 0; p < n; ++p)
                      row.append(to_py_int(chordstats::series::gf_coefficient(gf, n, p)));
                  out.append(row);
              }
              return out;
          },
          py::arg("stat"), py::arg("order"),
          "Count rows n = 1..order recovered from the generating function");

    m.def("enumerate_counts",
          [](int n, bool allow_large, int threads) {
              auto res = chordstats::oracle::enumerate_counts(n, allow_large, threads);
              py::dict out;
              for (const auto &table : res.tables)
                  out[py::str(std::string(1, chordstats::stat_symbol(table.stat)))] =
                      int_row(table.counts);
              out["configurations"] = to_py_int(res.configurations);
              out["partition_violations"] = res.partition_violations;
              return out;
          },
          py::arg("n"), py::arg("allow_large") = false, py::arg("threads") = 1,
          "Brute-force tables from exhaustive enumeration");
    m.def("monte_carlo",
          [](int n, std::uint64_t reps, std::uint64_t seed) {
              auto res = chordstats::oracle::monte_carlo(n, reps, seed);
              py::dict out;
              for (const auto &dist : res.distributions) {
                  py::dict entry;
                  entry["counts"] = dist.counts;
                  entry["frequency"] = dist.frequency;
                  entry["std_error"] = dist.std_error;
                  entry["mean"] = dist.mean;
                  out[py::str(std::string(1, chordstats::stat_symbol(dist.stat)))] = entry;
              }
              return out;
          },
          py::arg("n"), py::arg("reps"), py::arg("seed"));

    m.def("exact_distribution",
          [](const std::string &stat, int n) {
              return fraction_row(chordstats::analysis::exact_distribution(stat_arg(stat), n).probs);
          },
          py::arg("stat"), py::arg("n"));
    m.def("factorial_moment",
          [](const std::string &stat, int n, int m_) {
              return to_py_fraction(chordstats::analysis::factorial_moment(stat_arg(stat), n, m_));
          },
          py::arg("stat"), py::arg("n"), py::arg("m"));
    m.def("mean_variance",
          [](const std::string &stat, int n) {
              auto rep = chordstats::analysis::mean_variance(stat_arg(stat), n);
              return py::make_tuple(to_py_fraction(rep.mean), to_py_fraction(rep.variance));
          },
          py::arg("stat"), py::arg("n"));
    m.def("asymptotic_density",
          [](const std::string &stat, double x) {
              return chordstats::analysis::asymptotic_density(stat_arg(stat), x);
          },
          py::arg("stat"), py::arg("x"));
    m.def("asymptotic_cdf",
          [](const std::string &stat, double x) {
              return chordstats::analysis::asymptotic_cdf(stat_arg(stat), x);
          },
          py::arg("stat"), py::arg("x"));
    m.def("normal_approx_density",
          [](const std::string &stat, int n, double x, double abs_tol) {
              return chordstats::analysis::normal_approx_density(stat_arg(stat), n, x, abs_tol);
          },
          py::arg("stat"), py::arg("n"), py::arg("x"), py::arg("abs_tol") = 1e-9);
    m.def("convergence_table",
          [](const std::string &stat, int n, const std::vector<double> &grid) {
              py::list out;
              for (const auto &row :
                   chordstats::analysis::convergence_table(stat_arg(stat), n, grid)) {
                  py::dict entry;
                  entry["x"] = row.x;
                  entry["p"] = row.p;
                  entry["exact_scaled"] = row.exact_scaled;
                  entry["asymptotic"] = row.asymptotic;
                  entry["abs_error"] = row.abs_error;
                  out.append(entry);
              }
              return out;
          },
          py::arg("stat"), py::arg("n"), py::arg("grid"));

    m.attr("__version__") = "0.1.0";
}
