#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latdisp/cli.hpp"
#include "latdisp/dilation.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"
#include "latdisp/experiments.hpp"
#include "latdisp/io.hpp"
#include "latdisp/lattice.hpp"

namespace py = pybind11;
using namespace latdisp;

namespace {

void register_errors(py::module_& m) {
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
}

void register_lattice(py::module_& m) {
    py::class_<Lattice>(m, "Lattice")
        .def_static("custom", [](Eigen::MatrixXd g) { return Lattice::custom(std::move(g)); },
                    py::arg("generator"))
        .def_property_readonly("dim", &Lattice::dim)
        .def_property_readonly("generator", &Lattice::generator)
        .def_property_readonly("det_abs", &Lattice::det_abs)
        .def_property_readonly("nm_certified", &Lattice::nm_certified)
        .def_property_readonly("provenance", &Lattice::provenance)
        .def("to_json", [](const Lattice& l) { return lattice_to_json(l).dump(); })
        .def_static("from_json", [](const std::string& s) { return lattice_from_json(json::parse(s)); })
        .def("__repr__", [](const Lattice& l) { return "<Lattice " + l.provenance() + ">"; });

    m.def("frolov_lattice", &frolov_lattice, py::arg("d"));
    m.def("frolov_roots", &frolov_roots, py::arg("d"));
    m.def("golden_lattice", &golden_lattice);
    m.def("integer_lattice", &integer_lattice, py::arg("d"));
    m.def("dual", &dual, py::arg("lattice"));
    m.def("nm_empirical", [](const Lattice& l, double w) { return nm_empirical(l, w); },
          py::arg("lattice"), py::arg("window"));
}

void register_enumeration(py::module_& m) {
    py::class_<Box>(m, "Box")
        .def(py::init<Point, Point>(), py::arg("lower"), py::arg("upper"))
        .def_static("unit_cube", &Box::unit_cube, py::arg("dim"))
        .def_property_readonly("lower", &Box::lower)
        .def_property_readonly("upper", &Box::upper)
        .def_property_readonly("volume", &Box::volume)
        .def("__repr__", [](const Box& b) { return "<Box " + box_to_json(b).dump() + ">"; });

    py::class_<CountingReport>(m, "CountingReport")
        .def_readonly("box", &CountingReport::box)
        .def_readonly("count", &CountingReport::count)
        .def_readonly("expected", &CountingReport::expected)
        .def_readonly("discrepancy", &CountingReport::discrepancy)
        .def_readonly("log_bound_ratio", &CountingReport::log_bound_ratio);

    m.def("points_in_box", [](const Lattice& l, const Box& b) { return points_in_box(l, b); });
    m.def("count_in_box", [](const Lattice& l, const Box& b) { return count_in_box(l, b); });
    m.def("counting_discrepancy", [](const Lattice& l, const Box& b) { return counting_discrepancy(l, b); });
}

void register_dilation(py::module_& m) {
    py::class_<PointSet>(m, "PointSet")
        .def_readonly("dim", &PointSet::dim)
        .def_readonly("points", &PointSet::points)
        .def_readonly("t", &PointSet::t)
        .def_readonly("lattice_provenance", &PointSet::lattice_provenance)
        .def("__len__", &PointSet::size)
        .def("to_text", [](const PointSet& ps) {
            std::ostringstream os;
            write_point_set(os, ps);
            return os.str();
        });

    py::class_<PartitionReport>(m, "PartitionReport")
        .def_readonly("holds", &PartitionReport::holds)
        .def_readonly("cells_ok", &PartitionReport::cells_ok)
        .def_readonly("bound_ok", &PartitionReport::bound_ok)
        .def_readonly("n_t", &PartitionReport::n_t)
        .def_readonly("cell_volume", &PartitionReport::cell_volume)
        .def_readonly("occupancy", &PartitionReport::occupancy)
        .def_readonly("histogram", &PartitionReport::histogram);

    m.def("n_of_t", [](const std::vector<double>& t) { return n_of_t(t); });
    m.def("dilate", [](const Lattice& l, const std::vector<double>& t) { return dilate(l, t); });
    m.def("restrict_unit_cube",
          [](const Lattice& l, const std::vector<double>& t) { return restrict_unit_cube(l, t); },
          py::arg("dilated"), py::arg("t") = std::vector<double>{});
    m.def("find_t_for_n", [](const Lattice& l, std::size_t n) { return find_t_for_n(l, n); });
    m.def("point_set_for_n", [](const Lattice& l, std::size_t n) { return point_set_for_n(l, n); });
    m.def("partition_bound_check", [](const Lattice& l, const std::vector<double>& t, std::size_t n) {
        return partition_bound_check(l, t, n);
    });
}

void register_dispersion(py::module_& m) {
    py::class_<DispersionResult>(m, "DispersionResult")
        .def_readonly("witness", &DispersionResult::witness)
        .def_readonly("volume", &DispersionResult::volume)
        .def_property_readonly("algorithm",
                               [](const DispersionResult& r) { return std::string(to_string(r.algorithm)); })
        .def_readonly("certified_exact", &DispersionResult::certified_exact)
        .def("to_json", [](const DispersionResult& r) { return dispersion_to_json(r).dump(); });

    using Pts = std::vector<Point>;
    m.def("largest_empty_box", [](const Pts& p, const Box& d) { return largest_empty_box(p, d); });
    m.def("largest_empty_box_sweep2d", [](const Pts& p, const Box& d) { return largest_empty_box_sweep2d(p, d); });
    m.def("largest_empty_box_branch", [](const Pts& p, const Box& d) { return largest_empty_box_branch(p, d); });
    m.def("grid_oracle", [](const Pts& p, const Box& d, int r) { return grid_oracle(p, d, r); },
          py::arg("points"), py::arg("domain"), py::arg("resolution"));
    m.def("dispersion", [](const PointSet& ps) { return dispersion(ps); });
    m.def("windowed_lattice_dispersion",
          [](const Lattice& l, double m) { return windowed_lattice_dispersion(l, m); });
}

void register_experiments(py::module_& m) {
    py::class_<ScalingRow>(m, "ScalingRow")
        .def_readonly("n", &ScalingRow::n)
        .def_readonly("n_t", &ScalingRow::n_t)
        .def_readonly("disp", &ScalingRow::disp)
        .def_readonly("n_times_disp", &ScalingRow::n_times_disp)
        .def_readonly("witness", &ScalingRow::witness);
    py::class_<BoundednessRow>(m, "BoundednessRow")
        .def_readonly("window", &BoundednessRow::window)
        .def_readonly("disp_star", &BoundednessRow::disp_star)
        .def_readonly("growth_ratio", &BoundednessRow::growth_ratio);
    py::class_<BoundednessTable>(m, "BoundednessTable")
        .def_readonly("rows", &BoundednessTable::rows)
        .def_readonly("max_growth_ratio", &BoundednessTable::max_growth_ratio);
    py::class_<DiscrepancyRow>(m, "DiscrepancyRow")
        .def_readonly("volume", &DiscrepancyRow::volume)
        .def_readonly("max_discrepancy", &DiscrepancyRow::max_discrepancy)
        .def_readonly("max_log_bound_ratio", &DiscrepancyRow::max_log_bound_ratio)
        .def_readonly("reports", &DiscrepancyRow::reports);

    m.def("scaling_study", [](const Lattice& l, const std::vector<std::size_t>& ns) {
        return scaling_study(l, ns);
    });
    m.def("boundedness_study", [](const Lattice& l, const std::vector<double>& ms) {
        return boundedness_study(l, ms);
    });
    m.def("discrepancy_study",
          [](const Lattice& l, const std::vector<double>& vols, std::size_t shifts, std::uint64_t seed) {
              Config cfg;
              cfg.seed = seed;
              return discrepancy_study(l, vols, shifts, cfg);
          },
          py::arg("lattice"), py::arg("volumes"), py::arg("shifts"), py::arg("seed") = 42);
    m.def("log_log_slope", [](const std::vector<ScalingRow>& rows) { return log_log_slope(rows); });

    m.def("cli_main", [](std::vector<std::string> args) {
        args.insert(args.begin(), "latdisp");
        std::ostringstream out, err;
        const int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool; returns (exit_code, stdout, stderr).");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Admissible lattices, dilated point sets and exact dispersion.";
    register_errors(m);
    register_lattice(m);
    register_enumeration(m);
    register_dilation(m);
    register_dispersion(m);
    register_experiments(m);
}
