#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "latdisp/box.hpp"
#include "latdisp/dilation.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/lattice.hpp"

namespace latdisp {

using nlohmann::json;

// %.17g, locale independent.
std::string format_decimal(double v);

// {dim, generator (row-major), det_abs, nm_certified, provenance}
json lattice_to_json(const Lattice& lattice);
// Accepts the full object; a bare {"generator": ...} is read as a custom
// lattice without certificate.
Lattice lattice_from_json(const json& j);
Lattice load_lattice(const std::string& path);

json box_to_json(const Box& box);
Box box_from_json(const json& j);

json dispersion_to_json(const DispersionResult& r);
DispersionResult dispersion_from_json(const json& j);

json counting_report_to_json(const CountingReport& r);
inline constexpr const char* kCountingReportCsvHeader = "vol,count,expected,discrepancy,log_bound_ratio";
std::string counting_report_csv_row(const CountingReport& r);

// Point-set text format:
//   # d=<d> n=<N> t=<t_1>,...,<t_d>
//   x_1 x_2 ... x_d        (one point per line, 17 significant digits)
void write_point_set(std::ostream& os, const PointSet& ps);
PointSet read_point_set(std::istream& is);
void save_point_set(const std::string& path, const PointSet& ps);
PointSet load_point_set(const std::string& path);

}  // namespace latdisp
