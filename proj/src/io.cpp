#include "latdisp/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

std::vector<double> parse_decimal_list(const std::string& s) {
    std::vector<double> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    ss.imbue(std::locale::classic());
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        is.imbue(std::locale::classic());
        double v;
        if (!(is >> v)) throw ValidationError("bad decimal '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json lattice_to_json(const Lattice& lattice) {
    const auto& g = lattice.generator();
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
        rows.push_back(std::move(row));
    }
    return {{"dim", lattice.dim()},
            {"generator", std::move(rows)},
            {"det_abs", lattice.det_abs()},
            {"nm_certified", lattice.nm_certified()},
            {"provenance", lattice.provenance()}};
}

Lattice lattice_from_json(const json& j) {
    try {
        const auto& rows = j.at("generator");
        const auto d = rows.size();
        if (d == 0) throw ValidationError("generator is empty");
        if (j.contains("dim") && j.at("dim").get<std::size_t>() != d)
            throw ValidationError("dim does not match generator size");
        Eigen::MatrixXd g(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            if (rows[i].size() != d) throw ValidationError("generator must be square");
            for (std::size_t k = 0; k < d; ++k) g(i, k) = rows[i][k].get<double>();
        }
        if (!j.contains("det_abs")) return Lattice::custom(std::move(g));
        return Lattice::from_parts(std::move(g), j.at("det_abs").get<double>(),
                                   j.value("nm_certified", 0.0),
                                   j.value("provenance", std::string("custom")));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed lattice JSON: ") + e.what());
    }
}

Lattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open lattice file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
    return lattice_from_json(j);
}

json box_to_json(const Box& box) { return {{"lower", box.lower()}, {"upper", box.upper()}}; }

Box box_from_json(const json& j) {
    try {
        return Box(j.at("lower").get<Point>(), j.at("upper").get<Point>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed box JSON: ") + e.what());
    }
}

json dispersion_to_json(const DispersionResult& r) {
    return {{"volume", r.volume},
            {"witness", box_to_json(r.witness)},
            {"algorithm", std::string(to_string(r.algorithm))},
            {"certified_exact", r.certified_exact}};
}

DispersionResult dispersion_from_json(const json& j) {
    try {
        return {box_from_json(j.at("witness")), j.at("volume").get<double>(),
                algorithm_from_string(j.at("algorithm").get<std::string>()),
                j.at("certified_exact").get<bool>()};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed dispersion JSON: ") + e.what());
    }
}

json counting_report_to_json(const CountingReport& r) {
    return {{"box", box_to_json(r.box)},
            {"count", r.count},
            {"expected", r.expected},
            {"discrepancy", r.discrepancy},
            {"log_bound_ratio", r.log_bound_ratio}};
}

std::string counting_report_csv_row(const CountingReport& r) {
    return format_decimal(r.box.volume()) + ',' + std::to_string(r.count) + ',' +
           format_decimal(r.expected) + ',' + format_decimal(r.discrepancy) + ',' +
           format_decimal(r.log_bound_ratio);
}

void write_point_set(std::ostream& os, const PointSet& ps) {
    os << "# d=" << ps.dim << " n=" << ps.size() << " t=";
    for (std::size_t j = 0; j < ps.t.size(); ++j) os << (j ? "," : "") << format_decimal(ps.t[j]);
    os << '\n';
    for (const auto& p : ps.points) {
        for (std::size_t j = 0; j < p.size(); ++j) os << (j ? " " : "") << format_decimal(p[j]);
        os << '\n';
    }
}

PointSet read_point_set(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# ", 0) != 0)
        throw ValidationError("point set file must start with '# d=<d> n=<N> t=<...>'");
    PointSet ps;
    std::size_t n = 0;
    bool have_d = false, have_n = false;
    std::istringstream hs(header.substr(2));
    std::string field;
    while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ValidationError("bad header field '" + field + "'");
        const auto key = field.substr(0, eq), value = field.substr(eq + 1);
        try {
            if (key == "d") {
                ps.dim = std::stoul(value);
                have_d = true;
            } else if (key == "n") {
                n = std::stoul(value);
                have_n = true;
            } else if (key == "t") {
                ps.t = parse_decimal_list(value);
            }
        } catch (const std::logic_error&) {
            throw ValidationError("bad header value in '" + field + "'");
        }
    }
    if (!have_d || !have_n || ps.dim == 0) throw ValidationError("header lacks d or n");
    if (!ps.t.empty() && ps.t.size() != ps.dim) throw ValidationError("t has wrong dimension");

    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        ls.imbue(std::locale::classic());
        Point p;
        double v;
        while (ls >> v) p.push_back(v);
        if (!ls.eof() || p.size() != ps.dim)
            throw ValidationError("malformed point line '" + line + "'");
        for (double c : p) {
            if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("point outside [0,1]^d: " + line);
        }
        ps.points.push_back(std::move(p));
    }
    if (ps.points.size() != n)
        throw ValidationError("header says n=" + std::to_string(n) + " but file has " +
                              std::to_string(ps.points.size()) + " points");
    return ps;
}

void save_point_set(const std::string& path, const PointSet& ps) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    write_point_set(out, ps);
}

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open point set file " + path);
    return read_point_set(in);
}

}  // namespace latdisp
