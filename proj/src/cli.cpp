#include "latdisp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "latdisp/dilation.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/errors.hpp"
#include "latdisp/experiments.hpp"
#include "latdisp/io.hpp"

namespace latdisp {

namespace {

struct LatticeOptions {
    std::string lattice_name = "golden";
    std::size_t dim = 0;  // 0: the lattice's natural default
};

Lattice make_lattice(const LatticeOptions& o) {
    if (o.lattice_name == "golden") {
        if (o.dim != 0 && o.dim != 2) throw ValidationError("the golden lattice is two-dimensional");
        return golden_lattice();
    }
    if (o.lattice_name == "frolov") return frolov_lattice(o.dim == 0 ? 2 : o.dim);
    if (o.lattice_name == "integer") return integer_lattice(o.dim == 0 ? 2 : o.dim);
    if (o.lattice_name.rfind("custom:", 0) == 0) {
        auto l = load_lattice(o.lattice_name.substr(7));
        if (o.dim != 0 && o.dim != l.dim()) throw ValidationError("--dim disagrees with lattice file");
        return l;
    }
    throw ValidationError("unknown lattice '" + o.lattice_name + "' (golden|frolov|integer|custom:<file>)");
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* flag) {
    std::vector<T> out;
    std::stringstream ss(s);
    ss.imbue(std::locale::classic());
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        is.imbue(std::locale::classic());
        T v{};
        if (!(is >> v) || !is.eof()) throw ValidationError(std::string("bad value '") + item + "' in " + flag);
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError(std::string(flag) + " must not be empty");
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path);
    f << text;
}

void add_lattice_flags(CLI::App* cmd, LatticeOptions& o) {
    cmd->add_option("--lattice", o.lattice_name, "golden | frolov | integer | custom:<file>");
    cmd->add_option("--dim", o.dim, "dimension for frolov / integer lattices");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Admissible lattices, dilated point sets and their dispersion", "latdisp"};
    app.require_subcommand(1);

    LatticeOptions lat;
    std::string n_arg, m_arg = "8,16,32", vol_arg = "10,100,1000";
    std::string out_path, in_path, format = "csv", algorithm = "auto";
    std::size_t shifts = 50;
    int resolution = 512;
    Config cfg;

    auto* gen = app.add_subcommand("generate", "write P_N for a lattice to a point-set file");
    add_lattice_flags(gen, lat);
    gen->add_option("--n", n_arg, "number of points N")->required();
    gen->add_option("--out", out_path, "output file (default: standard output)");

    auto* disp = app.add_subcommand("dispersion", "dispersion of a point-set file as JSON");
    disp->add_option("--in", in_path, "point-set file")->required();
    disp->add_option("--algorithm", algorithm, "auto | sweep2d | branch_nd | grid_oracle");
    disp->add_option("--resolution", resolution, "grid_oracle resolution");
    disp->add_option("--out", out_path, "output file");

    auto* scaling = app.add_subcommand("scaling", "N * disp(P_N) for a list of N");
    add_lattice_flags(scaling, lat);
    scaling->add_option("--n", n_arg, "comma-separated list of N")->required();

    auto* bounded = app.add_subcommand("bounded", "windowed lattice dispersion for growing windows");
    add_lattice_flags(bounded, lat);
    bounded->add_option("--m", m_arg, "comma-separated window half-widths");

    auto* counting = app.add_subcommand("counting", "lattice point counting discrepancy of shifted cubes");
    add_lattice_flags(counting, lat);
    counting->add_option("--volumes", vol_arg, "comma-separated cube volumes");
    counting->add_option("--shifts", shifts, "random shifts per volume");
    counting->add_option("--seed", cfg.seed, "64-bit seed");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

    for (auto* cmd : {scaling, bounded, counting}) {
        cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output file");
        if (cmd != counting) cmd->add_option("--seed", cfg.seed, "64-bit seed (unused by this study)");
    }

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitError;
    }

    try {
        if (*gen) {
            const auto n = parse_list<std::size_t>(n_arg, "--n");
            if (n.size() != 1) throw ValidationError("generate takes a single --n");
            std::ostringstream os;
            write_point_set(os, point_set_for_n(make_lattice(lat), n.front(), cfg));
            emit(os.str(), out_path, out);
        } else if (*disp) {
            const auto ps = load_point_set(in_path);
            const auto domain = Box::unit_cube(ps.dim);
            DispersionResult r;
            if (algorithm == "auto") {
                r = dispersion(ps, cfg);
            } else {
                switch (algorithm_from_string(algorithm)) {
                    case DispersionAlgorithm::sweep2d: r = largest_empty_box_sweep2d(ps.points, domain, cfg); break;
                    case DispersionAlgorithm::branch_nd: r = largest_empty_box_branch(ps.points, domain, cfg); break;
                    case DispersionAlgorithm::grid_oracle: r = grid_oracle(ps.points, domain, resolution); break;
                }
            }
            emit(dispersion_to_json(r).dump(2) + '\n', out_path, out);
        } else if (*scaling) {
            const auto rows = scaling_study(make_lattice(lat), parse_list<std::size_t>(n_arg, "--n"), cfg);
            emit(format == "csv" ? scaling_csv(rows) : scaling_json(rows), out_path, out);
        } else if (*bounded) {
            const auto table = boundedness_study(make_lattice(lat), parse_list<double>(m_arg, "--m"), cfg);
            emit(format == "csv" ? bounded_csv(table) : bounded_json(table), out_path, out);
        } else if (*counting) {
            const auto rows = discrepancy_study(make_lattice(lat), parse_list<double>(vol_arg, "--volumes"),
                                                shifts, cfg);
            emit(format == "csv" ? counting_csv(rows) : counting_json(rows), out_path, out);
        } else if (*selftest) {
            return run_selftest(out, cfg) == 0 ? kExitOk : kExitInvariant;
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}

}  // namespace latdisp
