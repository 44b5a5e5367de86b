#include "epdiff/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "epdiff/config.hpp"
#include "epdiff/greens.hpp"
#include "epdiff/output.hpp"
#include "epdiff/verify.hpp"

namespace epdiff {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_config(read_file(config_path));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (const char* env_dir = std::getenv("EPDIFF_OUTPUT_DIR"))
        config.output_dir = env_dir;

    try {
        std::filesystem::create_directories(config.output_dir);
        const std::filesystem::path dir(config.output_dir);

        SnapshotSink sink = [&](const Snapshot& snap) {
            const auto path = dir / snapshot_filename(snap.step, config.dim);
            GridPtr grid = snap.fields->front().grid;
            if (config.dim == 1)
                write_snapshot_csv(path.string(), grid, snap.field_names, *snap.fields);
            else
                write_snapshot_binary(path.string(), grid, *snap.fields);
        };

        const RunResult result = run(config, sink);
        write_diagnostics_csv((dir / "diagnostics.csv").string(), result.diagnostics);

        const auto& first = result.diagnostics.front();
        const auto& last = result.diagnostics.back();
        out << "run finished: " << last.step << " steps to t = " << fmt(last.t) << "\n";
        out << "  hamiltonian: " << fmt(first.hamiltonian) << " -> " << fmt(last.hamiltonian);
        if (first.hamiltonian != 0.0)
            out << "  (rel drift "
                << fmt(std::fabs(last.hamiltonian - first.hamiltonian) /
                       std::fabs(first.hamiltonian))
                << ")";
        out << "\n";
        if (first.mass && last.mass) {
            out << "  mass: " << fmt(*first.mass) << " -> " << fmt(*last.mass)
                << "  (rel drift "
                << fmt(std::fabs(*last.mass - *first.mass) / std::fabs(*first.mass)) << ")\n";
        }
        out << "  momentum_x: " << fmt(first.momentum_x) << " -> " << fmt(last.momentum_x)
            << "\n";
        out << "  wrote " << result.diagnostics.size() << " diagnostics rows to "
            << (dir / "diagnostics.csv").string() << "\n";
        return 0;
    } catch (const RunAborted& e) {
        err << "aborted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
    try {
        return verify::run_suite(suite, out);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_greens_table(const GreensTableOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const OperatorParams op = make_operator_params(opt.alpha, opt.nu, opt.dim);
        const GreenParams gp = make_green_params(op);
        if (opt.samples < 1) throw std::invalid_argument("greens-table: samples must be >= 1");
        if (!(opt.rmax > 0.0)) throw std::invalid_argument("greens-table: rmax must be > 0");
        out << "r,G\n";
        for (std::size_t i = 1; i <= opt.samples; ++i) {
            const double r =
                opt.rmax * static_cast<double>(i) / static_cast<double>(opt.samples);
            out << fmt(r) << ',' << fmt(green_scalar(r, gp)) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace epdiff
