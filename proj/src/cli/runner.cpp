#include "dmlpg/cli/runner.hpp"

#include "dmlpg/benchmarks/study.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef DMLPG_VERSION
#define DMLPG_VERSION "unknown"
#endif

namespace dmlpg {

Command parse_command(const std::string& name)
{
    if (name == "solve") return Command::solve;
    if (name == "study") return Command::study;
    if (name == "compare") return Command::compare;
    throw Error("unknown command '" + name + "'");
}

std::string to_string(Command command)
{
    switch (command) {
    case Command::solve: return "solve";
    case Command::study: return "study";
    case Command::compare: return "compare";
    }
    return "?";
}

std::string describe_error(const std::exception& e)
{
    std::ostringstream s;
    s << e.what();
    if (const auto* nd = dynamic_cast<const NodeDeficiencyError*>(&e)) {
        s << " [point (" << nd->point().x() << ", " << nd->point().y() << ", " << nd->point().z() << ")";
        if (nd->node() >= 0) s << ", node " << nd->node();
        s << ", condition " << nd->condition() << "]";
    } else if (const auto* uc = dynamic_cast<const UnsupportedClipError*>(&e)) {
        s << " [node " << uc->node() << "]";
    } else if (const auto* ce = dynamic_cast<const ConfigError*>(&e)) {
        if (!ce->key().empty()) s << " [key " << ce->key() << "]";
    }
    return s.str();
}

namespace {

using json = nlohmann::ordered_json;

// Non-finite numbers are not valid JSON; they are stored as null.
json number(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json config_json(const RunConfig& c)
{
    json j = json::object();
    std::istringstream in(format_config(c));
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find(" = ");
        j[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return j;
}

class Writer {
public:
    Writer(const RunConfig& c, std::ostream& log) : dir_(c.output_dir), log_(log)
    {
        std::filesystem::create_directories(dir_);
    }

    std::ofstream open(const std::string& name)
    {
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw Error("cannot write '" + (dir_ / name).string() + "'");
        f.precision(17);
        files_.push_back(name);
        log_ << "  wrote " << (dir_ / name).string() << '\n';
        return f;
    }

    std::vector<std::string> files() const { return files_; }

private:
    std::filesystem::path dir_;
    std::ostream& log_;
    std::vector<std::string> files_;
};

json level_json(const LevelOutcome& o, Method method, int level, bool timings)
{
    json j;
    j["record"] = "level";
    j["method"] = to_string(method);
    j["level"] = level;
    j["N"] = o.setup.nodes.size();
    j["h"] = o.setup.nodes.mesh_size;
    j["r_u"] = number(o.errors.r_u);
    j["r_eps"] = number(o.errors.r_eps);
    j["residual"] = number(o.solution.residual);
    j["t_assemble_s"] = timings ? o.errors.t_assemble_s : 0.0;
    j["t_solve_s"] = timings ? o.errors.t_solve_s : 0.0;
    j["shape_evals"] = o.errors.shape_evaluations;
    j["cache_entries"] = o.system.stats.cache_entries;
    j["cache_hits"] = o.system.stats.cache_hits;
    j["nnz"] = o.system.K.nonZeros();
    j["evaluation_mesh"] = o.errors.evaluation_mesh;
    return j;
}

void write_profiles(Writer& w, const LevelOutcome& o, const RunConfig& c, const std::string& prefix)
{
    for (const auto& [name, rows] : figure_profiles(o, c.problem)) {
        auto f = w.open(prefix + name + ".csv");
        write_profile_csv(f, rows);
    }
}

void write_solution(Writer& w, const LevelOutcome& o)
{
    auto f = w.open("solution.csv");
    const int d = o.setup.nodes.dim;
    f << "x,y,z";
    for (int c = 0; c < d; ++c) f << ",u" << c + 1;
    for (int c = 0; c < d; ++c) f << ",exact_u" << c + 1;
    f << '\n';
    for (Index k = 0; k < o.setup.nodes.size(); ++k) {
        const Point& x = o.setup.nodes.points[k];
        f << format_number(x.x()) << ',' << format_number(x.y()) << ',' << format_number(x.z());
        for (int c = 0; c < d; ++c) f << ',' << format_number(o.solution.u[d * k + c]);
        const Vector ue = o.setup.exact.displacement(x);
        for (int c = 0; c < d; ++c) f << ',' << format_number(ue[c]);
        f << '\n';
    }
}

std::vector<StudyRow> study_for(const RunConfig& c, Method method, std::vector<json>& records, std::ostream& log,
                                LevelOutcome* finest)
{
    AssemblyOptions opt = c.assembly;
    opt.method = method;
    std::size_t i = 0;
    auto on_level = [&](const LevelOutcome& o) {
        const int level = c.levels[i++];
        log << "  " << to_string(method) << " level " << level << ": N = " << o.setup.nodes.size()
            << ", r_u = " << o.errors.r_u << ", r_eps = " << o.errors.r_eps << '\n';
        records.push_back(level_json(o, method, level, c.timings));
        if (finest && i == c.levels.size()) *finest = o;
    };
    return convergence_study(c.problem, opt, c.levels, on_level);
}

}  // namespace

RunOutcome run(Command command, const RunConfig& c, std::ostream& log)
{
    const auto start = std::chrono::steady_clock::now();
    Writer w(c, log);
    std::vector<json> records;
    log << to_string(command) << ": " << to_string(c.problem.kind) << " with " << to_string(c.assembly.method)
        << '\n';

    switch (command) {
    case Command::solve: {
        const int level = c.levels.back();
        const LevelOutcome o = run_level(c.problem, c.assembly, level);
        records.push_back(level_json(o, c.assembly.method, level, c.timings));
        log << "  N = " << o.setup.nodes.size() << ", r_u = " << o.errors.r_u << ", r_eps = " << o.errors.r_eps
            << '\n';
        write_solution(w, o);
        write_profiles(w, o, c, "profile_");
        if (c.dump) {
            auto nodes = w.open("nodes.txt");
            write_node_table(nodes, o.setup.nodes);
            auto sys = w.open("system.coo");
            write_system(sys, o.system);
        }
        break;
    }
    case Command::study: {
        LevelOutcome finest;
        const auto rows = study_for(c, c.assembly.method, records, log, &finest);
        auto f = w.open("convergence.csv");
        write_convergence_csv(f, rows, c.timings);
        write_profiles(w, finest, c, "profile_");
        break;
    }
    case Command::compare: {
        const Method a = c.assembly.method, b = c.compare_method;
        if (a == b) throw ConfigError("compare needs two different methods", 0, 0, "compare_method");
        const auto ra = study_for(c, a, records, log, nullptr);
        const auto rb = study_for(c, b, records, log, nullptr);
        {
            auto f = w.open("convergence_" + to_string(a) + ".csv");
            write_convergence_csv(f, ra, c.timings);
        }
        {
            auto f = w.open("convergence_" + to_string(b) + ".csv");
            write_convergence_csv(f, rb, c.timings);
        }
        auto f = w.open("compare.csv");
        const std::string A = to_string(a), B = to_string(b);
        f << "h,N," << A << "_r_u," << B << "_r_u," << A << "_r_eps," << B << "_r_eps," << A << "_t_assemble_s," << B
          << "_t_assemble_s," << A << "_shape_evals," << B << "_shape_evals,assembly_time_ratio\n";
        for (std::size_t i = 0; i < ra.size(); ++i) {
            const double ratio = c.timings && ra[i].t_assemble_s > 0 ? rb[i].t_assemble_s / ra[i].t_assemble_s
                                                                      : std::nan("");
            const double ta = c.timings ? ra[i].t_assemble_s : 0.0, tb = c.timings ? rb[i].t_assemble_s : 0.0;
            f << format_number(ra[i].h) << ',' << ra[i].N << ',' << format_number(ra[i].r_u) << ','
              << format_number(rb[i].r_u) << ',' << format_number(ra[i].r_eps) << ',' << format_number(rb[i].r_eps)
              << ',' << format_number(ta) << ',' << format_number(tb) << ',' << ra[i].shape_evals << ','
              << rb[i].shape_evals << ',' << format_number(ratio) << '\n';
        }
        break;
    }
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json summary;
    summary["record"] = "run";
    summary["command"] = to_string(command);
    summary["version"] = DMLPG_VERSION;
    summary["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                       std::to_string(EIGEN_MINOR_VERSION);
    summary["config"] = config_json(c);
    summary["outputs"] = w.files();
    summary["wall_s"] = c.timings ? wall : 0.0;
    records.push_back(summary);

    auto f = w.open("summary.jsonl");
    for (const auto& r : records) f << r.dump() << '\n';
    return {w.files()};
}

int run_main(Command command, const RunConfig& config, std::ostream& log, std::ostream& err)
{
    try {
        run(command, config, log);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << describe_error(e) << '\n';
        return 1;
    }
}

}  // namespace dmlpg
