#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hemc/general.hpp"
#include "hemc/generate.hpp"
#include "hemc/heuristics.hpp"
#include "hemc/json_io.hpp"
#include "hemc/oracle.hpp"
#include "hemc/svg.hpp"

namespace {

using nlohmann::json;

int exit_invalid(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

int exit_internal(const std::string& msg) {
    std::cerr << "internal error: " << msg << "\n";
    return 2;
}

struct SolveArgs {
    std::string workload_path;
    std::string solver = "opt";
    std::string out_path;
    std::string svg_path;
    bool do_validate = false;
};

int run_solve(const SolveArgs& args) {
    hemc::WorkloadFile wf = hemc::load_workload(args.workload_path);
    hemc::Schedule sched;
    json out;

    if (args.solver == "opt") {
        hemc::SolveReport report = hemc::solve(wf.workload, wf.machine);
        sched = hemc::pack(wf.workload, wf.machine, report.assignment, report.t_f);
        out = hemc::report_to_json(report);
        out["schedule"] = hemc::schedule_to_json(sched);
        std::cout << "opt makespan " << report.t_f << " (" << to_string(report.terminal) << ")\n";
    } else {
        hemc::HeuristicKind kind =
            args.solver == "ipc" ? hemc::HeuristicKind::IpcDriven : hemc::HeuristicKind::Ltf;
        sched = hemc::schedule_heuristic(wf.workload, wf.machine, kind);
        out = hemc::schedule_to_json(sched);
        std::cout << args.solver << " makespan " << sched.makespan << "\n";
    }

    if (args.do_validate) {
        auto violations = hemc::validate(sched, wf.workload, wf.machine);
        for (const auto& v : violations)
            std::cerr << "violation: " << v.rule << " (" << v.subject << ") [" << v.start << ", "
                      << v.end << ") " << v.detail << "\n";
        if (!violations.empty())
            return exit_internal("schedule failed validation");
    }
    if (!args.out_path.empty())
        hemc::write_json(args.out_path, out);
    if (!args.svg_path.empty())
        hemc::write_svg(args.svg_path, sched);
    return 0;
}

int run_compare(const std::string& workload_path, const std::string& out_path) {
    hemc::WorkloadFile wf = hemc::load_workload(workload_path);
    hemc::SolveReport report = hemc::solve(wf.workload, wf.machine);
    double opt = report.t_f;
    double ipc = hemc::schedule_heuristic(wf.workload, wf.machine, hemc::HeuristicKind::IpcDriven)
                     .makespan;
    double ltf =
        hemc::schedule_heuristic(wf.workload, wf.machine, hemc::HeuristicKind::Ltf).makespan;

    json rows = json::array();
    std::printf("%-6s %14s %12s\n", "solver", "makespan", "normalized");
    auto row = [&](const char* name, double makespan) {
        std::printf("%-6s %14.6g %12.4f\n", name, makespan, makespan / opt);
        rows.push_back({{"solver", name}, {"makespan", makespan}, {"normalized", makespan / opt}});
    };
    row("opt", opt);
    row("ipc", ipc);
    row("ltf", ltf);

    json out = {{"format", "hemc-compare/1"}, {"rows", rows}};
    if (!out_path.empty())
        hemc::write_json(out_path, out);
    else
        std::cout << out.dump(2) << "\n";
    return 0;
}

struct GenerateArgs {
    std::string preset = "random";
    std::uint64_t seed = 0;
    int big = 1;
    int small = 1;
    std::string out_path;
    hemc::RandomParams rp;
};

int run_generate(const GenerateArgs& args) {
    hemc::Machine m = hemc::Machine::make(args.big, args.small);
    hemc::WorkloadFile wf =
        hemc::generate(hemc::preset_from_string(args.preset), args.seed, m, args.rp);
    json j = hemc::workload_to_json(wf);
    if (!args.out_path.empty())
        hemc::write_json(args.out_path, j);
    else
        std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal and heuristic process scheduling for big/small multicore machines"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one workload and export the schedule");
    solve_cmd->add_option("-w,--workload", sa.workload_path, "workload JSON file")->required();
    solve_cmd->add_option("--solver", sa.solver, "opt|ipc|ltf")
        ->check(CLI::IsMember({"opt", "ipc", "ltf"}));
    solve_cmd->add_option("--out", sa.out_path, "write report/schedule JSON here");
    solve_cmd->add_option("--svg", sa.svg_path, "write a Gantt chart SVG here");
    solve_cmd->add_flag("--validate", sa.do_validate, "check the schedule and fail on violations");

    std::string cmp_workload, cmp_out;
    auto* compare_cmd = app.add_subcommand("compare", "Compare opt, ipc and ltf on one workload");
    compare_cmd->add_option("-w,--workload", cmp_workload, "workload JSON file")->required();
    compare_cmd->add_option("--out", cmp_out, "write the comparison JSON here");

    GenerateArgs ga;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic workload file");
    gen_cmd->add_option("--preset", ga.preset, "mix1|mix5|stress|random")
        ->check(CLI::IsMember({"mix1", "mix5", "stress", "random"}));
    gen_cmd->add_option("--seed", ga.seed, "RNG seed");
    gen_cmd->add_option("--big", ga.big, "number of big cores");
    gen_cmd->add_option("--small", ga.small, "number of small cores");
    gen_cmd->add_option("--out", ga.out_path, "write the workload JSON here");
    gen_cmd->add_option("--n", ga.rp.n, "random preset: process count");
    gen_cmd->add_option("--sf-min", ga.rp.sf_min, "random preset: minimum SF");
    gen_cmd->add_option("--sf-max", ga.rp.sf_max, "random preset: maximum SF");
    gen_cmd->add_option("--time-min", ga.rp.time_min, "random preset: minimum big-core time");
    gen_cmd->add_option("--time-max", ga.rp.time_max, "random preset: maximum big-core time");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return run_solve(sa);
        if (compare_cmd->parsed())
            return run_compare(cmp_workload, cmp_out);
        return run_generate(ga);
    } catch (const hemc::ValidationError& e) {
        return exit_invalid(e.what());
    } catch (const std::logic_error& e) {
        return exit_internal(e.what());
    } catch (const std::exception& e) {
        return exit_internal(e.what());
    }
}
