#include "cli.hpp"

#include "mvdsp/mvdsp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

namespace mvdsp {

namespace {

namespace fs = std::filesystem;

struct SolveArgs {
    std::string algo = "cc-det";
    std::optional<std::size_t> target;
    bool max = false;
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1'000'000;
    std::optional<std::size_t> max_ell;
    std::size_t path_cap = 100'000;
    std::string file;
    std::string output;
};

Algorithm algorithm_from(const std::string& name) {
    if (name == "greedy") return Algorithm::greedy;
    if (name == "cc") return Algorithm::color_coding_randomized;
    if (name == "cc-det") return Algorithm::color_coding_deterministic;
    return Algorithm::brute_force;
}

SolveOptions options_from(const SolveArgs& a) {
    SolveOptions o;
    o.color_coding.seed = a.seed;
    o.color_coding.max_iterations = a.max_iterations;
    o.color_coding.max_ell = a.max_ell;
    o.brute_force.path_cap = a.path_cap;
    return o;
}

void print_report(std::ostream& out, const SolveReport& r, bool with_paths) {
    out << "# algorithm " << to_string(r.mode) << '\n'
        << "# status " << to_string(r.status) << '\n'
        << "# optimal " << (r.optimal ? "yes" : "no") << '\n';
    if (r.ell_used) out << "# ell_used " << *r.ell_used << '\n';
    out << "# iterations " << r.iterations << '\n'
        << "# size " << r.solution.size() << '\n'
        << "# total_arcs " << r.solution.total_arcs() << '\n';
    if (with_paths) out << serialize_solution(r.solution);
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Instance instance = parse_instance(read_file(a.file));
    const Algorithm algo = algorithm_from(a.algo);
    const SolveOptions options = options_from(a);
    SolveReport report;
    try {
        report = a.max ? solve_max(instance, algo, options)
                       : solve_decision(instance, algo, a.target.value_or(instance.target()), options);
    } catch (const LimitError& e) {
        err << "mvdsp: " << e.what() << '\n';
        return exit_code::exhausted;
    }
    const VerifyReport check = verify_solution(instance, report.solution);
    if (!check.feasible()) {
        for (const auto& v : check.violations) err << "mvdsp: internal error: " << to_string(v.kind) << ": " << v.detail << '\n';
        return exit_code::no;
    }
    if (a.output.empty()) {
        print_report(out, report, true);
    } else {
        write_file(a.output, serialize_solution(report.solution));
        print_report(out, report, false);
    }
    switch (report.status) {
    case SolveStatus::found: return exit_code::ok;
    case SolveStatus::not_found: return exit_code::no;
    case SolveStatus::budget_exhausted: return exit_code::exhausted;
    }
    return exit_code::ok;
}

struct GenerateArgs {
    std::string kind;
    std::string input;
    std::string output;
    std::optional<std::size_t> colors;
    std::optional<std::size_t> target;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
    const std::string text = read_file(a.input);
    GadgetInstance g;
    if (a.kind == "clique") {
        g = gen_clique(parse_dimacs_graph(text));
    } else if (a.kind == "mcc") {
        Graph graph = parse_dimacs_graph(text);
        if (!a.colors || *a.colors == 0) throw CLI::ValidationError("--k", "mcc needs the number of color classes");
        if (graph.vertex_count() % *a.colors != 0)
            throw Error("vertex count " + std::to_string(graph.vertex_count()) + " is not a multiple of k");
        const std::size_t nu = graph.vertex_count() / *a.colors;
        g = gen_multicolored_clique(ColoredGraph{std::move(graph), *a.colors, nu});
    } else {
        g = gen_sat3_layered(parse_dimacs_cnf(text));
    }
    if (a.target) g.instance = g.instance.with_target(*a.target);
    write_file(a.output, serialize_instance(g.instance));
    out << "# generator " << to_string(g.provenance) << '\n'
        << "# claim " << g.claim << '\n'
        << "# vertices " << g.instance.vertex_count() << '\n'
        << "# edges " << g.instance.graph().edge_count() << '\n'
        << "# pairs " << g.instance.pair_count() << '\n';
    if (g.instance.layering()) out << "# layers " << g.instance.layering()->size() << '\n';
    return exit_code::ok;
}

int run_compose(const std::vector<std::string>& files, const std::string& output, std::ostream& out) {
    std::vector<GadgetInstance> inputs;
    for (const auto& f : files) inputs.push_back(as_gadget(parse_instance(read_file(f))));
    const GadgetInstance merged = cross_compose(inputs);
    write_file(output, serialize_instance(merged.instance));
    out << "# inputs " << files.size() << '\n'
        << "# layers " << merged.instance.layering()->size() << '\n'
        << "# pairs " << merged.instance.pair_count() << '\n'
        << "# vertices " << merged.instance.vertex_count() << '\n';
    return exit_code::ok;
}

int run_verify(const std::string& instance_file, const std::string& solution_file, bool layered, std::ostream& out,
               std::ostream& err) {
    const Instance instance = parse_instance(read_file(instance_file));
    const Solution solution = parse_solution(read_file(solution_file));
    VerifyReport r = verify_solution(instance, solution);
    if (layered) {
        VerifyReport l = verify_layering(instance);
        r.violations.insert(r.violations.end(), l.violations.begin(), l.violations.end());
    }
    for (const auto& v : r.violations) err << to_string(v.kind) << ": " << v.detail << '\n';
    out << (r.feasible() ? "feasible" : "infeasible") << " size " << r.size << " total_arcs " << r.total_arcs << '\n';
    return r.feasible() ? exit_code::ok : exit_code::no;
}

int run_bench(const std::string& dir, const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(dir)) throw Error("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mvdsp") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    const SolveOptions options = options_from(a);
    const std::pair<const char*, Algorithm> algos[] = {{"greedy", Algorithm::greedy},
                                                       {"cc", Algorithm::color_coding_randomized},
                                                       {"cc-det", Algorithm::color_coding_deterministic},
                                                       {"brute", Algorithm::brute_force}};
    out << "instance,algo,size,total_arcs,millis\n";
    int status = exit_code::ok;
    for (const auto& file : files) {
        Instance instance;
        try {
            instance = parse_instance(read_file(file.string()));
        } catch (const Error& e) {
            err << file.filename().string() << ": " << e.what() << '\n';
            status = exit_code::usage;
            continue;
        }
        for (const auto& [name, algo] : algos) {
            out << file.filename().string() << ',' << name << ',';
            const auto start = std::chrono::steady_clock::now();
            try {
                SolveReport r = solve_max(instance, algo, options);
                const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                if (!verify_solution(instance, r.solution).feasible()) status = exit_code::no;
                out << r.solution.size() << ',' << r.solution.total_arcs() << ',' << ms << '\n';
            } catch (const LimitError& e) {
                out << ",,\n";
                err << file.filename().string() << " " << name << ": " << e.what() << '\n';
            }
        }
    }
    return status;
}

void add_solver_flags(CLI::App& cmd, SolveArgs& a) {
    cmd.add_option("--seed", a.seed, "Seed for randomized color coding");
    cmd.add_option("--max-iterations", a.max_iterations, "Coloring budget for randomized color coding");
    cmd.add_option("--max-ell", a.max_ell, "Largest solution length to try");
    cmd.add_option("--path-cap", a.path_cap, "Shortest paths per pair the brute force may enumerate");
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum vertex-disjoint shortest paths toolkit", "mvdsp"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
    solve_cmd->add_option("--algo", solve.algo, "greedy, cc, cc-det or brute")
        ->check(CLI::IsMember({"greedy", "cc", "cc-det", "brute"}));
    auto* p_opt = solve_cmd->add_option("--p", solve.target, "Number of pairs to connect (default: from the file)");
    solve_cmd->add_flag("--max", solve.max, "Maximize the number of connected pairs")->excludes(p_opt);
    add_solver_flags(*solve_cmd, solve);
    solve_cmd->add_option("-o,--output", solve.output, "Write the solution document here");
    solve_cmd->add_option("FILE", solve.file, "Instance file")->required();

    GenerateArgs gen;
    auto* gen_cmd = app.add_subcommand("generate", "Build a gadget instance");
    gen_cmd->add_option("KIND", gen.kind, "clique, mcc or sat3")->required()->check(CLI::IsMember({"clique", "mcc", "sat3"}));
    gen_cmd->add_option("INPUT", gen.input, "DIMACS edge file (clique, mcc) or CNF (sat3)")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Instance file to write")->required();
    gen_cmd->add_option("--k", gen.colors, "Number of color classes (mcc)");
    gen_cmd->add_option("--p", gen.target, "Target number of pairs (default: all)");

    std::vector<std::string> compose_files;
    std::string compose_out;
    auto* compose_cmd = app.add_subcommand("compose", "OR-compose layered instances");
    compose_cmd->add_option("FILES", compose_files, "Layered instance files")->required();
    compose_cmd->add_option("-o,--output", compose_out, "Instance file to write")->required();

    std::string verify_instance, verify_solution_file;
    bool verify_layered = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
    verify_cmd->add_option("INSTANCE", verify_instance)->required();
    verify_cmd->add_option("SOLUTION", verify_solution_file)->required();
    verify_cmd->add_flag("--layered", verify_layered, "Also check the declared layering");

    std::string bench_dir;
    SolveArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run every algorithm over a directory of .mvdsp files");
    bench_cmd->add_option("DIR", bench_dir)->required();
    add_solver_flags(*bench_cmd, bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*solve_cmd) return run_solve(solve, out, err);
        if (*gen_cmd) return run_generate(gen, out);
        if (*compose_cmd) return run_compose(compose_files, compose_out, out);
        if (*verify_cmd) return run_verify(verify_instance, verify_solution_file, verify_layered, out, err);
        if (*bench_cmd) return run_bench(bench_dir, bench, out, err);
    } catch (const CLI::Error& e) {
        err << "mvdsp: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "mvdsp: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace mvdsp
