#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rex/encodings/encodings.hpp"
#include "rex/frontend/classify.hpp"
#include "rex/frontend/eval.hpp"
#include "rex/frontend/parser.hpp"
#include "rex/frontend/printer.hpp"
#include "rex/oracle/brute_force.hpp"
#include "rex/oracle/generate.hpp"
#include "rex/solver/solver.hpp"

namespace fs = std::filesystem;
using namespace rex;

namespace {

constexpr int exit_sat = 10;
constexpr int exit_unsat = 20;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Constant letters, with {name} marking a string variable.
Pattern parse_pattern_argument(const std::string& arg)
{
    Pattern out;
    std::size_t at = 0;
    while (at < arg.size()) {
        if (arg[at] == '{') {
            auto close = arg.find('}', at);
            if (close == std::string::npos || close == at + 1)
                throw UsageError("malformed variable in pattern '" + arg + "'");
            out = out + Pattern::variable(arg.substr(at + 1, close - at - 1));
            at = close + 1;
        } else {
            auto next = arg.find('{', at);
            out = out + Pattern::word(arg.substr(at, next - at));
            at = next == std::string::npos ? arg.size() : next;
        }
    }
    return out.normalized();
}

struct SolveOptions {
    std::string file;
    std::size_t budget_states = default_state_budget;
    std::string dump_automata;
    std::string dump_frontier;
    bool model = false;
    bool strict_numstr = false;
};

int run_solve(const SolveOptions& o)
{
    auto f = parse_script(read_file(o.file));
    f.strict_numstr = f.strict_numstr || o.strict_numstr;
    SolverConfig cfg;
    cfg.state_budget = o.budget_states;
    if (!o.dump_automata.empty()) {
        fs::create_directories(o.dump_automata);
        cfg.dump_automata_dir = o.dump_automata;
    }
    std::ofstream frontier;
    if (!o.dump_frontier.empty()) {
        frontier.open(o.dump_frontier);
        if (!frontier)
            throw UsageError("cannot write " + o.dump_frontier);
        cfg.frontier = [&frontier](const std::string& line) { frontier << line << '\n'; };
    }
    SolveStats stats;
    auto v = solve(f, cfg, &stats);
    std::cerr << "theory " << stats.theory.theory_name() << ", skeletons " << stats.skeletons << ", plans "
              << stats.plans << ", tuples " << stats.tuples_expanded << '\n';
    switch (v.kind) {
    case VerdictKind::Sat:
        std::cout << "sat\n";
        if (o.model)
            std::cout << print_model(f, *v.model) << '\n';
        return exit_sat;
    case VerdictKind::Unsat:
        std::cout << "unsat\n";
        return exit_unsat;
    case VerdictKind::Unknown:
        std::cout << "unknown (" << to_string(*v.reason) << ")\n";
        return 0;
    }
    return 0;
}

int run_classify(const std::string& path)
{
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::recursive_directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".smt2")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else if (fs::exists(path)) {
        files.emplace_back(path);
    } else {
        throw UsageError("no such file or directory: " + path);
    }
    int status = 0;
    for (const auto& file : files) {
        try {
            auto f = parse_script(read_file(file.string()));
            std::cout << classification_json(file.filename().string(), classify_theory(f)) << '\n';
        } catch (const ParseError& e) {
            std::cerr << file.string() << ": " << e.what() << '\n';
            status = exit_usage;
        }
    }
    return status;
}

int run_oracle(const std::string& file, std::size_t max_len, std::int64_t max_int, bool model)
{
    auto f = parse_script(read_file(file));
    auto r = brute_force_solve(f, {max_len, max_int});
    std::cerr << "nodes " << r.nodes << '\n';
    if (r.status == OracleStatus::Sat) {
        std::cout << "sat\n";
        if (model)
            std::cout << print_model(f, *r.model) << '\n';
        return exit_sat;
    }
    std::cout << "bounded-unsat\n";
    return 0;
}

int run_encode(const std::string& kind, const std::string& a, const std::string& b)
{
    auto pa = parse_pattern_argument(a);
    auto pb = parse_pattern_argument(b);
    Encoding e;
    if (kind == "eqlen")
        e = encode_eq_len(pa, pb);
    else if (kind == "eq")
        e = encode_eq(pa, pb);
    else if (kind == "leqlen")
        e = encode_leq_len(pa, pb);
    else
        throw UsageError("unknown encoding '" + kind + "'");
    for (const auto& w : e.warnings)
        std::cerr << "warning: " << w.message() << '\n';
    std::cout << "; theory " << e.tag.theory_name() << " (" << to_string(e.tag.decidability) << ")\n"
              << print_script(e.formula);
    return 0;
}

int run_check_model(const std::string& file, const std::string& model_file)
{
    auto f = parse_script(read_file(file));
    auto m = parse_model(read_file(model_file));
    for (const auto& d : f.declarations) {
        bool present = d.sort == Sort::String ? m.strings.contains(d.name) : m.ints.contains(d.name);
        if (!present) {
            std::cerr << "model lacks " << d.name << '\n';
            return 1;
        }
    }
    bool ok = verify_model(f, m);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? 0 : 1;
}

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::size_t count = 10;
    std::string out;
    bool check = false;
};

int run_fuzz(const FuzzOptions& o)
{
    Rng rng(o.seed);
    Alphabet ab("ab");
    if (!o.out.empty())
        fs::create_directories(o.out);
    std::size_t disagreements = 0;
    for (std::size_t k = 0; k < o.count; ++k) {
        auto f = k % 2 == 0 ? random_slc_formula(rng, ab) : random_numstr_formula(rng);
        auto text = print_script(f);
        if (!o.out.empty())
            std::ofstream(fs::path(o.out) / ("fuzz" + std::to_string(k) + ".smt2")) << text;
        else if (!o.check)
            std::cout << "; formula " << k << '\n' << text;
        if (!o.check)
            continue;
        auto v = solve(f);
        auto r = brute_force_solve(f, {5, 16});
        bool bad = (r.status == OracleStatus::Sat && v.kind != VerdictKind::Sat) ||
                   (v.kind == VerdictKind::Sat && !verify_model(f, *v.model)) ||
                   (v.kind == VerdictKind::Unsat && r.status == OracleStatus::Sat);
        if (bad) {
            ++disagreements;
            std::cout << "disagreement on formula " << k << ":\n" << text;
        }
    }
    if (o.check)
        std::cout << o.count << " formulas, " << disagreements << " disagreements\n";
    return disagreements == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decision procedures for regular string constraints"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "decide a script; exit 10 sat, 20 unsat, 0 unknown");
    solve_cmd->add_option("file", solve_opts.file, "input script")->required();
    solve_cmd->add_option("--budget-states", solve_opts.budget_states, "state budget per automaton");
    solve_cmd->add_option("--dump-automata", solve_opts.dump_automata, "directory for Graphviz files");
    solve_cmd->add_option("--dump-frontier", solve_opts.dump_frontier, "file for the column search frontier");
    solve_cmd->add_flag("--model", solve_opts.model, "print the model");
    solve_cmd->add_flag("--strict-numstr", solve_opts.strict_numstr, "numstr rejects the empty word");

    std::string classify_path;
    auto* classify_cmd = app.add_subcommand("classify", "print the theory of each script as JSON");
    classify_cmd->add_option("path", classify_path, "file or directory")->required();

    std::string oracle_file;
    std::size_t max_len = 6;
    std::int64_t max_int = 32;
    bool oracle_model = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "bounded brute-force search; exit 10 on a model");
    oracle_cmd->add_option("file", oracle_file, "input script")->required();
    oracle_cmd->add_option("--max-len", max_len, "longest string tried");
    oracle_cmd->add_option("--max-int", max_int, "largest absolute integer tried");
    oracle_cmd->add_flag("--model", oracle_model, "print the model");

    std::string kind, left, right;
    auto* encode_cmd = app.add_subcommand("encode", "print an encoding; {x} marks a variable");
    encode_cmd->add_option("kind", kind, "eqlen, eq or leqlen")->required()->check(CLI::IsMember({"eqlen", "eq", "leqlen"}));
    encode_cmd->add_option("a", left, "left pattern")->required();
    encode_cmd->add_option("b", right, "right pattern")->required();

    std::string check_file, model_file;
    auto* check_cmd = app.add_subcommand("check-model", "verify a model; exit 0 when it satisfies the script");
    check_cmd->add_option("file", check_file, "input script")->required();
    check_cmd->add_option("model", model_file, "model file")->required();

    FuzzOptions fuzz_opts;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "generate random scripts");
    fuzz_cmd->add_option("--seed", fuzz_opts.seed, "generator seed");
    fuzz_cmd->add_option("--count", fuzz_opts.count, "number of scripts");
    fuzz_cmd->add_option("--out", fuzz_opts.out, "directory for the scripts");
    fuzz_cmd->add_flag("--check", fuzz_opts.check, "compare solver and oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_opts);
        if (*classify_cmd)
            return run_classify(classify_path);
        if (*oracle_cmd)
            return run_oracle(oracle_file, max_len, max_int, oracle_model);
        if (*encode_cmd)
            return run_encode(kind, left, right);
        if (*check_cmd)
            return run_check_model(check_file, model_file);
        if (*fuzz_cmd)
            return run_fuzz(fuzz_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_usage;
}
