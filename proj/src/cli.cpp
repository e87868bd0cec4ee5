#include "lbpc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lbpc/linear_space.hpp"
#include "lbpc/monge_kpath.hpp"
#include "lbpc/oracle.hpp"
#include "lbpc/solver.hpp"

namespace lbpc {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Penalty parse_penalty(const std::string& text) {
    if (text == "linear") return Penalty::linear();
    if (text == "quadratic") return Penalty::quadratic();
    if (text == "quadratic-shifted") return Penalty::quadratic_shifted();
    if (text.rfind("exp:", 0) == 0) {
        const std::string rate = text.substr(4);
        double t = 0.0;
        const auto res = std::from_chars(rate.data(), rate.data() + rate.size(), t);
        if (res.ec != std::errc{} || res.ptr != rate.data() + rate.size()) {
            throw InvalidInput("bad exponential rate '" + rate + "'");
        }
        return Penalty::exponential_shifted(t);
    }
    throw InvalidInput("unknown penalty '" + text + "'");
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

struct SolveOptions {
    int radix = 2;
    int min_len = 0;
    std::optional<int> max_len;
    std::string penalty = "linear";
    std::string solver = "auto";
    std::optional<int> fringe;
    std::string format = "text";
    bool omit_timing = false;
    std::string weights_path;
};

int cmd_solve(const SolveOptions& o, std::istream& in, std::ostream& out) {
    std::vector<double> weights;
    if (o.weights_path == "-") {
        weights = read_weights(in);
    } else {
        std::ifstream file(o.weights_path);
        if (!file) throw InvalidInput("cannot open weights file '" + o.weights_path + "'");
        weights = read_weights(file);
    }

    ProblemSpec spec;
    spec.weights = std::move(weights);
    spec.radix = o.radix;
    spec.min_len = o.min_len;
    spec.penalty = parse_penalty(o.penalty);
    if (o.max_len) {
        spec.max_len = *o.max_len;
    } else {
        if (spec.radix < 2) throw InvalidInput("radix must be at least 2");
        const std::size_t n = spec.weights.size();
        spec.max_len = std::max(spec.min_len, hard_max_length(n + dummy_count(n, spec.radix), spec.radix));
    }

    const auto start = Clock::now();
    const Solution sol = solve_code(spec, parse_solver(o.solver), o.fringe);
    const double ms = elapsed_ms(start);
    const Codebook& book = sol.codebook;

    if (o.format == "json") {
        Json j;
        j["solver"] = sol.solver;
        j["radix"] = book.radix;
        j["min_len"] = sol.min_len;
        j["max_len"] = sol.max_len;
        j["lengths"] = book.lengths;
        j["codewords"] = book.codewords;
        j["cost"] = book.cost;
        j["kraft"] = book.kraft.str();
        j["kraft_padded"] = book.padded_kraft.str();
        j["fringe"] = sol.fringe;
        if (!o.omit_timing) j["stats"] = {{"wall_ms", ms}};
        out << j.dump(2) << "\n";
    } else {
        out << "solver: " << sol.solver << "\n"
            << "radix: " << book.radix << "\n"
            << "bounds: " << sol.min_len << " " << sol.max_len << "\n"
            << "lengths: " << join(book.lengths) << "\n"
            << "codewords: " << join(book.codewords) << "\n"
            << "cost: " << format_double(book.cost) << "\n"
            << "kraft: " << book.kraft.str() << "\n"
            << "kraft_padded: " << book.padded_kraft.str() << "\n"
            << "fringe: " << sol.fringe << "\n";
        if (!o.omit_timing) out << "[stats]\nwall_ms: " << format_double(ms) << "\n";
    }
    return kExitOk;
}

struct BenchOptions {
    long long n = 1000;
    int radix = 2;
    int spread = 8;
    std::optional<int> min_len;
    std::uint64_t seed = 1;
    int instances = 1;
    bool all_penalties = false;
    std::string format = "text";
    bool omit_timing = false;
};

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    if (o.n < 1) throw InvalidInput("--n must be at least 1");
    if (o.spread < 0) throw InvalidInput("--spread must be nonnegative");
    if (o.instances < 1) throw InvalidInput("--instances must be at least 1");
    if (o.radix < 2) throw InvalidInput("radix must be at least 2");
    const std::size_t n = static_cast<std::size_t>(o.n);
    const int min_len = o.min_len ? *o.min_len : std::max(0, ceil_log(n, o.radix) - o.spread / 2);
    const int max_len = min_len + o.spread;

    std::vector<Penalty> penalties{Penalty::linear()};
    if (o.all_penalties) {
        penalties.push_back(Penalty::quadratic());
        penalties.push_back(Penalty::exponential_shifted(1.0));
    }

    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool all_agree = true;
    Json report = Json::array();

    for (int t = 0; t < o.instances; ++t) {
        ProblemSpec spec;
        spec.radix = o.radix;
        spec.min_len = min_len;
        spec.max_len = max_len;
        spec.weights.resize(n);
        for (double& w : spec.weights) w = std::exp2(-static_cast<double>(o.spread) * unif(rng));

        for (const Penalty& p : penalties) {
            spec.penalty = p;
            const Instance inst = Instance::build(spec);
            if (inst.bounds() == BoundsClass::Infeasible) throw InfeasibleError("radix^max_len is smaller than the symbol count");

            Json row;
            row["instance"] = t;
            row["penalty"] = p.name();
            row["bounds"] = {inst.min_len(), inst.bounds() == BoundsClass::Nontrivial ? inst.max_len() : inst.min_len()};
            Json results = Json::array();
            std::vector<double> costs;

            auto run = [&](const std::string& name, auto&& fn) {
                const auto start = Clock::now();
                const LengthVector lengths = fn();
                const double ms = elapsed_ms(start);
                const double cost = penalty_cost(inst, lengths);
                const bool full = kraft_sum(lengths, inst.radix()) == Rational{1, 1} || inst.bounds() == BoundsClass::TrivialMin;
                if (!full) all_agree = false;
                costs.push_back(cost);
                Json r{{"solver", name}, {"cost", cost}, {"kraft_full", full}};
                if (!o.omit_timing) r["ms"] = ms;
                results.push_back(r);
            };
            run("package-merge", [&] { return solve(inst, SolverKind::PackageMerge); });
            run("linear-space", [&] { return solve(inst, SolverKind::LinearSpace); });
            if (p.is_linear()) run("monge", [&] { return solve(inst, SolverKind::Monge); });
            if (inst.padded_count() <= 12) {
                const auto start = Clock::now();
                const OracleResult r = enumerate_optima(inst);
                Json j{{"solver", "oracle"}, {"cost", r.min_cost}, {"kraft_full", true}};
                if (!o.omit_timing) j["ms"] = elapsed_ms(start);
                results.push_back(j);
                costs.push_back(r.min_cost);
            }

            bool agree = true;
            for (double c : costs) agree = agree && close(c, costs.front());
            for (const auto& r : results) agree = agree && r["kraft_full"].get<bool>();
            all_agree = all_agree && agree;
            row["results"] = results;
            row["agree"] = agree;
            report.push_back(row);
        }
    }

    if (o.format == "json") {
        out << Json{{"n", n}, {"radix", o.radix}, {"runs", report}, {"all_agree", all_agree}}.dump(2) << "\n";
    } else {
        for (const auto& row : report) {
            out << "instance " << row["instance"].get<int>() << " penalty " << row["penalty"].get<std::string>()
                << " n " << n << " radix " << o.radix << " bounds " << row["bounds"][0].get<int>() << " "
                << row["bounds"][1].get<int>() << "\n";
            for (const auto& r : row["results"]) {
                out << "  " << r["solver"].get<std::string>() << " cost " << format_double(r["cost"].get<double>());
                if (r.contains("ms")) out << " ms " << format_double(r["ms"].get<double>());
                out << "\n";
            }
            out << "  " << (row["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
        }
        out << (all_agree ? "all solvers agree" : "solvers disagree") << "\n";
    }
    return all_agree ? kExitOk : kExitDisagreement;
}

}  // namespace

std::vector<double> read_weights(std::istream& in) {
    std::vector<double> weights;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        const std::string tok = line.substr(b, e - b + 1);
        double w = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), w);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
            throw InvalidInput("line " + std::to_string(lineno) + ": not a number: '" + tok + "'");
        }
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InvalidInput("line " + std::to_string(lineno) + ": weights must be positive and finite");
        }
        weights.push_back(w);
    }
    if (weights.empty()) throw InvalidInput("no weights given");
    return weights;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Length-bounded prefix code construction", "lbpc"};
    app.require_subcommand(1);

    SolveOptions so;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Optimal code lengths and codewords for a weights file");
    solve_cmd->add_option("--radix", so.radix, "Code alphabet size")->capture_default_str();
    solve_cmd->add_option("--min-len", so.min_len, "Shortest allowed codeword")->capture_default_str();
    solve_cmd->add_option("--max-len", so.max_len, "Longest allowed codeword (default: no bound)");
    solve_cmd->add_option("--penalty", so.penalty, "linear | quadratic | quadratic-shifted | exp:<t>")->capture_default_str();
    solve_cmd->add_option("--solver", so.solver, "auto | package-merge | linear-space | monge | huffman")->capture_default_str();
    solve_cmd->add_option("--fringe", so.fringe, "Bound max - min length instead of max length");
    solve_cmd->add_option("--format", so.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    solve_cmd->add_flag("--omit-timing", so.omit_timing, "Leave out wall time");
    solve_cmd->add_option("weights", so.weights_path, "Weights file, or - for stdin")->required();

    BenchOptions bo;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Random instances, cross-checked across solvers");
    bench_cmd->add_option("--n", bo.n, "Symbol count")->capture_default_str();
    bench_cmd->add_option("--radix", bo.radix, "Code alphabet size")->capture_default_str();
    bench_cmd->add_option("--spread", bo.spread, "max_len - min_len, also the weight range exponent")->capture_default_str();
    bench_cmd->add_option("--min-len", bo.min_len, "Shortest allowed codeword");
    bench_cmd->add_option("--seed", bo.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--instances", bo.instances, "Instances to generate")->capture_default_str();
    bench_cmd->add_flag("--all-penalties", bo.all_penalties, "Also run quadratic and exp:1");
    bench_cmd->add_option("--format", bo.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    bench_cmd->add_flag("--omit-timing", bo.omit_timing, "Leave out timings");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(so, in, out);
        return cmd_bench(bo, out);
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NoPath& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace lbpc
