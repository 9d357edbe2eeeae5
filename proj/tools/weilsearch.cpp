/*
   Copyright 2026 The weilsearch authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// weilsearch: solve, verify and estimate Weil polynomial search problems.
//
// Exit codes: 0 success, 1 invalid input, 2 precision exhausted, 3 verify found a failing check.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "weilsearch/problem_file.hpp"
#include "weilsearch/weilsearch.hpp"

namespace ws = weilsearch;

namespace {

constexpr int exit_invalid = 1;
constexpr int exit_precision = 2;
constexpr int exit_check_failed = 3;

struct CongruenceOverride {
    std::optional<int> power;
    std::optional<int> exact_below;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--power", power, "Override the shorthand exponent i of mod p^i T^j");
        cmd->add_option("--exact-below", exact_below, "Override the shorthand j of mod p^i T^j");
    }

    void apply(ws::ProblemSpec& spec) const {
        if (!power && !exact_below) return;
        if (!spec.shorthand) throw ws::invalid_problem("--power/--exact-below need a problem with shorthand moduli");
        if (power) spec.shorthand->power = *power;
        if (exact_below) spec.shorthand->exact_below = *exact_below;
    }
};

std::vector<std::vector<mpz_class>> load_candidates(const std::string& path) {
    ws::json doc = ws::read_json_file(path);
    std::vector<std::vector<mpz_class>> out;
    if (doc.is_array()) {
        out.push_back(ws::detail::json_integer_array(doc, "candidate"));
    } else if (doc.is_object() && doc.contains("coeffs")) {
        out.push_back(ws::detail::json_integer_array(doc["coeffs"], "coeffs"));
    } else if (doc.is_object() && doc.contains("solutions")) {
        const auto& sols = doc["solutions"];
        for (std::size_t i = 0; i < sols.size(); ++i)
            out.push_back(ws::detail::json_integer_array(sols[i], "solutions[" + std::to_string(i) + "]"));
    } else {
        throw ws::invalid_problem(path + ": expected a coefficient array, {\"coeffs\": [...]} or a report");
    }
    return out;
}

std::string decimal(const mpq_class& x) {
    std::ostringstream os;
    os << std::setprecision(6) << mpf_class(x, 64);
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate integer polynomials with all roots on a circle |z| = sqrt(q)"};
    app.require_subcommand(1);

    std::string problem_path, out_path, candidate_path, strategy = "powersum", mode = "all";
    int precision = 32;
    unsigned threads = 1;
    std::optional<std::uint64_t> max_solutions;
    CongruenceOverride solve_override, verify_override, estimate_override;

    CLI::App* solve = app.add_subcommand("solve", "Enumerate all solutions of a problem file");
    solve->add_option("problem", problem_path, "Problem file (JSON)")->required();
    solve->add_option("--strategy", strategy, "rootfind or powersum")->check(CLI::IsMember({"rootfind", "powersum"}));
    solve->add_option("--mode", mode, "all or decide (stop at two solutions)")->check(CLI::IsMember({"all", "decide"}));
    solve->add_option("--precision", precision, "Initial root-finding precision in bits")->check(CLI::Range(4, 1 << 20));
    solve->add_option("--threads", threads, "Worker threads (0 = all cores)");
    solve->add_option("--max-solutions", max_solutions, "Stop after this many solutions");
    solve->add_option("--out", out_path, "Write the report here instead of standard output");
    solve_override.add_to(solve);

    CLI::App* verify = app.add_subcommand("verify", "Check candidate polynomials against a problem file");
    verify->add_option("problem", problem_path, "Problem file (JSON)")->required();
    verify->add_option("candidate", candidate_path, "Coefficient array, {\"coeffs\": [...]} or a solve report")->required();
    verify_override.add_to(verify);

    std::optional<int> estimate_n;
    CLI::App* estimate = app.add_subcommand("estimate", "Volume and branching estimates");
    estimate->add_option("problem", problem_path, "Problem file (JSON)");
    estimate->add_option("-n,--n", estimate_n, "Half degree, instead of a problem file");
    estimate_override.add_to(estimate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    try {
        if (*solve) {
            ws::ProblemSpec spec = ws::load_problem(problem_path);
            solve_override.apply(spec);
            ws::PreparedProblem prep = ws::prepare(spec);
            ws::SearchOptions opts;
            opts.strategy = ws::parse_strategy(strategy);
            opts.mode = mode == "decide" ? ws::SearchMode::decide : ws::SearchMode::enumerate_all;
            opts.precision = precision;
            opts.worker_count = threads;
            opts.max_solutions = max_solutions;
            ws::SolveResult res = ws::solve(prep, opts);
            const std::string text = ws::report_json(prep, res, opts).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw ws::invalid_problem("cannot write " + out_path);
                out << text;
            }
            return 0;
        }
        if (*verify) {
            ws::ProblemSpec spec = ws::load_problem(problem_path);
            verify_override.apply(spec);
            ws::PreparedProblem prep = ws::prepare(spec);
            bool all_ok = true;
            const auto candidates = load_candidates(candidate_path);
            if (candidates.empty()) throw ws::invalid_problem(candidate_path + ": no candidates");
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (candidates.size() > 1) std::cout << "candidate " << c << "\n";
                for (const auto& r : ws::verify(prep, candidates[c])) {
                    std::cout << "  " << std::left << std::setw(22) << r.name << (r.pass ? "PASS" : "FAIL");
                    if (!r.detail.empty()) std::cout << "  " << r.detail;
                    std::cout << "\n";
                    all_ok = all_ok && r.pass;
                }
            }
            std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
            return all_ok ? 0 : exit_check_failed;
        }
        // estimate
        int n = 0;
        std::optional<ws::PreparedProblem> prep;
        if (!problem_path.empty()) {
            ws::ProblemSpec spec = ws::load_problem(problem_path);
            estimate_override.apply(spec);
            prep = ws::prepare(spec);
            n = prep->symmetric.n;
        } else if (estimate_n) {
            n = *estimate_n;
        } else {
            throw ws::invalid_problem("estimate needs a problem file or --n");
        }
        if (n < 1) throw ws::invalid_problem("--n must be positive");
        auto [unitary, box] = ws::volume_estimates(n);
        std::cout << "n = " << n << "\n";
        std::cout << "root-unitary volume  " << unitary << "  (~" << decimal(unitary) << ")\n";
        std::cout << "coefficient box      " << box << "  (~" << decimal(box) << ")\n";
        if (prep) {
            const auto& s = prep->symmetric;
            std::cout << "free coefficients: " << s.free_count() << " (top " << s.k + 1 << " fixed)\n";
            std::cout << "j  modulus  estimated range size 4n/(j m)\n";
            for (int j = s.k + 1; j <= s.n; ++j) {
                const mpz_class& m = s.moduli[static_cast<std::size_t>(s.n - j)];
                mpq_class e = ws::child_count_estimate(n, m, j);
                std::cout << j << "  " << m << "  " << e << "  (~" << decimal(e) << ")\n";
            }
        }
        return 0;
    } catch (const ws::precision_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}
