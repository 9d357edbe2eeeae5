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

#ifndef WEILSEARCH_PROBLEM_FILE_HPP
#define WEILSEARCH_PROBLEM_FILE_HPP

// JSON problem and report files. Integers travel as decimal strings so that
// no consumer truncates them to a double; plain JSON integers are accepted on input.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "solver.hpp"

namespace weilsearch {

using json = nlohmann::json;

namespace detail {

inline mpz_class json_integer(const json& v, const std::string& field) {
    try {
        if (v.is_string()) return parse_integer(v.get<std::string>());
        if (v.is_number_integer()) return mpz_class(v.dump());
    } catch (const std::exception&) {
    }
    throw invalid_problem("field '" + field + "': expected an integer or a decimal integer string");
}

inline mpq_class json_rational(const json& v, const std::string& field) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return mpq_class(mpz_class(v.dump()));
    } catch (const std::exception&) {
    }
    throw invalid_problem("field '" + field + "': expected a rational such as \"4\" or \"7/2\"");
}

inline int json_small_int(const json& v, const std::string& field) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
        mpz_class z = json_integer(v, field);
        if (z.fits_sint_p()) return static_cast<int>(z.get_si());
    }
    throw invalid_problem("field '" + field + "': expected a small integer");
}

inline std::vector<mpz_class> json_integer_array(const json& v, const std::string& field) {
    if (!v.is_array()) throw invalid_problem("field '" + field + "': expected an array");
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json_integer(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw invalid_problem(std::string("missing field '") + field + "'");
    return *it;
}

}  // namespace detail

inline ProblemSpec parse_problem(const json& doc) {
    using namespace detail;
    if (!doc.is_object()) throw invalid_problem("problem file must be a JSON object");
    ProblemSpec s;
    const std::string form = doc.value("form", std::string("weil"));
    if (form == "weil")
        s.form = ProblemForm::weil;
    else if (form == "symmetric")
        s.form = ProblemForm::symmetric;
    else
        throw invalid_problem("field 'form': expected \"weil\" or \"symmetric\"");
    if (s.form == ProblemForm::weil)
        s.q = json_integer(require(doc, "q"), "q");
    else
        s.B = json_rational(require(doc, "B"), "B");
    s.degree = json_small_int(require(doc, "degree"), "degree");
    s.base_coeffs = json_integer_array(require(doc, "base_coeffs"), "base_coeffs");
    if (s.base_coeffs.size() != static_cast<std::size_t>(s.degree) + 1)
        throw invalid_problem("field 'base_coeffs': expected degree+1 entries");
    if (doc.contains("sign")) {
        int sg = json_small_int(doc["sign"], "sign");
        if (sg != 1 && sg != -1) throw invalid_problem("field 'sign': expected +1 or -1");
        s.sign = sg;
    }
    const json& m = require(doc, "moduli");
    if (m.is_object()) {
        CongruenceShorthand c;
        c.prime = json_integer(require(m, "prime"), "moduli.prime");
        c.power = json_small_int(require(m, "power"), "moduli.power");
        c.exact_below = json_small_int(require(m, "exact_below"), "moduli.exact_below");
        s.shorthand = c;
    } else {
        s.moduli = json_integer_array(m, "moduli");
        if (s.moduli.size() != s.base_coeffs.size()) throw invalid_problem("field 'moduli': expected degree+1 entries");
    }
    return s;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_problem("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw invalid_problem(path + ": " + e.what());
    }
}

inline ProblemSpec load_problem(const std::string& path) { return parse_problem(read_json_file(path)); }

inline json integer_array_json(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

/// Coefficients of a polynomial padded to `len` entries, low degree first.
inline std::vector<mpz_class> padded_coeffs(const IntPolynomial& p, std::size_t len) {
    std::vector<mpz_class> c = p.coeffs();
    c.resize(std::max(len, c.size()));
    return c;
}

/// "N" when complete, "many" when decide mode stopped at two, ">=N" when a cap stopped the search.
inline std::string solution_count_label(const SolveResult& r, const SearchOptions& opts) {
    const std::size_t n = r.solutions.size();
    if (r.report.solutions.exactly_known) return std::to_string(n);
    if (opts.mode == SearchMode::decide && n >= 2) return "many";
    return ">=" + std::to_string(n);
}

inline json report_json(const PreparedProblem& p, const SolveResult& r, const SearchOptions& opts) {
    json doc;
    json sols = json::array();
    for (const auto& s : r.solutions)
        sols.push_back(integer_array_json(padded_coeffs(s, static_cast<std::size_t>(p.spec.degree) + 1)));
    doc["solutions"] = sols;
    const std::string label = solution_count_label(r, opts);
    if (r.report.solutions.exactly_known)
        doc["solution_count"] = r.solutions.size();
    else
        doc["solution_count"] = label;
    doc["complete"] = r.report.solutions.exactly_known;
    doc["mode"] = opts.mode == SearchMode::decide ? "decide" : "all";
    doc["strategy"] = to_string(r.report.strategy);
    doc["nodes_visited"] = r.report.nodes_visited;
    doc["terminal_nodes"] = r.report.terminal_nodes;
    doc["rejected_nodes"] = r.report.rejected_nodes;
    doc["max_depth_reached"] = r.report.max_depth_reached;
    doc["precision_used"] = r.report.precision_used;
    doc["wall_time_seconds"] = r.report.wall_time_seconds;
    doc["search"] = {{"n", p.symmetric.n}, {"k", p.symmetric.k}, {"B", p.symmetric.B.get_str()}};
    return doc;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_PROBLEM_FILE_HPP
