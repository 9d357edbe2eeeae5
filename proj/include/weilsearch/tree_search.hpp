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

#ifndef WEILSEARCH_TREE_SEARCH_HPP
#define WEILSEARCH_TREE_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "powersum.hpp"
#include "rootfind.hpp"
#include "search_types.hpp"
#include "weil.hpp"

namespace weilsearch {

enum class SearchMode { enumerate_all, decide };
enum class StrategyKind { rootfind, powersum };

inline const char* to_string(SearchMode m) { return m == SearchMode::decide ? "decide" : "enumerate_all"; }
inline const char* to_string(StrategyKind s) { return s == StrategyKind::rootfind ? "rootfind" : "powersum"; }

inline SearchMode parse_mode(const std::string& s) {
    if (s == "enumerate_all" || s == "all") return SearchMode::enumerate_all;
    if (s == "decide") return SearchMode::decide;
    throw std::invalid_argument("unknown search mode: " + s);
}

inline StrategyKind parse_strategy(const std::string& s) {
    if (s == "rootfind") return StrategyKind::rootfind;
    if (s == "powersum") return StrategyKind::powersum;
    throw std::invalid_argument("unknown strategy: " + s);
}

struct SearchOptions {
    SearchMode mode = SearchMode::enumerate_all;
    StrategyKind strategy = StrategyKind::powersum;
    /// Initial root-finding precision in bits.
    int precision = 32;
    std::optional<std::uint64_t> max_solutions;
    /// 0 picks the hardware concurrency.
    unsigned worker_count = 1;
};

struct SearchReport {
    SolutionSet solutions;
    std::uint64_t nodes_visited = 0;
    /// Nodes for which no children were generated: solutions, dead ends, and rejected proposals.
    std::uint64_t terminal_nodes = 0;
    /// Proposed children that failed condition (c); included in both counts above.
    std::uint64_t rejected_nodes = 0;
    int max_depth_reached = 0;
    double wall_time_seconds = 0;
    StrategyKind strategy = StrategyKind::powersum;
    /// Highest root-finding precision needed at any node (0 for powersum).
    int precision_used = 0;
};

inline std::unique_ptr<ChildStrategy> make_strategy(const SymmetricSearchProblem& problem, const SearchOptions& opts) {
    if (opts.strategy == StrategyKind::rootfind) {
        PrecisionPolicy policy;
        policy.initial = opts.precision;
        return std::make_unique<RootfindStrategy>(problem, policy);
    }
    return std::make_unique<PowersumStrategy>(problem);
}

namespace detail {

struct WorkerStats {
    std::uint64_t visited = 0;
    std::uint64_t terminal = 0;
    std::uint64_t rejected = 0;
    int max_depth = 0;
    int precision = 0;
    std::vector<IntPolynomial> solutions;

    void merge(const WorkerStats& o) {
        visited += o.visited;
        terminal += o.terminal;
        rejected += o.rejected;
        max_depth = std::max(max_depth, o.max_depth);
        precision = std::max(precision, o.precision);
        solutions.insert(solutions.end(), o.solutions.begin(), o.solutions.end());
    }
};

/// Shared between workers: the stop flag and the monotone solution counter.
struct SearchControl {
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> found{0};
    std::uint64_t cap = 0;  ///< 0 = unlimited
    std::atomic<bool> truncated{false};

    /// Registers one solution; returns false if it exceeds the cap and must be dropped.
    bool admit() {
        const std::uint64_t idx = found.fetch_add(1) + 1;
        if (cap != 0 && idx > cap) {
            stop = true;
            return false;
        }
        if (cap != 0 && idx == cap) {
            truncated = true;
            stop = true;
        }
        return true;
    }
};

class NodeExpander {
   public:
    NodeExpander(const SymmetricSearchProblem& p, const ChildStrategy& s) : problem_(p), strategy_(s) {}

    SearchNode root() const {
        SearchNode r;
        r.partial = problem_.base();
        strategy_.prepare_root(r);
        return r;
    }

    /// Processes one node; appends its children (to be popped inside-out) to `out`.
    template <class Sink>
    void expand(const SearchNode& node, WorkerStats& st, SearchControl& ctl, Sink&& push) const {
        ++st.visited;
        st.max_depth = std::max(st.max_depth, node.depth);
        const int full = problem_.n - problem_.k;
        const bool must_check = node.depth == 0 || node.depth == full || !strategy_.children_satisfy_condition_c();
        if (must_check && !check_condition_c(node, problem_)) {
            ++st.terminal;
            if (node.depth > 0) ++st.rejected;
            return;
        }
        if (node.depth == full) {
            ++st.terminal;
            if (ctl.admit()) st.solutions.push_back(node.partial);
            return;
        }
        ChildRange range = strategy_.children(node);
        st.precision = std::max(st.precision, range.precision_used);
        if (range.empty()) {
            ++st.terminal;
            return;
        }
        const int idx = node.next_index(problem_);
        const auto ui = static_cast<std::size_t>(idx);
        std::vector<mpz_class> order = order_inside_out(range);
        // reversed so a LIFO consumer pops them inside-out
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            SearchNode child;
            child.depth = node.depth + 1;
            child.chosen = node.chosen;
            child.chosen.push_back(*it);
            child.partial = node.partial;
            child.partial.set(ui, problem_.base_coeffs[ui] + *it * problem_.moduli[ui]);
            strategy_.prepare_child(node, child);
            push(std::move(child));
        }
    }

   private:
    const SymmetricSearchProblem& problem_;
    const ChildStrategy& strategy_;
};

inline WorkerStats run_sequential(const NodeExpander& ex, SearchControl& ctl) {
    WorkerStats st;
    std::vector<SearchNode> stack;
    stack.push_back(ex.root());
    while (!stack.empty() && !ctl.stop) {
        SearchNode node = std::move(stack.back());
        stack.pop_back();
        ex.expand(node, st, ctl, [&](SearchNode&& c) { stack.push_back(std::move(c)); });
    }
    return st;
}

/// Each worker pops from the back of its own deque and steals from the front of others'.
inline WorkerStats run_parallel(const NodeExpander& ex, SearchControl& ctl, unsigned workers) {
    struct Queue {
        std::mutex mu;
        std::deque<SearchNode> items;
    };
    std::vector<Queue> queues(workers);
    std::atomic<std::uint64_t> pending{1};
    queues[0].items.push_back(ex.root());
    std::vector<WorkerStats> stats(workers);
    std::mutex err_mu;
    std::exception_ptr error;

    auto take = [&](unsigned self) -> std::optional<SearchNode> {
        {
            std::lock_guard<std::mutex> lk(queues[self].mu);
            if (!queues[self].items.empty()) {
                SearchNode n = std::move(queues[self].items.back());
                queues[self].items.pop_back();
                return n;
            }
        }
        for (unsigned off = 1; off < workers; ++off) {
            Queue& q = queues[(self + off) % workers];
            std::lock_guard<std::mutex> lk(q.mu);
            if (!q.items.empty()) {
                SearchNode n = std::move(q.items.front());
                q.items.pop_front();
                return n;
            }
        }
        return std::nullopt;
    };

    auto work = [&](unsigned self) {
        try {
            while (!ctl.stop) {
                std::optional<SearchNode> node = take(self);
                if (!node) {
                    if (pending.load() == 0) return;
                    std::this_thread::yield();
                    continue;
                }
                std::vector<SearchNode> kids;
                ex.expand(*node, stats[self], ctl, [&](SearchNode&& c) { kids.push_back(std::move(c)); });
                pending += kids.size();
                {
                    std::lock_guard<std::mutex> lk(queues[self].mu);
                    for (auto& k : kids) queues[self].items.push_back(std::move(k));
                }
                --pending;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!error) error = std::current_exception();
            ctl.stop = true;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    WorkerStats total;
    for (const auto& s : stats) total.merge(s);
    return total;
}

inline bool coefficient_less(const IntPolynomial& a, const IntPolynomial& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

}  // namespace detail

/**
 * Depth-first enumeration of all Q with the problem's fixed top part and
 * congruences whose roots lie in [-B, B]. With one worker the visiting order
 * is the canonical one; with several, solutions are reported sorted.
 */
inline SearchReport search(const SymmetricSearchProblem& problem, const SearchOptions& opts) {
    problem.validate();
    if (!problem.is_normalized()) throw invalid_problem("search: leading coefficient must be positive");
    if (opts.precision < 4) throw std::invalid_argument("search: precision must be at least 4");
    const auto start = std::chrono::steady_clock::now();

    std::unique_ptr<ChildStrategy> strategy = make_strategy(problem, opts);
    detail::NodeExpander ex(problem, *strategy);
    detail::SearchControl ctl;
    if (opts.mode == SearchMode::decide) ctl.cap = 2;
    if (opts.max_solutions && *opts.max_solutions > 0 && (ctl.cap == 0 || *opts.max_solutions < ctl.cap))
        ctl.cap = *opts.max_solutions;

    unsigned workers = opts.worker_count;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    detail::WorkerStats st = workers == 1 ? detail::run_sequential(ex, ctl) : detail::run_parallel(ex, ctl, workers);

    SearchReport rep;
    rep.solutions.solutions = std::move(st.solutions);
    if (workers > 1) std::sort(rep.solutions.solutions.begin(), rep.solutions.solutions.end(), detail::coefficient_less);
    rep.solutions.exactly_known = !ctl.truncated && !ctl.stop;
    rep.nodes_visited = st.visited;
    rep.terminal_nodes = st.terminal;
    rep.rejected_nodes = st.rejected;
    rep.max_depth_reached = st.max_depth;
    rep.strategy = opts.strategy;
    rep.precision_used = st.precision;
    rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace weilsearch

#endif  // WEILSEARCH_TREE_SEARCH_HPP
