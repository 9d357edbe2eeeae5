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

#ifndef WEILSEARCH_ERRORS_HPP
#define WEILSEARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weilsearch {

/// A problem instance violates one of its structural invariants.
class invalid_problem : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed instance outside the supported class (e.g. nonsquare q).
class unsupported_problem : public invalid_problem {
   public:
    using invalid_problem::invalid_problem;
};

/// Root-finding could not certify a node at any precision in the retry schedule.
class precision_exhausted : public std::runtime_error {
   public:
    precision_exhausted(const std::string& what, std::string node_context)
        : std::runtime_error(what + " [" + node_context + "]"), context_(std::move(node_context)) {}

    const std::string& node_context() const noexcept { return context_; }

   private:
    std::string context_;
};

}  // namespace weilsearch

#endif  // WEILSEARCH_ERRORS_HPP
