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

#ifndef WEILSEARCH_WEILSEARCH_HPP
#define WEILSEARCH_WEILSEARCH_HPP

// Everything except the JSON file layer (problem_file.hpp), which needs nlohmann/json.

#include "errors.hpp"
#include "numeric_roots.hpp"
#include "polynomial.hpp"
#include "power_sums.hpp"
#include "powersum.hpp"
#include "rootfind.hpp"
#include "search_types.hpp"
#include "solver.hpp"
#include "sturm.hpp"
#include "tree_search.hpp"
#include "weil.hpp"

#endif  // WEILSEARCH_WEILSEARCH_HPP
