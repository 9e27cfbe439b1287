// Copyright 2026 The cmt-bigraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMT_FIXTURES_HPP_
#define CMT_FIXTURES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmt/bigraph.hpp"

namespace cmt {

// Built-in graph documents compiled from fixtures/*.graph: fig1, fig2, fig3.
std::vector<std::string> builtin_names();
std::optional<std::string_view> builtin_document(std::string_view name);

// Throws Error for an unknown name.
BipartiteGraph builtin_graph(std::string_view name);

}  // namespace cmt

#endif  // CMT_FIXTURES_HPP_
