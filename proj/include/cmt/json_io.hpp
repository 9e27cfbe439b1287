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

// JSON views of library results. Index lists are 1-based to match the x_i / y_i
// labelling used in documents and output.

#ifndef CMT_JSON_IO_HPP_
#define CMT_JSON_IO_HPP_

#include <json.hpp>

#include "cmt/bigraph.hpp"
#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/enumerate.hpp"

namespace cmt {

using Json = nlohmann::ordered_json;

// {unmixed, d, dimension, block_sizes, n_min, t_sharp, buchsbaum,
//  cohen_macaulay, macaulay_order?, pure_order, blocks, minimal_blocks}
Json to_json(const BipartiteGraph& g, const CmtClassification& c);

// Facets as sorted arrays of vertex names, sorted.
Json facets_to_json(const SimplicialComplex& c);

// {"from_dimension": -1, "betti": [...]}
Json to_json(const HomologyProfile& h);

Json to_json(const OracleReport& r);

Json to_json(const SharpCmtEntry& e);

Json to_json(const UnmixedVerification& v);

// {facets, dimension, pure, homology, cm_codim, cm_codim_recursive} plus
// "cm_t": [{t, holds}] for t = 0..max_t when max_t >= 0. Throws Error on the
// void complex.
Json oracle_to_json(const SimplicialComplex& c, int max_t);

Json to_json(const BaseDimensionSummary& s);

const char* to_string(VerifyStatus s);

}  // namespace cmt

#endif  // CMT_JSON_IO_HPP_
