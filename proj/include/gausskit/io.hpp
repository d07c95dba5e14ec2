// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _GAUSSKIT_IO_H
#define _GAUSSKIT_IO_H

#include <string>
#include <vector>

#include <json.hpp>

#include "gausskit/fock.hpp"
#include "gausskit/params.hpp"
#include "gausskit/tomography.hpp"

namespace gausskit::io {

using Json = nlohmann::ordered_json;

/// Malformed input; `field()` names the offending JSON path.
class ParseError : public Error {
   public:
    ParseError(const std::string &field, const std::string &what)
        : Error("field '" + field + "': " + what), field_(field) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

/// Parses text; syntax errors are reported against the field "<document>".
Json parse(const std::string &text);

/// Serializes with every floating-point number printed to 17 significant digits.
std::string dump(const Json &value, int indent = -1);

Json to_json(cplx z);
Json to_json(const CVec &v);
Json to_json(const CMat &m);
Json to_json(const RMat &m);
Json to_json(const E2Params &p);
Json to_json(const CovarianceParams &cov);
/// {"n", "cutoff", "basis": [t, ...], "entries": row-major [[re, im], ...] rows}.
Json to_json(const TruncatedOperator &op);
Json to_json(const TruncatedVector &vec);
Json to_json(const MeasurementSpec &spec);
Json to_json(const MeasurementRecord &rec);

cplx complex_from_json(const Json &j, const std::string &field);
CVec cvec_from_json(const Json &j, const std::string &field);
CMat cmat_from_json(const Json &j, const std::string &field);
RMat rmat_from_json(const Json &j, const std::string &field);

/// E2Params from {"n", "c", "mu", "A", "Lambda"}; "mu" and "c" are optional (zero / derived).
E2Params e2_from_json(const Json &j);
/// CovarianceParams from {"m", "S"}.
CovarianceParams cov_from_json(const Json &j);
MeasurementSpec spec_from_json(const Json &j, size_t n, const std::string &field);
/// Records from {"n", "measurements": [{"spec", "counts"}, ...]}.
std::vector<MeasurementRecord> records_from_json(const Json &j);

/// Rows t_1..t_n, tp_1..tp_n, re, im.
std::string to_csv(const TruncatedOperator &op);
/// Rows t_1..t_n, re, im.
std::string to_csv(const TruncatedVector &vec);

}  // namespace gausskit::io

#endif
