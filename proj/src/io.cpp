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

#include "gausskit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gausskit::io {

namespace {

std::string number(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write(const Json &v, int indent, int depth, std::string &out) {
    auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append((size_t)(indent * d), ' ');
        }
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                write(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = std::all_of(v.begin(), v.end(), [](const Json &e) {
                return e.is_primitive();
            });
            out += '[';
            bool first = true;
            for (const auto &e : v) {
                if (!first) {
                    out += flat && indent >= 0 ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                write(e, indent, depth + 1, out);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += number(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

const Json &member(const Json &j, const char *key, const std::string &field) {
    if (!j.is_object()) {
        throw ParseError(field.empty() ? "<document>" : field, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(field.empty() ? key : field + "." + key, "missing");
    }
    return *it;
}

double real_from_json(const Json &j, const std::string &field) {
    if (!j.is_number()) {
        throw ParseError(field, "expected a number");
    }
    return j.get<double>();
}

size_t index_from_json(const Json &j, const std::string &field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(field, "expected a nonnegative integer");
    }
    return j.get<size_t>();
}

std::string at(const std::string &field, size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

void require_n(const Json &j, size_t n) {
    auto it = j.find("n");
    if (it != j.end() && index_from_json(*it, "n") != n) {
        throw ParseError("n", "does not match the parameter dimensions");
    }
}

Json basis_json(const FockBasis &basis) {
    Json out = Json::array();
    for (const auto &t : basis.states()) {
        out.push_back(t.t);
    }
    return out;
}

}  // namespace

Json parse(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("<document>", e.what());
    }
}

std::string dump(const Json &value, int indent) {
    std::string out;
    write(value, indent, 0, out);
    return out;
}

Json to_json(cplx z) {
    return Json::array({z.real(), z.imag()});
}

Json to_json(const CVec &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        out.push_back(to_json(v(i)));
    }
    return out;
}

Json to_json(const CMat &m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); k++) {
            row.push_back(to_json(m(i, k)));
        }
        out.push_back(row);
    }
    return out;
}

Json to_json(const RMat &m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); k++) {
            row.push_back(m(i, k));
        }
        out.push_back(row);
    }
    return out;
}

Json to_json(const E2Params &p) {
    Json out;
    out["n"] = p.n();
    out["c"] = to_json(cplx(p.c, 0));
    out["mu"] = to_json(p.mu);
    out["A"] = to_json(p.a);
    out["Lambda"] = to_json(p.lambda);
    return out;
}

Json to_json(const CovarianceParams &cov) {
    Json out;
    out["n"] = cov.n();
    out["m"] = to_json(cov.m);
    out["S"] = to_json(cov.s);
    return out;
}

Json to_json(const TruncatedOperator &op) {
    Json out;
    out["n"] = op.basis->n();
    out["cutoff"] = op.basis->cutoff();
    out["basis"] = basis_json(*op.basis);
    out["entries"] = to_json(op.m);
    return out;
}

Json to_json(const TruncatedVector &vec) {
    Json out;
    out["n"] = vec.basis->n();
    out["cutoff"] = vec.basis->cutoff();
    out["basis"] = basis_json(*vec.basis);
    out["entries"] = to_json(vec.v);
    return out;
}

Json to_json(const MeasurementSpec &spec) {
    Json out;
    out["kind"] = spec.kind_name();
    out["j"] = spec.j;
    out["k"] = spec.k;
    return out;
}

Json to_json(const MeasurementRecord &rec) {
    Json out;
    out["spec"] = to_json(rec.spec);
    out["counts"] = rec.counts;
    return out;
}

cplx complex_from_json(const Json &j, const std::string &field) {
    if (j.is_number()) {
        return cplx(j.get<double>(), 0);
    }
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(field, "expected a [re, im] pair");
    }
    return cplx(real_from_json(j[0], field + "[0]"), real_from_json(j[1], field + "[1]"));
}

CVec cvec_from_json(const Json &j, const std::string &field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of [re, im] pairs");
    }
    CVec out(j.size());
    for (size_t i = 0; i < j.size(); i++) {
        out((Eigen::Index)i) = complex_from_json(j[i], at(field, i));
    }
    return out;
}

CMat cmat_from_json(const Json &j, const std::string &field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of rows");
    }
    const size_t rows = j.size();
    size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    CMat out(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError(at(field, i), "expected a row of length " + std::to_string(cols));
        }
        for (size_t k = 0; k < cols; k++) {
            out((Eigen::Index)i, (Eigen::Index)k) = complex_from_json(j[i][k], at(at(field, i), k));
        }
    }
    return out;
}

RMat rmat_from_json(const Json &j, const std::string &field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of rows");
    }
    const size_t rows = j.size();
    size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    RMat out(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError(at(field, i), "expected a row of length " + std::to_string(cols));
        }
        for (size_t k = 0; k < cols; k++) {
            out((Eigen::Index)i, (Eigen::Index)k) = real_from_json(j[i][k], at(at(field, i), k));
        }
    }
    return out;
}

E2Params e2_from_json(const Json &j) {
    CMat a = cmat_from_json(member(j, "A", ""), "A");
    CMat lambda = cmat_from_json(member(j, "Lambda", ""), "Lambda");
    const auto n = a.rows();
    if (a.cols() != n) {
        throw ParseError("A", "expected a square matrix");
    }
    if (lambda.rows() != n || lambda.cols() != n) {
        throw ParseError("Lambda", "expected a " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
    }
    CVec mu = CVec::Zero(n);
    if (j.contains("mu")) {
        mu = cvec_from_json(j["mu"], "mu");
        if (mu.size() != n) {
            throw ParseError("mu", "expected length " + std::to_string(n));
        }
    }
    require_n(j, (size_t)n);
    if (!is_symmetric(a)) {
        throw ParseError("A", "not symmetric");
    }
    if (!is_hermitian(lambda)) {
        throw ParseError("Lambda", "not hermitian");
    }
    if (!j.contains("c")) {
        return E2Params::state(a, lambda, mu);
    }
    cplx c = complex_from_json(j["c"], "c");
    if (std::abs(c.imag()) > 1e-12 * (1 + std::abs(c))) {
        throw ParseError("c", "expected a real number");
    }
    E2Params p{c.real(), mu, a, lambda};
    p.canonicalize();
    return p;
}

CovarianceParams cov_from_json(const Json &j) {
    CVec m = cvec_from_json(member(j, "m", ""), "m");
    RMat s = rmat_from_json(member(j, "S", ""), "S");
    const auto n = m.size();
    if (s.rows() != 2 * n || s.cols() != 2 * n) {
        throw ParseError("S", "expected a " + std::to_string(2 * n) + " x " + std::to_string(2 * n) + " matrix");
    }
    require_n(j, (size_t)n);
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > kDefaultTol * (1 + s.cwiseAbs().maxCoeff())) {
        throw ParseError("S", "not symmetric");
    }
    return CovarianceParams{m, 0.5 * (s + s.transpose())};
}

MeasurementSpec spec_from_json(const Json &j, size_t n, const std::string &field) {
    const Json &kind = member(j, "kind", field);
    if (!kind.is_string()) {
        throw ParseError(field + ".kind", "expected a string");
    }
    size_t jj = j.contains("j") ? index_from_json(j["j"], field + ".j") : 0;
    size_t kk = j.contains("k") ? index_from_json(j["k"], field + ".k") : 0;
    try {
        return MeasurementSpec::parse(kind.get<std::string>(), n, jj, kk);
    } catch (const DomainError &e) {
        throw ParseError(field, e.what());
    }
}

std::vector<MeasurementRecord> records_from_json(const Json &j) {
    size_t n = index_from_json(member(j, "n", ""), "n");
    const Json &list = member(j, "measurements", "");
    if (!list.is_array()) {
        throw ParseError("measurements", "expected an array");
    }
    std::vector<MeasurementRecord> out;
    for (size_t i = 0; i < list.size(); i++) {
        std::string field = at("measurements", i);
        MeasurementRecord rec;
        rec.spec = spec_from_json(member(list[i], "spec", field), n, field + ".spec");
        const Json &counts = member(list[i], "counts", field);
        if (!counts.is_array() || counts.size() != rec.spec.outcome_count()) {
            throw ParseError(field + ".counts",
                             "expected " + std::to_string(rec.spec.outcome_count()) + " outcome counts");
        }
        for (size_t k = 0; k < counts.size(); k++) {
            rec.counts.push_back(index_from_json(counts[k], at(field + ".counts", k)));
        }
        out.push_back(rec);
    }
    return out;
}

std::string to_csv(const TruncatedOperator &op) {
    const auto &basis = *op.basis;
    const size_t n = basis.n();
    std::ostringstream os;
    for (size_t k = 1; k <= n; k++) {
        os << "t_" << k << ',';
    }
    for (size_t k = 1; k <= n; k++) {
        os << "tp_" << k << ',';
    }
    os << "re,im\n";
    for (size_t r = 0; r < basis.dim(); r++) {
        for (size_t s = 0; s < basis.dim(); s++) {
            for (int v : basis.state(r).t) {
                os << v << ',';
            }
            for (int v : basis.state(s).t) {
                os << v << ',';
            }
            cplx z = op.m((Eigen::Index)r, (Eigen::Index)s);
            os << number(z.real()) << ',' << number(z.imag()) << '\n';
        }
    }
    return os.str();
}

std::string to_csv(const TruncatedVector &vec) {
    const auto &basis = *vec.basis;
    std::ostringstream os;
    for (size_t k = 1; k <= basis.n(); k++) {
        os << "t_" << k << ',';
    }
    os << "re,im\n";
    for (size_t r = 0; r < basis.dim(); r++) {
        for (int v : basis.state(r).t) {
            os << v << ',';
        }
        cplx z = vec.v((Eigen::Index)r);
        os << number(z.real()) << ',' << number(z.imag()) << '\n';
    }
    return os.str();
}

}  // namespace gausskit::io
