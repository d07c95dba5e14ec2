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

#include "gausskit/multi_index.hpp"

#include <cmath>
#include <stdexcept>

#include "gausskit/error.hpp"

namespace gausskit {

MultiIndex::MultiIndex(std::vector<int> values) : t(std::move(values)) {
    for (int v : t) {
        if (v < 0) {
            throw DomainError("occupation numbers must be nonnegative");
        }
    }
}

MultiIndex MultiIndex::zeros(size_t n) {
    return MultiIndex(std::vector<int>(n, 0));
}

MultiIndex MultiIndex::unit(size_t n, size_t j) {
    MultiIndex out = zeros(n);
    out.t.at(j) = 1;
    return out;
}

MultiIndex MultiIndex::pair(size_t n, size_t j, size_t k) {
    MultiIndex out = zeros(n);
    out.t.at(j) += 1;
    out.t.at(k) += 1;
    return out;
}

int MultiIndex::total() const {
    int s = 0;
    for (int v : t) {
        s += v;
    }
    return s;
}

double factorial(int k) {
    return std::tgamma((double)k + 1);
}

double MultiIndex::factorial() const {
    double f = 1;
    for (int v : t) {
        f *= gausskit::factorial(v);
    }
    return f;
}

bool MultiIndex::dominated_by(const MultiIndex &other) const {
    for (size_t k = 0; k < t.size(); k++) {
        if (t[k] > other.t[k]) {
            return false;
        }
    }
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex &other) const {
    MultiIndex out = *this;
    for (size_t k = 0; k < t.size(); k++) {
        out.t[k] += other.t[k];
    }
    return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex &other) const {
    MultiIndex out = *this;
    for (size_t k = 0; k < t.size(); k++) {
        out.t[k] -= other.t[k];
        if (out.t[k] < 0) {
            throw DomainError("multi-index difference is negative");
        }
    }
    return out;
}

bool MultiIndex::operator<(const MultiIndex &other) const {
    int a = total();
    int b = other.total();
    if (a != b) {
        return a < b;
    }
    return t < other.t;
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (size_t k = 0; k < t.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(t[k]);
    }
    return out + ")";
}

double binomial(const MultiIndex &t, const MultiIndex &s) {
    if (!s.dominated_by(t)) {
        return 0;
    }
    double out = 1;
    for (size_t k = 0; k < t.size(); k++) {
        out *= std::round(factorial(t[k]) / (factorial(s[k]) * factorial(t[k] - s[k])));
    }
    return out;
}

MultiIndex meet(const MultiIndex &t, const MultiIndex &s) {
    MultiIndex out = t;
    for (size_t k = 0; k < t.size(); k++) {
        out.t[k] = std::min(t[k], s[k]);
    }
    return out;
}

MultiIndex UpperTriangularCount::r_tilde() const {
    MultiIndex out = MultiIndex::zeros(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            out[i] += (*this)(i, j);
            out[j] += (*this)(i, j);
        }
    }
    return out;
}

int UpperTriangularCount::abs() const {
    int s = 0;
    for (int v : r) {
        s += v;
    }
    return s;
}

int UpperTriangularCount::trace() const {
    int s = 0;
    for (size_t i = 0; i < n; i++) {
        s += (*this)(i, i);
    }
    return s;
}

double UpperTriangularCount::factorial() const {
    double f = 1;
    for (int v : r) {
        f *= gausskit::factorial(v);
    }
    return f;
}

size_t MultiIndexHash::operator()(const MultiIndex &m) const {
    uint64_t h = 1469598103934665603ULL;
    for (int v : m.t) {
        h ^= (uint64_t)(uint32_t)v;
        h *= 1099511628211ULL;
    }
    return (size_t)h;
}

namespace {

void append_shell(size_t n, int remaining, std::vector<int> &prefix, std::vector<MultiIndex> &out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; v++) {
        prefix.push_back(v);
        append_shell(n, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

FockBasis::FockBasis(size_t n, int cutoff) : n_(n), cutoff_(cutoff) {
    if (n == 0) {
        throw DomainError("basis needs at least one mode");
    }
    if (cutoff < 0) {
        throw DomainError("cutoff must be nonnegative");
    }
    std::vector<int> prefix;
    for (int k = 0; k <= cutoff; k++) {
        shell_offsets_.push_back(states_.size());
        append_shell(n, k, prefix, states_);
    }
    shell_offsets_.push_back(states_.size());
    lookup_.reserve(states_.size());
    for (size_t k = 0; k < states_.size(); k++) {
        lookup_.emplace(states_[k], k);
    }
    lower_.assign(n * states_.size(), -1);
    raise_.assign(n * states_.size(), -1);
    for (size_t k = 0; k < states_.size(); k++) {
        for (size_t m = 0; m < n; m++) {
            MultiIndex t = states_[k];
            if (t[m] > 0) {
                t[m] -= 1;
                lower_[m * states_.size() + k] = (std::ptrdiff_t)lookup_.at(t);
                t[m] += 1;
            }
            t[m] += 1;
            raise_[m * states_.size() + k] = index(t);
        }
    }
}

std::ptrdiff_t FockBasis::index(const MultiIndex &t) const {
    auto it = lookup_.find(t);
    if (it == lookup_.end()) {
        return -1;
    }
    return (std::ptrdiff_t)it->second;
}

size_t fock_dimension(size_t n, int cutoff) {
    double d = 1;
    for (size_t k = 1; k <= n; k++) {
        d = d * (double)(cutoff + (int)k) / (double)k;
    }
    return (size_t)std::llround(d);
}

}  // namespace gausskit
