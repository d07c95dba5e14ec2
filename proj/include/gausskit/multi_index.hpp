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

#ifndef _GAUSSKIT_MULTI_INDEX_H
#define _GAUSSKIT_MULTI_INDEX_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace gausskit {

/// Occupation numbers t = (t_1, ..., t_n) of n bosonic modes.
struct MultiIndex {
    std::vector<int> t;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> values);
    static MultiIndex zeros(size_t n);
    /// t_j = 1 (or 2 when j == k) at the given modes, zero elsewhere.
    static MultiIndex unit(size_t n, size_t j);
    static MultiIndex pair(size_t n, size_t j, size_t k);

    size_t size() const {
        return t.size();
    }
    int operator[](size_t k) const {
        return t[k];
    }
    int &operator[](size_t k) {
        return t[k];
    }

    /// |t|.
    int total() const;
    /// t! = prod t_j!.
    double factorial() const;
    /// Componentwise s <= t.
    bool dominated_by(const MultiIndex &other) const;

    MultiIndex operator+(const MultiIndex &other) const;
    MultiIndex operator-(const MultiIndex &other) const;
    bool operator==(const MultiIndex &other) const = default;
    bool operator<(const MultiIndex &other) const;

    std::string str() const;
};

/// binom(t, s) = prod binom(t_j, s_j), zero unless s <= t.
double binomial(const MultiIndex &t, const MultiIndex &s);
/// Componentwise minimum.
MultiIndex meet(const MultiIndex &t, const MultiIndex &s);

double factorial(int k);

/// Nonnegative integer matrix R, zero below the diagonal.
struct UpperTriangularCount {
    size_t n = 0;
    std::vector<int> r;  // row-major n x n

    explicit UpperTriangularCount(size_t n_) : n(n_), r(n_ * n_, 0) {
    }
    int operator()(size_t i, size_t j) const {
        return r[i * n + j];
    }
    int &operator()(size_t i, size_t j) {
        return r[i * n + j];
    }

    /// r~_i = sum_{j<=i} r_ji + sum_{j>=i} r_ij; diagonal entries count twice.
    MultiIndex r_tilde() const;
    int abs() const;
    int trace() const;
    double factorial() const;
    bool operator==(const UpperTriangularCount &other) const = default;
};

struct MultiIndexHash {
    size_t operator()(const MultiIndex &m) const;
};

/// All multi-indices of n modes with |t| <= cutoff, ordered by |t| then lexicographically.
class FockBasis {
   public:
    FockBasis(size_t n, int cutoff);

    size_t n() const {
        return n_;
    }
    int cutoff() const {
        return cutoff_;
    }
    size_t dim() const {
        return states_.size();
    }
    const MultiIndex &state(size_t idx) const {
        return states_[idx];
    }
    const std::vector<MultiIndex> &states() const {
        return states_;
    }
    /// Index of t, or -1 when |t| exceeds the cutoff.
    std::ptrdiff_t index(const MultiIndex &t) const;
    /// Index of t - e_mode, or -1 when t_mode == 0.
    std::ptrdiff_t lower(size_t idx, size_t mode) const {
        return lower_[mode * dim() + idx];
    }
    /// Index of t + e_mode, or -1 when outside the window.
    std::ptrdiff_t raise(size_t idx, size_t mode) const {
        return raise_[mode * dim() + idx];
    }
    /// First index of the shell |t| = k.
    size_t shell_begin(int k) const {
        return shell_offsets_[k];
    }
    size_t shell_end(int k) const {
        return shell_offsets_[k + 1];
    }

   private:
    size_t n_;
    int cutoff_;
    std::vector<MultiIndex> states_;
    std::vector<size_t> shell_offsets_;
    std::unordered_map<MultiIndex, size_t, MultiIndexHash> lookup_;
    std::vector<std::ptrdiff_t> lower_;
    std::vector<std::ptrdiff_t> raise_;
};

/// C(cutoff + n, n).
size_t fock_dimension(size_t n, int cutoff);

}  // namespace gausskit

#endif
