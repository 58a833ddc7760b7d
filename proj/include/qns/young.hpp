// Copyright 2026 The qns Authors
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

// Exact combinatorics of Young diagrams and standard tableaux.
//
// Everything here is integer arithmetic. Counting results use an
// arbitrary-precision integer so that quotients such as the Frobenius
// formula can be checked for exact integrality.

#ifndef QNS_YOUNG_HPP
#define QNS_YOUNG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qns/errors.hpp"

namespace qns {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition drawn as left-justified rows, longest row on top.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 1) {
                throw DomainError("YoungDiagram: row lengths must be >= 1");
            }
            if (i > 0 && rows_[i] > rows_[i - 1]) {
                throw DomainError("YoungDiagram: row lengths must be weakly decreasing");
            }
        }
    }

    const std::vector<int>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const { return rows_.at(static_cast<std::size_t>(r)); }

    /// Length of column `c`, i.e. number of rows longer than `c`.
    int column_length(int c) const {
        int n = 0;
        for (int len : rows_) {
            if (len > c) ++n;
        }
        return n;
    }

    int box_count() const {
        int n = 0;
        for (int len : rows_) n += len;
        return n;
    }

    /// Arm + leg + 1 of the box at (row, col).
    int hook_length(int row, int col) const {
        return (row_length(row) - col) + (column_length(col) - row) - 1;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const YoungDiagram& y) {
    return os << y.to_string();
}

/// A filling of a Young diagram by 1..n, increasing along rows and down columns.
class StandardTableau {
public:
    /// Validates the filling; throws DomainError if it is not standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
        shape_ = YoungDiagram(lengths);
        const int n = shape_.box_count();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                const int v = rows_[i][j];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
                    throw DomainError("StandardTableau: labels must be a permutation of 1..n");
                }
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && rows_[i][j - 1] >= v) {
                    throw DomainError("StandardTableau: rows must strictly increase");
                }
                if (i > 0 && rows_[i - 1][j] >= v) {
                    throw DomainError("StandardTableau: columns must strictly increase");
                }
            }
        }
    }

    const YoungDiagram& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int box_count() const { return shape_.box_count(); }

    /// Labels read left to right, top row first.
    std::vector<int> row_reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    /// Labels of column `c`, top to bottom.
    std::vector<int> column(int c) const {
        std::vector<int> out;
        for (const auto& r : rows_) {
            if (static_cast<int>(r.size()) > c) out.push_back(r[static_cast<std::size_t>(c)]);
        }
        return out;
    }

    /// (row, col) of a label, 0-indexed.
    std::pair<int, int> cell_of(int label) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[i][j] == label) return {static_cast<int>(i), static_cast<int>(j)};
            }
        }
        throw DomainError("StandardTableau: label not present");
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += "/";
            for (int v : rows_[i]) s += std::to_string(v);
        }
        return s;
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> rows_;
};

/// The shape (2,1,...,1) with d rows; its SU(d) irrep is the fundamental one.
inline YoungDiagram fundamental_equivalent_shape(int d) {
    if (d < 2) throw InvalidDimension("fundamental_equivalent_shape: d must be >= 2");
    std::vector<int> rows(static_cast<std::size_t>(d), 1);
    rows[0] = 2;
    return YoungDiagram(std::move(rows));
}

/// All standard tableaux of `shape`, sorted lexicographically by row-reading word.
inline std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& shape) {
    const int n = shape.box_count();
    const int r = shape.num_rows();
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(r));
    std::vector<StandardTableau> out;

    // Place labels 1..n one at a time into addable corners.
    std::function<void(int)> place = [&](int label) {
        if (label > n) {
            out.emplace_back(fill);
            return;
        }
        for (int i = 0; i < r; ++i) {
            auto& row = fill[static_cast<std::size_t>(i)];
            const int len = static_cast<int>(row.size());
            if (len >= shape.row_length(i)) continue;
            if (i > 0 && static_cast<int>(fill[static_cast<std::size_t>(i) - 1].size()) <= len) continue;
            row.push_back(label);
            place(label + 1);
            row.pop_back();
        }
    };
    place(1);

    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_reading_word() < b.row_reading_word();
    });
    return out;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Number of standard tableaux via the hook length formula n!/prod(hooks).
inline BigInt syt_count_hook_length(const YoungDiagram& shape) {
    BigInt hooks = 1;
    for (int i = 0; i < shape.num_rows(); ++i) {
        for (int j = 0; j < shape.row_length(i); ++j) hooks *= shape.hook_length(i, j);
    }
    return factorial(shape.box_count()) / hooks;
}

/// Frobenius formula for the multiplicity of the irrep labelled by `shape`
/// in the (d+1)-fold tensor power of the fundamental representation:
///
///   (d+1)! * prod_{i<j} (v_i - v_j + j - i) / prod_i (v_i + d - i)!
///
/// with rows padded by zeros to length d. Throws DomainError unless the
/// shape has d+1 boxes and at most d rows.
inline BigInt frobenius_multiplicity(const YoungDiagram& shape, int d) {
    if (d < 2) throw InvalidDimension("frobenius_multiplicity: d must be >= 2");
    if (shape.box_count() != d + 1) {
        throw DomainError("frobenius_multiplicity: shape must have d+1 boxes, got " +
                          std::to_string(shape.box_count()));
    }
    if (shape.num_rows() > d) {
        throw DomainError("frobenius_multiplicity: shape has more than d rows");
    }
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    std::copy(shape.rows().begin(), shape.rows().end(), v.begin());

    BigInt num = factorial(d + 1);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) num *= (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)] + j - i);
    }
    BigInt den = 1;
    for (int i = 0; i < d; ++i) den *= factorial(v[static_cast<std::size_t>(i)] + d - (i + 1));

    if (num % den != 0) {
        throw InternalConsistencyError("frobenius_multiplicity: quotient is not integral");
    }
    return num / den;
}

/// Dimension of the SU(d) irrep for `shape` via the hook-content formula.
/// Shapes with more than d rows give zero.
inline BigInt sud_irrep_dimension(const YoungDiagram& shape, int d) {
    if (d < 1) throw InvalidDimension("sud_irrep_dimension: d must be >= 1");
    if (shape.num_rows() > d) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < shape.num_rows(); ++i) {
        for (int j = 0; j < shape.row_length(i); ++j) {
            num *= (d + j - i);
            den *= shape.hook_length(i, j);
        }
    }
    return num / den;
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<YoungDiagram> partitions(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

}  // namespace qns

#endif  // QNS_YOUNG_HPP
