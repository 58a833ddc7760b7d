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

// Construction of the (d+1)-qudit encoding unitary U_E.
//
// (C^d)^(x)(d+1) contains d copies of the fundamental SU(d) irrep, one per
// standard tableau of shape (2,1,...,1). U_E places an orthonormal basis of
// every copy in its first d^2 columns, copy-major:
//
//   column i*d + j  =  weight vector j of copy i
//
// and the copies are aligned so each one carries W in the same basis. Then
//
//   U_E^dagger W^(x)(d+1) U_E  =  (1_d (x) W)  (+)  (rest)
//
// for every W in SU(d), and by analytic continuation for W in SL(d, C).

#ifndef QNS_SCHUR_HPP
#define QNS_SCHUR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qns/errors.hpp"
#include "qns/matrix.hpp"
#include "qns/young.hpp"

namespace qns {

/// Dense operators above this many complex entries are refused.
inline constexpr std::int64_t kDefaultMemoryCap = std::int64_t{1} << 26;

inline constexpr const char* kMultiplicityMajor = "multiplicity-major";

/// A permutation of tensor slots: slot k is sent to slot perm[k].
struct SlotPermutation {
    std::vector<int> perm;
    int sign = 1;

    /// Composition (*this) after `other`.
    SlotPermutation after(const SlotPermutation& other) const {
        SlotPermutation out;
        out.perm.resize(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) out.perm[k] = perm[static_cast<std::size_t>(other.perm[k])];
        out.sign = sign * other.sign;
        return out;
    }
};

/// Index table of the slot permutation on an n-qudit register:
/// P |i_1 ... i_n> = |basis[table[b]]>.
inline std::vector<Index> permutation_index_table(const SlotPermutation& p, int d) {
    const int n = static_cast<int>(p.perm.size());
    const Index total = ipow(d, n);
    std::vector<Index> stride(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) stride[static_cast<std::size_t>(s)] = ipow(d, n - 1 - s);
    std::vector<Index> table(static_cast<std::size_t>(total));
    for (Index b = 0; b < total; ++b) {
        Index rem = b;
        Index out = 0;
        for (int s = 0; s < n; ++s) {
            const Index digit = rem / stride[static_cast<std::size_t>(s)];
            rem %= stride[static_cast<std::size_t>(s)];
            out += digit * stride[static_cast<std::size_t>(p.perm[static_cast<std::size_t>(s)])];
        }
        table[static_cast<std::size_t>(b)] = out;
    }
    return table;
}

namespace detail {

// All permutations of slots that only move labels within each group.
inline std::vector<SlotPermutation> group_permutations(const std::vector<std::vector<int>>& groups, int n) {
    std::vector<SlotPermutation> out;
    SlotPermutation id;
    id.perm.resize(static_cast<std::size_t>(n));
    std::iota(id.perm.begin(), id.perm.end(), 0);
    out.push_back(id);
    for (const auto& labels : groups) {
        std::vector<int> slots;
        for (int l : labels) slots.push_back(l - 1);
        std::vector<int> image = slots;
        std::vector<SlotPermutation> local;
        do {
            SlotPermutation p = id;
            for (std::size_t k = 0; k < slots.size(); ++k) p.perm[static_cast<std::size_t>(slots[k])] = image[k];
            int inversions = 0;
            for (std::size_t a = 0; a < image.size(); ++a) {
                for (std::size_t b = a + 1; b < image.size(); ++b) inversions += image[a] > image[b];
            }
            p.sign = (inversions % 2) ? -1 : 1;
            local.push_back(std::move(p));
        } while (std::next_permutation(image.begin(), image.end()));

        std::vector<SlotPermutation> next;
        for (const auto& g : out) {
            for (const auto& h : local) next.push_back(h.after(g));
        }
        out = std::move(next);
    }
    return out;
}

// Signed slot permutations whose sum is the unnormalized symmetrizer
// (column antisymmetrizer) * (row symmetrizer).
inline std::vector<SlotPermutation> symmetrizer_terms(const StandardTableau& t) {
    const int n = t.box_count();
    std::vector<std::vector<int>> columns;
    for (int c = 0; c < t.shape().row_length(0); ++c) columns.push_back(t.column(c));
    const auto row_group = group_permutations(t.rows(), n);
    auto col_group = group_permutations(columns, n);
    std::vector<SlotPermutation> terms;
    terms.reserve(row_group.size() * col_group.size());
    for (const auto& a : col_group) {
        for (const auto& s : row_group) {
            SlotPermutation p = a.after(s);
            p.sign = a.sign;
            terms.push_back(std::move(p));
        }
    }
    return terms;
}

// Symmetrizer applied to the basis state e_b, as a dense vector.
inline StateVector apply_symmetrizer_to_basis(const std::vector<std::vector<Index>>& tables,
                                              const std::vector<int>& signs, Index dim, Index b, double scale) {
    StateVector out = StateVector::Zero(dim);
    for (std::size_t k = 0; k < tables.size(); ++k) out(tables[k][static_cast<std::size_t>(b)]) += scale * signs[k];
    return out;
}

// Digit count of each level in basis index b.
inline std::vector<int> level_counts(Index b, int d, int n) {
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    for (int s = 0; s < n; ++s) {
        ++counts[static_cast<std::size_t>(b % d)];
        b /= d;
    }
    return counts;
}

}  // namespace detail

/// Young symmetrizer of tableau `t` acting on (C^d)^(x)(d+1) by permuting
/// tensor factors: c * (sum over column group, signed) * (sum over row group),
/// scaled by c = f/n! so that it is idempotent (f = number of standard
/// tableaux of the shape).
inline ComplexMatrix young_symmetrizer_projector(const StandardTableau& t, int d) {
    if (d < 2) throw InvalidDimension("young_symmetrizer_projector: d must be >= 2");
    const int n = t.box_count();
    if (n != d + 1) throw DomainError("young_symmetrizer_projector: tableau must have d+1 boxes");
    const Index dim = ipow(d, n);
    const double scale =
        static_cast<double>(syt_count_hook_length(t.shape())) / static_cast<double>(factorial(n));
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto& term : detail::symmetrizer_terms(t)) {
        const auto table = permutation_index_table(term, d);
        for (Index b = 0; b < dim; ++b) out(table[static_cast<std::size_t>(b)], b) += scale * term.sign;
    }
    return out;
}

/// Orthonormal bases of the d copies of the fundamental irrep inside
/// (C^d)^(x)(d+1), one N x d matrix per standard tableau of shape (2,1,...,1)
/// in tableau order.
///
/// Column j of each copy is its weight vector in which level j occurs twice,
/// so column 0 is the highest-weight vector. Copies are made mutually
/// orthogonal by projecting each one off the copies after it.
inline std::vector<ComplexMatrix> isotypic_fundamental_basis(int d) {
    const YoungDiagram shape = fundamental_equivalent_shape(d);
    const int n = d + 1;
    const Index dim = ipow(d, n);
    const auto tableaux = enumerate_standard_tableaux(shape);
    const double scale = static_cast<double>(syt_count_hook_length(shape)) / static_cast<double>(factorial(n));

    // Basis states grouped by weight; weight j has level j twice.
    std::vector<std::vector<Index>> by_weight(static_cast<std::size_t>(d));
    for (Index b = 0; b < dim; ++b) {
        const auto counts = detail::level_counts(b, d, n);
        for (int j = 0; j < d; ++j) {
            bool match = true;
            for (int l = 0; l < d; ++l) match = match && counts[static_cast<std::size_t>(l)] == (l == j ? 2 : 1);
            if (match) by_weight[static_cast<std::size_t>(j)].push_back(b);
        }
    }

    std::vector<ComplexMatrix> copies(tableaux.size(), ComplexMatrix(dim, d));
    for (std::size_t c = 0; c < tableaux.size(); ++c) {
        std::vector<std::vector<Index>> tables;
        std::vector<int> signs;
        for (const auto& term : detail::symmetrizer_terms(tableaux[c])) {
            tables.push_back(permutation_index_table(term, d));
            signs.push_back(term.sign);
        }
        // The symmetrizer image of a weight-j basis state lies on the
        // one-dimensional weight-j line of the copy; keep the largest image.
        for (int j = 0; j < d; ++j) {
            StateVector best;
            double best_norm = 0.0;
            for (Index b : by_weight[static_cast<std::size_t>(j)]) {
                StateVector v = detail::apply_symmetrizer_to_basis(tables, signs, dim, b, scale);
                const double nv = v.norm();
                if (nv > best_norm + 1e-12) {
                    best_norm = nv;
                    best = std::move(v);
                }
            }
            if (best_norm < 1e-8) {
                throw InternalConsistencyError("isotypic_fundamental_basis: empty weight space in copy " +
                                               std::to_string(c));
            }
            copies[c].col(j) = best / best_norm;
        }
    }

    // Weight spaces are mutually orthogonal, so cross-copy orthogonalization
    // can be done one weight at a time. Two passes for stability.
    for (std::size_t c = copies.size(); c-- > 0;) {
        for (int j = 0; j < d; ++j) {
            StateVector v = copies[c].col(j);
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t o = c + 1; o < copies.size(); ++o) {
                    const auto u = copies[o].col(j);
                    v -= u * u.dot(v);
                }
            }
            const double nv = v.norm();
            if (nv < 1e-8) {
                throw InternalConsistencyError("isotypic_fundamental_basis: copies are linearly dependent");
            }
            copies[c].col(j) = v / nv;
        }
    }
    return copies;
}

/// Rescales `basis` by a global phase so that the largest-magnitude entry of
/// its first column is real and positive. Ties within 1e-9 go to the lowest
/// index.
inline void fix_copy_phase(ComplexMatrix& basis) {
    const auto col = basis.col(0);
    const double peak = col.cwiseAbs().maxCoeff();
    Index pick = 0;
    for (Index i = 0; i < col.size(); ++i) {
        if (std::abs(col(i)) >= peak - 1e-9) {
            pick = i;
            break;
        }
    }
    const Complex z = col(pick);
    basis *= std::conj(z) / std::abs(z);
}

/// Re-expresses every copy in a basis where W^(x)(d+1) restricted to it is
/// exactly the d x d matrix W.
///
/// For each copy the intertwiner T with R(W) T = T W is fitted on three
/// Haar samples drawn from `seed` (least squares null vector), unitarized by
/// polar decomposition, and applied; the remaining global phase is fixed by
/// fix_copy_phase. Because every copy is aligned to the defining
/// representation, all copies agree with each other entrywise.
inline std::vector<ComplexMatrix> align_copies(const std::vector<ComplexMatrix>& copies, int d, std::uint64_t seed) {
    if (d < 2) throw InvalidDimension("align_copies: d must be >= 2");
    const int n = d + 1;
    const Index dim = ipow(d, n);
    Rng rng(seed);
    std::vector<ComplexMatrix> samples;
    for (int s = 0; s < 3; ++s) samples.push_back(random_special_unitary(d, rng).matrix());

    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    std::vector<ComplexMatrix> out;
    out.reserve(copies.size());
    for (std::size_t c = 0; c < copies.size(); ++c) {
        const ComplexMatrix& basis = copies[c];
        if (basis.rows() != dim || basis.cols() != d) throw DomainError("align_copies: copy has wrong shape");

        ComplexMatrix system(3 * d * d, d * d);
        for (int s = 0; s < 3; ++s) {
            ComplexMatrix moved = basis;
            apply_collective(moved, samples[static_cast<std::size_t>(s)], n);
            const ComplexMatrix rep = basis.adjoint() * moved;
            // vec(R T - T W) = (1 (x) R - W^T (x) 1) vec(T)
            system.middleRows(s * d * d, d * d) = kron(id, rep) - kron(samples[static_cast<std::size_t>(s)].transpose(), id);
        }
        Eigen::JacobiSVD<ComplexMatrix> svd(system, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const Index last = sv.size() - 1;
        if (sv(last) > 1e-8) {
            throw AlignmentError("align_copies: copy " + std::to_string(c) +
                                 " has no intertwiner with the fundamental (residual " + std::to_string(sv(last)) + ")");
        }
        if (sv(last - 1) < 1e-6) {
            throw AlignmentError("align_copies: intertwiner for copy " + std::to_string(c) + " is not unique");
        }
        const StateVector vec_t = svd.matrixV().col(last);
        const ComplexMatrix t = Eigen::Map<const ComplexMatrix>(vec_t.data(), d, d);

        // Schur's lemma: T must be a multiple of an isometry.
        ComplexMatrix gram = t.adjoint() * t;
        gram /= gram.trace().real() / d;
        const double iso = (gram - id).norm();
        if (iso > 1e-8) {
            throw AlignmentError("align_copies: intertwiner for copy " + std::to_string(c) +
                                 " is not proportional to an isometry (residual " + std::to_string(iso) + ")");
        }
        ComplexMatrix aligned = basis * polar_unitary_factor(t).matrix();
        fix_copy_phase(aligned);
        out.push_back(std::move(aligned));
    }
    return out;
}

/// The encoding unitary with its column-layout contract.
struct EncoderSpec {
    int d = 0;
    UnitaryMatrix u_e;
    std::string generator;
    std::string layout = kMultiplicityMajor;

    int num_qudits() const { return d + 1; }
    Index dim() const { return u_e.dim(); }
    /// Number of leading columns spanning the protected subspace, d^2.
    Index protected_columns() const { return static_cast<Index>(d) * d; }
};

/// Puts the copies into columns i*d + j and completes to a unitary with an
/// orthonormal basis of the complement.
inline EncoderSpec assemble_encoder(int d, const std::vector<ComplexMatrix>& copies, std::string generator,
                                    std::int64_t memory_cap = kDefaultMemoryCap) {
    if (d < 2) throw InvalidDimension("assemble_encoder: d must be >= 2");
    const Index dim = ipow(d, d + 1);
    if (dim > memory_cap / dim) {
        throw ResourceError("assemble_encoder: " + std::to_string(dim) + "x" + std::to_string(dim) +
                            " encoder exceeds the memory cap of " + std::to_string(memory_cap) + " entries");
    }
    if (static_cast<int>(copies.size()) != d) throw DomainError("assemble_encoder: need exactly d copies");

    ComplexMatrix ns(dim, static_cast<Index>(d) * d);
    for (int i = 0; i < d; ++i) {
        if (copies[static_cast<std::size_t>(i)].rows() != dim || copies[static_cast<std::size_t>(i)].cols() != d) {
            throw DomainError("assemble_encoder: copy has wrong shape");
        }
        ns.middleCols(static_cast<Index>(i) * d, d) = copies[static_cast<std::size_t>(i)];
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(ns);
    ComplexMatrix u = qr.householderQ();
    u.leftCols(ns.cols()) = ns;
    return EncoderSpec{d, UnitaryMatrix(std::move(u)), std::move(generator)};
}

/// Builds U_E for qudit dimension d from Young symmetrizers.
inline EncoderSpec build_encoder(int d, std::uint64_t seed, std::int64_t memory_cap = kDefaultMemoryCap) {
    if (d < 2) throw InvalidDimension("build_encoder: d must be >= 2");
    const Index dim = ipow(d, d + 1);
    if (dim > memory_cap / dim) {
        throw ResourceError("build_encoder: " + std::to_string(dim) + "x" + std::to_string(dim) +
                            " encoder exceeds the memory cap of " + std::to_string(memory_cap) + " entries");
    }
    return assemble_encoder(d, align_copies(isotypic_fundamental_basis(d), d, seed), "symmetrizer", memory_cap);
}

namespace detail {

// Qubit ket from a string of 'u'/'d', e.g. "udu".
inline StateVector qubit_ket(const std::string& s) {
    Index idx = 0;
    for (char ch : s) idx = idx * 2 + (ch == 'd' ? 1 : 0);
    return basis_state(Index{1} << s.size(), idx);
}

}  // namespace detail

/// The three-qubit encoder with the hand-written Young-Yamanouchi columns:
/// two mixed-symmetry pairs followed by the four symmetric states.
inline EncoderSpec reference_encoder_d2() {
    using detail::qubit_ket;
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const double s6 = std::sqrt(6.0);
    ComplexMatrix u(8, 8);
    u.col(0) = (-(qubit_ket("udu") + qubit_ket("duu")) + 2.0 * qubit_ket("uud")) / s6;
    u.col(1) = ((qubit_ket("udd") + qubit_ket("dud")) - 2.0 * qubit_ket("ddu")) / s6;
    u.col(2) = (qubit_ket("udu") - qubit_ket("duu")) / s2;
    u.col(3) = (qubit_ket("udd") - qubit_ket("dud")) / s2;
    u.col(4) = qubit_ket("uuu");
    u.col(5) = (qubit_ket("uud") + qubit_ket("udu") + qubit_ket("duu")) / s3;
    u.col(6) = (qubit_ket("ddu") + qubit_ket("dud") + qubit_ket("udd")) / s3;
    u.col(7) = qubit_ket("ddd");
    return EncoderSpec{2, UnitaryMatrix(std::move(u), 1e-15), "reference"};
}

struct SpinGenerators {
    ComplexMatrix x, y, z;
};

/// Generators of the four-dimensional SU(2) irrep, normalized like the
/// Pauli matrices: [J_a, J_b] = 2i eps_abc J_c.
inline SpinGenerators spin_three_half_generators() {
    const double s3 = std::sqrt(3.0);
    const Complex i(0.0, 1.0);
    SpinGenerators g{ComplexMatrix::Zero(4, 4), ComplexMatrix::Zero(4, 4), ComplexMatrix::Zero(4, 4)};
    g.x << 0, s3, 0, 0,
           s3, 0, 2, 0,
           0, 2, 0, s3,
           0, 0, s3, 0;
    g.y << 0, -s3, 0, 0,
           s3, 0, -2, 0,
           0, 2, 0, -s3,
           0, 0, s3, 0;
    g.y *= i;
    g.z.diagonal() << 3, 1, -1, -3;
    return g;
}

/// U_E^dagger W^(x)(d+1) U_E, dense.
inline ComplexMatrix reduced_error(const EncoderSpec& enc, const ComplexMatrix& w) {
    if (w.rows() != enc.d || w.cols() != enc.d) throw DomainError("reduced_error: w must be d x d");
    ComplexMatrix moved = enc.u_e.matrix();
    apply_collective(moved, w, enc.num_qudits());
    return enc.u_e.adjoint() * moved;
}

/// The block of reduced_error outside the protected columns.
inline ComplexMatrix residual_block(const EncoderSpec& enc, const ComplexMatrix& w) {
    const Index p = enc.protected_columns();
    const Index rest = enc.dim() - p;
    return reduced_error(enc, w).bottomRightCorner(rest, rest);
}

struct BlockReport {
    double residual_ns = 0.0;
    double residual_offdiag = 0.0;
    ComplexMatrix w_used;
    bool passed = false;
};

/// Checks U_E^dagger W^(x)(d+1) U_E = (1_d (x) W) (+) (rest).
///
/// Only the blocks touching the protected columns are formed, so the cost
/// is O(N^2 d^2) rather than O(N^3).
inline BlockReport verify_block_structure(const EncoderSpec& enc, const ComplexMatrix& w, double tol) {
    const int d = enc.d;
    if (w.rows() != d || w.cols() != d) throw DomainError("verify_block_structure: w must be d x d");
    const int n = enc.num_qudits();
    const Index p = enc.protected_columns();
    const ComplexMatrix& u = enc.u_e.matrix();
    const auto ns = u.leftCols(p);
    const auto rest = u.rightCols(u.cols() - p);

    ComplexMatrix w_ns = ns;
    apply_collective(w_ns, w, n);
    ComplexMatrix wdag_ns = ns;
    apply_collective(wdag_ns, w.adjoint(), n);

    const ComplexMatrix top = ns.adjoint() * w_ns;
    BlockReport r;
    r.residual_ns = (top - kron(ComplexMatrix::Identity(d, d), w)).norm();
    r.residual_offdiag = (rest.adjoint() * w_ns).norm() + (wdag_ns.adjoint() * rest).norm();
    r.w_used = w;
    r.passed = r.residual_ns < tol && r.residual_offdiag < tol;
    return r;
}

}  // namespace qns

#endif  // QNS_SCHUR_HPP
