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

// Dense complex linear algebra on qudit registers.
//
// Index convention: the basis state |i_1 i_2 ... i_n> of n qudits of
// dimension d has index sum_k i_k * d^(n-k), qudit 1 being the most
// significant digit.

#ifndef QNS_MATRIX_HPP
#define QNS_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qns/errors.hpp"

namespace qns {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Tolerance for invariants of objects we construct.
inline constexpr double kConstructionTol = 1e-12;
/// Tolerance for verification residuals.
inline constexpr double kVerificationTol = 1e-10;

/// d^n, throwing ResourceError on overflow.
inline std::int64_t ipow(std::int64_t d, int n) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / d) {
            throw ResourceError("ipow: " + std::to_string(d) + "^" + std::to_string(n) + " overflows");
        }
        r *= d;
    }
    return r;
}

/// ||m^dagger m - 1||_F
inline double unitarity_residual(const ComplexMatrix& m) {
    return (m.adjoint() * m - ComplexMatrix::Identity(m.cols(), m.cols())).norm();
}

/// Square complex matrix checked to be unitary at construction.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix m, double tol = kConstructionTol) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw DomainError("UnitaryMatrix: matrix is not square");
        const double r = unitarity_residual(m_);
        if (!(r < tol)) {
            throw DomainError("UnitaryMatrix: unitarity residual " + std::to_string(r) + " exceeds tolerance");
        }
    }

    const ComplexMatrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }
    ComplexMatrix adjoint() const { return m_.adjoint(); }

    operator const ComplexMatrix&() const { return m_; }

private:
    ComplexMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, double tol = kConstructionTol) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw DomainError("DensityMatrix: matrix is not square");
        if ((m_ - m_.adjoint()).norm() > tol) throw DomainError("DensityMatrix: not Hermitian");
        if (std::abs(m_.trace() - Complex(1.0)) > tol) throw DomainError("DensityMatrix: trace is not 1");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10) throw DomainError("DensityMatrix: negative eigenvalue");
    }

    static DensityMatrix from_state(const StateVector& psi) {
        return DensityMatrix(psi * psi.adjoint());
    }

    const ComplexMatrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
};

/// Kronecker product a (x) b.
template <class A, class B>
ComplexMatrix kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b.template cast<Complex>();
        }
    }
    return out;
}

/// Tensor product of single-qudit states, first element leftmost.
inline StateVector kron_states(std::span<const StateVector> parts) {
    StateVector out = StateVector::Ones(1);
    for (const auto& p : parts) out = kron(out, p);
    return out;
}

/// n-fold Kronecker power w^(x)n, dense.
inline ComplexMatrix collective_error(const ComplexMatrix& w, int n) {
    if (w.rows() != w.cols()) throw DomainError("collective_error: w must be square");
    if (n < 1) throw DomainError("collective_error: n must be >= 1");
    ComplexMatrix out = w;
    for (int i = 1; i < n; ++i) out = kron(out, w);
    return out;
}

/// Applies `op` to slots [first, first + width) of an n-slot register of
/// qudit dimension d, acting on every column of `x` in place. Equivalent to
/// multiplying by 1 (x) op (x) 1 without forming the sandwich.
inline void apply_window(ComplexMatrix& x, const ComplexMatrix& op, int d, int n, int first, int width) {
    if (first < 0 || width < 1 || first + width > n) throw DomainError("apply_window: window out of range");
    const Index block = ipow(d, width);
    if (op.rows() != block || op.cols() != block) throw DomainError("apply_window: operator size mismatch");
    const Index total = ipow(d, n);
    if (x.rows() != total) throw DomainError("apply_window: state dimension mismatch");

    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Index right = ipow(d, n - first - width);
    const Index left = total / (block * right);
    RowMajor tmp(block, right);
    for (Index c = 0; c < x.cols(); ++c) {
        Complex* col = x.col(c).data();
        for (Index l = 0; l < left; ++l) {
            Eigen::Map<RowMajor> slab(col + l * block * right, block, right);
            tmp.noalias() = op * slab;
            slab = tmp;
        }
    }
}

/// In place w^(x)n applied to every column of `x`.
inline void apply_collective(ComplexMatrix& x, const ComplexMatrix& w, int n) {
    const int d = static_cast<int>(w.rows());
    for (int s = 0; s < n; ++s) apply_window(x, w, d, n, s, 1);
}

inline StateVector apply_collective(const StateVector& psi, const ComplexMatrix& w, int n) {
    ComplexMatrix x = psi;
    apply_collective(x, w, n);
    return x.col(0);
}

/// Computational basis vector e_i in C^dim.
inline StateVector basis_state(Index dim, Index i) {
    StateVector e = StateVector::Zero(dim);
    e(i) = 1.0;
    return e;
}

/// 64-bit mixer used to derive independent seeds from (master, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

/// d x d matrix of i.i.d. standard complex normals.
inline ComplexMatrix ginibre(int d, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

/// Uniformly random unit vector in C^d.
inline StateVector random_state(int d, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    StateVector v(d);
    for (Index i = 0; i < d; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

/// Haar-random element of SU(d): QR of a Ginibre matrix with the phases of
/// diag(R) absorbed into Q, then the determinant phase divided out.
inline UnitaryMatrix random_special_unitary(int d, Rng& rng) {
    if (d < 2) throw InvalidDimension("random_special_unitary: d must be >= 2");
    const ComplexMatrix g = ginibre(d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Index j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    const double phase = std::arg(q.determinant());
    q *= std::polar(1.0, -phase / d);
    return UnitaryMatrix(std::move(q));
}

inline UnitaryMatrix random_special_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return random_special_unitary(d, rng);
}

/// 2-norm condition number.
inline double condition_number(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    return s(0) / s(s.size() - 1);
}

/// Random element of SL(d, C): a Ginibre sample scaled by det^(-1/d).
/// Samples with condition number above `max_condition` are rejected.
inline ComplexMatrix random_special_linear(int d, Rng& rng, double max_condition = 100.0) {
    if (d < 2) throw InvalidDimension("random_special_linear: d must be >= 2");
    for (;;) {
        ComplexMatrix g = ginibre(d, rng);
        const Complex det = g.determinant();
        if (std::abs(det) == 0.0) continue;
        g /= std::pow(det, 1.0 / d);
        if (condition_number(g) <= max_condition) return g;
    }
}

inline ComplexMatrix random_special_linear(int d, std::uint64_t seed) {
    Rng rng(seed);
    return random_special_linear(d, rng);
}

/// Reduced density matrix over the slots in `keep`, kept slots in ascending
/// order. `dims` lists the dimension of every slot.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims, const std::set<int>& keep) {
    if (keep.empty()) throw DomainError("partial_trace: keep must be nonempty");
    Index total = 1;
    for (int dim : dims) {
        if (dim < 1) throw DomainError("partial_trace: slot dimensions must be positive");
        total *= dim;
    }
    if (total != rho.dim()) throw DomainError("partial_trace: dims do not match matrix size");
    const int n = static_cast<int>(dims.size());
    for (int k : keep) {
        if (k < 0 || k >= n) throw DomainError("partial_trace: slot index out of range");
    }

    // Split each full index into (kept index, traced index).
    Index kept_dim = 1;
    Index traced_dim = 1;
    for (int s = 0; s < n; ++s) (keep.count(s) ? kept_dim : traced_dim) *= dims[static_cast<std::size_t>(s)];
    std::vector<Index> kept_of(static_cast<std::size_t>(total));
    std::vector<Index> traced_of(static_cast<std::size_t>(total));
    for (Index idx = 0; idx < total; ++idx) {
        Index rem = idx;
        Index kept = 0, traced = 0, kept_scale = 1, traced_scale = 1;
        for (int s = n - 1; s >= 0; --s) {
            const int dim = dims[static_cast<std::size_t>(s)];
            const Index digit = rem % dim;
            rem /= dim;
            if (keep.count(s)) {
                kept += digit * kept_scale;
                kept_scale *= dim;
            } else {
                traced += digit * traced_scale;
                traced_scale *= dim;
            }
        }
        kept_of[static_cast<std::size_t>(idx)] = kept;
        traced_of[static_cast<std::size_t>(idx)] = traced;
    }

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    const ComplexMatrix& m = rho.matrix();
    for (Index j = 0; j < total; ++j) {
        for (Index i = 0; i < total; ++i) {
            if (traced_of[static_cast<std::size_t>(i)] == traced_of[static_cast<std::size_t>(j)]) {
                out(kept_of[static_cast<std::size_t>(i)], kept_of[static_cast<std::size_t>(j)]) += m(i, j);
            }
        }
    }
    return DensityMatrix(std::move(out), 1e-10);
}

/// Reduced density matrix of one slot of a pure n-qudit state, without
/// forming the full projector.
inline ComplexMatrix reduced_slot_state(const StateVector& psi, int d, int n, int slot) {
    if (slot < 0 || slot >= n) throw DomainError("reduced_slot_state: slot out of range");
    if (psi.size() != ipow(d, n)) throw DomainError("reduced_slot_state: state dimension mismatch");
    const Index right = ipow(d, n - slot - 1);
    const Index left = psi.size() / (d * right);
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    for (Index l = 0; l < left; ++l) {
        Eigen::Map<const RowMajor> slab(psi.data() + l * d * right, d, right);
        rho.noalias() += slab * slab.adjoint();
    }
    return rho;
}

/// <psi|rho|psi>, clamped to [0, 1].
inline double fidelity(const DensityMatrix& rho, const StateVector& psi) {
    if (rho.dim() != psi.size()) throw DomainError("fidelity: dimension mismatch");
    const double f = std::real(psi.dot(rho.matrix() * psi));
    return std::clamp(f, 0.0, 1.0);
}

/// Unitary factor U of the polar decomposition m = U P.
inline UnitaryMatrix polar_unitary_factor(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("polar_unitary_factor: matrix must be square");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(s.size() - 1) <= 1e-10 * s(0)) {
        throw DegenerateInput("polar_unitary_factor: matrix is rank deficient");
    }
    return UnitaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

}  // namespace qns

#endif  // QNS_MATRIX_HPP
