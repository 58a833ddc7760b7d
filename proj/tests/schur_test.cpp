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

#include "qns/schur.hpp"

#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gtest/gtest.h"

using namespace qns;
using qns::detail::qubit_ket;

namespace {

// Orthogonal projector onto the column space, rank-deficient input allowed.
ComplexMatrix projector_onto(const ComplexMatrix& cols) {
    Eigen::JacobiSVD<ComplexMatrix> svd(cols, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Index rank = 0;
    for (Index i = 0; i < s.size(); ++i) rank += s(i) > 1e-9 * s(0);
    const ComplexMatrix q = svd.matrixU().leftCols(rank);
    return q * q.adjoint();
}

Index numerical_rank(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    Index r = 0;
    for (Index i = 0; i < s.size(); ++i) r += s(i) > 1e-9 * s(0);
    return r;
}

ComplexMatrix hstack(const std::vector<ComplexMatrix>& parts) {
    Index cols = 0;
    for (const auto& p : parts) cols += p.cols();
    ComplexMatrix out(parts.front().rows(), cols);
    Index at = 0;
    for (const auto& p : parts) {
        out.middleCols(at, p.cols()) = p;
        at += p.cols();
    }
    return out;
}

// exp(i r.sigma) = cos|r| + i sin|r| (r/|r|).sigma
ComplexMatrix su2_exponential(double rx, double ry, double rz) {
    const double norm = std::sqrt(rx * rx + ry * ry + rz * rz);
    const Complex i(0.0, 1.0);
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    if (norm == 0.0) return ComplexMatrix::Identity(2, 2);
    return std::cos(norm) * ComplexMatrix::Identity(2, 2) + i * std::sin(norm) / norm * (rx * sx + ry * sy + rz * sz);
}

const StateVector& paper_mixed_12_3_first() {
    static const StateVector v = (-(qubit_ket("udu") + qubit_ket("duu")) + 2.0 * qubit_ket("uud")) / std::sqrt(6.0);
    return v;
}

}  // namespace

TEST(Symmetrizer, IdempotentWithIrrepRankAndCommutesWithCollectiveAction) {
    for (int d = 2; d <= 3; ++d) {
        const int n = d + 1;
        Rng rng(static_cast<std::uint64_t>(d));
        const ComplexMatrix w = random_special_linear(d, rng);
        const ComplexMatrix big_w = collective_error(w, n);
        for (const auto& shape : partitions(n)) {
            for (const auto& t : enumerate_standard_tableaux(shape)) {
                const ComplexMatrix p = young_symmetrizer_projector(t, d);
                EXPECT_LT((p * p - p).norm(), 1e-10) << t.to_string();
                EXPECT_EQ(numerical_rank(p), static_cast<Index>(sud_irrep_dimension(shape, d))) << t.to_string();
                EXPECT_LT((p * big_w - big_w * p).norm(), 1e-9 * big_w.norm()) << t.to_string();
            }
        }
    }
}

TEST(Symmetrizer, SingleRowIsSymmetricSubspace) {
    const ComplexMatrix p = young_symmetrizer_projector(StandardTableau({{1, 2, 3}}), 2);
    EXPECT_EQ(numerical_rank(p), 4);
    EXPECT_LT((p * qubit_ket("uuu") - qubit_ket("uuu")).norm(), 1e-12);
    EXPECT_LT((p - p.adjoint()).norm(), 1e-12);  // symmetrizer of one row is an orthogonal projector
}

TEST(Symmetrizer, ThirteenTwoContainsSingletTimesUp) {
    const ComplexMatrix p = young_symmetrizer_projector(StandardTableau({{1, 3}, {2}}), 2);
    const StateVector v = (qubit_ket("udu") - qubit_ket("duu")) / std::sqrt(2.0);
    EXPECT_LT((p * v - v).norm(), 1e-10);
}

// The Young-Yamanouchi vector of 12/3 lies in the (2,1) isotypic component
// spanned by the two symmetrizer images.
TEST(Symmetrizer, TwelveThreeVectorLiesInMixedSymmetryComponent) {
    std::vector<ComplexMatrix> ranges;
    for (const auto& t : enumerate_standard_tableaux(YoungDiagram({2, 1}))) ranges.push_back(young_symmetrizer_projector(t, 2));
    const ComplexMatrix proj = projector_onto(hstack(ranges));
    const StateVector& v = paper_mixed_12_3_first();
    EXPECT_LT((proj * v - v).norm(), 1e-10);
}

TEST(Symmetrizer, RejectsWrongBoxCount) {
    EXPECT_THROW(young_symmetrizer_projector(StandardTableau({{1, 2}, {3}}), 3), DomainError);
}

TEST(IsotypicBasis, QubitCopiesAreTheYoungYamanouchiPairs) {
    const auto copies = isotypic_fundamental_basis(2);
    ASSERT_EQ(copies.size(), 2u);
    ComplexMatrix paper(8, 4);
    paper.col(0) = paper_mixed_12_3_first();
    paper.col(1) = ((qubit_ket("udd") + qubit_ket("dud")) - 2.0 * qubit_ket("ddu")) / std::sqrt(6.0);
    paper.col(2) = (qubit_ket("udu") - qubit_ket("duu")) / std::sqrt(2.0);
    paper.col(3) = (qubit_ket("udd") - qubit_ket("dud")) / std::sqrt(2.0);
    EXPECT_LT((projector_onto(hstack(copies)) - projector_onto(paper)).norm(), 1e-10);
    EXPECT_LT((projector_onto(copies[1]) - projector_onto(paper.rightCols(2))).norm(), 1e-10);
    EXPECT_LT((projector_onto(copies[0]) - projector_onto(paper.leftCols(2))).norm(), 1e-10);
}

TEST(IsotypicBasis, OrthonormalInvariantCopiesCountedByFrobenius) {
    for (int d = 2; d <= 4; ++d) {
        const auto copies = isotypic_fundamental_basis(d);
        EXPECT_EQ(BigInt(copies.size()), frobenius_multiplicity(fundamental_equivalent_shape(d), d));
        const ComplexMatrix all = hstack(copies);
        EXPECT_LT((all.adjoint() * all - ComplexMatrix::Identity(d * d, d * d)).norm(), 1e-12);
        Rng rng(100 + static_cast<std::uint64_t>(d));
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix w = random_special_unitary(d, rng).matrix();
            for (const auto& b : copies) {
                ComplexMatrix moved = b;
                apply_collective(moved, w, d + 1);
                // Invariant: the image stays inside the copy.
                EXPECT_LT((moved - b * (b.adjoint() * moved)).norm(), 1e-12);
            }
        }
    }
}

TEST(IsotypicBasis, FirstColumnIsHighestWeight) {
    for (int d = 2; d <= 4; ++d) {
        for (const auto& b : isotypic_fundamental_basis(d)) {
            for (int j = 0; j < d; ++j) {
                for (Index idx = 0; idx < b.rows(); ++idx) {
                    if (std::abs(b(idx, j)) < 1e-12) continue;
                    // Level j appears twice in every basis state carrying weight j.
                    EXPECT_EQ(qns::detail::level_counts(idx, d, d + 1)[static_cast<std::size_t>(j)], 2);
                }
            }
        }
    }
}

TEST(AlignCopies, QubitCopiesCarrySameMatrixOnFreshSamples) {
    const auto aligned = align_copies(isotypic_fundamental_basis(2), 2, 123);
    Rng rng(999);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix w = random_special_unitary(2, rng).matrix();
        std::vector<ComplexMatrix> reps;
        for (const auto& b : aligned) {
            ComplexMatrix moved = b;
            apply_collective(moved, w, 3);
            reps.push_back(b.adjoint() * moved);
        }
        EXPECT_LT((reps[0] - reps[1]).norm(), 1e-10);
        EXPECT_LT((reps[0] - w).norm(), 1e-10);
    }
}

TEST(AlignCopies, AlreadyAlignedInputOnlyChangesByPhase) {
    for (int d = 2; d <= 3; ++d) {
        const auto once = align_copies(isotypic_fundamental_basis(d), d, 1);
        std::vector<ComplexMatrix> rotated = once;
        for (std::size_t c = 0; c < rotated.size(); ++c) rotated[c] *= std::polar(1.0, 0.7 + static_cast<double>(c));
        const auto twice = align_copies(rotated, d, 2);
        for (std::size_t c = 0; c < once.size(); ++c) {
            const Complex phase = once[c].col(0).dot(twice[c].col(0));
            EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
            EXPECT_LT((twice[c] - phase * once[c]).norm(), 1e-10);
            // The phase convention makes the result identical, not just equivalent.
            EXPECT_LT((twice[c] - once[c]).norm(), 1e-10);
        }
    }
}

TEST(AlignCopies, DiagonalNoiseGivesIdenticalPhasesInOrder) {
    for (int d = 2; d <= 3; ++d) {
        const auto aligned = align_copies(isotypic_fundamental_basis(d), d, 5);
        ComplexMatrix w = ComplexMatrix::Zero(d, d);
        double total = 0.0;
        for (int j = 0; j < d - 1; ++j) {
            w(j, j) = std::polar(1.0, 0.3 * (d - j));
            total += 0.3 * (d - j);
        }
        w(d - 1, d - 1) = std::polar(1.0, -total);
        for (const auto& b : aligned) {
            ComplexMatrix moved = b;
            apply_collective(moved, w, d + 1);
            const ComplexMatrix rep = b.adjoint() * moved;
            EXPECT_LT((rep - w).norm(), 1e-10);
        }
    }
}

TEST(AlignCopies, RejectsNonInvariantSubspace) {
    const int d = 2;
    ComplexMatrix bogus = ComplexMatrix::Zero(8, 2);
    bogus(0, 0) = 1.0;  // uuu
    bogus(1, 1) = 1.0;  // uud
    EXPECT_THROW(align_copies({bogus}, d, 0), AlignmentError);
}

TEST(BuildEncoder, QubitEncoderMatchesReferenceColumns) {
    const auto enc = build_encoder(2, 7);
    const auto ref = reference_encoder_d2();
    EXPECT_EQ(enc.layout, "multiplicity-major");
    EXPECT_LT(unitarity_residual(enc.u_e.matrix()), 1e-12);
    const ComplexMatrix diff = projector_onto(enc.u_e.matrix().leftCols(4)) - projector_onto(ref.u_e.matrix().leftCols(4));
    EXPECT_LT(diff.norm(), 1e-10);
    // The phase convention reproduces the hand-written signs column by column.
    EXPECT_LT((enc.u_e.matrix().leftCols(4) - ref.u_e.matrix().leftCols(4)).norm(), 1e-12);
}

TEST(BuildEncoder, BlockStructureForQutritsAndQuqarts) {
    for (int d = 3; d <= 4; ++d) {
        const auto enc = build_encoder(d, 17);
        EXPECT_EQ(enc.dim(), ipow(d, d + 1));
        EXPECT_LT(unitarity_residual(enc.u_e.matrix()), 1e-12);
        Rng rng(31);
        const int samples = d == 3 ? 100 : 10;
        for (int trial = 0; trial < samples; ++trial) {
            const auto r = verify_block_structure(enc, random_special_unitary(d, rng).matrix(), 1e-10);
            EXPECT_TRUE(r.passed) << "d=" << d << " ns=" << r.residual_ns << " off=" << r.residual_offdiag;
        }
    }
}

TEST(BuildEncoder, MemoryCapAndDimensionErrors) {
    EXPECT_THROW(build_encoder(5, 0), ResourceError);
    EXPECT_THROW(build_encoder(3, 0, 1000), ResourceError);
    EXPECT_THROW(build_encoder(1, 0), InvalidDimension);
}

TEST(BuildEncoder, UnalignedCopiesBreakTheBlockForm) {
    const auto bad = assemble_encoder(2, isotypic_fundamental_basis(2), "unaligned");
    const auto r = verify_block_structure(bad, random_special_unitary(2, std::uint64_t{3}).matrix(), 1e-10);
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.residual_ns, 1e-3);
}

TEST(ReferenceEncoder, Columns) {
    const auto ref = reference_encoder_d2();
    const ComplexMatrix& u = ref.u_e.matrix();
    EXPECT_EQ(ref.generator, "reference");
    EXPECT_EQ(StateVector(u.col(4)), qubit_ket("uuu"));
    const double h = 1.0 / std::sqrt(2.0);
    const std::vector<double> col2 = {0, 0, h, 0, -h, 0, 0, 0};
    for (int i = 0; i < 8; ++i) EXPECT_EQ(u(i, 2), Complex(col2[static_cast<std::size_t>(i)])) << i;
    EXPECT_LT(unitarity_residual(u), 1e-15);
}

TEST(ReferenceEncoder, BlockDiagonalizesCollectiveNoise) {
    const auto ref = reference_encoder_d2();
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = verify_block_structure(ref, random_special_unitary(2, rng).matrix(), 1e-10);
        EXPECT_TRUE(r.passed) << r.residual_ns << " " << r.residual_offdiag;
    }
}

TEST(VerifyBlock, IdentityAndErrors) {
    for (int d = 2; d <= 3; ++d) {
        const auto enc = build_encoder(d, 1);
        const auto r = verify_block_structure(enc, ComplexMatrix::Identity(d, d), 1e-12);
        EXPECT_TRUE(r.passed);
        EXPECT_LT(r.residual_ns, 1e-12);
        EXPECT_LT(r.residual_offdiag, 1e-12);
        EXPECT_LT((reduced_error(enc, ComplexMatrix::Identity(d, d)) - ComplexMatrix::Identity(enc.dim(), enc.dim())).norm(), 1e-12);
    }
    EXPECT_THROW(verify_block_structure(reference_encoder_d2(), ComplexMatrix::Identity(3, 3), 1e-10), DomainError);
}

TEST(SpinGenerators, PrintedEntries) {
    const auto g = spin_three_half_generators();
    ComplexMatrix jz = ComplexMatrix::Zero(4, 4);
    jz.diagonal() << 3, 1, -1, -3;
    EXPECT_EQ(g.z, jz);
    EXPECT_EQ(g.x(0, 1), Complex(std::sqrt(3.0)));
    EXPECT_EQ(g.x(1, 2), Complex(2.0));
    EXPECT_EQ(g.y(0, 1), Complex(0.0, -std::sqrt(3.0)));
}

TEST(SpinGenerators, PauliNormalizedCommutators) {
    const auto g = spin_three_half_generators();
    const Complex two_i(0.0, 2.0);
    EXPECT_LT((g.x * g.y - g.y * g.x - two_i * g.z).norm(), 1e-12);
    EXPECT_LT((g.y * g.z - g.z * g.y - two_i * g.x).norm(), 1e-12);
    EXPECT_LT((g.z * g.x - g.x * g.z - two_i * g.y).norm(), 1e-12);
}

// Bottom block of the reference encoder is the four-dimensional irrep:
// B(exp(i r.sigma)) = exp(i r.J).
TEST(ReferenceEncoder, ResidualBlockIsSpinThreeHalfRepresentation) {
    const auto ref = reference_encoder_d2();
    const auto g = spin_three_half_generators();
    Rng rng(77);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double pi = std::acos(-1.0);
    for (int trial = 0; trial < 100; ++trial) {
        double rx, ry, rz;
        do {
            rx = unit(rng) * pi;
            ry = unit(rng) * pi;
            rz = unit(rng) * pi;
        } while (rx * rx + ry * ry + rz * rz > pi * pi);
        const ComplexMatrix gen = Complex(0.0, 1.0) * (rx * g.x + ry * g.y + rz * g.z);
        const ComplexMatrix expected = gen.exp();
        const ComplexMatrix block = residual_block(ref, su2_exponential(rx, ry, rz));
        EXPECT_LT((block - expected).norm(), 1e-10);
    }
}

TEST(ResidualBlock, IsARepresentation) {
    for (int d = 2; d <= 3; ++d) {
        const auto enc = build_encoder(d, 4);
        Rng rng(static_cast<std::uint64_t>(50 + d));
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix a = random_special_unitary(d, rng).matrix();
            const ComplexMatrix b = random_special_unitary(d, rng).matrix();
            EXPECT_LT((residual_block(enc, a * b) - residual_block(enc, a) * residual_block(enc, b)).norm(), 1e-9);
        }
    }
}

// Block structure carries over to SL(d, C) by analytic continuation.
TEST(BuildEncoder, BlockStructureForSpecialLinearNoise) {
    for (int d = 2; d <= 3; ++d) {
        const auto enc = build_encoder(d, 8);
        Rng rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            const auto r = verify_block_structure(enc, random_special_linear(d, rng), 1e-8);
            EXPECT_TRUE(r.passed) << r.residual_ns << " " << r.residual_offdiag;
        }
    }
}
