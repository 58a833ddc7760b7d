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

// Recursive noiseless-subsystem code on n = k*d + 1 qudits.
//
// Register layout before encoding (slots 1-indexed, left to right):
//
//   [u ... u psi_k] [u ... u psi_(k-1)] ... [u ... u psi_1] [v]
//    \___ d ____/
//
// Window t covers slots (t-1)d+1 .. t*d+1; consecutive windows share one
// carry slot. Encoding applies U_E from the last window to the first,
// decoding applies U_E^dagger in the opposite order. After collective noise
// W^(x)n the decoded register is the input register with v replaced by W v.

#ifndef QNS_CHANNEL_HPP
#define QNS_CHANNEL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "qns/errors.hpp"
#include "qns/matrix.hpp"
#include "qns/schur.hpp"

namespace qns {

/// Slots [first, last], 1-indexed and inclusive.
struct Window {
    int first = 0;
    int last = 0;
    friend bool operator==(const Window&, const Window&) = default;
};

struct RecursiveCode {
    int d = 0;
    int k = 0;
    int n = 0;
    std::shared_ptr<const EncoderSpec> encoder;
    std::vector<Window> schedule;

    Index dim() const { return ipow(d, n); }
    /// 0-indexed slot holding psi_(i+1).
    int data_slot(int i) const { return (k - i) * d - 1; }
    int carry_slot() const { return n - 1; }
};

inline RecursiveCode make_code(int d, int k, std::shared_ptr<const EncoderSpec> enc,
                               std::int64_t memory_cap = kDefaultMemoryCap) {
    if (d < 2) throw InvalidDimension("make_code: d must be >= 2");
    if (k < 1) throw DomainError("make_code: k must be >= 1");
    if (!enc || enc->d != d) throw DomainError("make_code: encoder dimension does not match d");
    const int n = k * d + 1;
    const std::int64_t size = ipow(d, n);
    if (size > memory_cap) {
        throw ResourceError("make_code: register dimension " + std::to_string(d) + "^" + std::to_string(n) + " = " +
                            std::to_string(size) + " exceeds the memory cap of " + std::to_string(memory_cap));
    }
    RecursiveCode code{d, k, n, std::move(enc), {}};
    for (int t = 1; t <= k; ++t) code.schedule.push_back({(t - 1) * d + 1, t * d + 1});
    return code;
}

inline RecursiveCode make_code(int d, int k, const EncoderSpec& enc, std::int64_t memory_cap = kDefaultMemoryCap) {
    return make_code(d, k, std::make_shared<const EncoderSpec>(enc), memory_cap);
}

/// Unencoded register u^(d-1) psi_k ... u^(d-1) psi_1 v.
inline StateVector input_register(const RecursiveCode& code, std::span<const StateVector> data, const StateVector& ancilla) {
    if (static_cast<int>(data.size()) != code.k) throw DomainError("input_register: need exactly k data states");
    for (const auto& psi : data) {
        if (psi.size() != code.d) throw DomainError("input_register: data state has wrong dimension");
    }
    if (ancilla.size() != code.d) throw DomainError("input_register: ancilla has wrong dimension");
    const StateVector up = basis_state(code.d, 0);
    std::vector<StateVector> slots;
    for (int t = code.k; t >= 1; --t) {
        for (int i = 0; i < code.d - 1; ++i) slots.push_back(up);
        slots.push_back(data[static_cast<std::size_t>(t - 1)]);
    }
    slots.push_back(ancilla);
    return kron_states(slots);
}

/// `data[i]` is psi_(i+1).
inline StateVector encode(const RecursiveCode& code, std::span<const StateVector> data, const StateVector& ancilla) {
    ComplexMatrix state = input_register(code, data, ancilla);
    const ComplexMatrix& u = code.encoder->u_e.matrix();
    for (auto it = code.schedule.rbegin(); it != code.schedule.rend(); ++it) {
        apply_window(state, u, code.d, code.n, it->first - 1, code.d + 1);
    }
    return state.col(0);
}

/// w^(x)n applied to `state`, optionally renormalized.
inline StateVector apply_noise(const StateVector& state, const ComplexMatrix& w, int n, bool renormalize) {
    if (w.rows() != w.cols()) throw DomainError("apply_noise: w must be square");
    if (state.size() != ipow(w.rows(), n)) throw DomainError("apply_noise: state dimension mismatch");
    StateVector out = apply_collective(state, w, n);
    if (renormalize) {
        const double nrm = out.norm();
        if (!(nrm > 0.0)) throw DegenerateInput("apply_noise: noise annihilated the state");
        out /= nrm;
    }
    return out;
}

inline StateVector decode(const RecursiveCode& code, const StateVector& state) {
    if (state.size() != code.dim()) throw DomainError("decode: state dimension mismatch");
    ComplexMatrix x = state;
    const ComplexMatrix udag = code.encoder->u_e.adjoint();
    for (const auto& win : code.schedule) apply_window(x, udag, code.d, code.n, win.first - 1, code.d + 1);
    return x.col(0);
}

/// Reduced state of every data slot; entry i belongs to psi_(i+1).
inline std::vector<DensityMatrix> extract_data(const RecursiveCode& code, const StateVector& decoded) {
    if (decoded.size() != code.dim()) throw DomainError("extract_data: state dimension mismatch");
    std::vector<DensityMatrix> out;
    for (int i = 0; i < code.k; ++i) {
        out.emplace_back(reduced_slot_state(decoded, code.d, code.n, code.data_slot(i)), 1e-10);
    }
    return out;
}

enum class NoiseKind { HaarSU, SL };

inline std::string to_string(NoiseKind kind) { return kind == NoiseKind::HaarSU ? "haar-su" : "sl"; }

struct NoiseModel {
    NoiseKind kind = NoiseKind::HaarSU;
    std::uint64_t seed = 0;

    bool renormalize() const { return kind == NoiseKind::SL; }

    ComplexMatrix sample(int d, Rng& rng) const {
        return kind == NoiseKind::HaarSU ? random_special_unitary(d, rng).matrix() : random_special_linear(d, rng);
    }
};

struct SimulationReport {
    int d = 0;
    int k = 0;
    int n = 0;
    NoiseKind noise = NoiseKind::HaarSU;
    std::uint64_t master_seed = 0;
    int trials = 0;
    /// Worst infidelity per data state, entry i for psi_(i+1).
    std::vector<double> worst_infidelity;
    double mean_infidelity = 0.0;
    double max_infidelity = 0.0;
    /// max ||decoded - u..psi_k..u..psi_1 (W v)/norm||
    double max_state_residual = 0.0;
    /// max ||rho_carry - W v v^dagger W^dagger / norm||_F
    double max_carry_residual = 0.0;
    std::vector<std::uint64_t> trial_seeds;
};

/// Replaces the sampled error for trial `index`; used by tests to force W.
using ErrorOverride = std::function<ComplexMatrix(int index)>;

/// Monte Carlo over fresh W, psi_t and v per trial. Trial i draws everything
/// from derive_seed(noise.seed, i).
inline SimulationReport simulate(const RecursiveCode& code, const NoiseModel& noise, int trials,
                                 const ErrorOverride& override_error = {}) {
    if (trials < 1) throw DomainError("simulate: trials must be >= 1");
    SimulationReport rep;
    rep.d = code.d;
    rep.k = code.k;
    rep.n = code.n;
    rep.noise = noise.kind;
    rep.master_seed = noise.seed;
    rep.trials = trials;
    rep.worst_infidelity.assign(static_cast<std::size_t>(code.k), 0.0);

    double sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t seed = derive_seed(noise.seed, static_cast<std::uint64_t>(trial));
        rep.trial_seeds.push_back(seed);
        Rng rng(seed);
        const ComplexMatrix w = override_error ? override_error(trial) : noise.sample(code.d, rng);
        std::vector<StateVector> data;
        for (int i = 0; i < code.k; ++i) data.push_back(random_state(code.d, rng));
        const StateVector v = random_state(code.d, rng);

        const StateVector sent = encode(code, data, v);
        const StateVector received = apply_noise(sent, w, code.n, noise.renormalize());
        const StateVector decoded = decode(code, received);

        StateVector wv = w * v;
        wv /= wv.norm();
        const StateVector expected = input_register(code, data, wv);
        rep.max_state_residual = std::max(rep.max_state_residual, (decoded - expected).norm());

        const auto reduced = extract_data(code, decoded);
        for (int i = 0; i < code.k; ++i) {
            const double infid = 1.0 - fidelity(reduced[static_cast<std::size_t>(i)], data[static_cast<std::size_t>(i)]);
            rep.worst_infidelity[static_cast<std::size_t>(i)] =
                std::max(rep.worst_infidelity[static_cast<std::size_t>(i)], infid);
            rep.max_infidelity = std::max(rep.max_infidelity, infid);
            sum += infid;
        }
        const ComplexMatrix carry = reduced_slot_state(decoded, code.d, code.n, code.carry_slot());
        rep.max_carry_residual = std::max(rep.max_carry_residual, (carry - wv * wv.adjoint()).norm());
    }
    rep.mean_infidelity = sum / (static_cast<double>(trials) * code.k);
    return rep;
}

using Rational = boost::rational<std::int64_t>;

/// k / (k d + 1).
inline Rational encoding_rate(int d, int k) {
    if (d < 2) throw InvalidDimension("encoding_rate: d must be >= 2");
    if (k < 1) throw DomainError("encoding_rate: k must be >= 1");
    return Rational(k, static_cast<std::int64_t>(k) * d + 1);
}

struct RateRow {
    int d = 0;
    int k = 0;
    int n = 0;
    Rational rate;
};

inline std::vector<RateRow> rate_table(int d, int kmax) {
    if (kmax < 1) throw DomainError("rate_table: kmax must be >= 1");
    std::vector<RateRow> rows;
    for (int k = 1; k <= kmax; ++k) rows.push_back({d, k, k * d + 1, encoding_rate(d, k)});
    return rows;
}

}  // namespace qns

#endif  // QNS_CHANNEL_HPP
