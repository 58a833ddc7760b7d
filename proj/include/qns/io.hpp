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

// JSON and CSV formats.
//
// Matrix:  { "rows": R, "cols": C, "entries": [[re, im], ...] }  row-major
// Encoder: the matrix fields plus "d", "layout", "generator".

#ifndef QNS_IO_HPP
#define QNS_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "qns/channel.hpp"
#include "qns/errors.hpp"
#include "qns/matrix.hpp"
#include "qns/schur.hpp"

namespace qns {

using json = nlohmann::json;

inline json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || static_cast<Index>(entries.size()) != rows * cols) {
        throw DomainError("matrix_from_json: entries count does not match rows x cols");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j2 = 0; j2 < cols; ++j2) {
            const auto& e = entries[static_cast<std::size_t>(i * cols + j2)];
            if (!e.is_array() || e.size() != 2) throw DomainError("matrix_from_json: entry must be [re, im]");
            m(i, j2) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

inline json encoder_to_json(const EncoderSpec& enc) {
    json j = matrix_to_json(enc.u_e.matrix());
    j["d"] = enc.d;
    j["layout"] = enc.layout;
    j["generator"] = enc.generator;
    return j;
}

inline EncoderSpec encoder_from_json(const json& j) {
    const int d = j.at("d").get<int>();
    const auto layout = j.at("layout").get<std::string>();
    if (layout != kMultiplicityMajor) throw DomainError("encoder_from_json: unsupported layout '" + layout + "'");
    ComplexMatrix u = matrix_from_json(j);
    if (d < 2 || u.rows() != ipow(d, d + 1)) throw DomainError("encoder_from_json: matrix size does not match d");
    return EncoderSpec{d, UnitaryMatrix(std::move(u)), j.at("generator").get<std::string>(), layout};
}

inline json block_report_to_json(const BlockReport& r) {
    return {{"residual_ns", r.residual_ns},
            {"residual_offdiag", r.residual_offdiag},
            {"passed", r.passed},
            {"w_used", matrix_to_json(r.w_used)}};
}

inline json report_to_json(const SimulationReport& r) {
    return {{"d", r.d},
            {"k", r.k},
            {"n", r.n},
            {"noise", to_string(r.noise)},
            {"master_seed", r.master_seed},
            {"trials", r.trials},
            {"per_slot_worst_infidelity", r.worst_infidelity},
            {"mean_infidelity", r.mean_infidelity},
            {"max_infidelity", r.max_infidelity},
            {"max_state_residual", r.max_state_residual},
            {"max_carry_residual", r.max_carry_residual},
            {"seeds", r.trial_seeds}};
}

inline std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string rate_table_csv(const std::vector<RateRow>& rows) {
    std::ostringstream os;
    os << "d,k,n,rate\n";
    for (const auto& r : rows) os << r.d << ',' << r.k << ',' << r.n << ',' << rational_to_string(r.rate) << '\n';
    return os.str();
}

inline json rate_table_json(const std::vector<RateRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"d", r.d}, {"k", r.k}, {"n", r.n}, {"rate", rational_to_string(r.rate)}});
    }
    return out;
}

}  // namespace qns

#endif  // QNS_IO_HPP
