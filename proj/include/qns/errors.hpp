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

#ifndef QNS_ERRORS_HPP
#define QNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qns {

/// Qudit dimension outside the supported range (d < 2).
struct InvalidDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Arguments with mismatched sizes or outside an operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested object would exceed the configured memory cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input is singular or otherwise degenerate within tolerance.
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Intertwiner fit between two irrep copies did not yield an isometry.
struct AlignmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction step produced something its invariants forbid.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qns

#endif  // QNS_ERRORS_HPP
