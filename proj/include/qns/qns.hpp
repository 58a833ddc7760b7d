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

#ifndef QNS_QNS_HPP
#define QNS_QNS_HPP

#include "qns/channel.hpp"
#include "qns/errors.hpp"
#include "qns/io.hpp"
#include "qns/matrix.hpp"
#include "qns/schur.hpp"
#include "qns/young.hpp"

#endif  // QNS_QNS_HPP
