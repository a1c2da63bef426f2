// Copyright 2026 The qfield Authors
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

#ifndef QFIELD_QFIELD_HPP_
#define QFIELD_QFIELD_HPP_

#include "qfield/amplitudes.hpp"
#include "qfield/beamsplitter.hpp"
#include "qfield/error.hpp"
#include "qfield/fock_oracle.hpp"
#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/observables.hpp"
#include "qfield/parallel.hpp"
#include "qfield/quadrature.hpp"
#include "qfield/serialization.hpp"
#include "qfield/verify.hpp"

#endif  // QFIELD_QFIELD_HPP_
