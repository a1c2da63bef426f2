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

#ifndef QFIELD_PARALLEL_HPP_
#define QFIELD_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qfield {

/// Worker count for internal loops: QFIELD_NUM_THREADS if set to a
/// positive integer, else std::thread::hardware_concurrency(), never 0.
unsigned num_threads();

/// Calls body(i) for every i in [0, n). Iterations are split into
/// contiguous chunks, one per worker; body must not depend on order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qfield

#endif  // QFIELD_PARALLEL_HPP_
