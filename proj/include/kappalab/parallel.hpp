// Copyright 2026 The kappalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KAPPALAB_PARALLEL_HPP_
#define KAPPALAB_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace kappalab {

// 0 means one worker per hardware thread.
int resolve_jobs(int jobs);

// Calls body(chunk, worker) for every chunk in [0, chunks). Chunks are claimed
// in increasing order by `jobs` workers; worker indices are in [0, jobs).
// Results must not depend on which worker ran a chunk. The first exception
// thrown by any body is rethrown after all workers stop.
void parallel_chunks(int jobs, std::size_t chunks,
                     const std::function<void(std::size_t chunk, int worker)>& body);

}  // namespace kappalab

#endif  // KAPPALAB_PARALLEL_HPP_
