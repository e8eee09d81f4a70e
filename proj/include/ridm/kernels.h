// Copyright 2026 The RIDM Authors
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

// Data-parallel evaluation kernels. Each kernel has an OpenMP variant and a
// serial reference; both write result i from input i only, so their outputs
// are bitwise identical for pure functions regardless of thread count.

#ifndef RIDM_KERNELS_H_
#define RIDM_KERNELS_H_

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ridm {

enum class Execution { kSerial, kParallel };

using IndexFunction = std::function<double(int)>;
using PointFunction = std::function<double(const Eigen::VectorXd&)>;

// out[i] = f(i) for i in [0, n)
std::vector<double> MapIndicesSerial(const IndexFunction& f, int n);
// Exceptions thrown by f are rethrown on the calling thread after the
// parallel region; the lowest failing index wins.
std::vector<double> MapIndicesParallel(const IndexFunction& f, int n);
std::vector<double> MapIndices(const IndexFunction& f, int n,
                               Execution execution);

// out[i] = f(points[i])
std::vector<double> EvaluateBatch(const PointFunction& f,
                                  std::span<const Eigen::VectorXd> points,
                                  Execution execution);

// threads an OpenMP region would use; 1 when built without OpenMP
int AvailableThreads();

}  // namespace ridm

#endif  // RIDM_KERNELS_H_
