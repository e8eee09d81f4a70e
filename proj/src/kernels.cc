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

#include "ridm/kernels.h"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ridm {

std::vector<double> MapIndicesSerial(const IndexFunction& f, int n) {
  std::vector<double> out(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

std::vector<double> MapIndicesParallel(const IndexFunction& f, int n) {
  std::vector<double> out(n > 0 ? n : 0);
  std::vector<std::exception_ptr> errors(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = f(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return out;
}

std::vector<double> MapIndices(const IndexFunction& f, int n,
                               Execution execution) {
  return execution == Execution::kParallel ? MapIndicesParallel(f, n)
                                           : MapIndicesSerial(f, n);
}

std::vector<double> EvaluateBatch(const PointFunction& f,
                                  std::span<const Eigen::VectorXd> points,
                                  Execution execution) {
  return MapIndices([&](int i) { return f(points[i]); },
                    static_cast<int>(points.size()), execution);
}

int AvailableThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ridm
