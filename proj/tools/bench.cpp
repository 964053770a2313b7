// Copyright 2026 The qh2 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the serial reference sweeps against their OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qh2/sweep.hpp"

using namespace qh2::sweep;

template <class Fn>
double seconds(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Result, class Sweep>
void compare(const char* name, std::size_t n, Sweep sweep) {
    Result serial{}, parallel{};
    const double ts = seconds([&] { serial = sweep(n, 42, Execution::Serial); });
    const double tp = seconds([&] { parallel = sweep(n, 42, Execution::Parallel); });
    std::printf("%-22s n=%-8zu serial %8.3f s   openmp %8.3f s   speedup %5.2fx\n", name, n, ts, tp, ts / tp);
}

int main(int argc, char** argv) {
    const double scale = argc > 1 ? std::atof(argv[1]) : 1.0;
    auto n = [scale](std::size_t base) { return static_cast<std::size_t>(static_cast<double>(base) * scale); };
    std::printf("OpenMP threads: %d\n", max_threads());
    compare<ZetaResult>("zeta identity", n(1000000), zeta_identity);
    compare<MetricResult>("metric validity", n(200000), metric_validity);
    compare<ObservableResult>("observable constraints", n(200000), observable_constraints);
    compare<UniquenessResult>("pair uniqueness", n(10000), uniqueness);
    return 0;
}
