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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qh2/matrix.hpp"
#include "qh2/quasi.hpp"

namespace qh2::oracle {

/// Hermitian eta solving O^dagger eta = eta O for every constraint operator.
/// Found by brute-force row reduction over the four real coordinates
/// (eta00, eta11, Re eta01, Im eta01); none of the closed forms are used.
struct IntertwinerSolution {
    std::vector<Mat2> kernel_basis;  // Hermitian, unit Frobenius norm
    std::size_t rank = 0;            // of the stacked real system
    std::optional<Mat2> pd_witness;
};

/// Hermitian matrix with the given coordinates, in the order above.
Mat2 hermitian_from_coords(std::span<const double, 4> x);

/// Requires 1 or 2 operators; throws InvalidArgument otherwise.
IntertwinerSolution intertwiner_space(std::span<const Mat2> ops);

/// A positive-definite kernel element with positive trace, if one exists.
/// Two-dimensional kernels are searched analytically: det is a real
/// quadratic form in the mixing coefficients and its top eigenvector gives
/// the most interior point of the cone.
std::optional<Mat2> pd_representative(const IntertwinerSolution& sol);

struct CrossValidationReport {
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 1e-8;
    std::size_t kernel_dim = 0;
    std::size_t expected_dim = 0;
    std::optional<double> u_closed_form;
    std::optional<double> u_oracle;
    std::vector<std::string> notes;
};

/// Compares the closed-form metric family (H alone) or the recovered pair
/// metric (H with partner) against the oracle kernel and its PD cone.
CrossValidationReport cross_validate(const QuasiHermitianOp& h, const std::optional<QuasiHermitianOp>& hp);

}  // namespace qh2::oracle
