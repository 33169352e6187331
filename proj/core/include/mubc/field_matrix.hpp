// Copyright 2026 The mubc Authors
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

// Small dense matrices over GF(2^n), row major.

#ifndef MUBC_FIELD_MATRIX_HPP_
#define MUBC_FIELD_MATRIX_HPP_

#include <optional>
#include <span>
#include <vector>

#include "mubc/field.hpp"

namespace mubc {

using FieldMatrix = std::vector<std::vector<Element>>;

Element determinant(const GaloisField& field, FieldMatrix m);
int matrix_rank(const GaloisField& field, FieldMatrix m);

/// Unique solution x of m x = rhs, empty when m is singular.
std::optional<std::vector<Element>> solve(const GaloisField& field, FieldMatrix m, std::vector<Element> rhs);

/// Coefficients c_0..c_{n-1} of the linearized polynomial sum c_m x^(2^m)
/// mapping basis[i] to values[i]. `basis` must be independent over GF(2).
std::vector<Element> linearized_interpolate(const GaloisField& field, std::span<const Element> basis,
                                            std::span<const Element> values);

/// sum_m c[m] x^(2^m).
Element linearized_eval(const GaloisField& field, std::span<const Element> c, Element x);

}  // namespace mubc

#endif  // MUBC_FIELD_MATRIX_HPP_
