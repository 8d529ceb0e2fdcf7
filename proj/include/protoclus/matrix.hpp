#pragma once

#include <Eigen/Dense>
#include <functional>

#include "protoclus/errors.hpp"

namespace protoclus {

// All numeric state is dense, row-major, 64-bit. Row-major keeps the binary
// checkpoint formats a straight memcpy of the coefficient array.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

bool all_finite(const Matrix& m);

/// Scale each row to unit Euclidean norm. Throws ZeroVectorError if a row
/// has norm below 1e-12.
Matrix l2_normalize_rows(const Matrix& m);

/// Scale each column to unit Euclidean norm (same contract as the row
/// version; features live in columns throughout this codebase).
Matrix l2_normalize_cols(const Matrix& m);

/// Column-wise softmax with max-subtraction. Columns of the result sum to 1.
/// Throws NonFiniteError on non-finite input.
Matrix softmax_cols(const Matrix& m);

/// Central finite differences, (f(x+h e) - f(x-h e)) / 2h per entry.
/// The single gradient oracle of the repo: every analytic gradient is
/// checked against it.
Matrix finite_diff_grad(const std::function<double(const Matrix&)>& f, const Matrix& x,
                        double h = 1e-5);

}  // namespace protoclus
