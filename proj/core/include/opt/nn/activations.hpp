#pragma once

#include <span>
#include <vector>

#include "opt/nn/matrix.hpp"

namespace opt::nn {

double sigmoid(double a);

/// 0.5·a·(1 + erf(a/√2)), with std::erf (correctly rounded to within a few ulp
/// on glibc, far inside 1e-7).
double gelu(double a);

double relu(double a);

/// max(slope·a, a). Throws std::invalid_argument unless 0 < slope < 1.
double leaky_relu(double a, double slope = 0.01);

Matrix gelu(Matrix m);
Matrix relu(Matrix m);
Matrix leaky_relu(Matrix m, double slope = 0.01);

/// Row-wise softmax with row-max subtraction. Throws std::invalid_argument on
/// non-finite input.
Matrix softmax_rows(Matrix m);
std::vector<double> softmax(std::span<const double> v);

}  // namespace opt::nn
