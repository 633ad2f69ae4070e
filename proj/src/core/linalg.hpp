#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace jcm::linalg {

/// Square, row-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> data() const { return data_; }

    DenseMatrix transposed() const;
    double frobenius_norm() const;
    bool is_symmetric() const;  // exact entry-wise equality

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// Eigen-decomposition of a real symmetric matrix. Column k of `vectors`
/// is the eigenvector belonging to `values[k]`; values are sorted ascending.
struct SymmetricEigen {
    std::vector<double> values;
    DenseMatrix vectors;
};

/// Cyclic Jacobi rotations with a fixed (row-major upper triangle) sweep
/// order. Iterates until the off-diagonal Frobenius norm falls below
/// 1e-13 * ||A||_F. Throws NumericalError if the matrix is not symmetric or
/// the sweep limit is reached.
SymmetricEigen jacobi_eigen(const DenseMatrix& a);

}  // namespace jcm::linalg
