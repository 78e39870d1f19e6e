#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace steerlab {

using Complex = std::complex<double>;

// Max-entry tolerance for matrix equality. Chains of <= 10 products of
// 4x4 doubles accumulate round-off around 1e-14, so 1e-10 is comfortable.
inline constexpr double kMatrixTol = 1e-10;
// Slack allowed below zero for the smallest eigenvalue in PSD checks.
inline constexpr double kPsdTol = 1e-10;
// Tolerance for unit traces, unit Bloch vectors and the like.
inline constexpr double kUnitTol = 1e-12;

// Dense row-major complex matrix of dimension 2 or 4. Value type,
// immutable-by-convention once built (all operations return copies).
class CMatrix {
public:
    explicit CMatrix(int dim);
    CMatrix(int dim, std::initializer_list<Complex> entries);

    static CMatrix zero(int dim) { return CMatrix(dim); }
    static CMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    const Complex& at(int r, int c) const { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    Complex operator()(int r, int c) const { return at(r, c); }

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(Complex s) const;
    CMatrix operator*(double s) const { return (*this) * Complex(s, 0.0); }

    CMatrix adjoint() const;
    Complex trace() const;

    double max_abs_diff(const CMatrix& o) const;
    bool approx_equal(const CMatrix& o, double tol = kMatrixTol) const;

    bool is_hermitian(double tol = kMatrixTol) const;
    bool is_unitary(double tol = kMatrixTol) const;

    // Real eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi
    // with complex rotations; plenty for dim <= 4.
    std::vector<double> hermitian_eigenvalues() const;
    double min_eigenvalue() const;
    bool is_psd(double tol = kPsdTol) const;

private:
    int dim_;
    std::array<Complex, 16> a_{};  // first dim*dim entries used
};

inline CMatrix operator*(Complex s, const CMatrix& m) { return m * s; }
inline CMatrix operator*(double s, const CMatrix& m) { return m * s; }

// Pauli matrix by index (1, 2 or 3).
CMatrix pauli(int index);

// Kronecker product of two 2x2 matrices, first factor on the left slot.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

// exp(-i * angle * sigma_2) = [[cos, -sin], [sin, cos]].
CMatrix rot_y(double angle);

// Unit Bloch vector for a dichotomic +-1 observable n . sigma.
struct Observable {
    double n1 = 1.0;
    double n2 = 0.0;
    double n3 = 0.0;

    Observable() = default;
    Observable(double x, double y, double z);

    // Direction in the x-z plane: cos(t) sigma_1 + sin(t) sigma_3.
    static Observable xz(double t);
    Observable negated() const { return Observable(-n1, -n2, -n3); }
};

CMatrix observable_matrix(const Observable& o);

}  // namespace steerlab
