#include "steerlab/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steerlab {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("CMatrix dimension must be 2 or 4, got " +
                                    std::to_string(dim));
    }
}

}  // namespace

CMatrix::CMatrix(int dim) : dim_(dim) { check_dim(dim); }

CMatrix::CMatrix(int dim, std::initializer_list<Complex> entries) : dim_(dim) {
    check_dim(dim);
    if (static_cast<int>(entries.size()) != dim * dim) {
        throw std::invalid_argument("CMatrix entry count does not match dimension");
    }
    std::copy(entries.begin(), entries.end(), a_.begin());
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix dimension mismatch in +");
    CMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix dimension mismatch in -");
    CMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix dimension mismatch in *");
    CMatrix r(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const Complex aik = at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < dim_; ++j) {
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return r;
}

CMatrix CMatrix::operator*(Complex s) const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] * s;
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

Complex CMatrix::trace() const {
    Complex t{};
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix dimension mismatch in compare");
    double m = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

bool CMatrix::approx_equal(const CMatrix& o, double tol) const {
    return dim_ == o.dim_ && max_abs_diff(o) <= tol;
}

bool CMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool CMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) <= tol;
}

std::vector<double> CMatrix::hermitian_eigenvalues() const {
    // Cyclic Jacobi on a Hermitian matrix: repeatedly zero the largest
    // off-diagonal entries with complex plane rotations until the
    // off-diagonal mass is negligible.
    CMatrix h = *this;
    const int n = dim_;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h.at(p, q));
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex hpq = h.at(p, q);
                const double apq = std::abs(hpq);
                if (apq < 1e-18) continue;
                const double app = h.at(p, p).real();
                const double aqq = h.at(q, q).real();
                const Complex phase = hpq / apq;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = t * c * phase;
                // Apply G on the right and G^dagger on the left, where the
                // rotation acts on columns/rows (p, q).
                for (int k = 0; k < n; ++k) {
                    const Complex hkp = h.at(k, p);
                    const Complex hkq = h.at(k, q);
                    h.at(k, p) = c * hkp - std::conj(s) * hkq;
                    h.at(k, q) = s * hkp + c * hkq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex hpk = h.at(p, k);
                    const Complex hqk = h.at(q, k);
                    h.at(p, k) = c * hpk - s * hqk;
                    h.at(q, k) = std::conj(s) * hpk + c * hqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = h.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double CMatrix::min_eigenvalue() const { return hermitian_eigenvalues().front(); }

bool CMatrix::is_psd(double tol) const {
    // Cheap Gershgorin screen first; fall back to eigenvalues.
    double gersh = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double radius = 0.0;
        for (int j = 0; j < dim_; ++j)
            if (j != i) radius += std::abs(at(i, j));
        gersh = std::min(gersh, at(i, i).real() - radius);
    }
    if (gersh >= -tol) return true;
    return min_eigenvalue() >= -tol;
}

CMatrix pauli(int index) {
    switch (index) {
        case 1: return CMatrix(2, {0, 1, 1, 0});
        case 2: return CMatrix(2, {0, Complex(0, -1), Complex(0, 1), 0});
        case 3: return CMatrix(2, {1, 0, 0, -1});
        default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
    }
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("tensor expects two 2x2 operands");
    }
    CMatrix r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
    return r;
}

CMatrix rot_y(double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("rot_y angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return CMatrix(2, {c, -s, s, c});
}

Observable::Observable(double x, double y, double z) : n1(x), n2(y), n3(z) {
    const double norm2 = n1 * n1 + n2 * n2 + n3 * n3;
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("Observable Bloch vector must be unit length");
    }
}

Observable Observable::xz(double t) { return Observable(std::cos(t), 0.0, std::sin(t)); }

CMatrix observable_matrix(const Observable& o) {
    return pauli(1) * o.n1 + pauli(2) * o.n2 + pauli(3) * o.n3;
}

}  // namespace steerlab
