#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcheck {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

enum class ErrorKind {
    DimensionMismatch,
    NotHermitian,
    NoConvergence,
    NotPSD,
    NotPositiveDefinite,
    NotNormal,
    Singular,
    InvalidArgument,
};

struct KernelError : std::runtime_error {
    ErrorKind kind;
    KernelError(ErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// Three-valued verdict used by all thresholded decisions (invertibility,
/// Loewner comparison). The Indeterminate band keeps borderline matrices
/// from being counted as counterexamples.
enum class Verdict { IsFalse, IsTrue, Indeterminate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IsFalse: return "false";
        case Verdict::IsTrue: return "true";
        default: return "indeterminate";
    }
}

struct Tolerances {
    double tol_herm = 1e-10;  // relative Hermitian-symmetry defect
    double tol_psd = 1e-9;    // allowed negative eigenvalue, relative
    double tol_inv = 1e-10;   // relative invertibility threshold on sigma_min/sigma_max
    double tol_spec = 1e-7;   // spectral set matching distance
    double tol_eq = 1e-9;     // matrix equality, relative Frobenius
    double guard = 10.0;      // premise guard-band multiplier, >= 1
};

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() : n_(0) {}
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n < 1) throw KernelError(ErrorKind::InvalidArgument, "matrix dim must be >= 1");
    }

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<Complex>& data() const { return a_; }
    std::vector<Complex>& data() { return a_; }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }

    static ComplexMatrix diag(const std::vector<Complex>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    bool operator==(const ComplexMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    int n_;
    std::vector<Complex> a_;
};

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// the unitary matrix of column eigenvectors.
struct HermEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

}  // namespace opcheck
