// numerics.hpp — small dense complex linear algebra: Hermitian spectra,
// unitary propagators e^{-iHt}, and normalized state vectors.
//
// Units: hbar = 1 throughout, so energies and times are reciprocal
// dimensionless scales.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>

namespace clockvis {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Normalized amplitude vector. Construction normalizes and rejects zero or
// non-finite input; evolution through unitary maps keeps the norm at 1.
class StateVector {
public:
    // Normalizes `amplitudes`. Throws ValidationError on a zero or non-finite vector.
    explicit StateVector(ComplexVector amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    // Computational basis vector |index> in a space of dimension `dim`.
    static StateVector basis(std::size_t dim, std::size_t index);

    // Wraps a vector that the caller guarantees is normalized (unitary image of
    // a StateVector). Throws ValidationError if the norm is off by more than 1e-10.
    static StateVector from_unitary_image(ComplexVector amplitudes);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(amp_.size()); }
    [[nodiscard]] const ComplexVector& amplitudes() const noexcept { return amp_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amp_(static_cast<Eigen::Index>(i)); }

private:
    struct Unchecked {};
    StateVector(ComplexVector amplitudes, Unchecked) : amp_(std::move(amplitudes)) {}

    ComplexVector amp_;
};

// Eigen-decomposition of a Hermitian matrix.
// eigenvalues ascending; eigenvectors are the orthonormal columns, each with
// its first significant component real and positive. Degenerate eigenvalues
// order their vectors lexicographically (real part, then imaginary part,
// component by component).
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
    [[nodiscard]] ComplexVector vector(std::size_t i) const { return eigenvectors.col(static_cast<Eigen::Index>(i)); }
};

// Frobenius norm of h - h^dagger; zero for Hermitian h.
[[nodiscard]] double hermiticity_defect(const ComplexMatrix& h);

// Frobenius norm of u^dagger u - I; zero for unitary u.
[[nodiscard]] double unitarity_defect(const ComplexMatrix& u);

// Throws StructuralError unless h is non-empty, square and Hermitian to
// 1e-12 (scaled by max(1, |h|)).
void require_hermitian(const ComplexMatrix& h, const char* what);

[[nodiscard]] Spectrum hermitian_eig(const ComplexMatrix& h);

// U(t) = exp(-i h t) synthesized from the spectrum of h.
[[nodiscard]] ComplexMatrix evolution_operator(const ComplexMatrix& h, double t);
[[nodiscard]] ComplexMatrix evolution_operator(const Spectrum& spectrum, double t);

// <a|b>, conjugate-linear in the first argument.
[[nodiscard]] Complex inner_product(const StateVector& a, const StateVector& b);
[[nodiscard]] Complex inner_product(const ComplexVector& a, const ComplexVector& b);

// u * state; dimensions must agree.
[[nodiscard]] StateVector apply(const ComplexMatrix& u, const StateVector& state);

// a ⊗ b in the ordering index = i_a * dim(b) + i_b.
[[nodiscard]] StateVector tensor_product(const StateVector& a, const StateVector& b);
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace clockvis
