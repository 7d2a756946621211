#include "clockvis/numerics.hpp"

#include "clockvis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace clockvis {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kNormTol = 1e-10;

bool all_finite(const ComplexVector& v) {
    return std::all_of(v.data(), v.data() + v.size(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool all_finite(const ComplexMatrix& m) {
    return std::all_of(m.data(), m.data() + m.size(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

// Rotate the global phase so the first significant component is real-positive.
void fix_phase(Eigen::Ref<ComplexVector> v) {
    const double scale = v.cwiseAbs().maxCoeff();
    if (scale == 0.0) return;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double mag = std::abs(v(k));
        if (mag > 1e-8 * scale) {
            v *= std::conj(v(k)) / mag;
            v(k) = Complex(mag, 0.0);
            return;
        }
    }
}

bool lexicographically_less(const ComplexVector& a, const ComplexVector& b) {
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
        if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
    }
    return false;
}

} // namespace

StateVector::StateVector(ComplexVector amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() == 0) throw ValidationError("StateVector: empty amplitude vector");
    if (!all_finite(amp_)) throw ValidationError("StateVector: non-finite amplitude");
    const double norm = amp_.norm();
    if (norm == 0.0) throw ValidationError("StateVector: zero vector cannot be normalized");
    amp_ /= norm;
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(ComplexVector(Eigen::Map<const ComplexVector>(amplitudes.begin(),
                                                               static_cast<Eigen::Index>(amplitudes.size())))) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw StructuralError("StateVector::basis: index out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v), Unchecked{});
}

StateVector StateVector::from_unitary_image(ComplexVector amplitudes) {
    if (!all_finite(amplitudes)) throw ValidationError("StateVector: non-finite amplitude");
    if (std::abs(amplitudes.norm() - 1.0) > kNormTol) {
        throw ValidationError("StateVector: propagated vector lost normalization");
    }
    return StateVector(std::move(amplitudes), Unchecked{});
}

double hermiticity_defect(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw StructuralError("hermiticity_defect: matrix is not square");
    return (h - h.adjoint()).norm();
}

double unitarity_defect(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw StructuralError("unitarity_defect: matrix is not square");
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

void require_hermitian(const ComplexMatrix& h, const char* what) {
    if (h.rows() == 0 || h.rows() != h.cols()) {
        throw StructuralError(std::string(what) + ": matrix must be square and non-empty (got " +
                              std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ")");
    }
    if (!all_finite(h)) throw StructuralError(std::string(what) + ": matrix has non-finite entries");
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTol * std::max(1.0, h.norm())) {
        throw StructuralError(std::string(what) + ": matrix is not Hermitian (|H - H^dagger| = " +
                              std::to_string(defect) + ")");
    }
}

Spectrum hermitian_eig(const ComplexMatrix& h) {
    require_hermitian(h, "hermitian_eig");

    // Eigen only reads the lower triangle; symmetrize so both halves count.
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw StructuralError("hermitian_eig: eigen-decomposition did not converge");
    }

    const Eigen::Index n = h.rows();
    ComplexMatrix vecs = solver.eigenvectors();
    const RealVector& vals = solver.eigenvalues();
    for (Eigen::Index j = 0; j < n; ++j) fix_phase(vecs.col(j));

    const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    const double tie_tol = 1e-10 * scale;

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    // The solver already returns ascending eigenvalues; only runs of
    // (numerically) equal eigenvalues need a deterministic secondary key.
    std::size_t begin = 0;
    while (begin < order.size()) {
        std::size_t end = begin + 1;
        while (end < order.size() &&
               vals(order[end]) - vals(order[begin]) <= tie_tol) {
            ++end;
        }
        if (end - begin > 1) {
            std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                             order.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](Eigen::Index a, Eigen::Index b) {
                                 return lexicographically_less(vecs.col(a), vecs.col(b));
                             });
        }
        begin = end;
    }

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.eigenvalues(j) = vals(order[static_cast<std::size_t>(j)]);
        out.eigenvectors.col(j) = vecs.col(order[static_cast<std::size_t>(j)]);
    }
    return out;
}

ComplexMatrix evolution_operator(const Spectrum& spectrum, double t) {
    const Eigen::Index n = spectrum.eigenvalues.size();
    ComplexVector phases(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        phases(j) = std::polar(1.0, -spectrum.eigenvalues(j) * t);
    }
    return spectrum.eigenvectors * phases.asDiagonal() * spectrum.eigenvectors.adjoint();
}

ComplexMatrix evolution_operator(const ComplexMatrix& h, double t) {
    return evolution_operator(hermitian_eig(h), t);
}

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        throw StructuralError("inner_product: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
    }
    return a.dot(b); // Eigen's dot conjugates the left operand
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    return inner_product(a.amplitudes(), b.amplitudes());
}

StateVector apply(const ComplexMatrix& u, const StateVector& state) {
    if (u.cols() != static_cast<Eigen::Index>(state.dim()) || u.rows() != u.cols()) {
        throw StructuralError("apply: operator is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                              " but state has dimension " + std::to_string(state.dim()));
    }
    return StateVector::from_unitary_image(u * state.amplitudes());
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    const Eigen::Index nb = static_cast<Eigen::Index>(b.dim());
    ComplexVector out(static_cast<Eigen::Index>(a.dim()) * nb);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
        out.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
    }
    return StateVector::from_unitary_image(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace clockvis
