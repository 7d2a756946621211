// oracle.hpp — brute-force reference visibility.
//
// Builds nothing itself: takes two arm Hamiltonians and an initial joint
// state, propagates each branch by dense spectral exponentiation and returns
// the overlap. No closed-form expression is consulted anywhere on this path.

#pragma once

#include "clockvis/interferometer.hpp"
#include "clockvis/numerics.hpp"

namespace clockvis::oracle {

struct OracleJob {
    ComplexMatrix hamiltonian_arm1;
    ComplexMatrix hamiltonian_arm2;
    ExtendedState initial_state;
    double tau1{0.0};
    double tau2{0.0};

    // Throws StructuralError unless both Hamiltonians are Hermitian and share
    // the dimension of initial_state.
    void validate() const;
};

[[nodiscard]] ExtendedState evolve_state(const ComplexMatrix& h, const ExtendedState& state, double t);

[[nodiscard]] VisibilityResult oracle_visibility(const OracleJob& job);

} // namespace clockvis::oracle
