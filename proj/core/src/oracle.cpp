#include "clockvis/oracle.hpp"

#include "clockvis/errors.hpp"

#include <string>

namespace clockvis::oracle {

void OracleJob::validate() const {
    require_hermitian(hamiltonian_arm1, "OracleJob arm 1");
    require_hermitian(hamiltonian_arm2, "OracleJob arm 2");
    const auto dim = static_cast<Eigen::Index>(initial_state.dim());
    if (hamiltonian_arm1.rows() != dim || hamiltonian_arm2.rows() != dim) {
        throw StructuralError("OracleJob: Hamiltonian dimensions (" + std::to_string(hamiltonian_arm1.rows()) + ", " +
                              std::to_string(hamiltonian_arm2.rows()) + ") do not match the state dimension " +
                              std::to_string(dim));
    }
}

ExtendedState evolve_state(const ComplexMatrix& h, const ExtendedState& state, double t) {
    if (h.rows() != static_cast<Eigen::Index>(state.dim())) {
        throw StructuralError("evolve_state: Hamiltonian dimension " + std::to_string(h.rows()) +
                              " does not match state dimension " + std::to_string(state.dim()));
    }
    return clockvis::apply(evolution_operator(h, t), state);
}

VisibilityResult oracle_visibility(const OracleJob& job) {
    job.validate();
    const ExtendedState branch1 = evolve_state(job.hamiltonian_arm1, job.initial_state, job.tau1);
    const ExtendedState branch2 = evolve_state(job.hamiltonian_arm2, job.initial_state, job.tau2);
    return overlap_visibility(branch1, branch2);
}

} // namespace clockvis::oracle
