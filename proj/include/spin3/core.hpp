#pragma once

#include "spin3/types.hpp"

namespace spin3 {

// Equal-level three-spin Hamiltonian in the total-spin basis |1>..|8>:
// diagonal a1..a4 on the S_tot = 3/2 ladder plus two 2x2 blocks
// [b c; c d] and [b' c; c d'] on the doubly degenerate S_tot = 1/2 states.
RMat8 hamiltonian_total_spin(const ControlParams& p);

// Same Hamiltonian assembled in the computational basis from spin-operator
// tensor products: eps * sum_i S_i^z + sum_pairs J_ij S_i . S_j.
// Hermitian; independent of the total-spin-basis route.
Mat8 hamiltonian_computational(const ControlParams& p);

// Orthogonal basis change whose columns are the total-spin states |1>..|8>
// expressed in the computational basis.  B^T * H_computational * B is block
// diagonal in the pattern of hamiltonian_total_spin.
RMat8 total_spin_basis_matrix();

// Closed-form eigenvalues E1..E8, discriminant K and principal mixing angle.
EigenSystem3 eigensystem(const ControlParams& p);

// The three-qubit simultaneous-exchange gate, closed form.  Only the 16
// entries of the fixed sparsity pattern are written; everything else is an
// exact zero.
Unitary8 u3_analytic(const ControlParams& p);

// Independent numerical construction: diagonalize hamiltonian_computational
// with a Hermitian eigensolver and exponentiate the spectrum.  Shares no
// closed-form code with u3_analytic.
Unitary8 u3_oracle(const ControlParams& p);

namespace detail {
// Unwrapped fast path for the circuit-assembly inner loop.
Mat8 u3_matrix(const ControlParams& p);
}  // namespace detail

}  // namespace spin3
