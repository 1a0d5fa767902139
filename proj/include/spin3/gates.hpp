#pragma once

#include "spin3/types.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace spin3::gates {

// Rz(phi) = diag(e^{-i phi/2}, e^{i phi/2}); Ry(phi) the standard real rotation.
Mat2 rz(double phi);
Mat2 ry(double phi);

// Rz(alpha) * Ry(beta) * Rz(gamma); determinant 1.
Mat2 euler_gate(const EulerAngles& a);

// g acting on the named qubit (1, 2 or 3; qubit 1 most significant), identity
// on the others.  Throws std::invalid_argument for an out-of-range index.
Unitary8 embed(const Mat2& g, int qubit);

// embed(euler(a1),1) * embed(euler(a2),2) * embed(euler(a3),3)
Unitary8 single_qubit_layer(const EulerAngles& a1, const EulerAngles& a2, const EulerAngles& a3);

enum class GateName { H, X, T, Tdg, S, CNOT, SqrtSwap, Swap, ControlledRy, Toffoli };

std::string to_string(GateName name);

// One circuit element: either a parameterized Euler rotation on one qubit or
// a member of the fixed gate library.
struct SingleQubitGate {
    int qubit = 1;
    EulerAngles angles;
};

struct NamedGateOp {
    GateName name = GateName::H;
    std::vector<int> qubits;   // 1-based, distinct
    double angle = 0.0;        // ControlledRy only
};

using GateOp = std::variant<SingleQubitGate, NamedGateOp>;

// Standard matrix of the named gate embedded into the three-qubit space.
// Throws std::invalid_argument on a wrong qubit count, repeated qubits or
// out-of-range indices.
Unitary8 named_gate(GateName name, const std::vector<int>& qubits, double angle = 0.0);

Unitary8 gate_matrix(const GateOp& op);

// Circuit with its operation-step bookkeeping.
//
// Counting convention: the circuit is scheduled as an alternating sequence of
// single-qubit layers and exchange pulses.  Every exchange-generated
// two-qubit primitive costs pulses as follows: sqrt(SWAP) = 1 pulse,
// SWAP = 1 pulse (a single Jt = pi pulse), CNOT and controlled rotations = 2
// pulses (two sqrt(SWAP) plus single-qubit corrections).  exchange_steps is
// the pulse total; single_qubit_steps counts the sandwiching layers, i.e.
// exchange_steps + 1 for a nonempty circuit (contiguous single-qubit gates
// merge into one layer).
struct CountedCircuit {
    std::vector<GateOp> ops;
    int exchange_steps = 0;
    int single_qubit_steps = 0;
};

std::pair<int, int> count_steps(const std::vector<GateOp>& ops);
CountedCircuit make_counted(std::vector<GateOp> ops);

// Product of the ops, ops.front() applied first.
Unitary8 circuit_unitary(const CountedCircuit& c);
StateVec8 circuit_output(const CountedCircuit& c, const StateVec8& input);

// CNOT built from two sqrt(SWAP) pulses and single-qubit rotations; equals
// named_gate CNOT up to a global phase.
Unitary8 cnot_via_exchange(int control, int target);

struct StateCircuit {
    CountedCircuit circuit;
    StateVec8 output;
};

struct GateCircuit {
    CountedCircuit circuit;
    Unitary8 unitary;
};

// H on qubit 1 then CNOT(1,2), CNOT(2,3); output (|000> + |111>)/sqrt(2).
StateCircuit reference_ghz();

// Ry(phi3) + controlled-H + CNOT circuit for (|001> + |010> + |100>)/sqrt(3).
// The controlled-H is carried as Ry(pi/4) CNOT Ry(-pi/4) on the target, which
// keeps the step counts at the two-exchange cost the construction implies.
StateCircuit reference_w();

// Two CNOTs (1->2, 1->3): alpha|000> + beta|111> from (alpha|0> + beta|1>)|00>.
GateCircuit reference_bitflip_encoder();

// Standard 6-CNOT + {H, T, Tdg} decomposition of Toffoli(1,2;3).  In linear
// geometry the non-adjacent CNOT(1,3) is routed as SWAP(1,2) CNOT(2,3)
// SWAP(1,2), which changes the counts but not the unitary.
GateCircuit reference_toffoli(Geometry geometry);

}  // namespace spin3::gates
