#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace spin3 {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;
using Vec8 = Eigen::Matrix<Complex, 8, 1>;
using RMat8 = Eigen::Matrix<double, 8, 8>;

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kNormTol = 1e-12;

// Coupling topology of the three spins: a chain 1-2-3 (j31 pinned to zero)
// or a triangle with all three pairwise couplings available.
enum class Geometry { Linear, Triangular };

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

// Dimensionless square-pulse controls of one simultaneous-exchange block.
// All fields are energy-time products in radians: eps = epsilon*t/hbar,
// jNM = J_NM*t/hbar.  The physical split into (energy, duration) is never
// needed; only the products enter the evolution.
struct ControlParams {
    double eps = 0.0;
    double j12 = 0.0;
    double j23 = 0.0;
    double j31 = 0.0;
    Geometry geometry = Geometry::Triangular;
};

bool is_valid(const ControlParams& p);
// Throws std::invalid_argument naming the offending field.
void require_valid(const ControlParams& p);

// Single-qubit rotation angles for the Rz(alpha)*Ry(beta)*Rz(gamma) gate.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Tensor product a (x) b (x) c over qubits 1,2,3 (qubit 1 most significant).
inline Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
    Mat8 out;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    for (int i3 = 0; i3 < 2; ++i3)
                        for (int j3 = 0; j3 < 2; ++j3)
                            out(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * j2 + j3) =
                                a(i1, j1) * b(i2, j2) * c(i3, j3);
    return out;
}

// ||M'M - I||_F
double unitarity_defect(const Mat8& m);
double frobenius_distance(const Mat8& a, const Mat8& b);
// min over global phase of ||U - e^{i phi} V||_F = sqrt(16 - 2|tr(V'U)|)
double phase_distance(const Mat8& u, const Mat8& v);

// 8x8 complex matrix guaranteed unitary at construction.
class Unitary8 {
  public:
    // Validates ||U'U - I||_F <= 1e-12; throws std::invalid_argument otherwise.
    explicit Unitary8(const Mat8& entries);

    // For matrices unitary by construction (products of unitaries, embeddings
    // of validated 2x2 blocks).  Skips the defect check.
    static Unitary8 unchecked(const Mat8& entries) { return Unitary8(entries, Unchecked{}); }

    const Mat8& matrix() const { return m_; }
    Unitary8 dagger() const { return Unitary8(m_.adjoint(), Unchecked{}); }

    friend Unitary8 operator*(const Unitary8& a, const Unitary8& b) {
        return Unitary8(a.m_ * b.m_, Unchecked{});
    }

  private:
    struct Unchecked {};
    Unitary8(const Mat8& entries, Unchecked) : m_(entries) {}
    Mat8 m_;
};

// Normalized 8-component state over the computational basis |q1 q2 q3>,
// spin-up mapped to |0>, qubit 1 the most significant bit (binary order
// 000, 001, ..., 111).
class StateVec8 {
  public:
    // Validates |sum |a_i|^2 - 1| <= 1e-12; throws std::invalid_argument otherwise.
    explicit StateVec8(const Vec8& amplitudes);

    static StateVec8 unchecked(const Vec8& amplitudes) { return StateVec8(amplitudes, Unchecked{}); }
    static StateVec8 basis(int index);

    const Vec8& amplitudes() const { return a_; }

  private:
    struct Unchecked {};
    StateVec8(const Vec8& amplitudes, Unchecked) : a_(amplitudes) {}
    Vec8 a_;
};

// |<a|b>|^2
double state_fidelity(const StateVec8& a, const StateVec8& b);

// Eigendata of the equal-level three-spin Hamiltonian.  Energies are in
// units of hbar/t when fed dimensionless controls.  mixing_angle is the
// principal angle of the 2x2 total-spin blocks, in [0, pi]; k_value is the
// block discriminant K >= 0.
struct EigenSystem3 {
    std::array<double, 8> energies{};
    double k_value = 0.0;
    double mixing_angle = 0.0;
};

}  // namespace spin3
