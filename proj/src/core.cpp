#include "spin3/core.hpp"

#include <algorithm>
#include <cmath>

namespace spin3 {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Energies of the S=3/2 ladder and the 2x2 blocks, together with the signed
// eigenvector direction (cos, sin) of the blocks.  The direction is the unit
// vector (b - d, 2c) / sqrt(K); both components carry their sign, which is
// what makes the closed form agree with the numerical diagonalization for
// every sign combination of the couplings (principal-range arccos alone
// would flip the off-diagonal elements whenever j23 < j31).
struct Spectrum {
    std::array<double, 8> e;
    double k;
    double cos_theta;
    double sin_theta;
};

Spectrum spectrum_of(const ControlParams& p) {
    Spectrum s;
    const double sum_j = p.j12 + p.j23 + p.j31;
    // K = sum J^2 - sum J J, written as a sum of squares so roundoff cannot
    // drive it negative.
    const double d12 = p.j12 - p.j23;
    const double d23 = p.j23 - p.j31;
    const double d31 = p.j31 - p.j12;
    s.k = 0.5 * (d12 * d12 + d23 * d23 + d31 * d31);

    s.e[0] = 1.5 * p.eps + 0.25 * sum_j;
    s.e[1] = 0.5 * p.eps + 0.25 * sum_j;
    s.e[2] = -0.5 * p.eps + 0.25 * sum_j;
    s.e[3] = -1.5 * p.eps + 0.25 * sum_j;
    const double root_k = std::sqrt(s.k);
    s.e[4] = 0.5 * p.eps - 0.25 * sum_j + 0.5 * root_k;
    s.e[5] = 0.5 * p.eps - 0.25 * sum_j - 0.5 * root_k;
    s.e[6] = -0.5 * p.eps - 0.25 * sum_j + 0.5 * root_k;
    s.e[7] = -0.5 * p.eps - 0.25 * sum_j - 0.5 * root_k;

    if (s.k == 0.0) {
        // Degenerate blocks: gamma5 = gamma6 and gamma7 = gamma8, so the
        // direction never enters; pick the limit convention.
        s.cos_theta = 1.0;
        s.sin_theta = 0.0;
    } else {
        s.cos_theta = std::clamp((2.0 * p.j12 - p.j23 - p.j31) / (2.0 * root_k), -1.0, 1.0);
        s.sin_theta = std::clamp(kSqrt3 * d23 / (2.0 * root_k), -1.0, 1.0);
    }
    return s;
}

}  // namespace

RMat8 hamiltonian_total_spin(const ControlParams& p) {
    require_valid(p);
    const double sum_j = p.j12 + p.j23 + p.j31;
    const double a1 = 1.5 * p.eps + 0.25 * sum_j;
    const double a2 = 0.5 * p.eps + 0.25 * sum_j;
    const double a3 = -0.5 * p.eps + 0.25 * sum_j;
    const double a4 = -1.5 * p.eps + 0.25 * sum_j;
    const double b = 0.5 * p.eps + 0.25 * p.j12 - 0.5 * p.j23 - 0.5 * p.j31;
    const double d = 0.5 * p.eps - 0.75 * p.j12;
    const double bp = -0.5 * p.eps + 0.25 * p.j12 - 0.5 * p.j23 - 0.5 * p.j31;
    const double dp = -0.5 * p.eps - 0.75 * p.j12;
    const double c = 0.25 * kSqrt3 * (p.j23 - p.j31);

    RMat8 h = RMat8::Zero();
    h(0, 0) = a1;
    h(1, 1) = a2;
    h(2, 2) = a3;
    h(3, 3) = a4;
    h(4, 4) = b;
    h(4, 5) = c;
    h(5, 4) = c;
    h(5, 5) = d;
    h(6, 6) = bp;
    h(6, 7) = c;
    h(7, 6) = c;
    h(7, 7) = dp;
    return h;
}

Mat8 hamiltonian_computational(const ControlParams& p) {
    require_valid(p);
    const Complex im(0.0, 1.0);
    Mat2 id = Mat2::Identity();
    Mat2 sx, sy, sz;
    sx << 0.0, 0.5, 0.5, 0.0;
    sy << 0.0, -0.5 * im, 0.5 * im, 0.0;
    sz << 0.5, 0.0, 0.0, -0.5;

    Mat8 h = Mat8::Zero();
    h += p.eps * (kron3(sz, id, id) + kron3(id, sz, id) + kron3(id, id, sz));
    const Mat2* s[3] = {&sx, &sy, &sz};
    for (int a = 0; a < 3; ++a) {
        h += p.j12 * kron3(*s[a], *s[a], id);
        h += p.j23 * kron3(id, *s[a], *s[a]);
        h += p.j31 * kron3(*s[a], id, *s[a]);
    }
    return h;
}

RMat8 total_spin_basis_matrix() {
    const double r3 = 1.0 / kSqrt3;
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    const double r23 = std::sqrt(2.0 / 3.0);

    RMat8 b = RMat8::Zero();
    // |1> = |000>, |4> = |111>
    b(0, 0) = 1.0;
    b(7, 3) = 1.0;
    // |2>, |3>: symmetric S=3/2 combinations of the weight-1 / weight-2 states
    b(1, 1) = r3;
    b(2, 1) = r3;
    b(4, 1) = r3;
    b(3, 2) = r3;
    b(5, 2) = r3;
    b(6, 2) = r3;
    // |5>, |6>: S=1/2, Sz=+1/2 from the (1,2) triplet / singlet
    b(1, 4) = r23;
    b(2, 4) = -r6;
    b(4, 4) = -r6;
    b(2, 5) = r2;
    b(4, 5) = -r2;
    // |7>, |8>: Sz=-1/2 partners obtained by lowering |5>, |6>; the published
    // component list for |7> mixes Sz sectors, so these come from the
    // Clebsch-Gordan construction instead.
    b(3, 6) = r6;
    b(5, 6) = r6;
    b(6, 6) = -r23;
    b(3, 7) = r2;
    b(5, 7) = -r2;
    return b;
}

EigenSystem3 eigensystem(const ControlParams& p) {
    require_valid(p);
    const Spectrum s = spectrum_of(p);
    EigenSystem3 out;
    out.energies = s.e;
    out.k_value = s.k;
    out.mixing_angle = s.k < 1e-12 ? 0.0 : std::acos(s.cos_theta);
    return out;
}

namespace detail {

Mat8 u3_matrix(const ControlParams& p) {
    const Spectrum s = spectrum_of(p);
    std::array<Complex, 8> g;
    for (int k = 0; k < 8; ++k) g[k] = std::polar(1.0, -s.e[k]);

    const double ct = s.cos_theta;
    const double st = s.sin_theta;

    const Complex a = g[0];
    const Complex sum5 = g[1] + g[4] + g[5];
    const Complex off5 = 2.0 * g[1] - g[4] - g[5];
    const Complex dif5 = g[4] - g[5];
    const Complex bb = (g[1] + g[4] + g[5] + dif5 * ct) / 3.0;
    const Complex cc = (off5 - dif5 * (ct - kSqrt3 * st)) / 6.0;
    const Complex dd = (2.0 * sum5 - dif5 * (ct + kSqrt3 * st)) / 6.0;
    const Complex ee = (off5 - dif5 * (ct + kSqrt3 * st)) / 6.0;
    const Complex ff = (off5 + 2.0 * dif5 * ct) / 6.0;
    const Complex gg = (2.0 * sum5 - dif5 * (ct - kSqrt3 * st)) / 6.0;

    const Complex ap = g[3];
    const Complex sum7 = g[2] + g[6] + g[7];
    const Complex off7 = 2.0 * g[2] - g[6] - g[7];
    const Complex dif7 = g[6] - g[7];
    const Complex bbp = (g[2] + g[6] + g[7] + dif7 * ct) / 3.0;
    const Complex ccp = (off7 - dif7 * (ct - kSqrt3 * st)) / 6.0;
    const Complex ddp = (2.0 * sum7 - dif7 * (ct + kSqrt3 * st)) / 6.0;
    const Complex eep = (off7 - dif7 * (ct + kSqrt3 * st)) / 6.0;
    const Complex ffp = (off7 + 2.0 * dif7 * ct) / 6.0;
    const Complex ggp = (2.0 * sum7 - dif7 * (ct - kSqrt3 * st)) / 6.0;

    // Fixed sparsity: |000> and |111> pick up phases, the two weight-1 /
    // weight-2 sectors mix among themselves, nothing else is touched.
    Mat8 u = Mat8::Zero();
    u(0, 0) = a;
    u(7, 7) = ap;

    u(1, 1) = bb;
    u(1, 2) = cc;
    u(2, 1) = cc;
    u(1, 4) = ee;
    u(4, 1) = ee;
    u(2, 2) = dd;
    u(2, 4) = ff;
    u(4, 2) = ff;
    u(4, 4) = gg;

    u(3, 3) = ggp;
    u(3, 5) = ffp;
    u(5, 3) = ffp;
    u(3, 6) = eep;
    u(6, 3) = eep;
    u(5, 5) = ddp;
    u(5, 6) = ccp;
    u(6, 5) = ccp;
    u(6, 6) = bbp;
    return u;
}

}  // namespace detail

Unitary8 u3_analytic(const ControlParams& p) {
    require_valid(p);
    return Unitary8(detail::u3_matrix(p));
}

Unitary8 u3_oracle(const ControlParams& p) {
    const Mat8 h = hamiltonian_computational(p);
    Eigen::SelfAdjointEigenSolver<Mat8> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("u3_oracle: Hermitian eigensolver failed");
    }
    Vec8 phases;
    for (int k = 0; k < 8; ++k) phases(k) = std::polar(1.0, -solver.eigenvalues()(k));
    const Mat8 u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    return Unitary8(u);
}

}  // namespace spin3
