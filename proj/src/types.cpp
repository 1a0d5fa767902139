#include "spin3/types.hpp"

#include <sstream>

namespace spin3 {

std::string to_string(Geometry g) {
    return g == Geometry::Linear ? "linear" : "triangular";
}

Geometry geometry_from_string(const std::string& s) {
    if (s == "linear") return Geometry::Linear;
    if (s == "triangular") return Geometry::Triangular;
    throw std::invalid_argument("unknown geometry '" + s + "' (expected linear|triangular)");
}

bool is_valid(const ControlParams& p) {
    if (!std::isfinite(p.eps) || !std::isfinite(p.j12) || !std::isfinite(p.j23) ||
        !std::isfinite(p.j31)) {
        return false;
    }
    if (p.geometry == Geometry::Linear && p.j31 != 0.0) return false;
    return true;
}

void require_valid(const ControlParams& p) {
    if (!std::isfinite(p.eps)) throw std::invalid_argument("ControlParams: eps is not finite");
    if (!std::isfinite(p.j12)) throw std::invalid_argument("ControlParams: j12 is not finite");
    if (!std::isfinite(p.j23)) throw std::invalid_argument("ControlParams: j23 is not finite");
    if (!std::isfinite(p.j31)) throw std::invalid_argument("ControlParams: j31 is not finite");
    if (p.geometry == Geometry::Linear && p.j31 != 0.0) {
        std::ostringstream msg;
        msg << "ControlParams: linear geometry requires j31 = 0, got " << p.j31;
        throw std::invalid_argument(msg.str());
    }
}

double unitarity_defect(const Mat8& m) {
    return (m.adjoint() * m - Mat8::Identity()).norm();
}

double frobenius_distance(const Mat8& a, const Mat8& b) {
    return (a - b).norm();
}

double phase_distance(const Mat8& u, const Mat8& v) {
    const double overlap = std::abs((v.adjoint() * u).trace());
    return std::sqrt(std::max(0.0, 16.0 - 2.0 * overlap));
}

Unitary8::Unitary8(const Mat8& entries) : m_(entries) {
    const double defect = unitarity_defect(m_);
    if (!(defect <= kUnitaryTol)) {
        std::ostringstream msg;
        msg << "Unitary8: unitarity defect " << defect << " exceeds " << kUnitaryTol;
        throw std::invalid_argument(msg.str());
    }
}

StateVec8::StateVec8(const Vec8& amplitudes) : a_(amplitudes) {
    const double norm2 = a_.squaredNorm();
    if (!(std::abs(norm2 - 1.0) <= kNormTol)) {
        std::ostringstream msg;
        msg << "StateVec8: squared norm " << norm2 << " deviates from 1 beyond " << kNormTol;
        throw std::invalid_argument(msg.str());
    }
}

StateVec8 StateVec8::basis(int index) {
    if (index < 0 || index > 7) {
        throw std::invalid_argument("StateVec8::basis: index " + std::to_string(index) +
                                    " out of range [0,7]");
    }
    Vec8 a = Vec8::Zero();
    a(index) = 1.0;
    return StateVec8(a, Unchecked{});
}

double state_fidelity(const StateVec8& a, const StateVec8& b) {
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace spin3
