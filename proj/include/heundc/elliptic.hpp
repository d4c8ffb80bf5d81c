#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "heundc/common.hpp"

namespace heundc {

/// Period lattice of a Weierstrass p-function together with the derived
/// constants: invariants g2, g3 and branch values e_i = p(omega_i).
///
/// Conventions: omega_0 = 0, omega_2 = -omega_1 - omega_3, and the pair
/// (omega1, omega3) is normalized so Im(omega3/omega1) > 0.  All evaluation
/// is done through a Gauss-reduced basis of the period lattice
/// 2*omega1*Z + 2*omega3*Z, so strongly sheared inputs are fine.
class Lattice {
public:
    static Lattice from_half_periods(cplx omega1, cplx omega3,
                                     double pole_radius_scale = 1e-6);

    cplx omega1() const { return omega1_; }
    cplx omega3() const { return omega3_; }
    cplx omega2() const { return -omega1_ - omega3_; }
    /// omega_i for i in 0..3.
    cplx omega(int i) const;
    cplx tau() const { return omega3_ / omega1_; }
    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }
    cplx e(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
    const std::array<cplx, 3>& branch_values() const { return e_; }

    /// Singularity-parameter of the associated 4-point rational form,
    /// t = (e3 - e1)/(e2 - e1).
    cplx t_value() const { return (e_[2] - e_[0]) / (e_[1] - e_[0]); }

    /// Shared branch anchor x* = omega1/2 + omega3/3.
    cplx anchor() const { return omega1_ / 2.0 + omega3_ / 3.0; }

    double pole_radius() const { return pole_radius_; }
    /// Length of the shortest nonzero period.
    double shortest_period() const { return shortest_; }

    /// Nearest period-lattice point to x.
    cplx nearest_lattice_point(cplx x) const;
    /// x reduced to the minimal-norm representative modulo the period lattice.
    cplx reduce(cplx x) const;
    /// Distance from x to the period lattice.
    double lattice_distance(cplx x) const { return std::abs(reduce(x)); }

    /// Stable identity of the lattice (hash of the normalized half-periods);
    /// used to detect accidental mixing of expressions across lattices.
    std::uint64_t key() const { return key_; }

    // Laurent coefficients c_k of p(u) = u^-2 + sum_{k>=2} c_k u^{2k-2}.
    const std::vector<cplx>& laurent() const { return laurent_; }

private:
    Lattice() = default;

    cplx omega1_{}, omega3_{};
    cplx g2_{}, g3_{};
    std::array<cplx, 3> e_{};
    cplx b1_{}, b2_{};  // Gauss-reduced period generators
    double shortest_ = 0.0;
    double pole_radius_ = 0.0;
    std::uint64_t key_ = 0;
    std::vector<cplx> laurent_;
};

struct WpValue {
    cplx p;   // p(x)
    cplx pp;  // p'(x)
};

/// Evaluate p and p' at x.  Throws PoleProximityError if x is within the
/// lattice's pole-exclusion radius of a period point.
WpValue wp_both(const Lattice& lat, cplx x);
cplx wp(const Lattice& lat, cplx x);
cplx wp_prime(const Lattice& lat, cplx x);

/// Branch triple for the square roots s_i = sqrt(p(x) - e_i).
/// Always satisfies s_i^2 = p - e_i and 2 s1 s2 s3 = p'.
struct BranchTriple {
    std::array<cplx, 3> s;
    cplx s1() const { return s[0]; }
    cplx s2() const { return s[1]; }
    cplx s3() const { return s[2]; }
};

/// Compute (s1, s2, s3) at x.  Without a hint the tuple uses principal
/// square roots for s1, s2 and fixes s3 by the product identity.  With a
/// hint (the tuple at a nearby previous point) the sign pattern closest to
/// the hint is selected, which realizes continuation along a path.
BranchTriple half_branch_values(const Lattice& lat, cplx x,
                                const BranchTriple* hint = nullptr);

/// Branch triple at x continued from the shared anchor along the straight
/// segment (with small steps); the anchored convention every module shares.
BranchTriple anchored_branch(const Lattice& lat, cplx x, int steps = 48);

}  // namespace heundc
