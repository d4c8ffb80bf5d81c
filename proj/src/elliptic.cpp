#include "heundc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace heundc {

namespace {

// Gauss reduction of a rank-2 lattice basis; returns generators with
// |b1| <= |b2| and Im(b2/b1) > 0.
void gauss_reduce(cplx& b1, cplx& b2) {
    if (std::abs(b1) > std::abs(b2)) std::swap(b1, b2);
    for (int iter = 0; iter < 64; ++iter) {
        double mu = std::round((b2.real() * b1.real() + b2.imag() * b1.imag()) /
                               std::norm(b1));
        b2 -= mu * b1;
        if (std::abs(b2) >= std::abs(b1)) break;
        std::swap(b1, b2);
    }
    if (std::abs(b1) > std::abs(b2)) std::swap(b1, b2);
    cplx ratio = b2 / b1;
    if (ratio.imag() < 0.0) b2 = -b2;
}

std::uint64_t hash_periods(cplx w1, cplx w3) {
    double raw[4] = {w1.real(), w1.imag(), w3.real(), w3.imag()};
    return fnv1a(raw, sizeof raw);
}

}  // namespace

Lattice Lattice::from_half_periods(cplx omega1, cplx omega3, double pole_radius_scale) {
    if (omega1 == cplx(0.0) || omega3 == cplx(0.0))
        throw DegenerateLatticeError("half-periods must be nonzero");
    cplx tau = omega3 / omega1;
    if (std::abs(tau.imag()) < 1e-12 * (1.0 + std::abs(tau.real())))
        throw DegenerateLatticeError("degenerate lattice: omega3/omega1 is real");
    if (tau.imag() < 0.0) omega3 = -omega3;  // orientation normalization

    Lattice lat;
    lat.omega1_ = omega1;
    lat.omega3_ = omega3;
    lat.key_ = hash_periods(omega1, omega3);

    cplx b1 = 2.0 * omega1, b2 = 2.0 * omega3;
    gauss_reduce(b1, b2);
    lat.b1_ = b1;
    lat.b2_ = b2;
    lat.shortest_ = std::abs(b1);
    lat.pole_radius_ = pole_radius_scale *
                       std::min(std::abs(2.0 * omega1), std::abs(2.0 * omega3));

    // Invariants from the Eisenstein q-expansions evaluated on the reduced
    // basis (the reduced tau has comfortably large imaginary part).
    {
        cplx tr = b2 / b1;
        cplx q2 = std::exp(cplx(0.0, 2.0 * kPi) * tr);
        cplx e4 = 1.0, e6 = 1.0, qn = q2;
        for (int n = 1; n < 512; ++n) {
            if (std::abs(qn) < 1e-26) break;
            double dn = n;
            cplx frac = qn / (1.0 - qn);
            e4 += 240.0 * dn * dn * dn * frac;
            e6 -= 504.0 * dn * dn * dn * dn * dn * frac;
            qn *= q2;
        }
        cplx half = b1 / 2.0;
        cplx h2 = half * half, h4 = h2 * h2, h6 = h4 * h2;
        double pi2 = kPi * kPi;
        lat.g2_ = pi2 * pi2 * e4 / (12.0 * h4);
        lat.g3_ = pi2 * pi2 * pi2 * e6 / (216.0 * h6);
    }

    // Laurent coefficients: p(u) = u^-2 + sum_{k>=2} c_k u^{2k-2},
    // c_2 = g2/20, c_3 = g3/28, and the standard quadratic recurrence.
    {
        const int kmax = 34;
        lat.laurent_.assign(kmax + 1, cplx(0.0));
        lat.laurent_[2] = lat.g2_ / 20.0;
        lat.laurent_[3] = lat.g3_ / 28.0;
        for (int k = 4; k <= kmax; ++k) {
            cplx acc = 0.0;
            for (int m = 2; m <= k - 2; ++m)
                acc += lat.laurent_[static_cast<std::size_t>(m)] *
                       lat.laurent_[static_cast<std::size_t>(k - m)];
            lat.laurent_[static_cast<std::size_t>(k)] =
                3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
        }
    }

    // Branch values e_i = p(omega_i), polished on the cubic
    // 4 t^3 - g2 t - g3 so the algebraic lattice identities hold to
    // machine precision.
    for (int i = 1; i <= 3; ++i) {
        cplx ei = wp(lat, lat.omega(i));
        for (int it = 0; it < 4; ++it) {
            cplx f = 4.0 * ei * ei * ei - lat.g2_ * ei - lat.g3_;
            cplx df = 12.0 * ei * ei - lat.g2_;
            if (std::abs(df) == 0.0) break;
            ei -= f / df;
        }
        lat.e_[static_cast<std::size_t>(i - 1)] = ei;
    }

    // Construction-time certification.
    double scale = 0.0;
    for (auto v : lat.e_) scale = std::max(scale, std::abs(v));
    if (std::abs(lat.e_[0] + lat.e_[1] + lat.e_[2]) > 1e-11 * (1.0 + scale))
        throw AccuracyError("branch values fail e1+e2+e3=0");
    cplx g2_check = -4.0 * (lat.e_[0] * lat.e_[1] + lat.e_[1] * lat.e_[2] +
                            lat.e_[2] * lat.e_[0]);
    cplx g3_check = 4.0 * lat.e_[0] * lat.e_[1] * lat.e_[2];
    if (std::abs(g2_check - lat.g2_) > 1e-11 * (1.0 + std::abs(lat.g2_)) ||
        std::abs(g3_check - lat.g3_) > 1e-11 * (1.0 + std::abs(lat.g3_)))
        throw AccuracyError("branch values inconsistent with invariants");
    for (int i = 1; i <= 3; ++i) {
        if (std::abs(wp_prime(lat, lat.omega(i))) > 1e-9 * (1.0 + scale))
            throw AccuracyError("p' does not vanish at a half-period");
    }
    return lat;
}

cplx Lattice::omega(int i) const {
    switch (i) {
        case 0: return cplx(0.0);
        case 1: return omega1_;
        case 2: return -omega1_ - omega3_;
        case 3: return omega3_;
        default: throw DomainError("half-period index must be 0..3");
    }
}

cplx Lattice::reduce(cplx x) const {
    // Solve x = a b1 + b b2 over the reals, round, then search the
    // neighborhood (enough for a Gauss-reduced basis).
    double det = b1_.real() * b2_.imag() - b1_.imag() * b2_.real();
    double a = (x.real() * b2_.imag() - x.imag() * b2_.real()) / det;
    double b = (b1_.real() * x.imag() - b1_.imag() * x.real()) / det;
    double na = std::round(a), nb = std::round(b);
    cplx best = x - na * b1_ - nb * b2_;
    double best_norm = std::norm(best);
    for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
            cplx cand = x - (na + da) * b1_ - (nb + db) * b2_;
            double n = std::norm(cand);
            if (n < best_norm) {
                best_norm = n;
                best = cand;
            }
        }
    }
    return best;
}

cplx Lattice::nearest_lattice_point(cplx x) const { return x - reduce(x); }

namespace {

// p, p' by the Laurent series at small argument.
WpValue laurent_eval(const Lattice& lat, cplx u) {
    const auto& c = lat.laurent();
    cplx u2 = u * u;
    cplx p = 0.0, dp = 0.0;
    cplx pw = 1.0;  // u^{2k-2} built incrementally from k=2
    pw = u2;
    for (std::size_t k = 2; k < c.size(); ++k) {
        p += c[k] * pw;
        dp += (2.0 * static_cast<double>(k) - 2.0) * c[k] * pw / u;
        pw *= u2;
    }
    p += 1.0 / u2;
    dp += -2.0 / (u2 * u);
    return {p, dp};
}

}  // namespace

WpValue wp_both(const Lattice& lat, cplx x) {
    cplx z = lat.reduce(x);
    double r = std::abs(z);
    if (r < lat.pole_radius())
        throw PoleProximityError("argument within pole-exclusion radius",
                                 lat.nearest_lattice_point(x));

    double target = 0.25 * lat.shortest_period();
    int k = 0;
    while (r / std::pow(2.0, k) > target && k < 8) ++k;

    cplx u = z / std::pow(2.0, k);
    WpValue v = laurent_eval(lat, u);
    for (int j = 0; j < k; ++j) {
        cplx p = v.p, dp = v.pp;
        cplx w = 6.0 * p * p - lat.g2() / 2.0;  // p''
        cplx p2 = w * w / (4.0 * dp * dp) - 2.0 * p;
        cplx dp2 = 3.0 * p * w / dp - w * w * w / (4.0 * dp * dp * dp) - dp;
        v = {p2, dp2};
    }
    return v;
}

cplx wp(const Lattice& lat, cplx x) { return wp_both(lat, x).p; }
cplx wp_prime(const Lattice& lat, cplx x) { return wp_both(lat, x).pp; }

BranchTriple half_branch_values(const Lattice& lat, cplx x, const BranchTriple* hint) {
    WpValue v = wp_both(lat, x);
    std::array<cplx, 3> s;
    for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = std::sqrt(v.p - lat.e(i + 1));

    // Fix the overall product sign using the most stable component.
    cplx prod = 2.0 * s[0] * s[1] * s[2];
    if (std::abs(prod - v.pp) > std::abs(prod + v.pp)) {
        std::size_t imax = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (std::abs(s[i]) > std::abs(s[imax])) imax = i;
        s[imax] = -s[imax];
    }

    if (hint) {
        // Admissible sign changes flip exactly two components (the product
        // 2 s1 s2 s3 = p' pins the overall sign).  Pick the pattern closest
        // to the previous tuple.
        static const std::array<std::array<double, 3>, 4> patterns = {{
            {1.0, 1.0, 1.0}, {-1.0, -1.0, 1.0}, {-1.0, 1.0, -1.0}, {1.0, -1.0, -1.0}}};
        double best = 1e300;
        std::array<cplx, 3> best_s = s;
        for (const auto& pat : patterns) {
            double dist = 0.0;
            for (std::size_t i = 0; i < 3; ++i) dist += std::abs(pat[i] * s[i] - hint->s[i]);
            if (dist < best) {
                best = dist;
                for (std::size_t i = 0; i < 3; ++i) best_s[i] = pat[i] * s[i];
            }
        }
        s = best_s;
    }

    cplx check = 2.0 * s[0] * s[1] * s[2];
    if (std::abs(check - v.pp) > 1e-8 * (1.0 + std::abs(v.pp)))
        throw BranchError("branch triple violates 2 s1 s2 s3 = p'");
    return {s};
}

BranchTriple anchored_branch(const Lattice& lat, cplx x, int steps) {
    cplx a = lat.anchor();
    BranchTriple cur = half_branch_values(lat, a, nullptr);
    if (x == a) return cur;
    for (int j = 1; j <= steps; ++j) {
        cplx pt = a + (x - a) * (static_cast<double>(j) / steps);
        if (lat.lattice_distance(pt) < 2.0 * lat.pole_radius()) {
            // nudge sideways off the pole; the detour direction is fixed
            cplx dir = (x - a) / std::abs(x - a);
            pt += cplx(0.0, 1.0) * dir * (4.0 * lat.pole_radius());
        }
        cur = half_branch_values(lat, pt, &cur);
    }
    return cur;
}

}  // namespace heundc
