#include "cyclohodge/hodge_data.hpp"

#include <cmath>
#include <string>

namespace cyclohodge {

namespace {

void check_pair_params(i64 n, const UnitGroup& g) {
    if (n < 4) {
        throw InvalidParams("n = " + std::to_string(n) + " is below 4");
    }
    if (n % g.p() == 0) {
        throw InvalidParams("p = " + std::to_string(g.p()) + " divides n = " + std::to_string(n));
    }
}

i64 isqrt_exact(i64 v) {
    i64 root = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(v))));
    while (root > 0 && root * root > v) --root;
    while ((root + 1) * (root + 1) <= v) ++root;
    return root * root == v ? root : -1;
}

} // namespace

i64 multiplicity(i64 n, const UnitGroup& g, i64 a) {
    check_pair_params(n, g);
    g.check_unit(a);
    return checked_mul(n, a) / g.q();
}

HodgeProfile::HodgeProfile(i64 n, UnitGroup group) : n_(n), group_(std::move(group)) {
    check_pair_params(n_, group_);
    const i64 q = group_.q();
    mult_.assign(static_cast<std::size_t>(q), -1);
    hquad_.assign(static_cast<std::size_t>(q), -1);
    for (i64 a = 1; a < q; ++a) {
        if (!group_.is_unit(a)) {
            continue;
        }
        i64 m = checked_mul(n_, a) / q;
        mult_[static_cast<std::size_t>(a)] = m;
        i64 dev = n_ - 1 - 2 * m;
        hquad_[static_cast<std::size_t>(a)] = checked_mul(dev, dev);
    }

    // Construction-time self-checks: the conjugate pairing, evenness, the
    // square/parity shape, and monotonicity along the half range.
    for (i64 a = 1; a < q; ++a) {
        if (!group_.is_unit(a)) {
            continue;
        }
        i64 b = q - a;
        if (mult(a) + mult(b) != n_ - 1) {
            throw InvariantViolation("mult pairing failed at (n=" + std::to_string(n_) +
                                     ", q=" + std::to_string(q) + ", a=" + std::to_string(a) + ")");
        }
        if (hquad(a) != hquad(b)) {
            throw InvariantViolation("hquad evenness failed at a=" + std::to_string(a));
        }
        i64 root = isqrt_exact(hquad(a));
        if (root < 0 || (root - (n_ - 1)) % 2 != 0) {
            throw InvariantViolation("hquad shape failed at a=" + std::to_string(a));
        }
    }
    const HalfRange half = group_.half_range();
    for (std::size_t i = 1; i < half.members.size(); ++i) {
        if (hquad(half.members[i - 1]) < hquad(half.members[i])) {
            throw InvariantViolation("hquad not non-increasing at a=" +
                                     std::to_string(half.members[i]));
        }
    }
}

i64 HodgeProfile::mult(i64 a) const {
    group_.check_unit(a);
    return mult_[static_cast<std::size_t>(a)];
}

i64 HodgeProfile::hquad(i64 a) const {
    group_.check_unit(a);
    return hquad_[static_cast<std::size_t>(a)];
}

std::vector<i64> HodgeProfile::hquad_on_half_range() const {
    std::vector<i64> out;
    for (i64 m : group_.half_range().members) {
        out.push_back(hquad(m));
    }
    return out;
}

HodgeProfile build_profile(i64 n, const UnitGroup& g) {
    return HodgeProfile(n, g);
}

i64 new_part_dim(i64 n, i64 q) {
    UnitGroup g(q);
    check_pair_params(n, g);
    i64 prod = checked_mul(n - 1, g.phi());
    if (prod % 2 != 0) {
        throw InvariantViolation("(n-1)*phi(q) odd for n=" + std::to_string(n) +
                                 ", q=" + std::to_string(q));
    }
    return prod / 2;
}

DimensionSet dimension_set(i64 n, const UnitGroup& g) {
    check_pair_params(n, g);
    if (g.q() < 3) {
        throw InvalidParams("dimension_set requires q >= 3; phi(2)/2 is not an integer");
    }
    DimensionSet d;
    d.n = n;
    d.q = g.q();
    d.genus = checked_mul(n - 1, g.q() - 1) / 2;
    d.new_dim = checked_mul(n - 1, g.phi()) / 2;
    d.e_dim = n - 1;
    d.half_deg = g.phi() / 2;
    i64 e2 = checked_mul(d.e_dim, d.e_dim);
    d.unitary_dim = checked_mul(d.half_deg, e2);
    d.ss_lower_bound = checked_mul(d.half_deg, e2 - 1);
    return d;
}

ConstancyCheck is_h_constant(const HodgeProfile& profile) {
    ConstancyCheck out;
    const HalfRange half = profile.group().half_range();
    if (half.members.empty()) {
        return out;
    }
    i64 first = half.members.front();
    for (i64 m : half.members) {
        if (profile.hquad(m) != profile.hquad(first)) {
            out.constant = false;
            out.witness = std::make_pair(first, m);
            return out;
        }
    }
    return out;
}

std::pair<i64, i64> h_difference_factored(const HodgeProfile& profile, i64 a, i64 b) {
    i64 na = profile.mult(a);
    i64 nb = profile.mult(b);
    return {na - nb, (profile.n() - 1) - na - nb};
}

} // namespace cyclohodge
