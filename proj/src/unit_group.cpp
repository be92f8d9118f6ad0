#include "cyclohodge/unit_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>

namespace cyclohodge {

namespace {

constexpr i64 kDefaultMaxQ = i64{1} << 31;

i64 positive_mod(i64 x, i64 m) {
    i64 v = x % m;
    return v < 0 ? v + m : v;
}

} // namespace

i64 checked_mul(i64 a, i64 b) {
    i64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Overflow("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

i64 max_q_cap() {
    static const i64 cap = [] {
        if (const char* s = std::getenv("CYCLO_HODGE_MAX_Q")) {
            char* end = nullptr;
            long long v = std::strtoll(s, &end, 10);
            if (end != s && *end == '\0' && v >= 2) {
                return static_cast<i64>(v);
            }
        }
        return kDefaultMaxQ;
    }();
    return cap;
}

bool is_prime_power(i64 q, i64* p_out, i64* r_out) {
    if (q < 2) {
        return false;
    }
    i64 p = 0;
    if (q % 2 == 0) {
        p = 2;
    } else {
        for (i64 d = 3; d * d <= q; d += 2) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) {
            p = q; // prime
        }
    }
    i64 m = q;
    i64 r = 0;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    if (m != 1) {
        return false;
    }
    if (p_out) *p_out = p;
    if (r_out) *r_out = r;
    return true;
}

std::vector<i64> prime_powers_upto(i64 q_max) {
    std::vector<i64> out;
    for (i64 q = 2; q <= q_max; ++q) {
        if (is_prime_power(q)) {
            out.push_back(q);
        }
    }
    return out;
}

bool HalfRange::contains(i64 x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

UnitGroup::UnitGroup(i64 q) : q_(q) {
    if (q > max_q_cap()) {
        throw DomainTooLarge("q = " + std::to_string(q) + " exceeds the configured cap " +
                             std::to_string(max_q_cap()) + " (CYCLO_HODGE_MAX_Q)");
    }
    if (!is_prime_power(q, &p_, &r_)) {
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    }
    phi_ = q_ / p_ * (p_ - 1); // (p-1) * p^(r-1)
}

UnitGroup make_group(i64 q) {
    return UnitGroup(q);
}

bool UnitGroup::is_unit(i64 x) const {
    return x >= 1 && x <= q_ - 1 && x % p_ != 0;
}

i64 UnitGroup::check_unit(i64 x) const {
    if (!is_unit(x)) {
        throw PreconditionViolated(std::to_string(x) + " is not a canonical unit mod " +
                                   std::to_string(q_));
    }
    return x;
}

i64 UnitGroup::canon(i64 x) const {
    i64 v = positive_mod(x, q_);
    if (v == 0 || v % p_ == 0) {
        throw PreconditionViolated(std::to_string(x) + " is not invertible mod " +
                                   std::to_string(q_));
    }
    return v;
}

i64 UnitGroup::mul(i64 a, i64 b) const {
    check_unit(a);
    check_unit(b);
    return checked_mul(a, b) % q_;
}

i64 UnitGroup::inv(i64 a) const {
    check_unit(a);
    // Extended Euclid on (a, q); gcd is 1 since a is a unit.
    i64 old_r = a, r = q_;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 quot = old_r / r;
        i64 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    return canon(old_s);
}

i64 UnitGroup::order(i64 a) const {
    check_unit(a);
    i64 k = 1;
    i64 x = a;
    while (x != 1) {
        x = checked_mul(x, a) % q_;
        ++k;
    }
    return k;
}

i64 UnitGroup::conj(i64 a) const {
    check_unit(a);
    return q_ - a;
}

i64 UnitGroup::fold(i64 a) const {
    check_unit(a);
    return std::min(a, q_ - a);
}

std::vector<i64> UnitGroup::units() const {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(phi_));
    for (i64 a = 1; a < q_; ++a) {
        if (a % p_ != 0) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<i64> UnitGroup::subgroup_pm(i64 a) const {
    check_unit(a);
    const i64 gens[2] = {a, q_ == 2 ? i64{1} : q_ - 1};
    std::unordered_set<i64> seen;
    std::vector<i64> frontier;
    for (i64 g : gens) {
        if (seen.insert(g).second) {
            frontier.push_back(g);
        }
    }
    // Breadth-first closure under multiplication by the generators. The set
    // is finite, so products of generators eventually produce 1 and every
    // inverse.
    std::vector<i64> queue = frontier;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        i64 u = queue[head];
        for (i64 g : gens) {
            i64 v = checked_mul(u, g) % q_;
            if (seen.insert(v).second) {
                queue.push_back(v);
            }
        }
    }
    std::vector<i64> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

i64 UnitGroup::b_max(i64 a) const {
    check_unit(a);
    // <±a> ∩ [1, q/2] is exactly {fold(a^k)}: every element of <±a> is
    // ±(a^k), and fold picks the representative not exceeding q/2.
    i64 best = 1;
    i64 x = a;
    while (true) {
        best = std::max(best, std::min(x, q_ - x));
        if (x == 1) {
            break;
        }
        x = checked_mul(x, a) % q_;
    }
    return best;
}

HalfRange UnitGroup::range_coprime(i64 x, i64 y) const {
    if (x > y) {
        throw PreconditionViolated("range_coprime requires x <= y");
    }
    HalfRange out;
    out.lo = x;
    out.hi = y;
    for (i64 i = x; i <= y; ++i) {
        if (positive_mod(i, p_) != 0) {
            out.members.push_back(i);
        }
    }
    return out;
}

HalfRange UnitGroup::half_range() const {
    return range_coprime(1, q_ / 2);
}

std::vector<i64> UnitGroup::order_two_elements() const {
    std::vector<i64> out;
    for (i64 u = 2; u < q_; ++u) {
        if (u % p_ != 0 && checked_mul(u, u) % q_ == 1) {
            out.push_back(u);
        }
    }
    return out;
}

} // namespace cyclohodge
