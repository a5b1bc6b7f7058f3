#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqw/common.hpp"

namespace fqw {

/// A field element, packed as its index in [0, q). For extension fields the
/// index is the little-endian base-|base| digit encoding of the coefficient
/// vector in the polynomial basis (1, alpha, ..., alpha^{d-1}).
struct Fe {
    uint32_t v = 0;
    friend constexpr bool operator==(Fe, Fe) = default;
    friend constexpr auto operator<=>(Fe a, Fe b) { return a.v <=> b.v; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in F_q, q = p^m <= 2^20. Prime fields compute directly;
/// extensions keep exp/log tables built from a certified primitive element.
/// Immutable after construction and safe to share across threads.
class Field {
public:
    /// Canonical F_{p^m}: modulus is the lexicographically smallest monic
    /// irreducible of degree m over F_p (coefficient tuple (c0,...,c_{m-1})
    /// compared with c0 most significant).
    static FieldPtr make(uint64_t p, uint32_t m);
    /// F_{base^d} = base[t]/(modulus), modulus monic irreducible over base.
    /// Cached: repeated calls with the same base and modulus share a context.
    static FieldPtr make_ext(const Field& base, const std::vector<Fe>& modulus);

    uint64_t p() const { return p_; }
    uint64_t q() const { return q_; }
    uint32_t deg_abs() const { return mabs_; }   // degree over F_p
    uint32_t ext_deg() const { return extdeg_; } // degree over base()
    const Field* base() const { return base_.get(); } // nullptr for prime fields
    const std::vector<Fe>& modulus() const { return modulus_; } // over base
    Fe generator() const { return gen_; }
    FieldPtr self() const;

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    bool is_zero(Fe a) const { return a.v == 0; }
    Fe elem(uint64_t idx) const;
    Fe from_int(uint64_t n) const { return Fe{static_cast<uint32_t>(n % p_)}; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const; // throws DivisionByZero on 0
    Fe pow(Fe a, uint64_t e) const;

    /// Coefficients over base(), length ext_deg(); {a} itself for prime fields.
    std::vector<Fe> coeffs(Fe a) const;
    Fe from_coeffs(const std::vector<Fe>& c) const;
    /// Absolute coefficients over F_p, length deg_abs(), little-endian.
    std::vector<uint32_t> coeffs_prime(Fe a) const;
    Fe from_coeffs_prime(const std::vector<uint32_t>& c) const;

    uint64_t mult_order(Fe a) const; // a != 0
    std::string to_string(Fe a) const;
    std::string name() const; // "p^m"

    bool same(const Field& o) const { return this == &o; }

private:
    Field() = default;
    uint64_t p_ = 0, q_ = 0;
    uint32_t mabs_ = 0, extdeg_ = 0;
    FieldPtr base_;
    std::vector<Fe> modulus_;
    Fe gen_{0};
    std::vector<uint32_t> exp_, log_;
    std::vector<uint64_t> qm1_factors_; // distinct prime factors of q-1

    Fe slow_mul(Fe a, Fe b) const;
    Fe slow_pow(Fe a, uint64_t e) const;
    void build_tables();
    void find_generator();
    friend struct FieldFactory;
};

/// The exact image of x -> x^k over all of F_q, ascending by packed value.
std::vector<Fe> kth_power_set(const Field& F, uint64_t k);
/// All x with x^k = y, ascending by packed value (exhaustive scan).
std::vector<Fe> kth_roots(const Field& F, Fe y, uint64_t k);

std::vector<uint64_t> prime_factors(uint64_t n);
bool is_prime_u64(uint64_t n);

} // namespace fqw
