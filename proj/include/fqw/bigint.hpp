#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqw {

// Minimal unsigned big integer: enough for exact Weil-bound comparisons and
// the advisory constants (k^16, k^{4n/(n-8)}, ...). Little-endian 32-bit limbs.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) { // NOLINT: implicit by design
        if (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }
    static BigUint from_u128(unsigned __int128 v);

    bool is_zero() const { return limbs_.empty(); }
    static int cmp(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a, b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return cmp(a, b) <= 0; }

    BigUint operator*(const BigUint& o) const;
    BigUint operator+(const BigUint& o) const;
    BigUint shr1() const;

    static BigUint pow(uint64_t base, uint64_t exp);
    BigUint pow_u(uint64_t exp) const;
    // Smallest integer r with r^e >= *this (the exact ceiling of the e-th root).
    BigUint ceil_root(uint64_t e) const;

    size_t bits() const;
    std::string to_string() const;

private:
    std::vector<uint32_t> limbs_;
    void trim();
};

} // namespace fqw
