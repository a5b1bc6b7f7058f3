#include "fqw/bigint.hpp"

#include <algorithm>

namespace fqw {

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_u128(unsigned __int128 v) {
    BigUint r;
    while (v) {
        r.limbs_.push_back(static_cast<uint32_t>(v));
        v >>= 32;
    }
    return r;
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigUint BigUint::operator+(const BigUint& o) const {
    BigUint r;
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.assign(n + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r.limbs_[n] = static_cast<uint32_t>(carry);
    r.trim();
    return r;
}

BigUint BigUint::operator*(const BigUint& o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry +
                           static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::shr1() const {
    BigUint r = *this;
    uint32_t carry = 0;
    for (size_t i = r.limbs_.size(); i-- > 0;) {
        uint32_t next = r.limbs_[i] & 1u;
        r.limbs_[i] = (r.limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    r.trim();
    return r;
}

BigUint BigUint::pow(uint64_t base, uint64_t exp) { return BigUint(base).pow_u(exp); }

BigUint BigUint::pow_u(uint64_t exp) const {
    BigUint acc(1), b = *this;
    while (exp) {
        if (exp & 1) acc = acc * b;
        b = b * b;
        exp >>= 1;
    }
    return acc;
}

size_t BigUint::bits() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t b = limbs_.size() * 32;
    for (uint32_t mask = 0x80000000u; mask && !(top & mask); mask >>= 1) --b;
    return b;
}

BigUint BigUint::ceil_root(uint64_t e) const {
    if (is_zero() || e == 0) return BigUint(0);
    // binary search: smallest r with r^e >= this
    BigUint lo(1), hi(1);
    hi = BigUint(2).pow_u(bits() / e + 1);
    while (cmp(lo, hi) < 0) {
        BigUint mid = (lo + hi).shr1();
        if (cmp(mid.pow_u(e), *this) < 0)
            lo = mid + BigUint(1);
        else
            hi = mid;
    }
    return lo;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        char buf[16];
        if (work.empty())
            snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
        else
            snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
        out.insert(0, buf);
    }
    return out;
}

} // namespace fqw
