#include "fqw/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fqw {

const char* err_name(Err e) {
    switch (e) {
        case Err::NotPrime: return "NotPrime";
        case Err::Overflow: return "Overflow";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::ContextMismatch: return "ContextMismatch";
        case Err::NotNilpotent: return "NotNilpotent";
        case Err::NotRegularNilpotent: return "NotRegularNilpotent";
        case Err::EigenvalueMismatch: return "EigenvalueMismatch";
        case Err::NotFound: return "NotFound";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::PairNotFound: return "PairNotFound";
        case Err::SpecialSolutionNotFound: return "SpecialSolutionNotFound";
        case Err::CharTwo: return "CharTwo";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::NotDecomposed: return "NotDecomposed";
        case Err::ParseError: return "ParseError";
        case Err::TooLarge: return "TooLarge";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

static constexpr uint64_t kMaxQ = 1u << 20;

// ---------------------------------------------------------------------------
// minimal polynomial arithmetic over a base field, used only while a new
// extension context is being built (the public Poly layer lives in poly.hpp
// and depends on finished fields).

namespace {

using PV = std::vector<Fe>;

void pv_norm(PV& f) {
    while (!f.empty() && f.back().v == 0) f.pop_back();
}

PV pv_mul(const Field& F, const PV& a, const PV& b) {
    if (a.empty() || b.empty()) return {};
    PV c(a.size() + b.size() - 1, Fe{0});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    pv_norm(c);
    return c;
}

// reduce a mod monic m
PV pv_mod(const Field& F, PV a, const PV& m) {
    pv_norm(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Fe lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead.v != 0)
            for (size_t j = 0; j < dm; ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(lead, m[j]));
        a.pop_back();
        pv_norm(a);
        if (a.size() <= dm) break;
    }
    return a;
}

PV pv_gcd(const Field& F, PV a, PV b) {
    pv_norm(a);
    pv_norm(b);
    while (!b.empty()) {
        PV r = pv_mod(F, a, [&] {
            // make b monic for the reduction
            PV bm = b;
            Fe li = F.inv(bm.back());
            for (auto& c : bm) c = F.mul(c, li);
            return bm;
        }());
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PV pv_powmod(const Field& F, PV base, uint64_t e, const PV& m) {
    PV acc{F.one()};
    base = pv_mod(F, std::move(base), m);
    while (e) {
        if (e & 1) acc = pv_mod(F, pv_mul(F, acc, base), m);
        base = pv_mod(F, pv_mul(F, base, base), m);
        e >>= 1;
    }
    return acc;
}

// f monic of degree d over F: irreducible iff t^{q^d} = t (mod f) and
// gcd(t^{q^{d/r}} - t, f) = 1 for every prime r | d.
bool pv_irreducible(const Field& F, const PV& f) {
    size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    PV t{F.zero(), F.one()};
    auto frob_iter = [&](uint64_t times) {
        PV h = t;
        for (uint64_t i = 0; i < times; ++i) h = pv_powmod(F, h, F.q(), f);
        return h;
    };
    PV hd = frob_iter(d);
    PV diff = hd;
    if (diff.size() < 2) diff.resize(2, Fe{0});
    diff[1] = F.sub(diff[1], F.one());
    pv_norm(diff);
    if (!diff.empty()) return false;
    for (uint64_t r : prime_factors(d)) {
        PV h = frob_iter(d / r);
        PV g = h;
        if (g.size() < 2) g.resize(2, Fe{0});
        g[1] = F.sub(g[1], F.one());
        pv_norm(g);
        PV gc = pv_gcd(F, f, g);
        if (gc.size() != 1) return false;
    }
    return true;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint64_t, uint32_t>, FieldPtr> canonical;
    std::map<std::pair<const Field*, std::vector<uint32_t>>, FieldPtr> extensions;
    std::map<const Field*, FieldPtr> all;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------

struct FieldFactory {
    static FieldPtr make_prime(uint64_t p) {
        if (!is_prime_u64(p)) throw Error(Err::NotPrime, "p = " + std::to_string(p));
        if (p > kMaxQ) throw Error(Err::Overflow, "q exceeds 2^20");
        auto f = FieldPtr(new Field());
        auto* m = const_cast<Field*>(f.get());
        m->p_ = p;
        m->q_ = p;
        m->mabs_ = 1;
        m->extdeg_ = 1;
        m->qm1_factors_ = prime_factors(p - 1);
        m->find_generator();
        m->build_tables();
        return f;
    }

    static FieldPtr make_ext_raw(FieldPtr base, const std::vector<Fe>& modulus) {
        if (modulus.size() < 3)
            throw Error(Err::PreconditionViolated, "extension degree must be >= 2");
        if (modulus.back().v != 1)
            throw Error(Err::PreconditionViolated, "modulus must be monic");
        if (!pv_irreducible(*base, modulus))
            throw Error(Err::PreconditionViolated, "modulus is reducible");
        uint32_t d = static_cast<uint32_t>(modulus.size() - 1);
        unsigned __int128 q = 1;
        for (uint32_t i = 0; i < d; ++i) {
            q *= base->q();
            if (q > kMaxQ) throw Error(Err::Overflow, "q exceeds 2^20");
        }
        auto f = FieldPtr(new Field());
        auto* m = const_cast<Field*>(f.get());
        m->p_ = base->p();
        m->q_ = static_cast<uint64_t>(q);
        m->mabs_ = base->deg_abs() * d;
        m->extdeg_ = d;
        m->base_ = std::move(base);
        m->modulus_ = modulus;
        m->qm1_factors_ = prime_factors(m->q_ - 1);
        m->find_generator();
        m->build_tables();
        return f;
    }
};

FieldPtr Field::make(uint64_t p, uint32_t m) {
    if (m < 1) throw Error(Err::PreconditionViolated, "m must be >= 1");
    auto& reg = registry();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto key = std::make_pair(p, m);
    if (auto it = reg.canonical.find(key); it != reg.canonical.end()) return it->second;
    FieldPtr prime = [&] {
        auto pk = std::make_pair(p, 1u);
        if (auto it = reg.canonical.find(pk); it != reg.canonical.end()) return it->second;
        auto f = FieldFactory::make_prime(p);
        reg.canonical[pk] = f;
        reg.all[f.get()] = f;
        return f;
    }();
    if (m == 1) return prime;
    {
        unsigned __int128 q = 1;
        for (uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxQ) throw Error(Err::Overflow, "q exceeds 2^20");
        }
    }
    // lex-smallest monic irreducible of degree m over F_p
    std::vector<Fe> mod(m + 1, Fe{0});
    mod[m] = Fe{1};
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= p;
    bool found = false;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        for (uint32_t i = 0; i < m; ++i) { // c0 most significant
            uint64_t place = 1;
            for (uint32_t j = i + 1; j < m; ++j) place *= p;
            mod[i] = Fe{static_cast<uint32_t>(rest / place)};
            rest %= place;
        }
        if (pv_irreducible(*prime, mod)) {
            found = true;
            break;
        }
    }
    if (!found) throw Error(Err::Internal, "no irreducible modulus found");
    auto f = FieldFactory::make_ext_raw(prime, mod);
    reg.canonical[key] = f;
    std::vector<uint32_t> mkey;
    for (auto c : mod) mkey.push_back(c.v);
    reg.extensions[{prime.get(), mkey}] = f;
    reg.all[f.get()] = f;
    return f;
}

FieldPtr Field::make_ext(const Field& base, const std::vector<Fe>& modulus) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto bit = reg.all.find(&base);
    if (bit == reg.all.end())
        throw Error(Err::ContextMismatch, "base field is not registry-managed");
    std::vector<uint32_t> mkey;
    for (auto c : modulus) mkey.push_back(c.v);
    auto key = std::make_pair(&base, mkey);
    if (auto it = reg.extensions.find(key); it != reg.extensions.end()) return it->second;
    auto f = FieldFactory::make_ext_raw(bit->second, modulus);
    reg.extensions[key] = f;
    reg.all[f.get()] = f;
    return f;
}

FieldPtr Field::self() const {
    auto& reg = registry();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto it = reg.all.find(this);
    if (it == reg.all.end()) throw Error(Err::Internal, "field not registered");
    return it->second;
}

Fe Field::elem(uint64_t idx) const {
    if (idx >= q_) throw Error(Err::Overflow, "element index out of range");
    return Fe{static_cast<uint32_t>(idx)};
}

Fe Field::add(Fe a, Fe b) const {
    if (!base_) return Fe{static_cast<uint32_t>((static_cast<uint64_t>(a.v) + b.v) % p_)};
    uint32_t bq = static_cast<uint32_t>(base_->q());
    uint32_t av = a.v, bv = b.v, out = 0, place = 1;
    for (uint32_t i = 0; i < extdeg_; ++i) {
        out += base_->add(Fe{av % bq}, Fe{bv % bq}).v * place;
        av /= bq;
        bv /= bq;
        place *= bq;
    }
    return Fe{out};
}

Fe Field::neg(Fe a) const {
    if (!base_) return Fe{static_cast<uint32_t>((p_ - a.v) % p_)};
    uint32_t bq = static_cast<uint32_t>(base_->q());
    uint32_t av = a.v, out = 0, place = 1;
    for (uint32_t i = 0; i < extdeg_; ++i) {
        out += base_->neg(Fe{av % bq}).v * place;
        av /= bq;
        place *= bq;
    }
    return Fe{out};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::slow_mul(Fe a, Fe b) const {
    if (!base_) return Fe{static_cast<uint32_t>((static_cast<uint64_t>(a.v) * b.v) % p_)};
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<Fe> c(2 * extdeg_ - 1, Fe{0});
    for (uint32_t i = 0; i < extdeg_; ++i)
        for (uint32_t j = 0; j < extdeg_; ++j)
            c[i + j] = base_->add(c[i + j], base_->mul(ca[i], cb[j]));
    for (size_t i = c.size(); i-- > extdeg_;) {
        Fe lead = c[i];
        if (lead.v == 0) continue;
        for (uint32_t j = 0; j < extdeg_; ++j)
            c[i - extdeg_ + j] = base_->sub(c[i - extdeg_ + j], base_->mul(lead, modulus_[j]));
        c[i] = Fe{0};
    }
    c.resize(extdeg_);
    return from_coeffs(c);
}

Fe Field::slow_pow(Fe a, uint64_t e) const {
    Fe acc = one(), b = a;
    while (e) {
        if (e & 1) acc = slow_mul(acc, b);
        b = slow_mul(b, b);
        e >>= 1;
    }
    return acc;
}

void Field::find_generator() {
    // smallest candidate in coefficient-lex order (c0 compared first) whose
    // multiplicative order is exactly q-1
    uint64_t total = q_;
    for (uint64_t idx = 1; idx < total; ++idx) {
        Fe cand;
        if (!base_) {
            cand = Fe{static_cast<uint32_t>(idx)};
        } else {
            uint64_t bq = base_->q();
            uint64_t rest = idx;
            uint32_t packed = 0, pv = 1;
            for (uint32_t i = 0; i < extdeg_; ++i) { // c0 most significant
                uint64_t place = 1;
                for (uint32_t j = i + 1; j < extdeg_; ++j) place *= bq;
                packed += static_cast<uint32_t>(rest / place) * pv;
                rest %= place;
                pv *= static_cast<uint32_t>(bq);
            }
            cand = Fe{packed};
        }
        if (cand.v == 0) continue;
        bool ok = slow_pow(cand, q_ - 1) == one();
        for (uint64_t r : qm1_factors_)
            if (ok && slow_pow(cand, (q_ - 1) / r) == one()) ok = false;
        if (ok) {
            gen_ = cand;
            return;
        }
    }
    throw Error(Err::Internal, "no primitive element found");
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, UINT32_MAX);
    Fe cur = one();
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur.v;
        if (log_[cur.v] != UINT32_MAX) throw Error(Err::Internal, "generator order too small");
        log_[cur.v] = static_cast<uint32_t>(i);
        cur = slow_mul(cur, gen_);
    }
    if (cur != one()) throw Error(Err::Internal, "generator order mismatch");
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return zero();
    uint64_t e = log_[a.v] + static_cast<uint64_t>(log_[b.v]);
    if (e >= q_ - 1) e -= q_ - 1;
    return Fe{exp_[e]};
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) throw Error(Err::DivisionByZero, "inverse of zero");
    uint64_t e = (q_ - 1 - log_[a.v]) % (q_ - 1);
    return Fe{exp_[e]};
}

Fe Field::pow(Fe a, uint64_t e) const {
    if (a.v == 0) return e == 0 ? one() : zero();
    Fe acc = one(), b = a;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

std::vector<Fe> Field::coeffs(Fe a) const {
    if (!base_) return {a};
    std::vector<Fe> c(extdeg_);
    uint32_t bq = static_cast<uint32_t>(base_->q());
    uint32_t av = a.v;
    for (uint32_t i = 0; i < extdeg_; ++i) {
        c[i] = Fe{av % bq};
        av /= bq;
    }
    return c;
}

Fe Field::from_coeffs(const std::vector<Fe>& c) const {
    if (!base_) {
        if (c.size() != 1) throw Error(Err::DimensionMismatch, "prime field coefficient vector");
        return c[0];
    }
    if (c.size() != extdeg_) throw Error(Err::DimensionMismatch, "coefficient vector length");
    uint32_t bq = static_cast<uint32_t>(base_->q());
    uint32_t out = 0, place = 1;
    for (uint32_t i = 0; i < extdeg_; ++i) {
        out += c[i].v * place;
        place *= bq;
    }
    return Fe{out};
}

std::vector<uint32_t> Field::coeffs_prime(Fe a) const {
    if (!base_) return {a.v};
    std::vector<uint32_t> out;
    for (Fe c : coeffs(a)) {
        auto sub = base_->coeffs_prime(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

Fe Field::from_coeffs_prime(const std::vector<uint32_t>& c) const {
    if (c.size() != mabs_) throw Error(Err::DimensionMismatch, "prime coefficient length");
    if (!base_) return Fe{static_cast<uint32_t>(c[0] % p_)};
    std::vector<Fe> cs(extdeg_);
    uint32_t step = base_->deg_abs();
    for (uint32_t i = 0; i < extdeg_; ++i) {
        std::vector<uint32_t> sub(c.begin() + i * step, c.begin() + (i + 1) * step);
        cs[i] = base_->from_coeffs_prime(sub);
    }
    return from_coeffs(cs);
}

uint64_t Field::mult_order(Fe a) const {
    if (a.v == 0) throw Error(Err::DivisionByZero, "order of zero");
    uint64_t ord = q_ - 1;
    for (uint64_t r : qm1_factors_)
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    return ord;
}

std::string Field::to_string(Fe a) const {
    if (mabs_ == 1) return std::to_string(a.v);
    std::string s = "[";
    auto cs = coeffs_prime(a);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cs[i]);
    }
    return s + "]";
}

std::string Field::name() const {
    return std::to_string(p_) + "^" + std::to_string(mabs_);
}

std::vector<Fe> kth_power_set(const Field& F, uint64_t k) {
    std::vector<bool> seen(F.q(), false);
    for (uint64_t x = 0; x < F.q(); ++x) seen[F.pow(Fe{(uint32_t)x}, k).v] = true;
    std::vector<Fe> out;
    for (uint64_t v = 0; v < F.q(); ++v)
        if (seen[v]) out.push_back(Fe{(uint32_t)v});
    return out;
}

std::vector<Fe> kth_roots(const Field& F, Fe y, uint64_t k) {
    std::vector<Fe> out;
    for (uint64_t x = 0; x < F.q(); ++x)
        if (F.pow(Fe{(uint32_t)x}, k) == y) out.push_back(Fe{(uint32_t)x});
    return out;
}

} // namespace fqw
