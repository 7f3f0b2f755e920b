#pragma once

// Exact arithmetic in GF(p) and GF(p^m).
//
// Elements are stored as canonical integers: the value sum_i c_i p^i of the
// little-endian coordinate vector in the power basis of the modulus root.
// Fields are immutable handles; copies share one table set.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spair/error.hpp"
#include "spair/number_theory.hpp"

namespace spair {

using Symbol = std::uint64_t;

/// Fields up to this order get log/exp tables.
inline constexpr std::uint64_t kTabulatedOrderLimit = 1u << 16;
/// Hard limit on field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

namespace detail {

// Polynomials over GF(p) as little-endian coefficient vectors, used before a
// Field exists (modulus search) and for non-tabulated multiplication.
using RawPoly = std::vector<std::uint64_t>;

inline void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& f, std::uint64_t p) {
    // f monic
    raw_trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (std::size_t j = 0; j < df; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        }
        a.pop_back();
        raw_trim(a);
    }
    return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return raw_mod(std::move(r), f, p);
}

inline RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& f, std::uint64_t p) {
    RawPoly r{1};
    base = raw_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = raw_mulmod(base, base, f, p);
    }
    return raw_mod(std::move(r), f, p);
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = nt::pow_mod(b.back(), p - 2, p);
        RawPoly monic = b;
        for (auto& c : monic) c = c * inv % p;
        RawPoly r = raw_mod(a, monic, p);
        a = std::move(monic);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test for a monic polynomial of degree m over GF(p).
inline bool raw_is_irreducible(const RawPoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    // frob[i] = x^(p^i) mod f
    std::vector<RawPoly> frob(m + 1);
    frob[0] = raw_mod(RawPoly{0, 1}, f, p);
    for (std::size_t i = 1; i <= m; ++i) frob[i] = raw_powmod(frob[i - 1], p, f, p);
    RawPoly x = raw_mod(RawPoly{0, 1}, f, p);
    if (frob[m] != x) return false;
    for (std::uint64_t r : nt::prime_divisors(m)) {
        RawPoly h = frob[m / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        raw_trim(h);
        RawPoly g = raw_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct FieldData {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::uint64_t q = 0;
    RawPoly modulus;  // monic, degree m
    std::vector<std::uint64_t> pow_p;  // p^i, i = 0..m
    bool tabulated = false;
    Symbol primitive = 0;  // valid when tabulated
    std::vector<std::uint32_t> exp_table;  // size 2(q-1)
    std::vector<std::uint32_t> log_table;  // size q

    std::vector<std::uint64_t> digits(Symbol a) const {
        std::vector<std::uint64_t> d(m);
        for (unsigned i = 0; i < m; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }

    Symbol encode(const std::vector<std::uint64_t>& d) const {
        Symbol v = 0;
        for (unsigned i = m; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
        return v;
    }

    Symbol add(Symbol a, Symbol b) const {
        if (m == 1) return (a + b) % p;
        if (p == 2) return a ^ b;
        Symbol r = 0;
        for (unsigned i = 0; i < m; ++i) {
            r += ((a % p + b % p) % p) * pow_p[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    Symbol neg(Symbol a) const {
        if (m == 1) return (p - a) % p;
        if (p == 2) return a;
        Symbol r = 0;
        for (unsigned i = 0; i < m; ++i) {
            r += ((p - a % p) % p) * pow_p[i];
            a /= p;
        }
        return r;
    }

    Symbol slow_mul(Symbol a, Symbol b) const {
        if (m == 1) return nt::mul_mod(a, b, p);
        RawPoly da = digits(a), db = digits(b);
        raw_trim(da);
        raw_trim(db);
        if (da.empty() || db.empty()) return 0;
        RawPoly r(da.size() + db.size() - 1, 0);
        for (std::size_t i = 0; i < da.size(); ++i) {
            if (da[i] == 0) continue;
            for (std::size_t j = 0; j < db.size(); ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p;
        }
        return encode(raw_mod(std::move(r), modulus, p));
    }

    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        if (m == 1) return nt::mul_mod(a, b, p);
        if (tabulated) return exp_table[log_table[a] + log_table[b]];
        return slow_mul(a, b);
    }

    Symbol pow(Symbol a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (tabulated) return exp_table[static_cast<std::size_t>(nt::mul_mod(log_table[a], e % (q - 1), q - 1))];
        Symbol r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }

    bool has_order(Symbol a, std::uint64_t order, const std::vector<std::uint64_t>& order_primes) const {
        if (pow(a, order) != 1) return false;
        for (std::uint64_t r : order_primes)
            if (pow(a, order / r) == 1) return false;
        return true;
    }

    Symbol find_primitive() const {
        if (q == 2) return 1;
        const auto primes = nt::prime_divisors(q - 1);
        for (Symbol a = 2; a < q; ++a)
            if (has_order(a, q - 1, primes)) return a;
        return 1;  // unreachable for a genuine field
    }

    void build_tables() {
        primitive = find_primitive();
        exp_table.assign(2 * (q - 1), 0);
        log_table.assign(q, 0);
        Symbol x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp_table[i] = static_cast<std::uint32_t>(x);
            log_table[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, primitive);
        }
        for (std::uint64_t i = q - 1; i < 2 * (q - 1); ++i) exp_table[i] = exp_table[i - (q - 1)];
        tabulated = true;
    }
};

}  // namespace detail

class Element;

/// A finite field GF(p^m) with an explicit monic irreducible modulus.
class Field {
   public:
    Field() = default;

    std::uint64_t characteristic() const { return d_->p; }
    unsigned degree() const { return d_->m; }
    std::uint64_t order() const { return d_->q; }
    bool is_prime_field() const { return d_->m == 1; }
    bool valid() const { return d_ != nullptr; }

    /// Modulus coefficients, little-endian, monic of degree m (x for prime fields).
    const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }

    Symbol zero() const { return 0; }
    Symbol one() const { return 1; }

    Symbol add(Symbol a, Symbol b) const { return d_->add(a, b); }
    Symbol sub(Symbol a, Symbol b) const { return d_->add(a, d_->neg(b)); }
    Symbol neg(Symbol a) const { return d_->neg(a); }
    Symbol mul(Symbol a, Symbol b) const { return d_->mul(a, b); }
    Symbol pow(Symbol a, std::uint64_t e) const { return d_->pow(a, e); }

    Symbol inv(Symbol a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        if (d_->tabulated && d_->m > 1) return d_->exp_table[(d_->q - 1 - d_->log_table[a]) % (d_->q - 1)];
        return d_->pow(a, d_->q - 2);
    }

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    /// Image of an integer under Z -> GF(p) -> GF(p^m).
    Symbol from_integer(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(d_->p);
        return static_cast<Symbol>(((v % p) + p) % p);
    }

    std::vector<std::uint64_t> coordinates(Symbol a) const { return d_->digits(a); }
    Symbol from_coordinates(const std::vector<std::uint64_t>& c) const { return d_->encode(c); }

    bool contains(Symbol a) const { return a < d_->q; }

    Element element(Symbol value) const;

    friend bool operator==(const Field& a, const Field& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus;
    }

    std::string name() const {
        return d_->m == 1 ? "GF(" + std::to_string(d_->p) + ")"
                          : "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->m) + ")";
    }

    const detail::FieldData& data() const { return *d_; }

    /// Builds a field from an explicit modulus, verifying irreducibility.
    static Field with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;

    friend Field make_field(std::uint64_t, detail::RawPoly);
};

inline Field make_field(std::uint64_t p, detail::RawPoly modulus) {
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->m = static_cast<unsigned>(modulus.size() - 1);
    d->modulus = std::move(modulus);
    d->pow_p.resize(d->m + 1);
    d->pow_p[0] = 1;
    for (unsigned i = 1; i <= d->m; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
    d->q = d->pow_p[d->m];
    if (d->q <= kTabulatedOrderLimit && d->m > 1) d->build_tables();
    return Field(std::move(d));
}

inline Field Field::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    detail::raw_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) throw Error(Errc::BadParameter, "modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw Error(Errc::BadParameter, "modulus coefficient out of range");
    if (modulus.size() == 2) return make_field(p, {0, 1});
    if (!detail::raw_is_irreducible(modulus, p)) throw Error(Errc::BadParameter, "modulus is reducible");
    return make_field(p, std::move(modulus));
}

/// An element together with its owning field.
class Element {
   public:
    Element() = default;
    Element(Field f, Symbol v) : field_(std::move(f)), value_(v) {
        if (!field_.contains(v)) throw Error(Errc::BadParameter, "symbol outside field");
    }

    const Field& field() const { return field_; }
    Symbol value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend Element operator+(const Element& a, const Element& b) { return {same(a, b), a.field_.add(a.value_, b.value_)}; }
    friend Element operator-(const Element& a, const Element& b) { return {same(a, b), a.field_.sub(a.value_, b.value_)}; }
    friend Element operator*(const Element& a, const Element& b) { return {same(a, b), a.field_.mul(a.value_, b.value_)}; }
    friend Element operator/(const Element& a, const Element& b) { return {same(a, b), a.field_.div(a.value_, b.value_)}; }
    Element operator-() const { return {field_, field_.neg(value_)}; }
    Element inv() const { return {field_, field_.inv(value_)}; }
    Element pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

    friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_ && a.field_ == b.field_; }
    friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.value_; }

   private:
    static const Field& same(const Element& a, const Element& b) {
        if (!(a.field_ == b.field_))
            throw Error(Errc::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
        return a.field_;
    }

    Field field_;
    Symbol value_ = 0;
};

inline Element Field::element(Symbol value) const { return Element(*this, value); }

inline Field prime_field(std::uint64_t p) {
    if (p < 2 || !nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    return make_field(p, {0, 1});
}

/// GF(p^m) whose modulus is the first monic irreducible of degree m when
/// candidates are ordered by the canonical integer of (c_0, ..., c_{m-1}).
/// Results are cached per (p, m).
inline Field extension_field(std::uint64_t p, unsigned m) {
    if (p < 2 || !nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::BadParameter, "extension degree must be >= 1");
    if (m == 1) return prime_field(p);
    std::uint64_t q = 0;
    if (!nt::checked_pow(p, m, kMaxFieldOrder, q))
        throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m));

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, Field> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }
    detail::RawPoly f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t v = 0;; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (f[0] == 0) continue;
        if (detail::raw_is_irreducible(f, p)) break;
    }
    Field field = make_field(p, f);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(p, m), field).first->second;
}

/// GF(q) for a prime power q.
inline Field field_of_order(std::uint64_t q) {
    auto [p, m] = nt::prime_power(q);
    if (p == 0) throw Error(Errc::BadParameter, std::to_string(q) + " is not a prime power");
    return extension_field(p, m);
}

/// First element, in canonical order, of multiplicative order q - 1.
inline Element primitive_element(const Field& f) {
    const auto& d = f.data();
    if (d.tabulated) return f.element(d.primitive);
    return f.element(d.find_primitive());
}

/// Some element of order exactly n; n must divide q - 1.
inline Symbol element_of_order_any(const Field& f, std::uint64_t n) {
    const auto& d = f.data();
    if ((d.q - 1) % n != 0)
        throw Error(Errc::NoSuchRoots, std::to_string(n) + " does not divide " + std::to_string(d.q - 1));
    if (n == 1) return 1;
    if (d.tabulated) return d.pow(d.primitive, (d.q - 1) / n);
    const auto primes = nt::prime_divisors(n);
    for (Symbol a = 2; a < d.q; ++a) {
        Symbol x = d.pow(a, (d.q - 1) / n);
        if (d.has_order(x, n, primes)) return x;
    }
    return 1;  // unreachable
}

/// All n-th roots of unity, sorted by canonical encoding.
inline std::vector<Element> nth_roots_of_unity(const Field& f, std::uint64_t n) {
    if (n == 0) throw Error(Errc::NoSuchRoots, "n must be positive");
    const Symbol x = element_of_order_any(f, n);
    std::vector<Symbol> vals(n);
    Symbol cur = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        vals[j] = cur;
        cur = f.mul(cur, x);
    }
    std::sort(vals.begin(), vals.end());
    std::vector<Element> out;
    out.reserve(n);
    for (Symbol v : vals) out.push_back(f.element(v));
    return out;
}

/// Smallest element (canonical order) of multiplicative order exactly n.
inline Element smallest_element_of_order(const Field& f, std::uint64_t n) {
    const Symbol x = element_of_order_any(f, n);
    Symbol best = x;
    Symbol cur = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
        cur = f.mul(cur, x);
        if (std::gcd(j, n) == 1) best = std::min(best, cur);
    }
    return f.element(best);
}

/// omega in GF(p) with omega != 1, omega^3 = 1, smallest representative.
inline Element primitive_cube_root(std::uint64_t p) {
    Field f = prime_field(p);
    if ((p - 1) % 3 != 0) throw Error(Errc::NoCubeRoot, "3 does not divide " + std::to_string(p - 1));
    for (Symbol w = 2; w < p; ++w)
        if (f.pow(w, 3) == 1) return f.element(w);
    throw Error(Errc::NoCubeRoot, "no cube root found");
}

}  // namespace spair
