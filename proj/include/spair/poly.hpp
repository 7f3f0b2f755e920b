#pragma once

// Dense univariate polynomials over a Field, with factorization and
// cyclotomic-coset machinery.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spair/error.hpp"
#include "spair/gf.hpp"

namespace spair {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// NegInf absorbs addition, so deg(fg) = deg f + deg g holds for all f, g.
class Degree {
   public:
    constexpr Degree(long v) : value_(v) {}  // NOLINT: implicit from integer degrees
    static constexpr Degree neg_inf() { return Degree(kNegInf); }

    constexpr bool is_neg_inf() const { return value_ == kNegInf; }
    constexpr long value() const { return value_; }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr auto operator<=>(Degree a, Degree b) { return a.value_ <=> b.value_; }

   private:
    static constexpr long kNegInf = std::numeric_limits<long>::min();
    long value_;
};

class Poly {
   public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<Symbol> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        for (Symbol s : c_)
            if (!field_.contains(s)) throw Error(Errc::BadParameter, "coefficient outside field");
        trim();
    }

    /// Coefficients given as integers, reduced into the prime subfield.
    static Poly from_integers(const Field& f, const std::vector<std::int64_t>& coeffs) {
        std::vector<Symbol> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(f.from_integer(v));
        return Poly(f, std::move(c));
    }
    static Poly constant(const Field& f, Symbol a) { return Poly(f, {a}); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly monomial(const Field& f, std::size_t deg, Symbol a = 1) {
        std::vector<Symbol> c(deg + 1, 0);
        c[deg] = a;
        return Poly(f, std::move(c));
    }
    /// x - a
    static Poly linear(const Field& f, Symbol a) { return Poly(f, {f.neg(a), 1}); }
    /// x^n - lambda
    static Poly binomial(const Field& f, std::size_t n, Symbol lambda) {
        std::vector<Symbol> c(n + 1, 0);
        c[n] = 1;
        c[0] = f.add(c[0], f.neg(lambda));
        return Poly(f, std::move(c));
    }

    const Field& field() const { return field_; }
    const std::vector<Symbol>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1); }
    /// Degree as a count; zero polynomial maps to 0.
    std::size_t size_degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Symbol coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Symbol lead() const { return c_.empty() ? 0 : c_.back(); }

    Symbol eval(Symbol x) const {
        Symbol r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
        return r;
    }
    Element eval(const Element& x) const {
        check(x.field());
        return field_.element(eval(x.value()));
    }

    Poly monic() const {
        if (c_.empty()) throw Error(Errc::ZeroPolynomial, "monic of zero polynomial");
        return scaled(field_.inv(lead()));
    }

    Poly scaled(Symbol a) const {
        std::vector<Symbol> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], a);
        return Poly(field_, std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b.field_);
        std::vector<Symbol> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b.field_);
        std::vector<Symbol> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(c));
    }
    Poly operator-() const { return scaled(field_.neg(1)); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b.field_);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const Field& f = a.field_;
        std::vector<Symbol> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Poly(f, std::move(c));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && a.field_ == b.field_; }

    /// Ordering by (degree, coefficient vector) used for canonical factor lists.
    friend bool canonical_less(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return a.c_ < b.c_;
    }

    void check(const Field& other) const {
        if (!(field_ == other)) throw Error(Errc::FieldMismatch, field_.name() + " vs " + other.name());
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c_[i] != 1) os << c_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Field field_;
    std::vector<Symbol> c_;
};

/// (quotient, remainder) with deg remainder < deg divisor.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    a.check(b.field());
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    std::vector<Symbol> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (r.size() <= db) return {Poly(f), a};
    std::vector<Symbol> q(r.size() - db, 0);
    const Symbol inv_lead = f.inv(bc.back());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        const Symbol c = f.mul(r[i], inv_lead);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    a.check(b.field());
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

inline Poly formal_derivative(const Poly& a) {
    const Field& f = a.field();
    const auto& c = a.coeffs();
    if (c.size() <= 1) return Poly(f);
    std::vector<Symbol> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = f.mul(f.from_integer(static_cast<std::int64_t>(i % f.characteristic())), c[i]);
    return Poly(f, std::move(d));
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(base.field()) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        e >>= 1;
        if (e) base = mul_mod(base, base, m);
    }
    return r;
}

inline Poly pow(Poly base, std::uint64_t e) {
    Poly r = Poly::one(base.field());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// Largest e with f^e | g; 0 for g = 0 is not meaningful and returns 0.
inline unsigned multiplicity(Poly g, const Poly& f) {
    if (g.is_zero() || f.degree() < Degree(1)) return 0;
    unsigned e = 0;
    for (;;) {
        auto [q, r] = divrem(g, f);
        if (!r.is_zero()) return e;
        ++e;
        g = std::move(q);
    }
}

struct Factorization {
    Symbol unit = 1;
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity

    Poly product(const Field& f) const {
        Poly r = Poly::constant(f, unit);
        for (const auto& [p, e] : factors) r *= pow(p, e);
        return r;
    }
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'cafe'f00dULL;

namespace detail {

// f with f' = 0 is a polynomial in x^p; returns its p-th root.
inline Poly pth_root(const Poly& a) {
    const Field& f = a.field();
    const std::uint64_t p = f.characteristic();
    const std::uint64_t root_exp = f.order() / p;  // a^(q/p) is the p-th root
    std::vector<Symbol> c(a.size_degree() / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.pow(a.coeff(i * p), root_exp);
    return Poly(f, std::move(c));
}

inline void square_free(const Poly& a, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
    if (a.degree() < Degree(1)) return;
    Poly c = gcd(a, formal_derivative(a));
    Poly w = a / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac, i * scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) square_free(pth_root(c), scale * static_cast<unsigned>(a.field().characteristic()), out);
}

inline std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly g) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Field& f = g.field();
    const Poly x = Poly::monomial(f, 1);
    Poly h = x % g;
    for (unsigned d = 1; Degree(2 * static_cast<long>(d)) <= g.degree(); ++d) {
        h = pow_mod(h, f.order(), g);
        Poly fd = gcd(g, h - x);
        if (!fd.is_one()) {
            out.emplace_back(fd, d);
            g = g / fd;
            h = h % g;
        }
    }
    if (g.degree() > Degree(0)) out.emplace_back(g, static_cast<unsigned>(g.size_degree()));
    return out;
}

inline void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.size_degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& f = g.field();
    const std::size_t n = g.size_degree();
    std::uniform_int_distribution<Symbol> coin(0, f.order() - 1);
    for (;;) {
        std::vector<Symbol> c(n);
        for (auto& v : c) v = coin(rng);
        Poly a(f, std::move(c));
        if (a.degree() < Degree(1)) continue;
        Poly b(f);
        if (f.characteristic() == 2) {
            // absolute trace sum_{i < m d} a^(2^i)
            Poly t = a % g;
            b = t;
            for (unsigned i = 1; i < f.degree() * d; ++i) {
                t = mul_mod(t, t, g);
                b += t;
            }
        } else {
            // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2)
            Poly t = a % g;
            Poly norm = t;
            for (unsigned i = 1; i < d; ++i) {
                t = pow_mod(t, f.order(), g);
                norm = mul_mod(norm, t, g);
            }
            b = pow_mod(norm, (f.order() - 1) / 2, g) - Poly::one(f);
        }
        Poly s = gcd(g, b);
        if (s.degree() > Degree(0) && s.degree() < g.degree()) {
            equal_degree(s, d, rng, out);
            equal_degree(g / s, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization over the coefficient field. Deterministic per seed.
inline Factorization factor(const Poly& a, std::uint64_t seed = kDefaultFactorSeed) {
    if (a.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = a.lead();
    Poly m = a.monic();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, unsigned>> sqf;
    detail::square_free(m, 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<Poly> irreducibles;
            detail::equal_degree(block, d, rng, irreducibles);
            for (auto& p : irreducibles) out.factors.emplace_back(std::move(p), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    // merge repeats coming from different square-free layers
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& fe : out.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    out.factors = std::move(merged);
    return out;
}

inline bool is_irreducible(const Poly& a) {
    if (a.degree() < Degree(1)) return false;
    auto fz = factor(a);
    return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

// ---------------------------------------------------------------------------
// Cyclotomic cosets and minimal polynomials.

struct CyclotomicCoset {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t representative = 0;
    std::vector<std::uint64_t> members;  // sorted

    std::size_t size() const { return members.size(); }
    bool contains(std::uint64_t j) const { return std::binary_search(members.begin(), members.end(), j); }
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

inline void require_coprime(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || std::gcd(n, q) != 1)
        throw Error(Errc::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
}

inline CyclotomicCoset cyclotomic_coset(std::uint64_t i, std::uint64_t n, std::uint64_t q) {
    require_coprime(n, q);
    CyclotomicCoset c{n, q, 0, {}};
    std::uint64_t x = i % n;
    do {
        c.members.push_back(x);
        x = nt::mul_mod(x, q, n);
    } while (x != i % n);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    return c;
}

/// Partition of Z_n into q-cyclotomic cosets, sorted by representative.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
    require_coprime(n, q);
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        out.push_back(cyclotomic_coset(i, n, q));
        for (auto j : out.back().members) seen[j] = true;
    }
    return out;
}

/// The splitting field of x^n - 1 over GF(q) together with the fixed
/// primitive n-th root beta and the embedding of GF(q) into it.
class RootContext {
   public:
    RootContext(Field base, std::uint64_t n) : base_(std::move(base)), n_(n) {
        require_coprime(n, base_.order());
        ext_degree_ = static_cast<unsigned>(nt::multiplicative_order(base_.order() % n, n));
        ext_ = extension_field(base_.characteristic(), base_.degree() * ext_degree_);
        beta_ = smallest_element_of_order(ext_, n).value();
        build_embedding();
    }

    const Field& base() const { return base_; }
    const Field& extension() const { return ext_; }
    std::uint64_t n() const { return n_; }
    unsigned extension_degree() const { return ext_degree_; }
    /// beta as a canonical integer of the extension field.
    Symbol beta() const { return beta_; }
    Symbol beta_power(std::uint64_t j) const { return ext_.pow(beta_, j % n_); }

    Symbol embed(Symbol base_value) const { return to_ext_[base_value]; }

    /// Maps an extension element lying in the base field back; throws otherwise.
    Symbol restrict(Symbol ext_value) const {
        auto it = to_base_.find(ext_value);
        if (it == to_base_.end()) throw Error(Errc::BadParameter, "element not in base field");
        return it->second;
    }

    /// prod_{j in coset} (x - beta^j), with coefficients in the base field.
    Poly minimal_polynomial(const CyclotomicCoset& coset) const {
        if (coset.n != n_ || coset.q != base_.order())
            throw Error(Errc::BadParameter, "coset parameters do not match context");
        return product_over(coset.members);
    }

    /// prod_{j in exponents} (x - beta^j); exponents must form a union of cosets.
    Poly product_over(const std::vector<std::uint64_t>& exponents) const {
        Poly acc = Poly::one(ext_);
        for (auto j : exponents) acc *= Poly::linear(ext_, beta_power(j));
        std::vector<Symbol> c;
        c.reserve(acc.coeffs().size());
        for (Symbol s : acc.coeffs()) c.push_back(restrict(s));
        return Poly(base_, std::move(c));
    }

    /// Exponents j in Z_n with g(beta^j) = 0.
    std::vector<std::uint64_t> zeros_of(const Poly& g) const {
        g.check(base_);
        std::vector<Symbol> c;
        for (Symbol s : g.coeffs()) c.push_back(embed(s));
        Poly lifted(ext_, std::move(c));
        std::vector<std::uint64_t> out;
        for (std::uint64_t j = 0; j < n_; ++j)
            if (lifted.eval(beta_power(j)) == 0) out.push_back(j);
        return out;
    }

   private:
    void build_embedding() {
        const std::uint64_t q = base_.order();
        to_ext_.assign(q, 0);
        if (base_.is_prime_field()) {
            for (Symbol a = 0; a < q; ++a) to_ext_[a] = a;
        } else {
            // Root of the base modulus inside the subfield of order q.
            const Symbol gamma = element_of_order_any(ext_, q - 1);
            std::vector<Symbol> mod_ext(base_.modulus().begin(), base_.modulus().end());
            Poly m(ext_, mod_ext);
            Symbol root = 0;
            bool found = false;
            Symbol cur = 1;
            for (std::uint64_t i = 0; i < q - 1; ++i) {
                if (m.eval(cur) == 0 && (!found || cur < root)) {
                    root = cur;
                    found = true;
                }
                cur = ext_.mul(cur, gamma);
            }
            if (!found) throw Error(Errc::BadParameter, "embedding root not found");
            for (Symbol a = 0; a < q; ++a) {
                auto digits = base_.coordinates(a);
                Symbol v = 0, rp = 1;
                for (auto d : digits) {
                    v = ext_.add(v, ext_.mul(d, rp));
                    rp = ext_.mul(rp, root);
                }
                to_ext_[a] = v;
            }
        }
        for (Symbol a = 0; a < q; ++a) to_base_.emplace(to_ext_[a], a);
    }

    Field base_;
    std::uint64_t n_;
    unsigned ext_degree_ = 1;
    Field ext_;
    Symbol beta_ = 1;
    std::vector<Symbol> to_ext_;
    std::unordered_map<Symbol, Symbol> to_base_;
};

inline Poly minimal_polynomial(const CyclotomicCoset& coset, const Field& base) {
    return RootContext(base, coset.n).minimal_polynomial(coset);
}

}  // namespace spair
