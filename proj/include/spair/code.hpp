#pragma once

// Constacyclic codes C = <g(x)> in GF(q)[x]/(x^n - lambda) and the
// symbol-pair read machinery.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spair/error.hpp"
#include "spair/gf.hpp"
#include "spair/poly.hpp"

namespace spair {

/// A length-n vector over a field, indexed cyclically.
class Word {
   public:
    Word() = default;
    Word(Field f, std::vector<Symbol> s) : field_(std::move(f)), s_(std::move(s)) {}
    static Word zero(const Field& f, std::size_t n) { return Word(f, std::vector<Symbol>(n, 0)); }
    static Word from_integers(const Field& f, const std::vector<std::int64_t>& v) {
        std::vector<Symbol> s;
        for (auto x : v) s.push_back(f.from_integer(x));
        return Word(f, std::move(s));
    }

    const Field& field() const { return field_; }
    const std::vector<Symbol>& symbols() const { return s_; }
    std::size_t size() const { return s_.size(); }
    Symbol operator[](std::size_t i) const { return s_[i]; }

    std::size_t hamming_weight() const {
        return static_cast<std::size_t>(std::count_if(s_.begin(), s_.end(), [](Symbol v) { return v != 0; }));
    }

    Poly as_poly() const { return Poly(field_, s_); }

    friend Word operator-(const Word& a, const Word& b) {
        check_compatible(a, b);
        std::vector<Symbol> d(a.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.field_.sub(a.s_[i], b.s_[i]);
        return Word(a.field_, std::move(d));
    }
    friend Word operator+(const Word& a, const Word& b) {
        check_compatible(a, b);
        std::vector<Symbol> d(a.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.field_.add(a.s_[i], b.s_[i]);
        return Word(a.field_, std::move(d));
    }
    friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_ && a.field_ == b.field_; }

    static void check_compatible(const Word& a, const Word& b) {
        if (!(a.field_ == b.field_)) throw Error(Errc::FieldMismatch, "words over different fields");
        if (a.size() != b.size())
            throw Error(Errc::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }

   private:
    Field field_;
    std::vector<Symbol> s_;
};

using SymbolPair = std::pair<Symbol, Symbol>;

/// pi(a) = [(a_0, a_1), (a_1, a_2), ..., (a_{n-1}, a_0)].
struct PairReadVector {
    std::vector<SymbolPair> pairs;
    std::size_t size() const { return pairs.size(); }
    friend bool operator==(const PairReadVector&, const PairReadVector&) = default;
};

inline PairReadVector pair_read_vector(const Word& a) {
    const std::size_t n = a.size();
    if (n < 2) throw Error(Errc::LengthTooShort, "pair read needs n >= 2");
    PairReadVector pi;
    pi.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pi.pairs.emplace_back(a[i], a[(i + 1) % n]);
    return pi;
}

/// Pair weight by the run identity: 0 for the zero word, n when every symbol
/// is nonzero, otherwise w_H plus the number of maximal circular runs of
/// nonzero symbols.
inline std::size_t pair_weight(const Word& a) {
    const std::size_t n = a.size();
    if (n < 2) throw Error(Errc::LengthTooShort, "pair weight needs n >= 2");
    const std::size_t w = a.hamming_weight();
    if (w == 0) return 0;
    if (w == n) return n;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0 && a[(i + n - 1) % n] == 0) ++runs;
    return w + runs;
}

inline std::size_t pair_distance(const Word& a, const Word& b) {
    Word::check_compatible(a, b);
    return pair_weight(a - b);
}

inline std::size_t hamming_distance(const Word& a, const Word& b) {
    Word::check_compatible(a, b);
    return (a - b).hamming_weight();
}

/// tau_lambda(x_0, ..., x_{n-1}) = (lambda x_{n-1}, x_0, ..., x_{n-2}).
inline Word constacyclic_shift(Symbol lambda, const Word& a) {
    const std::size_t n = a.size();
    if (n == 0) return a;
    std::vector<Symbol> s(n);
    s[0] = a.field().mul(lambda, a[n - 1]);
    for (std::size_t i = 1; i < n; ++i) s[i] = a[i - 1];
    return Word(a.field(), std::move(s));
}

/// Row-major dense matrix over a field.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Symbol> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    Symbol& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Symbol at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank by Gaussian elimination.
inline std::size_t rank(Matrix m, const Field& f) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        const Symbol inv = f.inv(m.at(r, c));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Symbol factor = f.mul(m.at(i, c), inv);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

class ConstacyclicCode {
   public:
    /// C = <g> in GF(q)[x]/(x^n - lambda); g must be monic and divide x^n - lambda.
    static ConstacyclicCode from_generator(const Field& f, std::size_t n, Symbol lambda, const Poly& g) {
        if (n == 0) throw Error(Errc::BadParameter, "length must be positive");
        if (lambda == 0 || !f.contains(lambda)) throw Error(Errc::BadParameter, "lambda must be a nonzero field element");
        g.check(f);
        if (!g.is_monic()) throw Error(Errc::BadParameter, "generator must be monic");
        if (!divides(g, Poly::binomial(f, n, lambda)))
            throw Error(Errc::NotDivisor, g.to_string() + " does not divide x^" + std::to_string(n) + " - " +
                                              std::to_string(lambda));
        ConstacyclicCode c;
        c.field_ = f;
        c.n_ = n;
        c.lambda_ = lambda;
        c.g_ = g;
        c.k_ = n - g.size_degree();
        return c;
    }

    /// Simple-root cyclic code whose generator vanishes exactly at beta^j, j in T.
    static ConstacyclicCode from_defining_set(const Field& f, std::size_t n, const std::vector<std::uint64_t>& T) {
        RootContext ctx(f, n);
        return from_defining_set(ctx, T);
    }

    static ConstacyclicCode from_defining_set(const RootContext& ctx, std::vector<std::uint64_t> T) {
        const std::uint64_t n = ctx.n(), q = ctx.base().order();
        std::sort(T.begin(), T.end());
        T.erase(std::unique(T.begin(), T.end()), T.end());
        for (auto j : T) {
            if (j >= n) throw Error(Errc::NotUnionOfCosets, "exponent " + std::to_string(j) + " outside Z_n");
            if (!std::binary_search(T.begin(), T.end(), nt::mul_mod(j, q, n)))
                throw Error(Errc::NotUnionOfCosets, "T not closed under multiplication by q at " + std::to_string(j));
        }
        ConstacyclicCode c = from_generator(ctx.base(), n, 1, ctx.product_over(T));
        c.defining_set_ = T;
        c.beta_ = ctx.beta();
        return c;
    }

    const Field& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    Symbol lambda() const { return lambda_; }
    const Poly& generator() const { return g_; }
    bool is_cyclic() const { return lambda_ == 1; }
    /// gcd(n, p) = 1.
    bool is_simple_root() const { return n_ % field_.characteristic() != 0; }
    const std::optional<std::vector<std::uint64_t>>& defining_set() const { return defining_set_; }
    /// beta (in the splitting field) that the defining set refers to.
    std::optional<Symbol> beta() const { return beta_; }

    /// h(x) = (x^n - lambda) / g(x).
    Poly check_polynomial() const { return Poly::binomial(field_, n_, lambda_) / g_; }

    Word encode(const std::vector<Symbol>& message) const {
        if (message.size() != k_)
            throw Error(Errc::LengthMismatch, "message length " + std::to_string(message.size()) + " != k = " +
                                                  std::to_string(k_));
        Poly c = Poly(field_, message) * g_;
        std::vector<Symbol> s(n_, 0);
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) s[i] = c.coeffs()[i];
        return Word(field_, std::move(s));
    }

    bool is_member(const Word& w) const {
        if (w.size() != n_) throw Error(Errc::LengthMismatch, "word length != n");
        if (!(w.field() == field_)) throw Error(Errc::FieldMismatch, "word over a different field");
        return divides(g_, w.as_poly());
    }

    /// Rows x^i g(x), i = 0..k-1.
    Matrix generator_matrix() const {
        if (k_ == 0) throw Error(Errc::DegenerateCode, "zero code has no generator matrix");
        Matrix G(k_, n_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < g_.coeffs().size(); ++j) G.at(i, i + j) = g_.coeffs()[j];
        return G;
    }

    /// Rows enforce the vanishing of coefficients x^k..x^{n-1} of c(x)h(x).
    Matrix parity_check_matrix() const {
        if (k_ == 0 || k_ == n_) throw Error(Errc::DegenerateCode, "parity check needs 1 <= k <= n - 1");
        const Poly h = check_polynomial();
        Matrix H(n_ - k_, n_);
        for (std::size_t r = 0; r < n_ - k_; ++r) {
            const std::size_t j = r + k_;
            for (std::size_t i = r; i <= j; ++i) H.at(r, i) = h.coeff(j - i);
        }
        return H;
    }

    std::string describe() const {
        return "[" + std::to_string(n_) + "," + std::to_string(k_) + "] " + (is_cyclic() ? "cyclic" : "constacyclic") +
               " code over " + field_.name() + ", g = " + g_.to_string();
    }

   private:
    ConstacyclicCode() = default;

    Field field_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Symbol lambda_ = 1;
    Poly g_;
    std::optional<std::vector<std::uint64_t>> defining_set_;
    std::optional<Symbol> beta_;
};

}  // namespace spair
