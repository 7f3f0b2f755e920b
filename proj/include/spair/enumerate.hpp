#pragma once

// Minimum Hamming and symbol-pair distance by information-set enumeration.
//
// The generator matrix is reduced to systematic form on the first k
// independent columns. Messages are scanned layer by layer (Hamming weight of
// the message), supports in colexicographic order and nonzero values in
// canonical order. A codeword of weight w has at most w nonzero information
// symbols, so after layers 1..L every codeword of weight <= L has been seen.
//
// For constacyclic codes the shift tau_lambda and nonzero scalings preserve
// both Hamming and pair weight, and every nonzero codeword has such an image
// with c_0 = 1. With shift symmetry enabled only messages with u_0 = 1 are
// scanned (column 0 is always the first information column of <g(x)>).
//
// Layers may be split into contiguous support-rank shards run on separate
// threads; the min-reduction keeps the earliest witness, so results do not
// depend on the shard count.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spair/code.hpp"
#include "spair/error.hpp"

namespace spair {

inline constexpr std::uint64_t kDefaultBudget = 4'000'000'000ULL;
inline constexpr std::size_t kNoDistance = std::numeric_limits<std::size_t>::max();

enum class DistanceMethod { Exhaustive, BoundedWeight, Castagnoli };

constexpr std::string_view to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Exhaustive: return "exhaustive";
        case DistanceMethod::BoundedWeight: return "bounded_weight";
        case DistanceMethod::Castagnoli: return "castagnoli";
    }
    return "unknown";
}

struct DistanceResult {
    std::size_t value = 0;
    DistanceMethod method = DistanceMethod::Exhaustive;
    bool certified = false;
    /// value is a proven lower bound rather than the exact minimum
    bool lower_bound_only = false;
    std::uint64_t enumerations = 0;
    std::optional<Word> witness;

    bool exact() const { return certified && !lower_bound_only; }
};

/// Thrown when the next enumeration step would exceed the budget. Carries the
/// bounds proven so far (upper_bound = kNoDistance when nothing was seen).
class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::size_t lower, std::size_t upper, std::uint64_t spent, std::uint64_t needed)
        : Error(Errc::BudgetExceeded, "needs " + std::to_string(needed) + " encodings; bounds so far [" +
                                          std::to_string(lower) + ", " +
                                          (upper == kNoDistance ? std::string("?") : std::to_string(upper)) + "]"),
          lower_bound(lower),
          upper_bound(upper),
          enumerations(spent) {}

    std::size_t lower_bound;
    std::size_t upper_bound;
    std::uint64_t enumerations;
};

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// A message of the systematic encoder: information indices and their values.
struct Message {
    std::vector<unsigned> support;
    std::vector<Symbol> values;
};

struct LayerResult {
    std::uint64_t count = 0;
    std::size_t min_hamming = kNoDistance;
    std::size_t min_pair = kNoDistance;
    Message hamming_witness;
    Message pair_witness;

    void merge(const LayerResult& later) {
        count += later.count;
        if (later.min_hamming < min_hamming) {
            min_hamming = later.min_hamming;
            hamming_witness = later.hamming_witness;
        }
        if (later.min_pair < min_pair) {
            min_pair = later.min_pair;
            pair_witness = later.pair_witness;
        }
    }
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

class InformationSetEnumerator {
   public:
    static constexpr std::size_t kMaxLength = 1024;

    InformationSetEnumerator(const Field& f, const Matrix& G) : field_(f) { build(G); }
    explicit InformationSetEnumerator(const ConstacyclicCode& code, bool shift_symmetry = true)
        : field_(code.field()) {
        build(code.generator_matrix());
        normalized_ = shift_symmetry && !info_cols_.empty() && info_cols_[0] == 0;
    }

    bool shift_normalized() const { return normalized_; }

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    const std::vector<std::size_t>& information_set() const { return info_cols_; }

    /// Number of messages of Hamming weight exactly w (saturating).
    std::uint64_t layer_size(unsigned w) const {
        if (w == 0 || w > k_) return 0;
        const unsigned free = normalized_ ? w - 1 : w;
        std::uint64_t s = nt::binomial(free_universe(), free);
        for (unsigned i = 0; i < free; ++i) s = saturating_mul(s, q_ - 1);
        return s;
    }

    LayerResult scan_layer(unsigned w, bool track_pair, unsigned threads = 1) const {
        if (w == 0 || w > k_) return {};
        const std::uint64_t supports = nt::binomial(free_universe(), normalized_ ? w - 1 : w);
        const std::uint64_t shards = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, supports));
        std::vector<LayerResult> parts(shards);
        auto run = [&](std::uint64_t s) {
            const std::uint64_t begin = supports * s / shards, end = supports * (s + 1) / shards;
            parts[s] = dispatch(w, begin, end, track_pair);
        };
        if (shards == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (std::uint64_t s = 0; s < shards; ++s) pool.emplace_back(run, s);
            for (auto& t : pool) t.join();
        }
        LayerResult out;
        for (const auto& p : parts) out.merge(p);
        return out;
    }

    Word codeword(const Message& m) const {
        std::vector<Symbol> c(n_, 0);
        std::vector<Symbol> parity(r_, 0);
        for (std::size_t i = 0; i < m.support.size(); ++i) {
            const unsigned row = m.support[i];
            const Symbol v = m.values[i];
            c[info_cols_[row]] = v;
            for (std::size_t j = 0; j < r_; ++j)
                parity[j] = field_.add(parity[j], field_.mul(v, parity_rows_[row * r_ + j]));
        }
        for (std::size_t j = 0; j < r_; ++j) c[red_cols_[j]] = parity[j];
        return Word(field_, std::move(c));
    }

   private:
    std::size_t free_universe() const { return normalized_ ? k_ - 1 : k_; }

    void build(Matrix G) {
        q_ = field_.order();
        if (q_ > kTabulatedOrderLimit) throw Error(Errc::FieldTooLarge, "distance enumeration needs q <= 65536");
        n_ = G.cols;
        if (n_ > kMaxLength) throw Error(Errc::BadParameter, "length above enumeration limit");
        // reduced row echelon form; pivots are the first independent columns
        std::size_t r = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < G.cols && r < G.rows; ++c) {
            std::size_t piv = r;
            while (piv < G.rows && G.at(piv, c) == 0) ++piv;
            if (piv == G.rows) continue;
            for (std::size_t j = 0; j < G.cols; ++j) std::swap(G.at(r, j), G.at(piv, j));
            const Symbol inv = field_.inv(G.at(r, c));
            for (std::size_t j = 0; j < G.cols; ++j) G.at(r, j) = field_.mul(G.at(r, j), inv);
            for (std::size_t i = 0; i < G.rows; ++i) {
                if (i == r || G.at(i, c) == 0) continue;
                const Symbol f = G.at(i, c);
                for (std::size_t j = 0; j < G.cols; ++j) G.at(i, j) = field_.sub(G.at(i, j), field_.mul(f, G.at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        k_ = r;
        info_cols_ = pivots;
        std::vector<bool> is_info(n_, false);
        for (auto c : pivots) is_info[c] = true;
        for (std::size_t c = 0; c < n_; ++c)
            if (!is_info[c]) red_cols_.push_back(c);
        r_ = red_cols_.size();
        parity_rows_.assign(k_ * r_, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < r_; ++j) parity_rows_[i * r_ + j] = G.at(i, red_cols_[j]);
        scaled_.assign(k_ * (q_ - 1) * r_, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (Symbol v = 1; v < q_; ++v)
                for (std::size_t j = 0; j < r_; ++j)
                    scaled_[(i * (q_ - 1) + (v - 1)) * r_ + j] =
                        static_cast<std::uint16_t>(field_.mul(v, parity_rows_[i * r_ + j]));
        if (q_ <= 256) {
            add_table_.resize(q_ * q_);
            for (Symbol a = 0; a < q_; ++a)
                for (Symbol b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(field_.add(a, b));
        }
    }

    LayerResult dispatch(unsigned w, std::uint64_t begin, std::uint64_t end, bool track_pair) const {
        if (n_ <= 64) return scan_range<1>(w, begin, end, track_pair);
        if (n_ <= 256) return scan_range<4>(w, begin, end, track_pair);
        return scan_range<16>(w, begin, end, track_pair);
    }

    template <std::size_t W>
    using Mask = std::array<std::uint64_t, W>;

    template <std::size_t W>
    static void set_bit(Mask<W>& m, std::size_t i) {
        m[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    // |{i : bit i or bit i+1 mod n set}|
    template <std::size_t W>
    std::size_t pair_count(const Mask<W>& m) const {
        if constexpr (W == 1) {
            const std::uint64_t rot = (m[0] >> 1) | ((m[0] & 1) << (n_ - 1));
            return static_cast<std::size_t>(std::popcount(m[0] | rot));
        } else {
            std::size_t total = 0;
            const std::size_t words = (n_ + 63) / 64;
            for (std::size_t i = 0; i < words; ++i) {
                std::uint64_t shifted = m[i] >> 1;
                if (i + 1 < words) shifted |= m[i + 1] << 63;
                total += static_cast<std::size_t>(std::popcount(m[i] | shifted));
            }
            // wrap: pair n-1 reads (x_{n-1}, x_0)
            const bool last = (m[(n_ - 1) >> 6] >> ((n_ - 1) & 63)) & 1;
            if (!last && (m[0] & 1)) ++total;
            return total;
        }
    }

    // colex unranking: rank = sum_i C(c_i, i + 1)
    static void unrank_colex(std::uint64_t rank, unsigned w, std::uint64_t universe, std::vector<unsigned>& c) {
        c.assign(w, 0);
        std::uint64_t top = universe;
        for (unsigned i = w; i-- > 0;) {
            std::uint64_t x = i;
            // largest x < top with C(x, i + 1) <= rank
            std::uint64_t lo = i, hi = top - 1;
            while (lo < hi) {
                const std::uint64_t mid = (lo + hi + 1) / 2;
                if (nt::binomial(mid, i + 1) <= rank)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            x = lo;
            c[i] = static_cast<unsigned>(x);
            rank -= nt::binomial(x, i + 1);
            top = x;
        }
    }

    static bool next_colex(std::vector<unsigned>& c, std::uint64_t universe) {
        const unsigned w = static_cast<unsigned>(c.size());
        for (unsigned j = 0; j < w; ++j) {
            const unsigned limit = (j + 1 < w) ? c[j + 1] : static_cast<unsigned>(universe);
            if (c[j] + 1 < limit) {
                ++c[j];
                for (unsigned i = 0; i < j; ++i) c[i] = i;
                return true;
            }
        }
        return false;
    }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return static_cast<std::uint16_t>(field_.add(a, b));
    }

    template <std::size_t W>
    LayerResult scan_range(unsigned w, std::uint64_t begin, std::uint64_t end, bool track_pair) const {
        LayerResult out;
        if (begin >= end) return out;
        const unsigned fixed = normalized_ ? 1 : 0;
        std::vector<unsigned> free_part;
        unrank_colex(begin, w - fixed, free_universe(), free_part);
        std::vector<unsigned> support(w, 0);
        std::vector<std::uint16_t> partial((w + 1) * r_, 0);
        std::vector<Symbol> values(w, 0);
        const std::uint64_t qm1 = q_ - 1;

        for (std::uint64_t rank = begin; rank < end; ++rank) {
            for (unsigned i = 0; i < free_part.size(); ++i) support[i + fixed] = free_part[i] + fixed;
            Mask<W> info_mask{};
            for (unsigned pos : support) set_bit<W>(info_mask, info_cols_[pos]);

            // depth-first over values with partial parity sums per depth
            auto leaf = [&](const std::uint16_t* parity) {
                ++out.count;
                std::size_t weight = w;
                Mask<W> mask = info_mask;
                for (std::size_t j = 0; j < r_; ++j) {
                    if (parity[j]) {
                        ++weight;
                        set_bit<W>(mask, red_cols_[j]);
                    }
                }
                if (weight < out.min_hamming) {
                    out.min_hamming = weight;
                    out.hamming_witness = {support, values};
                }
                if (track_pair) {
                    const std::size_t pw = (weight == n_) ? n_ : pair_count<W>(mask);
                    if (pw < out.min_pair) {
                        out.min_pair = pw;
                        out.pair_witness = {support, values};
                    }
                }
            };

            auto descend = [&](auto&& self, unsigned depth) -> void {
                const std::uint16_t* base = &partial[depth * r_];
                std::uint16_t* next = &partial[(depth + 1) * r_];
                const std::size_t row = support[depth];
                const Symbol v_end = (depth < fixed) ? 1 : qm1;
                for (Symbol v = 1; v <= v_end; ++v) {
                    values[depth] = v;
                    const std::uint16_t* add_row = &scaled_[(row * qm1 + (v - 1)) * r_];
                    for (std::size_t j = 0; j < r_; ++j) next[j] = add(base[j], add_row[j]);
                    if (depth + 1 == w)
                        leaf(next);
                    else
                        self(self, depth + 1);
                }
            };
            descend(descend, 0);
            if (rank + 1 < end) next_colex(free_part, free_universe());
        }
        return out;
    }

    Field field_;
    std::uint64_t q_ = 0;
    std::size_t n_ = 0, k_ = 0, r_ = 0;
    std::vector<std::size_t> info_cols_, red_cols_;
    std::vector<Symbol> parity_rows_;
    std::vector<std::uint16_t> scaled_;
    std::vector<std::uint16_t> add_table_;
    bool normalized_ = false;
};

namespace detail {

inline std::uint64_t total_messages(const InformationSetEnumerator& e, unsigned from, unsigned to) {
    std::uint64_t s = 0;
    for (unsigned w = from; w <= to; ++w) s = saturating_add(s, e.layer_size(w));
    return s;
}

inline void require_nonzero(const InformationSetEnumerator& e) {
    if (e.dimension() == 0) throw Error(Errc::ZeroCode, "distance of the zero code is undefined");
}

}  // namespace detail

/// Exact d_H by scanning every nonzero message.
inline DistanceResult hamming_exhaustive(const InformationSetEnumerator& e, const EnumerationOptions& opt = {}) {
    detail::require_nonzero(e);
    const auto k = static_cast<unsigned>(e.dimension());
    const std::uint64_t need = detail::total_messages(e, 1, k);
    if (need > opt.budget) throw BudgetExceeded(1, kNoDistance, 0, need);
    LayerResult acc;
    for (unsigned w = 1; w <= k; ++w) acc.merge(e.scan_layer(w, false, opt.threads));
    return {acc.min_hamming, DistanceMethod::Exhaustive, true, false, acc.count, e.codeword(acc.hamming_witness)};
}

/// Scans messages of weight <= max_weight. Exact when a codeword of weight
/// <= max_weight exists; otherwise proves d_H >= max_weight + 1.
inline DistanceResult hamming_bounded(const InformationSetEnumerator& e, unsigned max_weight,
                                      const EnumerationOptions& opt = {}) {
    detail::require_nonzero(e);
    const auto k = static_cast<unsigned>(e.dimension());
    max_weight = std::min(max_weight, k);
    const std::uint64_t need = detail::total_messages(e, 1, max_weight);
    if (need > opt.budget) throw BudgetExceeded(1, kNoDistance, 0, need);
    LayerResult acc;
    for (unsigned w = 1; w <= max_weight; ++w) acc.merge(e.scan_layer(w, false, opt.threads));
    if (acc.min_hamming <= max_weight || max_weight == k)
        return {acc.min_hamming, DistanceMethod::BoundedWeight, true, false, acc.count, e.codeword(acc.hamming_witness)};
    return {std::size_t{max_weight} + 1, DistanceMethod::BoundedWeight, true, true, acc.count, std::nullopt};
}

/// Exact d_H by increasing the weight bound one layer at a time.
inline DistanceResult hamming_deepening(const InformationSetEnumerator& e, const EnumerationOptions& opt = {}) {
    detail::require_nonzero(e);
    const auto k = static_cast<unsigned>(e.dimension());
    LayerResult acc;
    for (unsigned w = 1; w <= k; ++w) {
        const std::uint64_t size = e.layer_size(w);
        if (saturating_add(acc.count, size) > opt.budget)
            throw BudgetExceeded(std::min<std::size_t>(acc.min_hamming, w), acc.min_hamming, acc.count,
                                 saturating_add(acc.count, size));
        acc.merge(e.scan_layer(w, false, opt.threads));
        if (acc.min_hamming <= w) break;
    }
    return {acc.min_hamming, DistanceMethod::BoundedWeight, true, false, acc.count, e.codeword(acc.hamming_witness)};
}

/// Exact d_p over all nonzero messages.
inline DistanceResult pair_exhaustive(const InformationSetEnumerator& e, const EnumerationOptions& opt = {}) {
    detail::require_nonzero(e);
    if (e.length() < 2) throw Error(Errc::LengthTooShort, "pair distance needs n >= 2");
    const auto k = static_cast<unsigned>(e.dimension());
    const std::uint64_t need = detail::total_messages(e, 1, k);
    if (need > opt.budget) throw BudgetExceeded(2, kNoDistance, 0, need);
    LayerResult acc;
    for (unsigned w = 1; w <= k; ++w) acc.merge(e.scan_layer(w, true, opt.threads));
    return {acc.min_pair, DistanceMethod::Exhaustive, true, false, acc.count, e.codeword(acc.pair_witness)};
}

/// Exact d_p by iterative deepening on the Hamming weight of scanned codewords.
///
/// After layers 1..L every codeword with w_H <= L is seen. An unseen nonzero
/// codeword has w_H >= L + 1 and hence w_p >= min(L + 2, n), so the smallest
/// pair weight m seen so far is the global minimum once m <= min(L + 2, n).
inline DistanceResult pair_deepening(const InformationSetEnumerator& e, const EnumerationOptions& opt = {}) {
    detail::require_nonzero(e);
    const std::size_t n = e.length();
    if (n < 2) throw Error(Errc::LengthTooShort, "pair distance needs n >= 2");
    const auto k = static_cast<unsigned>(e.dimension());
    LayerResult acc;
    for (unsigned L = 1; L <= k; ++L) {
        const std::uint64_t size = e.layer_size(L);
        if (saturating_add(acc.count, size) > opt.budget) {
            const std::size_t unseen_floor = std::min<std::size_t>(std::size_t{L} + 1, n);
            throw BudgetExceeded(std::min(acc.min_pair, unseen_floor), acc.min_pair, acc.count,
                                 saturating_add(acc.count, size));
        }
        acc.merge(e.scan_layer(L, true, opt.threads));
        if (acc.min_pair <= std::min<std::size_t>(std::size_t{L} + 2, n)) break;
    }
    return {acc.min_pair, DistanceMethod::BoundedWeight, true, false, acc.count, e.codeword(acc.pair_witness)};
}

}  // namespace spair
