/*
   Copyright 2026 The gaglrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file linear_code.hpp
 * @brief Linear codes over GF(q): Reed-Solomon and parity-check builders, encoding,
 * minimum distance (exhaustive and certified bounds) and erasure recovery.
 *
 * Messages are row vectors; the codeword of m is m * G.
 */

#ifndef GAGLRC_LINEAR_CODE_HPP
#define GAGLRC_LINEAR_CODE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "finite_field.hpp"
#include "matrix.hpp"

namespace gaglrc {

/// Thrown when q^k exceeds the exhaustive-search budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A claimed distance could not be certified; positions() is a dependent column set (0-indexed).
class CertificationFailure : public std::runtime_error {
   public:
    CertificationFailure(const std::string& what, std::vector<std::size_t> positions)
        : std::runtime_error(what), positions_(std::move(positions)) {}
    const std::vector<std::size_t>& positions() const noexcept { return positions_; }

   private:
    std::vector<std::size_t> positions_;
};

/// Erasure pattern leaves no information set.
class RecoveryImpossible : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class LinearCode {
   public:
    LinearCode() = default;

    /// @throws std::invalid_argument unless gen has full row rank k with 1 <= k <= n.
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {
        if (gen_.rows() < 1 || gen_.rows() > gen_.cols())
            throw std::invalid_argument("generator must satisfy 1 <= k <= n");
        if (gen_.rank() != gen_.rows()) throw std::invalid_argument("generator matrix does not have full row rank");
    }

    const Field& field() const noexcept { return gen_.field(); }
    const Matrix& generator() const noexcept { return gen_; }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }

    std::optional<int> exact_distance() const noexcept { return d_exact_; }
    std::optional<int> distance_lower() const noexcept { return d_lower_; }
    std::optional<int> distance_upper() const noexcept { return d_upper_; }

    void record_exact_distance(int d) noexcept { d_exact_ = d_lower_ = d_upper_ = d; }
    void record_distance_bounds(int lower, std::optional<int> upper) noexcept {
        d_lower_ = lower;
        d_upper_ = upper;
        if (upper && *upper == lower) d_exact_ = lower;
    }

    std::vector<Symbol> encode(std::span<const Symbol> message) const {
        if (message.size() != dimension()) throw std::invalid_argument("message length does not match code dimension");
        for (Symbol s : message)
            if (s >= field().order()) throw std::invalid_argument("message symbol out of range");
        return gen_.left_multiply(message);
    }

   private:
    Matrix gen_;
    std::optional<int> d_exact_;
    std::optional<int> d_lower_;
    std::optional<int> d_upper_;
};

inline std::size_t hamming_weight(std::span<const Symbol> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

/// Generator rows (alpha_j^i)_j for i = 0..k-1. The resulting code is MDS.
inline LinearCode rs_code(const Field& field, std::span<const Symbol> points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw std::invalid_argument("Reed-Solomon code needs 1 <= k <= n");
    if (n > field.order()) throw std::invalid_argument("more evaluation points than field elements");
    std::set<Symbol> seen;
    for (Symbol a : points) {
        if (a >= field.order()) throw std::invalid_argument("evaluation point out of range");
        if (!seen.insert(a).second) throw std::invalid_argument("duplicate evaluation point " + field.render(a));
    }
    Matrix g(field, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Symbol x = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = field.mul(x, points[j]);
        }
    }
    LinearCode code(std::move(g));
    code.record_exact_distance(static_cast<int>(n - k + 1));
    return code;
}

/// RS code at the first n elements in enumeration order.
inline LinearCode rs_code(const Field& field, std::size_t n, std::size_t k) {
    if (n > field.order()) throw std::invalid_argument("more evaluation points than field elements");
    std::vector<Symbol> pts = field.enumerate();
    pts.resize(n);
    return rs_code(field, pts, k);
}

/// The [r+1, r, 2] single parity check code, generator [I_r | -1].
inline LinearCode parity_check_code(const Field& field, std::size_t r) {
    if (r < 1) throw std::invalid_argument("parity check code needs r >= 1");
    Matrix g(field, r, r + 1);
    const Symbol minus_one = field.neg(1);
    for (std::size_t i = 0; i < r; ++i) {
        g(i, i) = 1;
        g(i, r) = minus_one;
    }
    LinearCode code(std::move(g));
    code.record_exact_distance(2);
    return code;
}

inline std::vector<Symbol> encode(const LinearCode& code, std::span<const Symbol> message) { return code.encode(message); }

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 26;

/// Worker count: GAG_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GAG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/**
 * @brief Exact minimum distance by enumerating one message per projective point.
 *
 * Only messages whose first nonzero symbol is 1 are visited (weight is
 * invariant under scaling). Each message differs from its predecessor in
 * amortised O(1) coordinates, and the codeword is updated by adding a
 * precomputed multiple of the corresponding generator row.
 *
 * @throws BudgetExceeded if q^k > budget.
 */
inline int min_distance_exhaustive(const LinearCode& code, std::uint64_t budget = kDefaultSearchBudget,
                                   unsigned threads = 0) {
    const Field& F = code.field();
    const std::size_t k = code.dimension(), n = code.length();
    const std::uint32_t q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > budget)
            throw BudgetExceeded("exhaustive search needs " + std::to_string(q) + "^" + std::to_string(k) +
                                 " codewords, over budget " + std::to_string(budget));
    }
    const Matrix& G = code.generator();

    // scaled[(i * q + c) * n + j] = c * G(i, j)
    std::vector<Symbol> scaled(k * q * n);
    for (std::size_t i = 0; i < k; ++i)
        for (Symbol c = 0; c < q; ++c)
            for (std::size_t j = 0; j < n; ++j) scaled[(i * q + c) * n + j] = F.mul(c, G(i, j));
    auto row_multiple = [&](std::size_t i, Symbol c) { return scaled.data() + (i * q + c) * n; };

    struct Task {
        std::size_t lead;  // coordinate fixed to 1; earlier ones are 0
        Symbol next;       // value of coordinate lead+1 (if any)
    };
    std::vector<Task> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        if (lead + 1 < k)
            for (Symbol v = 0; v < q; ++v) tasks.push_back({lead, v});
        else
            tasks.push_back({lead, 0});
    }

    std::atomic<int> best{static_cast<int>(n) + 1};
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        std::vector<Symbol> cw(n);
        std::vector<Symbol> digits;
        while (true) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size() || best.load() <= 1) return;
            const Task task = tasks[t];
            const Symbol* lead_row = row_multiple(task.lead, 1);
            std::copy(lead_row, lead_row + n, cw.begin());
            std::size_t first_free = task.lead + 1;
            if (first_free < k) {
                const Symbol* nr = row_multiple(first_free, task.next);
                for (std::size_t j = 0; j < n; ++j) cw[j] = F.add(cw[j], nr[j]);
                ++first_free;
            }
            const std::size_t free_count = k - first_free;
            digits.assign(free_count, 0);
            int local = best.load();
            while (true) {
                const int w = static_cast<int>(hamming_weight(cw));
                if (w < local) local = w;
                std::size_t d = 0;
                for (; d < free_count; ++d) {
                    const Symbol old = digits[d];
                    const Symbol nxt = old + 1 == q ? 0 : old + 1;
                    const Symbol* delta = row_multiple(first_free + d, F.sub(nxt, old));
                    for (std::size_t j = 0; j < n; ++j) cw[j] = F.add(cw[j], delta[j]);
                    digits[d] = nxt;
                    if (nxt != 0) break;
                }
                if (d == free_count) break;
            }
            int cur = best.load();
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        }
    };

    unsigned nthreads = threads ? threads : worker_count();
    nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, tasks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return best.load();
}

/// Parity-check matrix H (n-k rows) with H * c^T = 0 for every codeword, in original coordinates.
inline Matrix parity_check_matrix(const LinearCode& code) {
    const Field& F = code.field();
    Matrix r = code.generator();
    const auto pivots = r.rref();
    const std::size_t n = code.length(), k = code.dimension();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix h(F, n - k, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        h(row, c) = 1;
        for (std::size_t i = 0; i < k; ++i) h(row, pivots[i]) = F.neg(r(i, c));
        ++row;
    }
    return h;
}

struct DistanceBounds {
    int lower = 0;
    std::optional<int> upper;
};

/**
 * @brief Certifies d >= claim_w (2 or 3) from a parity-check matrix and bounds d
 * from above by the weight of an optional witness codeword.
 *
 * claim 2: no column of H is zero. claim 3: additionally no two columns are
 * proportional (checked by normalising each column).
 *
 * @throws CertificationFailure with the dependent column set.
 */
inline DistanceBounds distance_bounds(const LinearCode& code, int claim_w,
                                      std::optional<std::vector<Symbol>> witness = std::nullopt) {
    if (claim_w != 2 && claim_w != 3) throw std::invalid_argument("distance claim must be 2 or 3");
    const Field& F = code.field();
    const Matrix h = parity_check_matrix(code);
    const std::size_t n = code.length();
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Symbol> col = h.column(j);
        auto first = std::find_if(col.begin(), col.end(), [](Symbol s) { return s != 0; });
        if (first == col.end())
            throw CertificationFailure("parity-check column " + std::to_string(j + 1) + " is zero", {j});
        if (claim_w == 3) {
            const Symbol inv = F.inv(*first);
            std::string key;
            key.reserve(col.size() * 3);
            for (Symbol s : col) {
                key += std::to_string(F.mul(s, inv));
                key += ',';
            }
            auto [it, fresh] = seen.emplace(std::move(key), j);
            if (!fresh)
                throw CertificationFailure("parity-check columns " + std::to_string(it->second + 1) + " and " +
                                               std::to_string(j + 1) + " are dependent",
                                           {it->second, j});
        }
    }
    DistanceBounds out{claim_w, std::nullopt};
    if (witness) {
        const auto cw = code.encode(*witness);
        const int w = static_cast<int>(hamming_weight(cw));
        if (w == 0) throw std::invalid_argument("witness message encodes to the zero codeword");
        if (w < claim_w) throw std::logic_error("witness weight contradicts the certified lower bound");
        out.upper = w;
    }
    return out;
}

struct Recovery {
    std::vector<Symbol> message;
    std::vector<std::size_t> positions;  // 0-indexed, ascending
};

/**
 * @brief Recovers the message from a word with erasures (nullopt entries).
 *
 * Picks the lexicographically first information set among unerased positions
 * (greedy column selection, which yields the lex-first basis of the column
 * matroid) and solves m * G_S = c_S.
 *
 * @throws RecoveryImpossible if the unerased columns have rank < k.
 * @throws std::invalid_argument if the unerased symbols are not consistent with any codeword.
 */
inline Recovery information_set_recover(const LinearCode& code, std::span<const std::optional<Symbol>> received) {
    const Field& F = code.field();
    const std::size_t n = code.length(), k = code.dimension();
    if (received.size() != n) throw std::invalid_argument("received word length does not match code length");
    const Matrix& G = code.generator();

    // Incremental elimination: basis vectors in echelon form keyed by pivot row index.
    std::vector<std::vector<Symbol>> basis;
    std::vector<std::size_t> pivot_of;
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < n && chosen.size() < k; ++j) {
        if (!received[j]) continue;
        if (*received[j] >= F.order()) throw std::invalid_argument("received symbol out of range");
        std::vector<Symbol> v = G.column(j);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Symbol c = v[pivot_of[b]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < k; ++i) v[i] = F.sub(v[i], F.mul(c, basis[b][i]));
        }
        auto piv = std::find_if(v.begin(), v.end(), [](Symbol s) { return s != 0; });
        if (piv == v.end()) continue;
        const auto pivot = static_cast<std::size_t>(piv - v.begin());
        const Symbol inv = F.inv(*piv);
        for (auto& s : v) s = F.mul(s, inv);
        basis.push_back(std::move(v));
        pivot_of.push_back(pivot);
        chosen.push_back(j);
    }
    if (chosen.size() < k) throw RecoveryImpossible("unerased positions do not contain an information set");

    std::vector<Symbol> rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = *received[chosen[i]];
    auto msg = solve_left(G.columns(chosen), rhs);
    if (!msg) throw std::logic_error("selected information set is singular");

    const auto cw = code.encode(*msg);
    for (std::size_t j = 0; j < n; ++j)
        if (received[j] && *received[j] != cw[j])
            throw std::invalid_argument("received word is not consistent with any codeword (position " +
                                        std::to_string(j + 1) + ")");
    return {std::move(*msg), std::move(chosen)};
}

}  // namespace gaglrc

#endif  // GAGLRC_LINEAR_CODE_HPP
