/*
   Copyright 2026 The skewlcp Authors

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

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "skewlcp/kernels.hpp"
#include "skewlcp/lcp.hpp"

namespace skewlcp {

const char* to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Exhaustive:
            return "exhaustive";
        case DistanceMethod::Columns:
            return "column-independence";
        case DistanceMethod::Declared:
            return "declared-bound";
    }
    return "unknown";
}

const char* to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::Resolved:
            return "resolved";
        case DistanceStatus::BudgetExceeded:
            return "budget-exceeded";
        case DistanceStatus::Unavailable:
            return "unavailable";
    }
    return "unknown";
}

namespace {

// Field operations on flat arrays. Two instances: bytes with the SIMD
// kernels, and Elem with plain ExtField arithmetic.
struct ByteOps {
    using T = std::uint8_t;
    const kernels::Gf2mTable& tab;
    const kernels::Variant& k;

    bool is_zero(T a) const { return a == 0; }
    T from_elem(const ExtField& f, const Elem& a) const { return static_cast<T>(f.index(a)); }
    Elem to_elem(const ExtField& f, T a) const { return f.from_index(a); }
    T from_index(std::size_t i) const { return static_cast<T>(i); }
    // y -= c x and y += c x coincide in characteristic 2
    void sub_mul(T* y, const T* x, T c, std::size_t len) const { k.axpy(y, x, tab.nibbles(c), len); }
    void add_mul(T* y, const T* x, T c, std::size_t len) const { k.axpy(y, x, tab.nibbles(c), len); }
    void scale(T* y, T c, std::size_t len) const { k.scale(y, tab.nibbles(c), len); }
    T inv(T a) const { return tab.inv(a); }
    T diff(T a, T b) const { return a ^ b; }
    std::size_t nonzero(const T* x, std::size_t len) const { return k.count_nonzero(x, len); }
};

struct ElemOps {
    using T = Elem;
    const ExtField& f;

    bool is_zero(const T& a) const { return f.is_zero(a); }
    T from_elem(const ExtField&, const Elem& a) const { return a; }
    Elem to_elem(const ExtField&, const T& a) const { return a; }
    T from_index(std::size_t i) const { return f.from_index(i); }
    void sub_mul(T* y, const T* x, const T& c, std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) y[i] = f.sub(y[i], f.mul(c, x[i]));
    }
    void add_mul(T* y, const T* x, const T& c, std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
    }
    void scale(T* y, const T& c, std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i) y[i] = f.mul(c, y[i]);
    }
    T inv(const T& a) const { return f.inv(a); }
    T diff(const T& a, const T& b) const { return f.sub(a, b); }
    std::size_t nonzero(const T* x, std::size_t len) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < len; ++i) n += !f.is_zero(x[i]);
        return n;
    }
};

u128 binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    u128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Position of a sorted w-subset of [n] in lexicographic order.
u128 lex_rank(const std::vector<std::size_t>& s, std::size_t n) {
    u128 rank = 0;
    std::size_t prev = 0;
    const std::size_t w = s.size();
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t x = (i == 0 ? 0 : prev + 1); x < s[i]; ++x) rank += binom(n - 1 - x, w - 1 - i);
        prev = s[i];
    }
    return rank;
}

std::uint64_t clamp64(u128 v) {
    return v > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                          : static_cast<std::uint64_t>(v);
}

template <class Ops>
class ColumnSearch {
   public:
    using T = typename Ops::T;

    ColumnSearch(const Ops& ops, std::vector<T> cols, std::size_t rows, std::size_t n)
        : ops_(ops), cols_(std::move(cols)), r_(rows), n_(n) {}

    // Lex-first dependent w-subset whose first element is `first`, assuming
    // every smaller subset is independent.
    bool search_first(std::size_t first, std::size_t w, std::vector<std::size_t>& out) const {
        std::vector<T> basis(w * r_);
        std::vector<std::size_t> piv(w), chosen(w);
        return dfs(0, first, first + 1, w, basis, piv, chosen, out);
    }

   private:
    // Reduce column c against the first `level` basis rows into v.
    void reduce(std::size_t c, std::size_t level, const std::vector<T>& basis, const std::vector<std::size_t>& piv,
                T* v) const {
        std::copy_n(cols_.begin() + static_cast<std::ptrdiff_t>(c * r_), r_, v);
        for (std::size_t i = 0; i < level; ++i) {
            const T coef = v[piv[i]];
            if (!ops_.is_zero(coef)) ops_.sub_mul(v, basis.data() + i * r_, coef, r_);
        }
    }

    bool dfs(std::size_t level, std::size_t lo, std::size_t hi, std::size_t w, std::vector<T>& basis,
             std::vector<std::size_t>& piv, std::vector<std::size_t>& chosen, std::vector<std::size_t>& out) const {
        T* v = basis.data() + level * r_;
        for (std::size_t c = lo; c < hi; ++c) {
            reduce(c, level, basis, piv, v);
            std::size_t p = 0;
            while (p < r_ && ops_.is_zero(v[p])) ++p;
            chosen[level] = c;
            if (p == r_) {
                out.assign(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(level) + 1);
                return true;
            }
            if (level + 1 == w) continue;
            ops_.scale(v, ops_.inv(v[p]), r_);
            piv[level] = p;
            if (dfs(level + 1, c + 1, n_ - (w - level - 2), w, basis, piv, chosen, out)) return true;
        }
        return false;
    }

    const Ops& ops_;
    std::vector<T> cols_;
    std::size_t r_, n_;
};

template <class Ops>
DistanceResult run_columns(const Ops& ops, const Matrix& h, const DistanceOptions& opt) {
    const ExtField& f = h.field();
    const std::size_t r = h.rows(), n = h.cols();
    using T = typename Ops::T;
    std::vector<T> cols(n * r);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < r; ++i) cols[j * r + i] = ops.from_elem(f, h.at(i, j));
    ColumnSearch<Ops> cs(ops, std::move(cols), r, n);

    DistanceResult res;
    res.method = DistanceMethod::Columns;
    const std::uint64_t budget = opt.budget ? opt.budget : kColumnBudget;
    u128 done = 0;
    const std::size_t max_w = std::min(n, r + 1);
    for (std::size_t w = 1; w <= max_w; ++w) {
        const u128 total = binom(n, w);
        if (done + total > budget) {
            res.status = DistanceStatus::BudgetExceeded;
            res.lower_bound = w;
            res.work = clamp64(done);
            return res;
        }
        const std::size_t firsts = n - w + 1;
        std::vector<std::size_t> witness;
        const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(firsts)));
        if (threads == 1) {
            for (std::size_t first = 0; first < firsts && witness.empty(); ++first) cs.search_first(first, w, witness);
        } else {
            // Workers claim first columns in increasing order; the smallest
            // first column with a hit carries the lex-first witness.
            std::atomic<std::size_t> next{0}, best{firsts};
            std::mutex mu;
            std::vector<std::vector<std::size_t>> found(firsts);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        const std::size_t first = next.fetch_add(1);
                        if (first >= firsts || first > best.load()) return;
                        std::vector<std::size_t> out;
                        if (cs.search_first(first, w, out)) {
                            std::lock_guard<std::mutex> lock(mu);
                            found[first] = std::move(out);
                            if (first < best.load()) best.store(first);
                        }
                    }
                });
            for (auto& th : pool) th.join();
            if (best.load() < firsts) witness = found[best.load()];
        }
        if (!witness.empty()) {
            res.status = DistanceStatus::Resolved;
            res.distance = w;
            res.lower_bound = w;
            res.columns = witness;
            res.work = clamp64(done + lex_rank(witness, n) + 1);
            return res;
        }
        done += total;
    }
    throw std::logic_error("no dependent column set found");
}

template <class Ops>
DistanceResult run_exhaustive(const Ops& ops, const Matrix& g) {
    const ExtField& f = g.field();
    const std::size_t k = g.rows(), n = g.cols();
    const auto q = static_cast<std::size_t>(f.order());
    using T = typename Ops::T;
    std::vector<T> rows(k * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i * n + j] = ops.from_elem(f, g.at(i, j));
    std::vector<T> vals(q);
    for (std::size_t v = 0; v < q; ++v) vals[v] = ops.from_index(v);

    DistanceResult res;
    res.method = DistanceMethod::Exhaustive;
    std::size_t best = n + 1;
    std::vector<T> best_word;
    std::uint64_t visited = 0;
    std::vector<T> c(n);
    std::vector<std::size_t> digit(k);
    // Words with last nonzero message digit t equal to 1: one per projective point.
    for (std::size_t t = 0; t < k; ++t) {
        std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(t * n), n, c.begin());
        std::fill(digit.begin(), digit.end(), 0);
        for (;;) {
            ++visited;
            const std::size_t wt = ops.nonzero(c.data(), n);
            if (wt < best) {
                best = wt;
                best_word = c;
            }
            std::size_t j = 0;
            while (j < t) {
                const std::size_t old = digit[j];
                digit[j] = (old + 1) % q;
                ops.add_mul(c.data(), rows.data() + j * n, ops.diff(vals[digit[j]], vals[old]), n);
                if (digit[j] != 0) break;
                ++j;
            }
            if (j == t) break;
        }
    }
    res.status = DistanceStatus::Resolved;
    res.distance = best;
    res.lower_bound = best;
    res.work = visited;
    for (const auto& e : best_word) res.codeword.push_back(ops.to_elem(f, e));
    return res;
}

}  // namespace

DistanceResult column_distance(const Matrix& h, const DistanceOptions& opt) {
    const ExtField& f = h.field();
    if (opt.fast_path && kernels::Gf2mTable::supports(f)) {
        kernels::Gf2mTable tab(f);
        return run_columns(ByteOps{tab, kernels::active()}, h, opt);
    }
    return run_columns(ElemOps{f}, h, opt);
}

DistanceResult exhaustive_distance(const Matrix& g, const DistanceOptions& opt) {
    const ExtField& f = g.field();
    const std::uint64_t budget = opt.budget ? opt.budget : kExhaustiveBudget;
    u128 space = 1;
    for (std::size_t i = 0; i < g.rows() && space <= budget; ++i) space *= f.order();
    if (space > budget) {
        DistanceResult res;
        res.method = DistanceMethod::Exhaustive;
        res.status = DistanceStatus::BudgetExceeded;
        res.lower_bound = 1;
        return res;
    }
    if (opt.fast_path && kernels::Gf2mTable::supports(f)) {
        kernels::Gf2mTable tab(f);
        return run_exhaustive(ByteOps{tab, kernels::active()}, g);
    }
    return run_exhaustive(ElemOps{f}, g);
}

DistanceResult min_distance(const Code& c, const DistanceOptions& opt) {
    if (c.is_zero_code()) throw std::domain_error("minimum distance of the zero code is undefined");
    DistanceResult res;
    switch (opt.method) {
        case DistanceMethod::Declared:
            res.method = DistanceMethod::Declared;
            res.declared = c.bound();
            if (c.bound()) {
                res.status = DistanceStatus::Resolved;
                res.distance = c.bound()->value;
                res.lower_bound = c.bound()->value;
            }
            return res;
        case DistanceMethod::Exhaustive:
            res = exhaustive_distance(c.generator_matrix(), opt);
            break;
        case DistanceMethod::Columns:
            if (c.redundancy() == 0) {
                res.method = DistanceMethod::Columns;
                res.status = DistanceStatus::Resolved;
                res.distance = 1;
                res.lower_bound = 1;
                res.columns = {0};
                res.work = 1;
            } else {
                res = column_distance(c.parity_check_matrix(), opt);
            }
            if (res.status == DistanceStatus::Resolved) {
                // codeword supported on the dependent columns
                const Matrix h = c.redundancy() ? c.parity_check_matrix() : Matrix(c.ring().field_ptr(), 0, c.length());
                Matrix ker = h.select_columns(res.columns).nullspace();
                res.codeword.assign(c.length(), Elem{});
                for (std::size_t i = 0; i < res.columns.size(); ++i) res.codeword[res.columns[i]] = ker.at(0, i);
            }
            break;
    }
    if (res.status != DistanceStatus::Resolved) res.declared = c.bound();
    return res;
}

}  // namespace skewlcp
