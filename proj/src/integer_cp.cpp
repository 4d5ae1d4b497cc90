#include "edmcp/integer_cp.hpp"

#include "edmcp/edm.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace edmcp {

SymMatrix build_Ei(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("E_i requires 1 <= i <= n - 1");
    return SymMatrix::from_function(static_cast<std::size_t>(n), [i](std::size_t a, std::size_t b) {
        return Scalar((b - a) % static_cast<std::size_t>(i) == 0 ? 1 : 0);
    });
}

CpFactorization ei_factor(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("E_i requires 1 <= i <= n - 1");
    const std::size_t dim = static_cast<std::size_t>(n);
    CpFactorization f{dim, {}, true};
    for (std::size_t r = 0; r < static_cast<std::size_t>(i); ++r) {
        Vector c(dim);
        for (std::size_t a = r; a < dim; a += static_cast<std::size_t>(i)) c[a] = 1;
        f.add(1, std::move(c));
    }
    return f;
}

CpFactorization jordan_sum_factorize(int n, WeightExpansion mode) {
    if (n < 2) throw std::invalid_argument("jordan_sum_factorize requires n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n);
    CpFactorization f{dim, {}, true};
    for (int i = 1; i <= n - 1; ++i) {
        const auto weight = static_cast<std::uint64_t>(jordan_totient2_int(i));
        const std::vector<std::uint64_t> roots =
            mode == WeightExpansion::four_squares ? sum_of_squares(weight) : std::vector<std::uint64_t>(weight, 1);
        for (const auto& block : ei_factor(n, i).atoms)
            for (std::uint64_t s : roots) f.add(1, scaled(block.support, Scalar(static_cast<long>(s))));
    }
    return f;
}

std::int64_t divisor_count(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("divisor_count requires i >= 1");
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= i; ++d)
        if (i % d == 0) count += (d * d == i) ? 1 : 2;
    return count;
}

TauSum tau_sum_example(int n) {
    if (n < 2) throw std::invalid_argument("tau_sum_example requires n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n);
    TauSum out{SymMatrix(dim), CpFactorization{dim, {}, true}};
    for (int i = 1; i <= n - 1; ++i) {
        out.matrix += build_Ei(n, i);
        for (auto& atom : ei_factor(n, i).atoms) out.factorization.atoms.push_back(std::move(atom));
    }
    return out;
}

CpFactorization expand_to_integral(const CpFactorization& f) {
    CpFactorization out{f.dim, {}, true};
    for (const auto& atom : f.atoms) {
        const Rational& w = atom.weight.as_rational();
        if (!is_integer(w) || sgn(w) < 0 || !w.get_num().fits_ulong_p())
            throw std::invalid_argument("atom weight is not a nonnegative machine-size integer");
        for (std::uint64_t s : sum_of_squares(w.get_num().get_ui()))
            out.add(1, scaled(atom.support, Scalar(static_cast<long>(s))));
    }
    return out;
}

SmallnCertificate smalln_certificate(int n) {
    using V = Vector;
    SmallnCertificate out;
    auto weighted = [&](std::size_t dim, std::initializer_list<std::pair<long, V>> atoms) {
        CpFactorization f{dim, {}, false};
        for (const auto& [w, c] : atoms) f.add(w, c);
        return f;
    };
    switch (n) {
        case 2:
            out.weighted = weighted(2, {{1, V{1, 1}}});
            break;
        case 3:
            out.weighted = weighted(3, {{1, V{1, 1, 1}}, {3, V{1, 0, 1}}, {3, V{0, 1, 0}}});
            break;
        case 4:
            out.weighted = weighted(4, {{1, V{1, 1, 1, 1}},
                                        {1, V{1, 0, 3, 0}},
                                        {1, V{0, 3, 0, 1}},
                                        {8, V{1, 0, 0, 1}}});
            break;
        case 5:
            out.weighted = weighted(5, {{1, V{1, 1, 1, 1, 1}},
                                        {1, V{2, 0, 0, 4, 0}},
                                        {1, V{0, 4, 0, 0, 2}},
                                        {1, V{0, 0, 4, 0, 0}},
                                        {3, V{1, 0, 1, 0, 1}},
                                        {3, V{0, 1, 0, 1, 0}},
                                        {3, V{2, 0, 0, 0, 2}}});
            break;
        case 6:
            out.weighted = weighted(6, {{1, V{1, 1, 1, 1, 1, 1}},
                                        {2, V{1, 0, 0, 4, 0, 0}},
                                        {2, V{0, 0, 4, 0, 0, 1}},
                                        {2, V{0, 2, 0, 0, 2, 0}},
                                        {3, V{1, 0, 1, 0, 1, 0}},
                                        {3, V{0, 1, 0, 1, 0, 1}},
                                        {6, V{1, 0, 0, 0, 2, 0}},
                                        {6, V{0, 2, 0, 0, 0, 1}},
                                        {6, V{2, 0, 0, 0, 0, 2}}});
            break;
        default:
            throw std::invalid_argument("hand-built certificates exist for 2 <= n <= 6");
    }
    // n = 6 certifies B_6 + I_6, the other cases B_n itself.
    out.matrix = n == 6 ? build_An(6).plus_identity(36) : build_Bn(n);
    out.integral = expand_to_integral(out.weighted);
    return out;
}

const char* to_string(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::found:
            return "found";
        case SearchOutcome::Status::exhausted:
            return "exhausted";
        case SearchOutcome::Status::limit:
            return "limit";
    }
    return "?";
}

std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<Vector>& kernel) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& v : kernel) {
        Integer lcm = 1;
        for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.as_rational().get_den().get_mpz_t());
        std::vector<Integer> ints;
        Integer g = 0;
        for (const auto& x : v) {
            Integer k = x.as_rational().get_num() * (lcm / x.as_rational().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
            ints.push_back(k);
        }
        if (g == 0) continue;
        std::vector<std::int64_t> row;
        for (auto& k : ints) {
            k /= g;
            if (!k.fits_slong_p()) throw std::invalid_argument("kernel vector too large for the integer search");
            row.push_back(k.get_si());
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

using Column = std::vector<std::int64_t>;
using Residual = std::vector<std::int64_t>;

struct Pivot {
    std::size_t i = 0;
    std::size_t j = 0;
    bool operator==(const Pivot&) const = default;
};

/// Exact PSD test by fraction-free elimination with symmetric pivoting.
bool residual_is_psd(const Residual& r, std::size_t n) {
    std::vector<__int128> m(r.begin(), r.end());
    std::vector<bool> done(n, false);
    __int128 prev = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t k = n;
        for (std::size_t a = 0; a < n; ++a) {
            if (done[a]) continue;
            if (m[a * n + a] < 0) return false;
            if (m[a * n + a] > 0 && k == n) k = a;
        }
        if (k == n) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!done[a] && !done[b] && m[a * n + b] != 0) return false;
            return true;
        }
        done[k] = true;
        const __int128 piv = m[k * n + k];
        for (std::size_t a = 0; a < n; ++a) {
            if (done[a]) continue;
            for (std::size_t b = a; b < n; ++b) {
                if (done[b]) continue;
                const __int128 v = (piv * m[a * n + b] - m[a * n + k] * m[k * n + b]) / prev;
                m[a * n + b] = v;
                m[b * n + a] = v;
            }
        }
        prev = piv;
    }
    return true;
}

struct LimitReached {};
struct Cancelled {};

class Searcher {
public:
    Searcher(std::size_t n, const SearchConfig& cfg, std::int64_t cap, std::atomic<std::uint64_t>& nodes,
             std::atomic<bool>& limit_hit)
        : n_(n), cfg_(cfg), cap_(cap), nodes_(nodes), limit_hit_(limit_hit) {}

    std::optional<Pivot> pivot_of(const Residual& r) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (r[i * n_ + j] > 0) return Pivot{i, j};
        return std::nullopt;
    }

    /// Calls `visit` for every admissible column in decreasing lexicographic
    /// order; stops early when it returns true.
    bool for_each_column(const Residual& r, Pivot p, const Column* upper, const std::function<bool(const Column&)>& visit) {
        std::vector<std::int64_t> hi(n_);
        for (std::size_t a = 0; a < n_; ++a)
            hi[a] = std::min<std::int64_t>(cap_, static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(r[a * n_ + a]))));
        // suffix ranges of k . u over coordinates >= a
        const std::size_t nk = cfg_.kernel.size();
        std::vector<std::int64_t> suf_lo((n_ + 1) * nk, 0), suf_hi((n_ + 1) * nk, 0);
        for (std::size_t k = 0; k < nk; ++k)
            for (std::size_t a = n_; a-- > 0;) {
                const std::int64_t c = cfg_.kernel[k][a];
                suf_lo[a * nk + k] = suf_lo[(a + 1) * nk + k] + std::min<std::int64_t>(0, c * hi[a]);
                suf_hi[a * nk + k] = suf_hi[(a + 1) * nk + k] + std::max<std::int64_t>(0, c * hi[a]);
            }
        Column u(n_, 0);
        std::vector<std::int64_t> partial(nk, 0);
        std::function<bool(std::size_t, bool)> place = [&](std::size_t a, bool tight) -> bool {
            if (a == n_) return visit(u);
            std::int64_t top = hi[a];
            for (std::size_t b = 0; b < a; ++b)
                if (u[b] > 0) top = std::min(top, r[a * n_ + b] / u[b]);
            if (tight) top = std::min(top, (*upper)[a]);
            const std::int64_t bottom = (a == p.i || a == p.j) ? 1 : 0;
            for (std::int64_t val = top; val >= bottom; --val) {
                u[a] = val;
                bool feasible = true;
                for (std::size_t k = 0; k < nk; ++k) {
                    const std::int64_t s = partial[k] + cfg_.kernel[k][a] * val;
                    if (s + suf_lo[(a + 1) * nk + k] > 0 || s + suf_hi[(a + 1) * nk + k] < 0) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) continue;
                for (std::size_t k = 0; k < nk; ++k) partial[k] += cfg_.kernel[k][a] * val;
                const bool stop = place(a + 1, tight && val == (*upper)[a]);
                for (std::size_t k = 0; k < nk; ++k) partial[k] -= cfg_.kernel[k][a] * val;
                if (stop) return true;
            }
            u[a] = 0;
            return false;
        };
        return place(0, upper != nullptr);
    }

    static Residual subtract(const Residual& r, const Column& u, std::size_t n) {
        Residual out = r;
        for (std::size_t a = 0; a < n; ++a)
            if (u[a] != 0)
                for (std::size_t b = 0; b < n; ++b) out[a * n + b] -= u[a] * u[b];
        return out;
    }

    void count_node() {
        if (cancelled_ && cancelled_()) throw Cancelled{};
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > cfg_.node_limit) {
            limit_hit_ = true;
            throw LimitReached{};
        }
        if (limit_hit_.load(std::memory_order_relaxed)) throw LimitReached{};
    }

    /// Leaf: only diagonal mass left.
    bool finish(const Residual& r) {
        diagonal_.clear();
        for (std::size_t a = 0; a < n_; ++a) {
            const std::int64_t d = r[a * n_ + a];
            if (d == 0) continue;
            for (const auto& k : cfg_.kernel)
                if (k[a] != 0) return false;
            for (std::uint64_t s : sum_of_squares(static_cast<std::uint64_t>(d))) {
                Column c(n_, 0);
                c[a] = static_cast<std::int64_t>(s);
                diagonal_.push_back(std::move(c));
            }
        }
        return true;
    }

    bool dfs(const Residual& r, std::optional<Pivot> prev, const Column* last) {
        count_node();
        if (!residual_is_psd(r, n_)) return false;
        const auto p = pivot_of(r);
        if (!p) return finish(r);
        const Column* upper = (prev && *prev == *p) ? last : nullptr;
        return for_each_column(r, *p, upper, [&](const Column& u) {
            stack_.push_back(u);
            if (dfs(subtract(r, u, n_), p, &u)) return true;
            stack_.pop_back();
            return false;
        });
    }

    std::vector<Column> certificate() const {
        std::vector<Column> cols(stack_.begin(), stack_.end());
        cols.insert(cols.end(), diagonal_.begin(), diagonal_.end());
        return cols;
    }

    void reset() {
        stack_.clear();
        diagonal_.clear();
    }
    void push(const Column& u) { stack_.push_back(u); }
    void set_cancel(std::function<bool()> f) { cancelled_ = std::move(f); }

private:
    std::size_t n_;
    const SearchConfig& cfg_;
    std::int64_t cap_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& limit_hit_;
    std::function<bool()> cancelled_;
    std::vector<Column> stack_;
    std::vector<Column> diagonal_;
};

CpFactorization to_factorization(std::size_t n, const std::vector<Column>& cols) {
    CpFactorization f{n, {}, true};
    for (const auto& c : cols) {
        Vector v(n);
        for (std::size_t a = 0; a < n; ++a) v[a] = Scalar(static_cast<long>(c[a]));
        f.add(1, std::move(v));
    }
    return f;
}

}  // namespace

SearchOutcome integer_cp_search(const SymMatrix& a, const SearchConfig& cfg) {
    if (cfg.node_limit == 0) throw std::invalid_argument("node_limit must be positive");
    const std::size_t n = a.dim();
    Residual root(n * n);
    std::int64_t max_diag = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& e = a(i, j);
            if (!e.is_rational() || !is_integer(e.rat()) || !e.rat().get_num().fits_slong_p())
                throw std::invalid_argument("integer search needs an integer matrix");
            root[i * n + j] = e.rat().get_num().get_si();
            if (root[i * n + j] < 0) throw std::invalid_argument("integer search needs a nonnegative matrix");
        }
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, root[i * n + i]);
    for (const auto& k : cfg.kernel)
        if (k.size() != n) throw DimensionMismatch(k.size(), n, "search kernel");
    const std::int64_t cap =
        cfg.max_column_entry.value_or(static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(max_diag))));

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> limit_hit{false};
    SearchOutcome out;

    auto finish_found = [&](const std::vector<Column>& cols) {
        CpFactorization cert = to_factorization(n, cols);
        if (!verify(a, cert, {}).passed()) throw std::logic_error("integer search produced an invalid certificate");
        out.status = SearchOutcome::Status::found;
        out.certificate = std::move(cert);
    };

    Searcher root_searcher(n, cfg, cap, nodes, limit_hit);
    try {
        root_searcher.count_node();
    } catch (const LimitReached&) {
        out.status = SearchOutcome::Status::limit;
        out.nodes = nodes;
        return out;
    }
    const auto pivot = root_searcher.pivot_of(root);
    if (!pivot) {
        if (root_searcher.finish(root)) finish_found(root_searcher.certificate());
        out.nodes = nodes;
        return out;
    }

    std::vector<Column> branches;
    root_searcher.for_each_column(root, *pivot, nullptr, [&](const Column& u) {
        branches.push_back(u);
        return false;
    });

    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};
    std::mutex result_mutex;
    std::vector<Column> best_cols;

    auto worker = [&] {
        Searcher s(n, cfg, cap, nodes, limit_hit);
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= branches.size()) return;
            if (best.load() < b) return;
            s.set_cancel([&, b] {
                const std::size_t cur = best.load(std::memory_order_relaxed);
                return cfg.reproducible ? cur < b : cur != none;
            });
            s.reset();
            s.push(branches[b]);
            bool found = false;
            try {
                found = s.dfs(Searcher::subtract(root, branches[b], n), pivot, &branches[b]);
            } catch (const LimitReached&) {
                return;
            } catch (const Cancelled&) {
                continue;
            }
            if (!found) continue;
            std::lock_guard lock(result_mutex);
            if (b < best.load()) {
                best = b;
                best_cols = s.certificate();
            }
        }
    };

    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (best.load() != none) {
        finish_found(best_cols);
    } else if (limit_hit) {
        out.status = SearchOutcome::Status::limit;
    } else {
        out.status = SearchOutcome::Status::exhausted;
    }
    out.nodes = nodes;
    return out;
}

}  // namespace edmcp
