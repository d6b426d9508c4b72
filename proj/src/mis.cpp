#include "spanmu/mis.hpp"

#include <bit>
#include <cstdint>

namespace spanmu {

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void set(int i) { w_[word(i)] |= mask(i); }
    void reset(int i) { w_[word(i)] &= ~mask(i); }
    [[nodiscard]] bool test(int i) const { return (w_[word(i)] & mask(i)) != 0; }

    [[nodiscard]] int count() const
    {
        int c = 0;
        for (auto x : w_) {
            c += std::popcount(x);
        }
        return c;
    }

    [[nodiscard]] int count_and(const Bits& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            c += std::popcount(w_[i] & o.w_[i]);
        }
        return c;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto x : w_) {
            if (x != 0) {
                return false;
            }
        }
        return true;
    }

    void and_not(const Bits& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] &= ~o.w_[i];
        }
    }

    void and_with(const Bits& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] &= o.w_[i];
        }
    }

    /// Calls f(i) for each set bit in ascending order.
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x != 0) {
                int b = std::countr_zero(x);
                f(static_cast<int>(wi * 64) + b);
                x &= x - 1;
            }
        }
    }

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
    static std::uint64_t mask(int i) { return std::uint64_t{1} << (static_cast<unsigned>(i) % 64); }
    std::vector<std::uint64_t> w_;
};

class Solver {
public:
    using Clock = std::chrono::steady_clock;

    Solver(const Graph& g, std::optional<Clock::time_point> deadline) : n_(g.n()), deadline_(deadline)
    {
        nbr_.assign(static_cast<std::size_t>(n_), Bits(n_));
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : g.neighbors(v)) {
                nbr_[static_cast<std::size_t>(v)].set(u);
            }
        }
    }

    [[nodiscard]] bool aborted() const { return aborted_; }
    [[nodiscard]] const Bits& neighbors(int v) const { return nbr_[static_cast<std::size_t>(v)]; }

    /// Maximum independent set of G[pool] if it exceeds `floor`; otherwise
    /// best_size() stays at floor. With stop_at_first, returns as soon as any
    /// set larger than floor is found.
    void solve(const Bits& pool, int floor, bool stop_at_first)
    {
        best_size_ = floor;
        best_.clear();
        stop_at_first_ = stop_at_first;
        found_ = false;
        std::vector<int> cur;
        search(pool, cur);
    }

    [[nodiscard]] int best_size() const { return best_size_; }
    [[nodiscard]] const std::vector<int>& best() const { return best_; }

private:
    bool out_of_time()
    {
        if (aborted_) {
            return true;
        }
        if (deadline_ && (++nodes_ & 1023) == 0 && Clock::now() > *deadline_) {
            aborted_ = true;
        }
        return aborted_;
    }

    int clique_cover(const Bits& pool) const
    {
        std::vector<Bits> common;
        pool.for_each([&](int v) {
            for (auto& c : common) {
                if (c.test(v)) {
                    c.and_with(nbr_[static_cast<std::size_t>(v)]);
                    return;
                }
            }
            common.push_back(nbr_[static_cast<std::size_t>(v)]);
        });
        return static_cast<int>(common.size());
    }

    void search(Bits pool, std::vector<int>& cur)
    {
        if (out_of_time() || (stop_at_first_ && found_)) {
            return;
        }
        const std::size_t mark = cur.size();
        // Degree-0 and degree-1 vertices always belong to some maximum set.
        for (bool changed = true; changed;) {
            changed = false;
            pool.for_each([&](int v) {
                if (changed || !pool.test(v)) {
                    return;
                }
                const auto& nv = nbr_[static_cast<std::size_t>(v)];
                if (pool.count_and(nv) <= 1) {
                    cur.push_back(v);
                    pool.reset(v);
                    pool.and_not(nv);
                    changed = true;
                }
            });
        }

        if (pool.empty()) {
            if (static_cast<int>(cur.size()) > best_size_) {
                best_size_ = static_cast<int>(cur.size());
                best_ = cur;
                found_ = true;
            }
            cur.resize(mark);
            return;
        }
        if (static_cast<int>(cur.size()) + clique_cover(pool) <= best_size_) {
            cur.resize(mark);
            return;
        }

        int pick = -1;
        int pick_deg = -1;
        pool.for_each([&](int v) {
            int d = pool.count_and(nbr_[static_cast<std::size_t>(v)]);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });

        Bits with = pool;
        with.reset(pick);
        with.and_not(nbr_[static_cast<std::size_t>(pick)]);
        cur.push_back(pick);
        search(with, cur);
        cur.pop_back();

        Bits without = pool;
        without.reset(pick);
        search(without, cur);
        cur.resize(mark);
    }

    int n_;
    std::vector<Bits> nbr_;
    std::optional<Clock::time_point> deadline_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
    int best_size_ = 0;
    std::vector<int> best_;
    bool stop_at_first_ = false;
    bool found_ = false;
};

std::optional<MisResult> solve_lexmin(const Graph& g, std::optional<Solver::Clock::time_point> deadline)
{
    const int n = g.n();
    Solver s(g, deadline);
    Bits all(n);
    for (int v = 0; v < n; ++v) {
        all.set(v);
    }
    s.solve(all, -1, false);
    if (s.aborted()) {
        return std::nullopt;
    }
    const int alpha = s.best_size();

    // Greedy ascending scan: keep v iff the rest can still reach alpha.
    MisResult res;
    res.alpha = alpha;
    Bits pool = all;
    for (int v = 0; v < n && static_cast<int>(res.set.size()) < alpha; ++v) {
        if (!pool.test(v)) {
            continue;
        }
        pool.reset(v);
        Bits rest = pool;
        rest.and_not(s.neighbors(v));
        int need = alpha - static_cast<int>(res.set.size()) - 1;
        bool feasible = need == 0;
        if (!feasible) {
            s.solve(rest, need - 1, true);
            if (s.aborted()) {
                return std::nullopt;
            }
            feasible = s.best_size() >= need;
        }
        if (feasible) {
            res.set.push_back(v);
            pool = rest;
        }
    }
    return res;
}

} // namespace

MisResult max_independent_set(const Graph& g) { return *solve_lexmin(g, std::nullopt); }

std::optional<MisResult> max_independent_set(const Graph& g, std::chrono::milliseconds budget)
{
    return solve_lexmin(g, Solver::Clock::now() + budget);
}

int independence_number(const Graph& g)
{
    Solver s(g, std::nullopt);
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) {
        all.set(v);
    }
    s.solve(all, -1, false);
    return s.best_size();
}

} // namespace spanmu
