#include "mincodes/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "mincodes/error.hpp"
#include "mincodes/minimality.hpp"

namespace mincodes {

namespace {

inline constexpr std::uint64_t max_search_space = 1ull << 12;  // q^k

// Read-only tables shared by every worker.
struct Space {
    FieldPtr field;
    std::size_t k;
    std::size_t count;     // projective points
    std::uint64_t per_point;  // hyperplanes through a point, (q^{k-1}-1)/(q-1)
    std::vector<Element> coords;  // count x k
    std::vector<std::vector<std::uint32_t>> incidence;  // point -> hyperplanes containing it
    std::vector<std::uint32_t> avail;  // [y * (count+1) + j] = #points >= j inside H(y)
    std::vector<char> forced_mask;
    std::vector<std::size_t> forced;

    Space(std::size_t k_, const FieldPtr& f, bool fix_basis) : field(f), k(k_) {
        const ProjectiveSpace ps(f, k);
        count = ps.size();
        per_point = projective_count(k - 1, f->q());
        coords.reserve(count * k);
        for (std::size_t i = 0; i < count; ++i) {
            const Vector v = ps.point(i);
            coords.insert(coords.end(), v.coords().begin(), v.coords().end());
        }
        incidence.assign(count, {});
        avail.assign(count * (count + 1), 0);
        for (std::size_t y = 0; y < count; ++y) {
            for (std::size_t c = count; c-- > 0;) {
                Element ip = 0;
                for (std::size_t j = 0; j < k; ++j) ip = f->add(ip, f->mul(coords[y * k + j], coords[c * k + j]));
                avail[y * (count + 1) + c] = avail[y * (count + 1) + c + 1] + (ip == 0);
                if (ip == 0) incidence[c].push_back(static_cast<std::uint32_t>(y));
            }
        }
        forced_mask.assign(count, 0);
        if (fix_basis) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t idx = ps.index_of(Vector::unit(f, k, i));
                forced.push_back(idx);
                forced_mask[idx] = 1;
            }
            std::sort(forced.begin(), forced.end());
        }
    }

    std::span<const Element> point(std::size_t i) const { return {coords.data() + i * k, k}; }
};

// Mutable search state: one echelon basis per hyperplane, tracking V(y, D).
class State {
  public:
    explicit State(const Space& sp) : sp_(&sp), rank_(*sp.field, sp.k) {
        hyper_.reserve(sp.count);
        for (std::size_t y = 0; y < sp.count; ++y) hyper_.emplace_back(*sp.field, sp.k);
        deficit_.assign(sp.count, static_cast<std::uint32_t>(sp.k - 1));
        deficit_sum_ = std::uint64_t{sp.count} * (sp.k - 1);
        for (std::size_t c : sp.forced) push(c);
        picks_.clear();
    }

    void add(std::size_t c) {
        push(c);
    }

    void undo() {
        const Mark m = marks_.back();
        marks_.pop_back();
        while (log_.size() > m.log) {
            const std::uint32_t y = log_.back();
            log_.pop_back();
            hyper_[y].pop();
            ++deficit_[y];
            ++deficit_sum_;
        }
        if (m.rank_grew) rank_.pop();
        picks_.pop_back();
    }

    bool solved() const noexcept { return deficit_sum_ == 0 && rank_.dim() == sp_->k; }

    bool viable(std::size_t start, std::size_t remaining) const {
        if (rank_.dim() + remaining < sp_->k) return false;
        if (deficit_sum_ > remaining * sp_->per_point) return false;
        const std::size_t stride = sp_->count + 1;
        for (std::size_t y = 0; y < sp_->count; ++y) {
            const std::uint32_t need = deficit_[y];
            if (need == 0) continue;
            if (need > remaining || need > sp_->avail[y * stride + start]) return false;
        }
        return true;
    }

    const std::vector<std::size_t>& picks() const noexcept { return picks_; }

    std::vector<std::size_t> chosen() const {
        std::vector<std::size_t> all(sp_->forced);
        all.insert(all.end(), picks_.begin(), picks_.end());
        std::sort(all.begin(), all.end());
        return all;
    }

  private:
    struct Mark {
        std::size_t log;
        bool rank_grew;
    };

    void push(std::size_t c) {
        const auto pt = sp_->point(c);
        Mark m{log_.size(), false};
        for (std::uint32_t y : sp_->incidence[c]) {
            if (deficit_[y] == 0) continue;
            if (hyper_[y].insert(pt)) {
                --deficit_[y];
                --deficit_sum_;
                log_.push_back(y);
            }
        }
        m.rank_grew = rank_.insert(pt);
        marks_.push_back(m);
        picks_.push_back(c);
    }

    const Space* sp_;
    std::vector<EchelonBasis> hyper_;
    std::vector<std::uint32_t> deficit_;
    std::uint64_t deficit_sum_;
    EchelonBasis rank_;
    std::vector<std::uint32_t> log_;
    std::vector<Mark> marks_;
    std::vector<std::size_t> picks_;
};

enum class Outcome { open, found, aborted };

// Node accounting against a budget, optionally shared between workers.
class Meter {
  public:
    Meter(std::uint64_t budget, std::atomic<std::uint64_t>* shared) : budget_(budget), shared_(shared) {}

    bool tick() {
        ++local_;
        if (!shared_) return local_ <= budget_;
        if (++pending_ == 1024) flush();
        return shared_->load(std::memory_order_relaxed) + pending_ <= budget_;
    }
    void flush() {
        if (shared_) shared_->fetch_add(pending_);
        pending_ = 0;
    }
    std::uint64_t nodes() const noexcept { return local_; }

  private:
    std::uint64_t budget_;
    std::atomic<std::uint64_t>* shared_;
    std::uint64_t local_ = 0;
    std::uint64_t pending_ = 0;
};

struct Searcher {
    const Space& sp;
    bool prune;

    Outcome dfs(State& st, std::size_t start, std::size_t remaining, Meter& meter) const {
        if (!meter.tick()) return Outcome::aborted;
        if (st.solved()) return Outcome::found;
        if (remaining == 0) return Outcome::open;
        if (prune && !st.viable(start, remaining)) return Outcome::open;
        for (std::size_t c = start; c < sp.count; ++c) {
            if (sp.forced_mask[c]) continue;
            st.add(c);
            const Outcome r = dfs(st, c + 1, remaining - 1, meter);
            if (r != Outcome::open) return r;
            st.undo();
        }
        return Outcome::open;
    }

    struct Item {
        bool solved_here;
        std::vector<std::size_t> picks;
        std::size_t start;
        std::size_t remaining;
    };

    // Same walk as dfs, but subtrees at `depth` become work items, in preorder.
    Outcome collect(State& st, std::size_t start, std::size_t remaining, std::size_t depth, Meter& meter,
                    std::vector<Item>& items) const {
        if (depth == 0) {
            items.push_back({false, st.picks(), start, remaining});
            return Outcome::open;
        }
        if (!meter.tick()) return Outcome::aborted;
        if (st.solved()) {
            items.push_back({true, st.picks(), start, remaining});
            return Outcome::found;
        }
        if (remaining == 0) return Outcome::open;
        if (prune && !st.viable(start, remaining)) return Outcome::open;
        for (std::size_t c = start; c < sp.count; ++c) {
            if (sp.forced_mask[c]) continue;
            st.add(c);
            const Outcome r = collect(st, c + 1, remaining - 1, depth - 1, meter, items);
            if (r != Outcome::open) return r;
            st.undo();
        }
        return Outcome::open;
    }
};

DefiningSet assemble(const Space& sp, std::vector<std::size_t> chosen, std::size_t n) {
    std::vector<Vector> cols;
    for (std::size_t c : chosen) {
        const auto pt = sp.point(c);
        cols.emplace_back(sp.field, std::vector<Element>(pt.begin(), pt.end()));
    }
    while (cols.size() < n) cols.push_back(cols.back());
    return DefiningSet(sp.field, sp.k, std::move(cols));
}

void require_search_space(std::size_t k, const FieldPtr& field) {
    if (k == 0) throw Error(Errc::dimension_mismatch, "search needs k >= 1");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= field->q();
        if (total > max_search_space) throw Error(Errc::enumeration_too_large, "q^k exceeds the search cap 2^12");
    }
}

}  // namespace

Bounds bounds(std::size_t k, std::uint64_t q) {
    const std::uint64_t kk = k;
    return {k, q, q * (kk - 1), (q - 1) * kk * (kk - 1) / 2 + kk};
}

const char* existence_name(ExistenceStatus s) noexcept {
    switch (s) {
        case ExistenceStatus::found: return "found";
        case ExistenceStatus::exhausted: return "exhausted";
        case ExistenceStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

const char* search_status_name(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::exact: return "exact";
        case SearchStatus::bracket: return "bracket";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

ExistenceResult exists_minimal(std::size_t n, std::size_t k, const FieldPtr& field, const SearchOptions& opts) {
    require_search_space(k, field);
    if (n < k) return {ExistenceStatus::exhausted, std::nullopt, 0};

    const Space sp(k, field, opts.fix_basis);
    const Searcher searcher{sp, opts.prune};
    const std::size_t remaining = n - sp.forced.size();
    ExistenceResult result{ExistenceStatus::exhausted, std::nullopt, 0};

    auto finish = [&](std::vector<std::size_t> chosen) {
        DefiningSet w = assemble(sp, std::move(chosen), n);
        if (!check_span(w).minimal()) throw std::logic_error("search produced a non-minimal witness");
        result.status = ExistenceStatus::found;
        result.witness = std::move(w);
    };

    if (opts.jobs <= 1) {
        State st(sp);
        Meter meter(opts.budget, nullptr);
        const Outcome r = searcher.dfs(st, 0, remaining, meter);
        result.nodes = std::min(meter.nodes(), opts.budget);
        if (r == Outcome::found) finish(st.chosen());
        if (r == Outcome::aborted) result.status = ExistenceStatus::budget_exhausted;
        return result;
    }

    std::atomic<std::uint64_t> shared{0};
    std::vector<Searcher::Item> items;
    Meter top(opts.budget, &shared);
    {
        State st(sp);
        if (searcher.collect(st, 0, remaining, std::max<std::size_t>(1, opts.split_depth), top, items) ==
            Outcome::aborted) {
            result.nodes = top.nodes();
            result.status = ExistenceStatus::budget_exhausted;
            return result;
        }
    }
    top.flush();

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};
    std::atomic<bool> aborted{false};
    std::atomic<std::uint64_t> task_nodes{0};
    std::vector<std::vector<std::size_t>> solutions(items.size());

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || i > best.load()) return;
            const auto& item = items[i];
            State st(sp);
            for (std::size_t c : item.picks) st.add(c);
            Outcome r = Outcome::found;
            if (!item.solved_here) {
                Meter meter(opts.budget, &shared);
                r = searcher.dfs(st, item.start, item.remaining, meter);
                meter.flush();
                task_nodes.fetch_add(meter.nodes());
            }
            if (r == Outcome::aborted) {
                aborted = true;
                return;
            }
            if (r == Outcome::found) {
                solutions[i] = st.chosen();
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < opts.jobs; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    result.nodes = top.nodes() + task_nodes.load();
    if (best.load() != none)
        finish(solutions[best.load()]);
    else if (aborted)
        result.status = ExistenceStatus::budget_exhausted;
    return result;
}

SearchReport n_min(std::size_t k, const FieldPtr& field, const SearchOptions& opts, std::optional<std::size_t> n_max) {
    const Bounds b = bounds(k, field->q());
    SearchReport report{k, field->q(), SearchStatus::bracket, b, std::nullopt,
                        static_cast<std::size_t>(b.lower_exclusive + 1), static_cast<std::size_t>(b.upper_inclusive),
                        std::nullopt, {}, opts.budget, 0};
    const std::size_t last = std::min<std::size_t>(b.upper_inclusive, n_max.value_or(b.upper_inclusive));

    for (std::size_t n = b.lower_exclusive + 1; n <= last; ++n) {
        SearchOptions step = opts;
        step.budget = opts.budget - report.budget_used;
        ExistenceResult r = exists_minimal(n, k, field, step);
        report.budget_used += r.nodes;
        report.attempts.push_back({n, r.status, r.nodes});
        if (r.status == ExistenceStatus::found) {
            report.status = SearchStatus::exact;
            report.n_min = n;
            report.bracket_lo = report.bracket_hi = n;
            report.witness = std::move(r.witness);
            return report;
        }
        if (r.status == ExistenceStatus::budget_exhausted) {
            report.status = SearchStatus::budget_exhausted;
            report.bracket_lo = n;
            return report;
        }
        report.bracket_lo = n + 1;
    }
    return report;
}

bool branch_viable(const DefiningSet& partial, std::size_t n) {
    const std::size_t k = partial.k();
    if (partial.n() > n) return false;
    const std::size_t remaining = n - partial.n();
    const Field& f = partial.field();
    if (span(partial.field_ptr(), k, partial.columns()).dim() + remaining < k) return false;

    const ProjectiveSpace ps(partial.field_ptr(), k);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Vector y = ps.point(i);
        EchelonBasis basis(f, k);
        for (const Vector& col : partial.columns())
            if (inner_product(y, col) == 0) basis.insert(col.coords());
        const std::size_t deficit = k - 1 - basis.dim();
        if (deficit > remaining) return false;
        total += deficit;
    }
    return total <= remaining * projective_count(k - 1, f.q());
}

}  // namespace mincodes
