#include "lindisc/solver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>

namespace lindisc {

namespace {

// Per-matrix tables shared by every search on it. Columns are assigned from
// the highest index down so leaves appear in increasing binary-code order
// (coordinate 0 is the least significant bit); when column c is next, the
// unassigned set is {0..c} and prefix_*[c + 1] bounds its reach per row.
struct SearchContext {
    const RMatrix &a;
    std::size_t m;
    std::size_t n;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries;
    std::vector<std::vector<Rational>> prefix_pos; // prefix_pos[k][j] = sum_{c<k} max(a_jc, 0)
    std::vector<std::vector<Rational>> prefix_neg;

    explicit SearchContext(const RMatrix &mat) : a(mat), m(mat.rows()), n(mat.cols()) {
        col_entries.resize(n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t j = 0; j < m; ++j) {
                if (!a.at(j, c).is_zero()) {
                    col_entries[c].emplace_back(j, a.at(j, c));
                }
            }
        }
        prefix_pos.assign(n + 1, std::vector<Rational>(m));
        prefix_neg.assign(n + 1, std::vector<Rational>(m));
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                const Rational &e = a.at(j, k - 1);
                prefix_pos[k][j] = prefix_pos[k - 1][j] + (e.sign() > 0 ? e : Rational(0));
                prefix_neg[k][j] = prefix_neg[k - 1][j] + (e.sign() < 0 ? e : Rational(0));
            }
        }
    }
};

void check_in_cube(const RVector &w) {
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (w[i].sign() < 0 || w[i] > Rational(1)) {
            throw DomainError("point outside [0,1]: entry " + std::to_string(i) + " = " +
                              w[i].to_string());
        }
    }
}

struct InnerSearch {
    const SearchContext &ctx;
    std::vector<Rational> t; // row values of A(w - x) under the current partial x
    std::vector<int> x;
    std::optional<Rational> best;
    std::vector<int> best_x;
    std::uint64_t nodes = 0;

    InnerSearch(const SearchContext &c, const RVector &w) : ctx(c) {
        t.resize(ctx.m);
        for (std::size_t j = 0; j < ctx.m; ++j) {
            Rational acc;
            for (std::size_t k = 0; k < ctx.n; ++k) {
                const Rational &e = ctx.a.at(j, k);
                if (!e.is_zero()) {
                    acc += e * w[k];
                }
            }
            t[j] = std::move(acc);
        }
        x.assign(ctx.n, 0);
    }

    bool forced_out(int next_col) const {
        // Completing x can only shift row j by values inside
        // [-prefix_pos, -prefix_neg] over the unassigned columns.
        const auto &pos = ctx.prefix_pos[static_cast<std::size_t>(next_col + 1)];
        const auto &neg = ctx.prefix_neg[static_cast<std::size_t>(next_col + 1)];
        for (std::size_t j = 0; j < ctx.m; ++j) {
            Rational lo = t[j] - pos[j];
            if (lo.sign() > 0 && lo >= *best) {
                return true;
            }
            Rational hi = t[j] - neg[j];
            if (hi.sign() < 0 && -hi >= *best) {
                return true;
            }
        }
        return false;
    }

    void descend(int c) {
        ++nodes;
        if (c < 0) {
            Rational val;
            for (std::size_t j = 0; j < ctx.m; ++j) {
                Rational a = t[j].abs();
                if (a > val) {
                    val = std::move(a);
                }
                if (best && val >= *best) {
                    return;
                }
            }
            if (!best || val < *best) {
                best = std::move(val);
                best_x = x;
            }
            return;
        }
        if (best && forced_out(c)) {
            return;
        }
        auto uc = static_cast<std::size_t>(c);
        x[uc] = 0;
        descend(c - 1);
        x[uc] = 1;
        for (const auto &[j, v] : ctx.col_entries[uc]) {
            t[j] -= v;
        }
        descend(c - 1);
        for (const auto &[j, v] : ctx.col_entries[uc]) {
            t[j] += v;
        }
        x[uc] = 0;
    }
};

InnerResult lindisc_at_ctx(const SearchContext &ctx, const RVector &w) {
    InnerSearch search(ctx, w);
    search.descend(static_cast<int>(ctx.n) - 1);
    InnerResult res;
    res.value = *search.best;
    res.argmin_x = std::move(search.best_x);
    res.nodes_explored = search.nodes;
    return res;
}

struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;

    RVector center() const {
        RVector c(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            c[i] = (lo[i] + hi[i]) * Rational(1, 2);
        }
        return c;
    }

    Rational max_radius() const {
        Rational r;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            Rational h = (hi[i] - lo[i]) * Rational(1, 2);
            if (h > r) {
                r = std::move(h);
            }
        }
        return r;
    }

    std::size_t longest_axis() const {
        std::size_t ax = 0;
        Rational best = hi[0] - lo[0];
        for (std::size_t i = 1; i < lo.size(); ++i) {
            Rational w = hi[i] - lo[i];
            if (w > best) {
                best = std::move(w);
                ax = i;
            }
        }
        return ax;
    }
};

// min over binary x of max_{w in box} |row (w - x)| per row, maximized over
// rows. A valid upper bound on sup of lindisc(A, .) over the box for any x,
// so the minimum tightens it. Search stops once the running minimum is at
// most stop_at -- enough for the caller to prune the box.
struct IntervalSearch {
    const SearchContext &ctx;
    const Box &box;
    Rational stop_at;
    std::vector<Rational> tlo, thi; // current interval of row (w - x_partial)
    std::optional<Rational> best;
    bool stopped = false;

    IntervalSearch(const SearchContext &c, const Box &b, Rational stop)
        : ctx(c), box(b), stop_at(std::move(stop)) {
        tlo.resize(ctx.m);
        thi.resize(ctx.m);
        for (std::size_t j = 0; j < ctx.m; ++j) {
            Rational lo_acc, hi_acc;
            for (std::size_t k = 0; k < ctx.n; ++k) {
                const Rational &e = ctx.a.at(j, k);
                if (e.sign() > 0) {
                    lo_acc += e * box.lo[k];
                    hi_acc += e * box.hi[k];
                } else if (e.sign() < 0) {
                    lo_acc += e * box.hi[k];
                    hi_acc += e * box.lo[k];
                }
            }
            tlo[j] = std::move(lo_acc);
            thi[j] = std::move(hi_acc);
        }
    }

    // Evaluates one explicit x; used to seed the search with the argmin
    // found at the box center before the full descent.
    Rational eval(const std::vector<int> &x) const {
        Rational val;
        for (std::size_t j = 0; j < ctx.m; ++j) {
            Rational lo = tlo[j];
            Rational hi = thi[j];
            for (std::size_t k = 0; k < ctx.n; ++k) {
                if (x[k] != 0) {
                    const Rational &e = ctx.a.at(j, k);
                    if (!e.is_zero()) {
                        lo -= e;
                        hi -= e;
                    }
                }
            }
            Rational m = std::max(lo.abs(), hi.abs());
            if (m > val) {
                val = std::move(m);
            }
        }
        return val;
    }

    void offer(Rational val) {
        if (!best || val < *best) {
            best = std::move(val);
            if (*best <= stop_at) {
                stopped = true;
            }
        }
    }

    bool forced_out(int next_col) const {
        const auto &pos = ctx.prefix_pos[static_cast<std::size_t>(next_col + 1)];
        const auto &neg = ctx.prefix_neg[static_cast<std::size_t>(next_col + 1)];
        for (std::size_t j = 0; j < ctx.m; ++j) {
            // Least achievable upper endpoint and greatest achievable lower
            // endpoint over completions; the final max-abs is at least both.
            Rational min_hi = thi[j] - pos[j];
            if (min_hi.sign() > 0 && min_hi >= *best) {
                return true;
            }
            Rational max_lo = tlo[j] - neg[j];
            if (max_lo.sign() < 0 && -max_lo >= *best) {
                return true;
            }
        }
        return false;
    }

    void descend(int c) {
        if (stopped) {
            return;
        }
        if (c < 0) {
            Rational val;
            for (std::size_t j = 0; j < ctx.m; ++j) {
                Rational m = std::max(tlo[j].abs(), thi[j].abs());
                if (m > val) {
                    val = std::move(m);
                }
                if (best && val >= *best) {
                    return;
                }
            }
            offer(std::move(val));
            return;
        }
        if (best && forced_out(c)) {
            return;
        }
        auto uc = static_cast<std::size_t>(c);
        descend(c - 1);
        if (stopped) {
            return;
        }
        for (const auto &[j, v] : ctx.col_entries[uc]) {
            tlo[j] -= v;
            thi[j] -= v;
        }
        descend(c - 1);
        for (const auto &[j, v] : ctx.col_entries[uc]) {
            tlo[j] += v;
            thi[j] += v;
        }
    }
};

Rational box_upper_bound(const SearchContext &ctx, const Box &box, const std::vector<int> &seed_x,
                         const Rational &stop_at) {
    IntervalSearch search(ctx, box, stop_at);
    search.offer(search.eval(seed_x));
    if (!search.stopped) {
        search.descend(static_cast<int>(ctx.n) - 1);
    }
    return *search.best;
}

void check_bnb_inputs(const RMatrix &a, const Rational &eps, const BnbOptions &opt) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw DimensionError("branch-and-bound needs a nonempty matrix");
    }
    if (static_cast<int>(a.cols()) > opt.max_cols) {
        throw CapacityError("matrix has " + std::to_string(a.cols()) +
                            " columns, branch-and-bound limit is " + std::to_string(opt.max_cols));
    }
    if (eps.sign() <= 0) {
        throw DomainError("eps must be positive, got " + eps.to_string());
    }
}

} // namespace

InnerResult lindisc_at(const RMatrix &a, const RVector &w, int max_cols) {
    if (a.cols() != w.dim()) {
        throw DimensionError("lindisc_at: matrix has " + std::to_string(a.cols()) +
                             " columns, point has dim " + std::to_string(w.dim()));
    }
    if (a.rows() == 0 || a.cols() == 0) {
        throw DimensionError("lindisc_at needs a nonempty matrix");
    }
    if (static_cast<int>(a.cols()) > max_cols) {
        throw CapacityError("matrix has " + std::to_string(a.cols()) +
                            " columns, exhaustive limit is " + std::to_string(max_cols));
    }
    check_in_cube(w);
    SearchContext ctx(a);
    return lindisc_at_ctx(ctx, w);
}

Rational lipschitz_constant(const RMatrix &a) {
    Rational best;
    for (std::size_t j = 0; j < a.rows(); ++j) {
        Rational sum;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            sum += a.at(j, c).abs();
        }
        if (sum > best) {
            best = std::move(sum);
        }
    }
    return best;
}

std::string Certificate::to_line() const {
    std::ostringstream out;
    out << "lo=" << lo << " hi=" << hi << " eps=" << eps << " nodes=" << nodes << " w=";
    for (std::size_t i = 0; i < witness_w.dim(); ++i) {
        if (i > 0) {
            out << ",";
        }
        out << witness_w[i];
    }
    return out.str();
}

std::string to_string(CertifyStatus s) {
    switch (s) {
    case CertifyStatus::Proved:
        return "proved";
    case CertifyStatus::Refuted:
        return "refuted";
    case CertifyStatus::Indeterminate:
        return "indeterminate";
    }
    return "?";
}

namespace {

struct QueueEntry {
    Box box;
    Rational ub;
    std::vector<int> seed_x;
    std::uint64_t seq = 0;
};

} // namespace

Certificate lindisc_global(const RMatrix &a, const Rational &eps, const BnbOptions &opt) {
    check_bnb_inputs(a, eps, opt);
    SearchContext ctx(a);
    const Rational lipschitz = lipschitz_constant(a);

    Certificate cert;
    cert.eps = eps;
    cert.lipschitz = lipschitz;

    std::optional<Rational> lo;
    RVector witness;

    auto cmp = [](const QueueEntry &x, const QueueEntry &y) {
        if (x.ub != y.ub) {
            return x.ub < y.ub; // max-heap on ub
        }
        return x.seq > y.seq; // older first among ties
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> queue(cmp);
    std::uint64_t seq = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    auto evaluate_and_push = [&](Box box, const Rational *parent_ub) {
        ++nodes;
        RVector c = box.center();
        InnerResult inner = lindisc_at_ctx(ctx, c);
        if (!lo || inner.value > *lo) {
            lo = inner.value;
            witness = c;
        }
        Rational ub = inner.value + lipschitz * box.max_radius();
        if (parent_ub != nullptr && *parent_ub < ub) {
            ub = *parent_ub;
        }
        if (opt.interval_bound && ub > *lo) {
            Rational iv = box_upper_bound(ctx, box, inner.argmin_x, *lo);
            if (iv < ub) {
                ub = std::move(iv);
            }
        }
        if (ub > *lo) {
            queue.push(QueueEntry{std::move(box), std::move(ub), std::move(inner.argmin_x), seq++});
        }
    };

    Box root{std::vector<Rational>(a.cols(), Rational(0)), std::vector<Rational>(a.cols(), Rational(1))};
    evaluate_and_push(std::move(root), nullptr);

    Rational hi;
    bool have_hi = false;
    while (!queue.empty()) {
        QueueEntry top = queue.top();
        queue.pop();
        if (top.ub <= *lo) {
            continue; // stale: lo grew past this box
        }
        if (top.ub - *lo <= eps) {
            hi = top.ub;
            have_hi = true;
            break;
        }
        if (nodes + 2 > opt.node_budget) {
            budget_hit = true;
            hi = top.ub;
            have_hi = true;
            break;
        }
        std::size_t ax = top.box.longest_axis();
        Rational mid = (top.box.lo[ax] + top.box.hi[ax]) * Rational(1, 2);
        Box left = top.box;
        left.hi[ax] = mid;
        Box right = std::move(top.box);
        right.lo[ax] = mid;
        evaluate_and_push(std::move(left), &top.ub);
        evaluate_and_push(std::move(right), &top.ub);
    }

    cert.lo = *lo;
    cert.hi = have_hi ? std::max(hi, *lo) : *lo;
    cert.witness_w = witness;
    cert.nodes = nodes;
    cert.complete = !budget_hit;
    return cert;
}

CertifyResult certify_upper(const RMatrix &a, const Rational &threshold, const Rational &eps,
                            const BnbOptions &opt) {
    check_bnb_inputs(a, eps, opt);
    SearchContext ctx(a);
    const Rational lipschitz = lipschitz_constant(a);
    const Rational cutoff = threshold + eps;

    CertifyResult res;
    res.certificate.eps = eps;
    res.certificate.lipschitz = lipschitz;

    std::optional<Rational> lo;
    RVector witness;

    struct StackEntry {
        Box box;
        std::vector<int> seed_x;
        Rational parent_ub;
    };
    std::vector<StackEntry> stack;
    std::vector<int> root_seed(a.cols(), 0);
    // Rounding every coordinate to its nearest integer moves w by at most
    // 1/2, so lindisc never exceeds L/2; that bounds the root box.
    stack.push_back(StackEntry{
        Box{std::vector<Rational>(a.cols(), Rational(0)), std::vector<Rational>(a.cols(), Rational(1))},
        std::move(root_seed), lipschitz * Rational(1, 2)});

    std::uint64_t nodes = 0;
    while (!stack.empty()) {
        if (nodes >= opt.node_budget) {
            // Unresolved area is covered by the remaining boxes.
            Rational hi = cutoff;
            for (const auto &e : stack) {
                if (e.parent_ub > hi) {
                    hi = e.parent_ub;
                }
            }
            res.status = CertifyStatus::Indeterminate;
            res.certificate.lo = lo ? *lo : Rational(0);
            res.certificate.hi = hi;
            res.certificate.witness_w = witness;
            res.certificate.nodes = nodes;
            res.certificate.complete = false;
            return res;
        }
        StackEntry top = std::move(stack.back());
        stack.pop_back();
        ++nodes;

        RVector c = top.box.center();
        InnerResult inner = lindisc_at_ctx(ctx, c);
        if (!lo || inner.value > *lo) {
            lo = inner.value;
            witness = c;
        }
        if (inner.value > threshold) {
            res.status = CertifyStatus::Refuted;
            res.refutation_w = c;
            res.refutation_value = inner.value;
            res.certificate.lo = inner.value;
            // Coarse but sound: f varies by at most L over the cube.
            res.certificate.hi = inner.value + lipschitz;
            res.certificate.witness_w = c;
            res.certificate.nodes = nodes;
            res.certificate.complete = true;
            return res;
        }

        Rational ub = inner.value + lipschitz * top.box.max_radius();
        if (opt.interval_bound && ub > cutoff) {
            Rational iv = box_upper_bound(ctx, top.box, inner.argmin_x, cutoff);
            if (iv < ub) {
                ub = std::move(iv);
            }
        }
        if (ub <= cutoff) {
            continue;
        }

        std::size_t ax = top.box.longest_axis();
        Rational mid = (top.box.lo[ax] + top.box.hi[ax]) * Rational(1, 2);
        Box left = top.box;
        left.hi[ax] = mid;
        Box right = std::move(top.box);
        right.lo[ax] = mid;
        stack.push_back(StackEntry{std::move(left), inner.argmin_x, ub});
        stack.push_back(StackEntry{std::move(right), std::move(inner.argmin_x), std::move(ub)});
    }

    res.status = CertifyStatus::Proved;
    res.certificate.lo = lo ? *lo : Rational(0);
    res.certificate.hi = cutoff;
    res.certificate.witness_w = witness;
    res.certificate.nodes = nodes;
    res.certificate.complete = true;
    return res;
}

Rational grid_oracle(const RMatrix &a, int resolution, std::uint64_t max_points) {
    if (resolution < 1) {
        throw DomainError("grid resolution must be at least 1");
    }
    if (a.cols() == 0 || a.rows() == 0) {
        throw DimensionError("grid_oracle needs a nonempty matrix");
    }
    const std::size_t n = a.cols();
    const auto steps = static_cast<std::uint64_t>(resolution) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > max_points / steps) {
            throw CapacityError("grid has more than " + std::to_string(max_points) + " points");
        }
        total *= steps;
    }

    SearchContext ctx(a);
    std::vector<int> idx(n, 0);
    RVector w(n);
    Rational best;
    bool first = true;
    while (true) {
        InnerResult inner = lindisc_at_ctx(ctx, w);
        if (first || inner.value > best) {
            best = inner.value;
            first = false;
        }
        std::size_t pos = 0;
        while (pos < n) {
            if (idx[pos] < resolution) {
                ++idx[pos];
                w[pos] = Rational(idx[pos], resolution);
                break;
            }
            idx[pos] = 0;
            w[pos] = Rational(0);
            ++pos;
        }
        if (pos == n) {
            break;
        }
    }
    return best;
}

} // namespace lindisc
