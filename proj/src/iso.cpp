#include "rlie/iso.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "rlie/error.hpp"

namespace rlie {

void SearchBudget::validate() const {
    if (ladder.empty()) throw DomainError("extension ladder is empty");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (ladder[i] <= ladder[i - 1]) throw DomainError("extension ladder must be strictly ascending");
    if (ladder.front() < 1) throw DomainError("extension degrees start at 1");
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::Exhausted: return "budget exhausted";
    }
    return "?";
}

LieInvariants lie_invariants(const LieAlgebra& L) {
    LieInvariants inv;
    Subspace z = L.center(), d = L.derived();
    inv.center_dim = z.dim();
    inv.derived_dim = d.dim();
    inv.lower_central = L.lower_central_dims();
    inv.derived_series = L.derived_series_dims();
    inv.center_cap_derived = z.intersect(d).dim();
    return inv;
}

namespace {

// Characteristic subspaces and maps used to label vectors by properties that
// any (restricted) isomorphism preserves.
class Labeler {
public:
    Labeler(const LieAlgebra& L, const PSemilinearMap* m) : L_(L), m_(m) {
        Subspace full = Subspace::full(L.field(), L.dim());
        Subspace d = L.derived();
        spaces_ = {L.center(), d, L.bracket_of(full, d), L.bracket_of(d, d)};
        // centralizer of [L,L]
        Subspace cd = full;
        for (const auto& b : d.basis()) cd = cd.intersect(L.centralizer(b));
        spaces_.push_back(cd);
    }

    std::vector<int> operator()(const Vec& v) const {
        std::vector<int> s;
        s.reserve(24);
        for (const auto& sp : spaces_) s.push_back(sp.contains(v) ? 1 : 0);
        if (!L_.is_abelian()) {
            Matrix ad = L_.ad(v);
            Matrix pw = ad;
            for (std::size_t i = 0; i < L_.dim(); ++i) {
                std::size_t r = pw.rank();
                s.push_back(int(r));
                if (r == 0) break;
                pw = pw * ad;
            }
        }
        if (m_) {
            const Field& F = L_.F();
            std::vector<Vec> chain = {v};
            Vec w = v;
            for (int r = 1; r <= 3; ++r) {
                w = eval(L_, *m_, w);
                chain.push_back(w);
                s.push_back(is_zero(w) ? 1 : 0);
                s.push_back(spaces_[0].contains(w) ? 1 : 0);
                s.push_back(spaces_[1].contains(w) ? 1 : 0);
                s.push_back(w == v ? 1 : 0);
                s.push_back(int(Matrix::from_rows(L_.field(), chain).rank()));
            }
            // v^[p] = c v
            int code = -1;
            if (!is_zero(v)) {
                std::size_t piv = 0;
                while (v[piv] == 0) ++piv;
                Elem c = F.div(chain[1][piv], v[piv]);
                if (vscale(F, c, v) == chain[1]) code = int(c);
            }
            s.push_back(code);
        }
        return s;
    }

private:
    const LieAlgebra& L_;
    const PSemilinearMap* m_;
    std::vector<Subspace> spaces_;
};

struct Echelon {
    std::vector<std::pair<std::size_t, Vec>> rows;

    bool insert(const Field& F, Vec v) {
        for (const auto& [piv, r] : rows)
            if (v[piv]) vaxpy(F, v, F.neg(v[piv]), r);
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) return false;
        v = vscale(F, F.inv(v[piv]), v);
        for (auto& [p2, r] : rows)
            if (r[piv]) vaxpy(F, r, F.neg(r[piv]), v);
        rows.emplace_back(piv, std::move(v));
        return true;
    }
};

struct Problem {
    const LieAlgebra* src = nullptr;
    const LieAlgebra* dst = nullptr;
    const PSemilinearMap* m1 = nullptr;
    const PSemilinearMap* m2 = nullptr;
};

class Engine {
public:
    Engine(const Problem& pr, const SearchBudget& budget, bool first_only)
        : pr_(pr), budget_(budget), first_only_(first_only), F_(pr.dst->F()), n_(pr.dst->dim()) {
        if (pr.src->dim() != n_ || pr.src->field() != pr.dst->field())
            throw DomainError("search needs algebras of equal dimension over one field");
        q_ = F_.order();
        std::uint64_t total = checked_power(q_, n_, kMaxScanOrder);
        if (total > kMaxScanOrder) throw BoundExceeded("search needs q^n <= 2^16");
        total_ = std::size_t(total);
        start_ = std::chrono::steady_clock::now();
        prepare();
    }

    void run() {
        State root;
        root.cols.assign(n_, std::nullopt);
        if (dead_) return;
        Choice ch;
        if (!choose(root, ch)) return;
        std::vector<Vec> cands = candidates(root, ch);
        const unsigned threads = std::max(1u, std::min<unsigned>(budget_.threads, unsigned(cands.size())));
        std::vector<std::vector<std::pair<std::size_t, std::vector<Matrix>>>> per(threads);
        auto worker = [&](unsigned t) {
            for (std::size_t i = t; i < cands.size(); i += threads) {
                if (first_only_ && i > best_index_.load()) break;
                if (stop_.load()) break;
                State s = root;
                if (!accept(s, ch.col, cands[i])) continue;
                std::vector<Matrix> found;
                dfs(s, found, i);
                if (!found.empty()) {
                    per[t].emplace_back(i, std::move(found));
                    if (first_only_) {
                        std::size_t cur = best_index_.load();
                        while (i < cur && !best_index_.compare_exchange_weak(cur, i)) {
                        }
                    }
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        std::vector<std::pair<std::size_t, std::vector<Matrix>>> all;
        for (auto& v : per)
            for (auto& e : v) all.push_back(std::move(e));
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [idx, ms] : all) {
            for (auto& m : ms) results.push_back(std::move(m));
            if (first_only_ && !results.empty()) {
                results.resize(1);
                break;
            }
        }
    }

    std::vector<Matrix> results;
    bool exhausted() const { return exhausted_.load(); }
    std::uint64_t candidates_seen() const { return counter_.load(); }

private:
    struct State {
        std::vector<std::optional<Vec>> cols;
        Echelon ech;
    };
    struct Choice {
        std::size_t col = 0;
        Matrix a;  // stacked constraints a v = rhs
        Vec rhs;
        bool constrained = false;
        std::optional<Vec> particular;
        Subspace kernel;
        std::uint64_t estimate = 0;
    };

    std::size_t index_of(const Vec& v) const {
        std::size_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * q_ + v[i];
        return idx;
    }
    Vec vector_at(std::size_t idx) const {
        Vec v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = Elem(idx % q_);
            idx /= q_;
        }
        return v;
    }

    void prepare() {
        const LieAlgebra& S = *pr_.src;
        // relation mentions for tie-breaking
        std::vector<int> mentions(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t l = i + 1; l < n_; ++l) {
                Vec c = S.structure(i, l);
                rels_.push_back({i, l, c});
                if (is_zero(c)) continue;
                ++mentions[i];
                ++mentions[l];
                for (std::size_t k = 0; k < n_; ++k)
                    if (c[k]) ++mentions[k];
            }
        priority_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) priority_[j] = mentions[j];

        Labeler src_label(S, pr_.m1);
        Labeler dst_label(*pr_.dst, pr_.m2);
        std::map<std::vector<int>, int> ids;
        std::vector<int> src_ids(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            auto lab = src_label(S.basis(j));
            auto it = ids.emplace(lab, int(ids.size())).first;
            src_ids[j] = it->second;
        }
        label_of_.assign(total_, -1);
        buckets_.assign(n_, {});
        // Any isomorphism carries labels to labels, so the label counts must agree.
        const bool same = pr_.src == pr_.dst && pr_.m1 == pr_.m2;
        std::map<std::vector<int>, std::size_t> src_hist, dst_hist;
        for (std::size_t idx = 1; idx < total_; ++idx) {
            Vec v = vector_at(idx);
            auto lab = dst_label(v);
            if (!same) {
                ++dst_hist[lab];
                ++src_hist[src_label(v)];
            }
            auto it = ids.find(lab);
            if (it == ids.end()) continue;
            label_of_[idx] = it->second;
            for (std::size_t j = 0; j < n_; ++j)
                if (src_ids[j] == it->second) buckets_[j].push_back(v);
        }
        src_label_ = src_ids;
        if (src_hist != dst_hist) dead_ = true;
        for (std::size_t j = 0; j < n_; ++j)
            if (buckets_[j].empty()) dead_ = true;
    }

    bool tick() {
        std::uint64_t c = ++counter_;
        if (c > budget_.max_candidates) {
            exhausted_ = true;
            stop_ = true;
        }
        if (budget_.time_limit && (c & 1023) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
            exhausted_ = true;
            stop_ = true;
        }
        return !stop_.load();
    }

    // Constraints on column j that are linear given the assigned columns.
    bool build(const State& s, std::size_t j, Choice& ch) const {
        const LieAlgebra& D = *pr_.dst;
        std::vector<Vec> rows;
        Vec rhs;
        auto assigned = [&](std::size_t k) { return s.cols[k].has_value(); };
        auto add_block = [&](const Matrix& a, const Vec& b) {
            for (std::size_t r = 0; r < n_; ++r) {
                rows.push_back(a.row(r));
                rhs.push_back(b[r]);
            }
        };
        for (const auto& rel : rels_) {
            // [phi_i, phi_l] - sum c_k phi_k = 0
            bool involves = rel.i == j || rel.l == j || rel.c[j] != 0;
            if (!involves) continue;
            bool ok = true;
            for (std::size_t k = 0; k < n_ && ok; ++k) {
                bool in = k == rel.i || k == rel.l || rel.c[k] != 0;
                if (in && k != j && !assigned(k)) ok = false;
            }
            if (!ok) continue;
            Matrix a(D.field(), n_, n_);
            Vec b(n_, 0);
            if (rel.i == j) a = a - D.ad(*s.cols[rel.l]);
            if (rel.l == j) a = a + D.ad(*s.cols[rel.i]);
            if (rel.i != j && rel.l != j) b = D.bracket(*s.cols[rel.i], *s.cols[rel.l]);
            for (std::size_t k = 0; k < n_; ++k) {
                if (!rel.c[k]) continue;
                if (k == j)
                    a = a - Matrix::identity(D.field(), n_).scaled(rel.c[k]);
                else
                    vaxpy(F_, b, F_.neg(rel.c[k]), *s.cols[k]);
            }
            // a v + b = 0
            add_block(a, vscale(F_, F_.neg(1), b));
        }
        if (pr_.m1) {
            for (std::size_t t = 0; t < n_; ++t) {
                if (t == j || !assigned(t)) continue;
                const Vec& f = pr_.m1->images[t];
                if (!f[j]) continue;
                bool ok = true;
                for (std::size_t k = 0; k < n_; ++k)
                    if (f[k] && k != j && !assigned(k)) ok = false;
                if (!ok) continue;
                // f_j v = eval(phi_t) - sum_{k != j} f_k phi_k
                Vec b = eval(D, *pr_.m2, *s.cols[t]);
                for (std::size_t k = 0; k < n_; ++k)
                    if (f[k] && k != j) vaxpy(F_, b, F_.neg(f[k]), *s.cols[k]);
                add_block(Matrix::identity(D.field(), n_).scaled(f[j]), b);
            }
        }
        ch.col = j;
        ch.constrained = !rows.empty();
        if (!ch.constrained) {
            ch.particular = Vec(n_, 0);
            ch.kernel = Subspace::full(D.field(), n_);
        } else {
            ch.a = Matrix::from_rows(D.field(), rows);
            ch.rhs = rhs;
            ch.particular = solve(ch.a, rhs);
            if (!ch.particular) return false;
            ch.kernel = kernel(ch.a);
        }
        std::uint64_t aff = checked_power(q_, ch.kernel.dim(), total_);
        ch.estimate = std::min<std::uint64_t>(aff, buckets_[j].size());
        return true;
    }

    bool choose(const State& s, Choice& best) const {
        bool have = false;
        for (std::size_t j = 0; j < n_; ++j) {
            if (s.cols[j]) continue;
            Choice ch;
            if (!build(s, j, ch)) return false;
            if (ch.estimate == 0) return false;
            if (!have || ch.estimate < best.estimate ||
                (ch.estimate == best.estimate && priority_[j] > priority_[best.col])) {
                best = std::move(ch);
                have = true;
            }
        }
        return have;
    }

    std::vector<Vec> candidates(const State&, const Choice& ch) const {
        std::vector<Vec> out;
        const std::size_t j = ch.col;
        std::uint64_t aff = checked_power(q_, ch.kernel.dim(), total_);
        if (aff <= buckets_[j].size()) {
            ch.kernel.for_each_vector([&](const Vec& k) {
                Vec v = vadd(F_, *ch.particular, k);
                std::size_t idx = index_of(v);
                if (idx != 0 && label_of_[idx] == src_label_[j]) out.push_back(std::move(v));
                return true;
            });
        } else {
            for (const auto& v : buckets_[j]) {
                if (ch.constrained && ch.a.apply(v) != ch.rhs) continue;
                out.push_back(v);
            }
        }
        return out;
    }

    // Nonlinear checks and independence for placing v in column j.
    bool accept(State& s, std::size_t j, const Vec& v) {
        if (!tick()) return false;
        if (pr_.m1) {
            const Vec& f = pr_.m1->images[j];
            bool ready = true;
            for (std::size_t k = 0; k < n_; ++k)
                if (f[k] && k != j && !s.cols[k]) ready = false;
            if (ready) {
                Vec lhs(n_, 0);
                for (std::size_t k = 0; k < n_; ++k)
                    if (f[k]) vaxpy(F_, lhs, f[k], k == j ? v : *s.cols[k]);
                if (lhs != eval(*pr_.dst, *pr_.m2, v)) return false;
            }
        }
        if (!s.ech.insert(F_, v)) return false;
        s.cols[j] = v;
        return true;
    }

    void dfs(State& s, std::vector<Matrix>& out, std::size_t branch) {
        if (stop_.load()) return;
        if (first_only_ && (!out.empty() || branch > best_index_.load())) return;
        bool full = true;
        for (const auto& c : s.cols)
            if (!c) full = false;
        if (full) {
            std::vector<Vec> cols;
            for (const auto& c : s.cols) cols.push_back(*c);
            out.push_back(Matrix::from_columns(pr_.dst->field(), cols));
            return;
        }
        Choice ch;
        if (!choose(s, ch)) return;
        for (const auto& v : candidates(s, ch)) {
            State next = s;
            if (!accept(next, ch.col, v)) {
                if (stop_.load()) return;
                continue;
            }
            dfs(next, out, branch);
            if (stop_.load()) return;
            if (first_only_ && !out.empty()) return;
        }
    }

    struct Rel {
        std::size_t i, l;
        Vec c;
    };

    Problem pr_;
    SearchBudget budget_;
    bool first_only_;
    const Field& F_;
    std::size_t n_;
    std::uint32_t q_ = 0;
    std::size_t total_ = 0;
    std::vector<Rel> rels_;
    std::vector<int> priority_;
    std::vector<int> label_of_;
    std::vector<int> src_label_;
    std::vector<std::vector<Vec>> buckets_;
    bool dead_ = false;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> counter_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> exhausted_{false};
    std::atomic<std::size_t> best_index_{SIZE_MAX};
};

void verify_witness(const Problem& pr, const Matrix& phi) {
    bool ok = pr.m1 ? is_restricted_isomorphism(*pr.src, *pr.m1, *pr.dst, *pr.m2, phi)
                    : (phi.is_invertible() && is_lie_homomorphism(*pr.src, *pr.dst, phi));
    if (!ok) throw Error("search produced a matrix that fails independent verification: " + phi.to_string());
}

AutomorphismList enumerate_all(const Problem& pr, const SearchBudget& budget) {
    Engine e(pr, budget, false);
    e.run();
    AutomorphismList out;
    out.maps = std::move(e.results);
    for (const auto& m : out.maps) verify_witness(pr, m);
    std::sort(out.maps.begin(), out.maps.end());
    out.complete = !e.exhausted();
    out.candidates = e.candidates_seen();
    return out;
}

SearchResult find_first(const Problem& pr, const SearchBudget& budget) {
    SearchResult r;
    r.field = pr.dst->field();
    Engine e(pr, budget, true);
    e.run();
    r.candidates = e.candidates_seen();
    if (!e.results.empty()) {
        verify_witness(pr, e.results.front());
        r.status = SearchStatus::Found;
        r.witness = e.results.front();
    } else {
        r.status = e.exhausted() ? SearchStatus::Exhausted : SearchStatus::Absent;
    }
    return r;
}

std::string field_name(const Field& F) {
    return "F_" + std::to_string(F.p()) + (F.k() > 1 ? "^" + std::to_string(F.k()) : "");
}

// Runs search(field, embedding) over each admissible ladder rung.
template <class Fn>
SearchResult over_ladder(const FieldPtr& base, const SearchBudget& budget, Fn&& search) {
    budget.validate();
    SearchResult last;
    last.field = base;
    bool exhausted = false;
    std::string skipped;
    std::uint64_t total = 0;
    FieldPtr reached;
    for (unsigned k : budget.ladder) {
        if (k % base->k() != 0) continue;
        FieldPtr f;
        try {
            f = Field::make(base->p(), k);
        } catch (const BoundExceeded&) {
            exhausted = true;
            skipped += " " + std::to_string(k);
            continue;
        }
        FieldEmbedding emb(base, f);
        SearchResult r;
        try {
            r = search(emb);
        } catch (const BoundExceeded&) {
            exhausted = true;
            skipped += " " + std::to_string(k);
            continue;
        }
        total += r.candidates;
        if (r.found()) {
            r.candidates = total;
            return r;
        }
        if (r.status == SearchStatus::Exhausted) exhausted = true;
        reached = f;
    }
    last.candidates = total;
    last.field = reached ? reached : base;
    last.status = exhausted ? SearchStatus::Exhausted : SearchStatus::Absent;
    if (reached) last.note = "absent up to " + field_name(*reached);
    if (!skipped.empty()) last.note += (last.note.empty() ? "" : "; ") + std::string("not searched at k =") + skipped;
    return last;
}

}  // namespace

AutomorphismList automorphisms(const LieAlgebra& L, const SearchBudget& budget) {
    Problem pr{&L, &L, nullptr, nullptr};
    return enumerate_all(pr, budget);
}

AutomorphismList conjugators(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget) {
    Problem pr{&L, &L, &m1, &m2};
    return enumerate_all(pr, budget);
}

SearchResult find_lie_isomorphism(const LieAlgebra& src, const LieAlgebra& dst, const SearchBudget& budget) {
    if (src.dim() != dst.dim()) throw DomainError("isomorphism search needs equal dimensions");
    if (lie_invariants(src) != lie_invariants(dst)) {
        SearchResult r;
        r.field = dst.field();
        r.note = "Lie invariants differ";
        return r;
    }
    Problem pr{&src, &dst, nullptr, nullptr};
    return find_first(pr, budget);
}

SearchResult find_conjugator(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget) {
    if (checked_power(L.F().order(), L.dim(), 4096) <= 4096 && invariant_profile(L, m1) != invariant_profile(L, m2)) {
        SearchResult r;
        r.field = L.field();
        r.note = "invariant profiles differ";
        return r;
    }
    Problem pr{&L, &L, &m1, &m2};
    return find_first(pr, budget);
}

SearchResult lie_isomorphism(const LieAlgebra& L1, const LieAlgebra& L2, const SearchBudget& budget) {
    if (L1.field() != L2.field()) throw DomainError("algebras over different fields");
    if (lie_invariants(L1) != lie_invariants(L2)) {
        SearchResult r;
        r.field = L1.field();
        r.note = "Lie invariants differ";
        return r;
    }
    return over_ladder(L1.field(), budget, [&](const FieldEmbedding& emb) {
        return find_lie_isomorphism(L1.base_change(emb), L2.base_change(emb), budget);
    });
}

SearchResult pmaps_conjugate(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget) {
    return over_ladder(L.field(), budget, [&](const FieldEmbedding& emb) {
        LieAlgebra E = L.base_change(emb);
        return find_conjugator(E, base_change(m1, emb), base_change(m2, emb), budget);
    });
}

SearchResult restricted_isomorphic(const RestrictedLieAlgebra& R1, const RestrictedLieAlgebra& R2,
                                   const SearchBudget& budget) {
    const LieAlgebra& L1 = R1.algebra;
    const LieAlgebra& L2 = R2.algebra;
    if (L1.field() != L2.field()) throw DomainError("algebras over different fields");
    if (lie_invariants(L1) != lie_invariants(L2)) {
        SearchResult r;
        r.field = L1.field();
        r.note = "Lie invariants differ";
        return r;
    }
    return over_ladder(L1.field(), budget, [&](const FieldEmbedding& emb) {
        LieAlgebra E1 = L1.base_change(emb), E2 = L2.base_change(emb);
        SearchResult g = find_lie_isomorphism(E1, E2, budget);
        if (!g.found()) return g;
        PSemilinearMap moved = transport(E1, E2, base_change(R1.pmap, emb), *g.witness);
        SearchResult c = find_conjugator(E2, moved, base_change(R2.pmap, emb), budget);
        c.candidates += g.candidates;
        if (c.found()) c.witness = *c.witness * *g.witness;
        return c;
    });
}

// ---- similarity ----

std::vector<Poly> invariant_factors(const Matrix& a) {
    if (a.rows() != a.cols()) throw DomainError("invariant factors of a non-square matrix");
    const FieldPtr& f = a.field();
    const Field& F = *f;
    const std::size_t n = a.rows();
    // Smith form of xI - A over F[x].
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Elem> c = {F.neg(a(i, j))};
            if (i == j) c.push_back(1);
            m[i][j] = Poly(f, c);
        }
    std::vector<Poly> diag;
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: nonzero entry of least degree in the trailing block
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!m[i][j].is_zero() && (pi == n || m[i][j].degree() < m[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) {
                for (std::size_t r = t; r < n; ++r) diag.push_back(Poly(f));
                t = n;
                break;
            }
            std::swap(m[t], m[pi]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                auto [qt, r] = m[i][t].divmod(m[t][t]);
                for (std::size_t j = t; j < n; ++j) m[i][j] = m[i][j] - qt * m[t][j];
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                auto [qt, r] = m[t][j].divmod(m[t][t]);
                for (std::size_t i = t; i < n; ++i) m[i][j] = m[i][j] - qt * m[i][t];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (!m[i][j].divmod(m[t][t]).second.is_zero()) {
                        for (std::size_t c = t; c < n; ++c) m[t][c] = m[t][c] + m[i][c];
                        divides = false;
                    }
            if (!divides) continue;
            diag.push_back(m[t][t].monic());
            break;
        }
    }
    std::vector<Poly> out;
    for (auto& d : diag)
        if (d.degree() > 0) out.push_back(d);
    return out;
}

bool similar(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

std::optional<std::pair<Matrix, Elem>> conjugate_up_to_scalar(const Matrix& a, const Matrix& b, std::uint64_t seed) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DomainError("conjugate_up_to_scalar needs square matrices of one size");
    const FieldPtr& f = a.field();
    const Field& F = *f;
    const std::size_t n = a.rows();
    for (Elem k = 1; k < F.order(); ++k) {
        Matrix kb = b.scaled(k);
        if (!similar(a, kb)) continue;
        // P A = kB P is linear in the entries of P.
        Matrix sys(f, n * n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    // (PA)_{ij} = sum_l P_{il} A_{lj}; (kB P)_{ij} = sum_l kB_{il} P_{lj}
                    sys(i * n + j, i * n + l) = F.add(sys(i * n + j, i * n + l), a(l, j));
                    sys(i * n + j, l * n + j) = F.sub(sys(i * n + j, l * n + j), kb(i, l));
                }
        Subspace sol = kernel(sys);
        auto to_matrix = [&](const Vec& v) {
            Matrix p(f, n, n);
            for (std::size_t i = 0; i < n * n; ++i) p(i / n, i % n) = v[i];
            return p;
        };
        std::optional<Matrix> found;
        std::uint64_t tried = 0;
        sol.for_each_vector([&](const Vec& v) {
            if (++tried > 100000) return false;
            Matrix p = to_matrix(v);
            if (p.is_invertible()) {
                found = p;
                return false;
            }
            return true;
        });
        std::mt19937_64 rng(seed);
        for (int attempt = 0; !found && attempt < 100000; ++attempt) {
            Vec v(n * n, 0);
            for (const auto& bv : sol.basis()) vaxpy(F, v, Elem(rng() % F.order()), bv);
            Matrix p = to_matrix(v);
            if (p.is_invertible()) found = p;
        }
        if (!found) throw Error("similar matrices without a located conjugator");
        return std::make_pair(*found, k);
    }
    return std::nullopt;
}

}  // namespace rlie
