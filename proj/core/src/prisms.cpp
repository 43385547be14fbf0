#include "hatgames/prisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hg {

std::vector<int> Prism::measurements() const {
    std::vector<int> m;
    for (const std::vector<int>& z : axes) m.push_back(static_cast<int>(z.size()));
    return m;
}

bool Prism::contains(const Point& p) const {
    if (p.size() != axes.size()) return false;
    for (std::size_t i = 0; i < axes.size(); ++i)
        if (!std::binary_search(axes[i].begin(), axes[i].end(), p[i]))
            return false;
    return true;
}

bool CoverList::covers(const Point& p) const {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (std::find(values[i].begin(), values[i].end(), p[i]) !=
            values[i].end())
            return true;
    return false;
}

namespace {

bool cover_dfs(const std::vector<Point>& q, const std::vector<int>& a,
               std::vector<std::vector<int>>& vals) {
    const Point* open = nullptr;
    for (const Point& p : q) {
        bool covered = false;
        for (std::size_t i = 0; i < vals.size() && !covered; ++i)
            covered = std::find(vals[i].begin(), vals[i].end(), p[i]) !=
                      vals[i].end();
        if (!covered) {
            open = &p;
            break;
        }
    }
    if (!open) return true;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (static_cast<int>(vals[i].size()) >= a[i]) continue;
        vals[i].push_back((*open)[i]);
        if (cover_dfs(q, a, vals)) return true;
        vals[i].pop_back();
    }
    return false;
}

bool coverable(const std::vector<Point>& q, const std::vector<int>& a) {
    std::vector<std::vector<int>> vals(a.size());
    return cover_dfs(q, a, vals);
}

}  // namespace

CoverSearch find_cover(const std::vector<Point>& q, const std::vector<int>& a) {
    for (const Point& p : q)
        if (p.size() != a.size())
            throw std::invalid_argument("find_cover: point dimension mismatch");
    for (int ai : a)
        if (ai < 0) throw std::invalid_argument("find_cover: negative capacity");

    CoverSearch cs;
    cs.cover.a = a;
    std::vector<std::vector<int>> vals(a.size());
    if (cover_dfs(q, a, vals)) {
        cs.covered = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::vector<int>& v = vals[i];
            for (int c = 0; static_cast<int>(v.size()) < a[i]; ++c)
                if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
            std::sort(v.begin(), v.end());
        }
        cs.cover.values = std::move(vals);
        return cs;
    }
    std::vector<Point> w = q;
    for (std::size_t i = 0; i < w.size();) {
        std::vector<Point> t = w;
        t.erase(t.begin() + static_cast<long>(i));
        if (!coverable(t, a))
            w = std::move(t);
        else
            ++i;
    }
    cs.sprawl_witness = std::move(w);
    return cs;
}

std::optional<Prism> prism_in_complement(const std::vector<int>& box,
                                         const std::vector<Point>& q,
                                         const std::vector<int>& target) {
    if (box.size() != target.size())
        throw std::invalid_argument("prism_in_complement: dimension mismatch");
    std::vector<int> a(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (target[i] < 1 || target[i] > box[i])
            throw std::invalid_argument("prism_in_complement: bad target size");
        a[i] = box[i] - target[i];
    }
    CoverSearch cs = find_cover(q, a);
    if (!cs.covered) return std::nullopt;
    Prism pr;
    pr.axes.resize(box.size());
    for (std::size_t i = 0; i < box.size(); ++i)
        for (int c = 0; c < box[i]; ++c)
            if (std::find(cs.cover.values[i].begin(), cs.cover.values[i].end(),
                          c) == cs.cover.values[i].end())
                pr.axes[i].push_back(c);
    return pr;
}

namespace {

std::vector<Point> box_points(const std::vector<int>& box) {
    std::vector<Point> pts{Point{}};
    for (int b : box) {
        std::vector<Point> next;
        for (const Point& p : pts)
            for (int c = 0; c < b; ++c) {
                Point np = p;
                np.push_back(c);
                next.push_back(std::move(np));
            }
        pts = std::move(next);
    }
    return pts;
}

}  // namespace

std::optional<MinSprawl> min_sprawl(const std::vector<int>& box,
                                    const std::vector<int>& a) {
    if (box.size() != a.size())
        throw std::invalid_argument("min_sprawl: dimension mismatch");
    for (std::size_t i = 0; i < box.size(); ++i)
        if (a[i] >= box[i]) return std::nullopt;
    const std::vector<Point> pts = box_points(box);
    const std::size_t n = pts.size();
    if (n > 24) throw std::invalid_argument("min_sprawl: box too large");
    std::size_t cap = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        cap *= static_cast<std::size_t>(a[i]) + 1;
    for (std::size_t size = 1; size <= std::min(cap, n); ++size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Point> sub;
            for (std::size_t j : idx) sub.push_back(pts[j]);
            if (!coverable(sub, a)) return MinSprawl{size, std::move(sub)};
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

void PackingInstance::validate() const {
    if (d.size() != a.size())
        throw std::invalid_argument("packing: dimension mismatch");
    if (d.empty()) throw std::invalid_argument("packing: empty box");
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] < 1 || a[i] < 1 || a[i] > d[i])
            throw std::invalid_argument("packing: bad axis sizes");
    if (x < 1 || y < 1) throw std::invalid_argument("packing: bad multiplicities");
}

namespace {

void axis_subsets(int d, int a, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(a);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int k = a;
        while (k > 0 && cur[k - 1] == d - a + k - 1) --k;
        if (k == 0) return;
        ++cur[k - 1];
        for (int j = k; j < a; ++j) cur[j] = cur[j - 1] + 1;
    }
}

struct PackState {
    const std::vector<Prism>* candidates;
    const std::vector<std::vector<char>>* masks;  // candidate x point
    int x, y;
    long long per_prism;
    std::vector<int> mult;
    long long capacity;
    std::vector<int> chosen;

    bool dfs(int placed, std::size_t from) {
        if (placed == x) return true;
        if (capacity < static_cast<long long>(x - placed) * per_prism)
            return false;
        for (std::size_t ci = from; ci < candidates->size(); ++ci) {
            const std::vector<char>& m = (*masks)[ci];
            bool fits = true;
            for (std::size_t p = 0; p < mult.size() && fits; ++p)
                fits = !m[p] || mult[p] < y;
            if (!fits) continue;
            for (std::size_t p = 0; p < mult.size(); ++p)
                if (m[p]) ++mult[p], --capacity;
            chosen.push_back(static_cast<int>(ci));
            if (dfs(placed + 1, ci)) return true;
            chosen.pop_back();
            for (std::size_t p = 0; p < mult.size(); ++p)
                if (m[p]) --mult[p], ++capacity;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Prism>> solve_star_packing(
    const PackingInstance& inst) {
    inst.validate();
    long long points = 1, per_prism = 1, cands = 1;
    for (std::size_t i = 0; i < inst.d.size(); ++i) {
        points *= inst.d[i];
        per_prism *= inst.a[i];
        long long c = 1;
        for (int j = 0; j < inst.a[i]; ++j)
            c = c * (inst.d[i] - j) / (j + 1);
        cands *= c;
    }
    if (points > 1'000'000 || cands > 200'000)
        throw std::invalid_argument("solve_star_packing: instance too large");
    if (static_cast<long long>(inst.x) * per_prism >
        static_cast<long long>(inst.y) * points)
        return std::nullopt;

    std::vector<std::vector<std::vector<int>>> per_axis(inst.d.size());
    for (std::size_t i = 0; i < inst.d.size(); ++i)
        axis_subsets(inst.d[i], inst.a[i], per_axis[i]);
    std::vector<Prism> candidates{Prism{}};
    for (std::size_t i = 0; i < inst.d.size(); ++i) {
        std::vector<Prism> next;
        for (const Prism& pr : candidates)
            for (const std::vector<int>& z : per_axis[i]) {
                Prism np = pr;
                np.axes.push_back(z);
                next.push_back(std::move(np));
            }
        candidates = std::move(next);
    }
    const std::vector<Point> pts = box_points(inst.d);
    std::vector<std::vector<char>> masks(candidates.size(),
                                         std::vector<char>(pts.size()));
    for (std::size_t ci = 0; ci < candidates.size(); ++ci)
        for (std::size_t p = 0; p < pts.size(); ++p)
            masks[ci][p] = candidates[ci].contains(pts[p]) ? 1 : 0;

    PackState st{&candidates, &masks, inst.x, inst.y, per_prism,
                 std::vector<int>(pts.size(), 0),
                 static_cast<long long>(inst.y) * points,
                 {}};
    if (!st.dfs(0, 0)) return std::nullopt;
    std::vector<Prism> out;
    for (int ci : st.chosen) out.push_back(candidates[ci]);
    return out;
}

Outcome star_outcome(const Game& game) {
    game.validate();
    int center = -1;
    if (!is_star(game.d, &center))
        throw std::invalid_argument("star_outcome: not a star");
    const std::vector<int>& leaves = game.d.out(center);
    PackingInstance inst;
    for (int l : leaves) {
        inst.d.push_back(game.h[l]);
        inst.a.push_back(game.h[l] - game.g[l]);
    }
    inst.x = game.h[center];
    inst.y = game.g[center];
    std::optional<std::vector<Prism>> pack = solve_star_packing(inst);
    if (!pack) return Outcome::unwinnable("star-packing-infeasible");

    Strategy f;
    f.plans.resize(game.n());
    Plan& cp = f.plans[center];
    cp.vertex = center;
    cp.order = leaves;
    for (ColoringIter it(game, leaves); it.valid(); it.advance()) {
        std::vector<int> row;
        for (int n = 0; n < inst.x; ++n)
            if ((*pack)[n].contains(it.tuple())) row.push_back(n);
        for (int c = 0; static_cast<int>(row.size()) < game.g[center]; ++c)
            if (!std::binary_search(row.begin(), row.end(), c)) {
                row.insert(std::lower_bound(row.begin(), row.end(), c), c);
            }
        cp.table.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        Plan& lp = f.plans[leaves[i]];
        lp.vertex = leaves[i];
        lp.order = {center};
        for (int n = 0; n < inst.x; ++n) {
            std::vector<int> row;
            const std::vector<int>& z = (*pack)[n].axes[i];
            for (int c = 0; c < game.h[leaves[i]]; ++c)
                if (!std::binary_search(z.begin(), z.end(), c)) row.push_back(c);
            lp.table.push_back(std::move(row));
        }
    }
    Outcome o = Outcome::winnable(std::move(f));
    o.trace.push_back({"star-prism-packing", {}, ""});
    return o;
}

namespace {

// Per-point part subsets, canonical under permutation of part indices.
using FamilyCode = std::vector<std::vector<int>>;

bool family_canonical(const FamilyCode& fam, int k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        bool less = false, greater = false;
        for (const std::vector<int>& s : fam) {
            std::vector<int> m;
            for (int q : s) m.push_back(perm[q]);
            std::sort(m.begin(), m.end());
            if (m < s) {
                less = true;
                break;
            }
            if (s < m) {
                greater = true;
                break;
            }
        }
        if (less) return false;
        (void)greater;
    }
    return true;
}

std::vector<FamilyCode> enumerate_families(int points, int k, int j,
                                           std::uint64_t budget) {
    std::vector<std::vector<int>> subsets;
    axis_subsets(k, j, subsets);
    std::vector<FamilyCode> out;
    std::vector<std::size_t> pick(points, 0);
    std::uint64_t seen = 0;
    while (true) {
        FamilyCode fam;
        for (int p = 0; p < points; ++p) fam.push_back(subsets[pick[p]]);
        if (family_canonical(fam, k)) out.push_back(std::move(fam));
        if (++seen > budget)
            throw std::length_error("bipartite: family budget exceeded");
        int p = points - 1;
        while (p >= 0 && pick[p] + 1 == subsets.size()) pick[p--] = 0;
        if (p < 0) break;
        ++pick[p];
    }
    return out;
}

}  // namespace

BipartiteWitness bipartite_witness_search(const Game& game,
                                          std::uint64_t budget) {
    game.validate();
    std::vector<int> left, right;
    if (!is_complete_bipartite(game.d, &left, &right))
        throw std::invalid_argument(
            "bipartite_witness_search: not complete bipartite");
    Int lsp = 1, rsp = 1;
    for (int v : left) lsp *= game.h[v];
    for (int v : right) rsp *= game.h[v];
    std::vector<int> A = lsp <= rsp ? left : right;
    std::vector<int> B = lsp <= rsp ? right : left;
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());

    std::vector<int> box;
    for (int v : A) box.push_back(game.h[v]);
    const std::vector<Point> pts = box_points(box);
    const int npts = static_cast<int>(pts.size());
    std::vector<int> cover_a;
    for (int v : A) cover_a.push_back(game.g[v]);

    BipartiteWitness bw;
    std::vector<std::vector<FamilyCode>> fams;
    std::uint64_t used = 0;
    try {
        std::map<std::pair<int, int>, std::vector<FamilyCode>> cache;
        for (int b : B) {
            auto key = std::make_pair(game.h[b], game.g[b]);
            if (!cache.count(key))
                cache[key] =
                    enumerate_families(npts, game.h[b], game.g[b], budget);
            fams.push_back(cache[key]);
        }
    } catch (const std::length_error&) {
        bw.outcome = Outcome::unknown("bipartite-budget-exceeded");
        return bw;
    }

    const int nb = static_cast<int>(B.size());
    std::vector<std::size_t> pick(nb, 0);
    while (true) {
        if (++used > budget) {
            bw.outcome = Outcome::unknown("bipartite-budget-exceeded");
            return bw;
        }
        // Check: every selection of parts leaves a coverable remainder.
        bool good = true;
        std::vector<std::vector<std::vector<int>>> covers;
        std::vector<int> sel(nb, 0);
        while (good) {
            std::vector<Point> rest;
            for (int p = 0; p < npts; ++p) {
                bool hit = false;
                for (int bi = 0; bi < nb && !hit; ++bi) {
                    const std::vector<int>& parts = fams[bi][pick[bi]][p];
                    hit = std::find(parts.begin(), parts.end(), sel[bi]) !=
                          parts.end();
                }
                if (!hit) rest.push_back(pts[p]);
            }
            CoverSearch cs = find_cover(rest, cover_a);
            if (!cs.covered) {
                good = false;
                break;
            }
            covers.push_back(cs.cover.values);
            int bi = nb - 1;
            while (bi >= 0 && sel[bi] + 1 == game.h[B[bi]]) sel[bi--] = 0;
            if (bi < 0) break;
            ++sel[bi];
        }
        if (good) {
            Strategy f;
            f.plans.resize(game.n());
            for (int bi = 0; bi < nb; ++bi) {
                Plan& p = f.plans[B[bi]];
                p.vertex = B[bi];
                p.order = game.d.out(B[bi]);
                const FamilyCode& fam = fams[bi][pick[bi]];
                for (int pt = 0; pt < npts; ++pt) p.table.push_back(fam[pt]);
                PartitionFamily pf;
                pf.giver = B[bi];
                pf.parts.resize(game.h[B[bi]]);
                for (int pt = 0; pt < npts; ++pt)
                    for (int q : fam[pt]) pf.parts[q].push_back(pt);
                bw.families.push_back(std::move(pf));
            }
            for (std::size_t ai = 0; ai < A.size(); ++ai) {
                Plan& p = f.plans[A[ai]];
                p.vertex = A[ai];
                p.order = game.d.out(A[ai]);
                p.table.assign(covers.size(), {});
                for (std::size_t s = 0; s < covers.size(); ++s)
                    p.table[s] = covers[s][ai];
            }
            bw.outcome = Outcome::winnable(std::move(f));
            bw.outcome.trace.push_back({"bipartite-partition-families", {}, ""});
            return bw;
        }
        int bi = nb - 1;
        while (bi >= 0 && pick[bi] + 1 == fams[bi].size()) pick[bi--] = 0;
        if (bi < 0) break;
        ++pick[bi];
    }
    bw.outcome = Outcome::unwinnable("bipartite-partition-families");
    return bw;
}

}  // namespace hg
