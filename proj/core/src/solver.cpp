#include "hatgames/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hg {

namespace {

// Phase one: DFS over partial color choices with incremental propagation
// and a counting prune. Occurrence lists make each commit cost proportional
// to the clauses it touches; a clause's availability count reaching one
// triggers a unit commit, and reaching zero signals a conflict.
//
// The counting bound prunes globally tight subtrees: each cell can satisfy
// at most the sum of its cap - count largest per-color open-clause counts,
// so when those sums total less than the number of open clauses no
// extension covers everything.
struct DfsState {
    const CoverProblem* p;
    std::vector<std::uint64_t> mask;
    std::vector<int> count;
    std::vector<char> sat;
    std::vector<int> avail;
    std::vector<std::vector<std::pair<int, int>>> occ;  // cell -> (color, clause)
    std::vector<long long> cnt;   // open clauses per (cell, color)
    std::vector<long long> off;   // cell -> index into cnt
    std::vector<long long> fcap;  // per-cell coverage bound
    long long bound = 0;
    long long open = 0;

    enum OpType : int { kCommit, kSat, kAvail };
    struct Op {
        int type, a, b;
    };
    std::vector<Op> trail;
    std::vector<int> units;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;

    bool has(int cell, int color) const { return (mask[cell] >> color) & 1u; }
    bool full(int cell) const {
        return count[cell] == p->cells[cell].capacity;
    }

    void refresh(int cell) {
        long long f = 0;
        const int slots = p->cells[cell].capacity - count[cell];
        if (slots > 0) {
            const int nc = p->cells[cell].num_colors;
            long long top[64];
            int m = 0;
            for (int c = 0; c < nc; ++c)
                if (cnt[off[cell] + c] > 0) top[m++] = cnt[off[cell] + c];
            if (slots < m)
                std::nth_element(top, top + slots - 1, top + m,
                                 std::greater<long long>());
            for (int i = 0; i < std::min(slots, m); ++i) f += top[i];
        }
        bound += f - fcap[cell];
        fcap[cell] = f;
    }

    void set_sat(int cl, bool value) {
        sat[cl] = value;
        const long long d = value ? -1 : 1;
        open += d;
        for (auto [cell, color] : p->clauses[cl]) {
            cnt[off[cell] + color] += d;
            refresh(cell);
        }
    }

    bool commit(int cell, int color) {
        if (has(cell, color)) return true;
        if (full(cell)) return false;
        mask[cell] |= std::uint64_t(1) << color;
        ++count[cell];
        trail.push_back({kCommit, cell, color});
        bool conflict = false;
        const bool became_full = full(cell);
        for (auto [col, cl] : occ[cell]) {
            if (sat[cl]) continue;
            if (col == color) {
                set_sat(cl, true);
                trail.push_back({kSat, cl, 0});
            } else if (became_full) {
                --avail[cl];
                trail.push_back({kAvail, cl, 0});
                if (avail[cl] == 0) conflict = true;
                if (avail[cl] == 1) units.push_back(cl);
            }
        }
        refresh(cell);
        return !conflict;
    }

    bool flush_units() {
        while (!units.empty()) {
            const int cl = units.back();
            units.pop_back();
            if (sat[cl]) continue;
            int lcell = -1, lcolor = -1, live = 0;
            for (auto [cell, color] : p->clauses[cl]) {
                if (!full(cell)) {
                    ++live;
                    lcell = cell;
                    lcolor = color;
                }
            }
            if (live == 0) return false;
            if (live == 1 && !commit(lcell, lcolor)) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const Op op = trail.back();
            trail.pop_back();
            if (op.type == kCommit) {
                mask[op.a] &= ~(std::uint64_t(1) << op.b);
                --count[op.a];
                refresh(op.a);
            } else if (op.type == kSat) {
                set_sat(op.a, false);
            } else {
                ++avail[op.a];
            }
        }
    }

    CoverStatus dfs(std::size_t lo) {
        if (++nodes > max_nodes) return CoverStatus::Budget;
        if (bound < open) return CoverStatus::Unsat;
        while (lo < p->clauses.size() && sat[lo]) ++lo;
        if (lo == p->clauses.size()) return CoverStatus::Sat;
        const auto branch = p->clauses[lo];
        for (auto [cell, color] : branch) {
            const std::size_t mark = trail.size();
            units.clear();
            if (commit(cell, color) && flush_units()) {
                const CoverStatus r = dfs(lo + 1);
                if (r != CoverStatus::Unsat) return r;
            }
            units.clear();
            undo_to(mark);
        }
        return CoverStatus::Unsat;
    }
};

// Phase two: conflict-driven clause learning over one boolean per
// (cell, color). Coverage clauses are the all-positive input clauses;
// capacity is enforced natively, with reasons materialized on demand from
// the cell's currently chosen colors. Tightly interlocked instances that
// stall plain DFS fall to learned clauses here.
struct CdclState {
    const CoverProblem* p;
    std::vector<long long> off;
    std::vector<int> cell_of;
    int nv = 0;

    struct Clause {
        double act = 0.0;
        bool learned = false;
        std::vector<int> lits;  // 2v = positive, 2v+1 = negative
    };
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> watches;  // per literal
    std::vector<signed char> assign;        // -1 undef, 0 false, 1 true
    std::vector<int> level, reason;         // reason: clause id, -1 dec, -2 cap
    std::vector<int> trail, trail_lim;
    std::size_t qhead = 0;
    std::vector<int> ccount;
    std::vector<double> act;
    double var_inc = 1.0, cla_inc = 1.0;
    std::vector<char> seen, phase;
    std::uint64_t conflicts = 0, max_conflicts = 0;
    long long learned_count = 0;

    static int var(int lit) { return lit >> 1; }
    static bool sign(int lit) { return lit & 1; }  // true = negated
    int value(int lit) const {
        const signed char a = assign[var(lit)];
        return a < 0 ? -1 : (sign(lit) ? 1 - a : a);
    }
    int decision_level() const { return static_cast<int>(trail_lim.size()); }

    void bump_var(int v) {
        if ((act[v] += var_inc) > 1e100) {
            for (double& a : act) a *= 1e-100;
            var_inc *= 1e-100;
        }
    }

    bool enqueue(int lit, int why) {
        const int v = var(lit);
        if (assign[v] >= 0) return value(lit) == 1;
        assign[v] = sign(lit) ? 0 : 1;
        level[v] = decision_level();
        reason[v] = why;
        trail.push_back(lit);
        if (assign[v] == 1) ++ccount[cell_of[v]];
        return true;
    }

    // Lits of the reason for v's assignment, excluding v itself.
    void reason_lits(int v, std::vector<int>& out) const {
        out.clear();
        if (reason[v] == -2) {
            const int cell = cell_of[v];
            for (int c = 0; c < p->cells[cell].num_colors; ++c) {
                const int u = static_cast<int>(off[cell]) + c;
                if (u != v && assign[u] == 1) out.push_back(2 * u + 1);
            }
        } else {
            for (int q : clauses[reason[v]].lits)
                if (var(q) != v) out.push_back(q);
        }
    }

    // Returns conflicting clause lits in confl, or true if no conflict.
    bool propagate(std::vector<int>& confl) {
        while (qhead < trail.size()) {
            const int lit = trail[qhead++];
            const int v = var(lit);
            if (assign[v] == 1) {
                const int cell = cell_of[v];
                if (ccount[cell] == p->cells[cell].capacity) {
                    for (int c = 0; c < p->cells[cell].num_colors; ++c) {
                        const int u = static_cast<int>(off[cell]) + c;
                        if (u == v || assign[u] == 0) continue;
                        if (assign[u] == 1 && u != v) continue;
                        if (assign[u] < 0 && !enqueue(2 * u + 1, -2))
                            throw std::logic_error("cap enqueue");
                    }
                } else if (ccount[cell] > p->cells[cell].capacity) {
                    confl.clear();
                    for (int c = 0; c < p->cells[cell].num_colors; ++c) {
                        const int u = static_cast<int>(off[cell]) + c;
                        if (assign[u] == 1) confl.push_back(2 * u + 1);
                    }
                    return false;
                }
            }
            // Visit clauses watching the falsified literal.
            const int fal = lit ^ 1;
            auto& ws = watches[fal];
            std::size_t i = 0, j = 0;
            bool conflict = false;
            for (; i < ws.size(); ++i) {
                const int ci = ws[i];
                auto& c = clauses[ci].lits;
                if (c.empty()) continue;  // lazily dropped
                if (c[0] == fal) std::swap(c[0], c[1]);
                if (value(c[0]) == 1) {
                    ws[j++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (value(c[k]) != 0) {
                        std::swap(c[1], c[k]);
                        watches[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = ci;
                if (!enqueue(c[0], ci)) {
                    confl = c;
                    conflict = true;
                    ++i;
                    break;
                }
            }
            for (; i < ws.size(); ++i) ws[j++] = ws[i];
            ws.resize(j);
            if (conflict) return false;
        }
        return true;
    }

    // First-UIP learning; returns the backjump level, learnt[0] asserting.
    int analyze(std::vector<int> confl, std::vector<int>& learnt) {
        learnt.assign(1, 0);
        int counter = 0, idx = static_cast<int>(trail.size()) - 1;
        int plit = -1;
        std::vector<int> rl;
        for (;;) {
            for (int q : confl) {
                const int v = var(q);
                if (seen[v] || level[v] == 0) continue;
                seen[v] = 1;
                bump_var(v);
                if (level[v] == decision_level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            while (!seen[var(trail[idx])]) --idx;
            plit = trail[idx];
            seen[var(plit)] = 0;
            if (--counter == 0) break;
            if (reason[var(plit)] >= 0) clauses[reason[var(plit)]].act += cla_inc;
            reason_lits(var(plit), rl);
            confl = rl;
        }
        learnt[0] = plit ^ 1;
        int back = 0;
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            back = std::max(back, level[var(learnt[i])]);
            seen[var(learnt[i])] = 0;
        }
        // Move a max-level literal into the second watch slot.
        for (std::size_t i = 1; i < learnt.size(); ++i)
            if (level[var(learnt[i])] == back) {
                std::swap(learnt[1], learnt[i]);
                break;
            }
        return back;
    }

    void cancel_until(int lvl) {
        if (decision_level() <= lvl) return;
        const int bound = trail_lim[lvl];
        for (int i = static_cast<int>(trail.size()) - 1; i >= bound; --i) {
            const int v = var(trail[i]);
            if (assign[v] == 1) --ccount[cell_of[v]];
            assign[v] = -1;
            phase[v] = sign(trail[i]) ? 0 : 1;
            reason[v] = -1;
        }
        trail.resize(bound);
        trail_lim.resize(lvl);
        qhead = trail.size();
    }

    int add_clause(std::vector<int> lits, bool learned) {
        Clause c;
        c.learned = learned;
        c.act = cla_inc;
        c.lits = std::move(lits);
        const int id = static_cast<int>(clauses.size());
        if (learned) ++learned_count;
        clauses.push_back(std::move(c));
        auto& l = clauses.back().lits;
        if (l.size() >= 2) {
            watches[l[0]].push_back(id);
            watches[l[1]].push_back(id);
        }
        return id;
    }

    int pick_branch() const {
        int best = -1;
        double best_act = -1.0;
        for (int v = 0; v < nv; ++v)
            if (assign[v] < 0 && act[v] > best_act) {
                best = v;
                best_act = act[v];
            }
        return best;
    }

    // Drop inactive long learned clauses; reasons of live assignments stay.
    void reduce_db() {
        std::vector<char> keep(clauses.size(), 0);
        for (int lit : trail)
            if (reason[var(lit)] >= 0) keep[reason[var(lit)]] = 1;
        double sum = 0.0;
        long long m = 0;
        for (const Clause& c : clauses)
            if (c.learned && !c.lits.empty()) {
                sum += c.act;
                ++m;
            }
        const double cutoff = m > 0 ? sum / static_cast<double>(m) : 0.0;
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            Clause& c = clauses[i];
            if (!c.learned || c.lits.empty() || keep[i]) continue;
            if (c.lits.size() > 3 && c.act < cutoff) {
                c.lits.clear();
                --learned_count;
            }
        }
    }

    CoverStatus run() {
        std::vector<int> confl, learnt;
        std::uint64_t next_restart = 256;
        for (;;) {
            if (!propagate(confl)) {
                if (++conflicts > max_conflicts) return CoverStatus::Budget;
                if (decision_level() == 0) return CoverStatus::Unsat;
                const int back = analyze(confl, learnt);
                cancel_until(back);
                if (learnt.size() == 1) {
                    if (!enqueue(learnt[0], -1)) return CoverStatus::Unsat;
                } else {
                    const int id = add_clause(learnt, true);
                    if (!enqueue(learnt[0], id)) return CoverStatus::Unsat;
                }
                var_inc /= 0.95;
                cla_inc /= 0.999;
                if (conflicts >= next_restart) {
                    next_restart += 256 + next_restart / 2;
                    cancel_until(0);
                    if (learned_count > 100'000) reduce_db();
                }
                continue;
            }
            const int v = pick_branch();
            if (v < 0) return CoverStatus::Sat;
            trail_lim.push_back(static_cast<int>(trail.size()));
            enqueue(2 * v + (phase[v] ? 0 : 1), -1);
        }
    }
};

}  // namespace

CoverResult solve_cover(const CoverProblem& problem, std::uint64_t max_nodes) {
    for (const auto& cell : problem.cells)
        if (cell.num_colors > 64) throw std::invalid_argument("cell color span > 64");

    DfsState st;
    st.p = &problem;
    st.mask.assign(problem.cells.size(), 0);
    st.count.assign(problem.cells.size(), 0);
    st.sat.assign(problem.clauses.size(), 0);
    st.occ.resize(problem.cells.size());
    st.avail.resize(problem.clauses.size());
    st.off.resize(problem.cells.size());
    long long ncnt = 0;
    for (std::size_t i = 0; i < problem.cells.size(); ++i) {
        st.off[i] = ncnt;
        ncnt += problem.cells[i].num_colors;
    }
    st.cnt.assign(ncnt, 0);
    st.open = static_cast<long long>(problem.clauses.size());
    for (std::size_t c = 0; c < problem.clauses.size(); ++c) {
        st.avail[c] = static_cast<int>(problem.clauses[c].size());
        for (auto [cell, color] : problem.clauses[c]) {
            st.occ[cell].emplace_back(color, static_cast<int>(c));
            ++st.cnt[st.off[cell] + color];
        }
    }
    st.fcap.assign(problem.cells.size(), 0);
    for (std::size_t i = 0; i < problem.cells.size(); ++i)
        st.refresh(static_cast<int>(i));
    st.max_nodes = std::min<std::uint64_t>(max_nodes, 50'000);

    CoverResult res;
    bool ok = true;
    for (auto [cell, color] : problem.forced)
        ok = ok && st.commit(cell, color);
    ok = ok && st.flush_units();
    if (!ok) {
        res.status = CoverStatus::Unsat;
        res.nodes = 0;
        return res;
    }
    res.status = st.dfs(0);
    res.nodes = st.nodes;
    if (res.status == CoverStatus::Sat) {
        res.chosen.resize(problem.cells.size());
        for (std::size_t i = 0; i < problem.cells.size(); ++i) {
            std::vector<int> row;
            for (int c = 0; c < problem.cells[i].num_colors; ++c)
                if (st.has(static_cast<int>(i), c)) row.push_back(c);
            for (int c = 0;
                 c < problem.cells[i].num_colors &&
                 static_cast<int>(row.size()) < problem.cells[i].capacity;
                 ++c)
                if (!st.has(static_cast<int>(i), c))
                    row.insert(std::lower_bound(row.begin(), row.end(), c), c);
            res.chosen[i] = std::move(row);
        }
        return res;
    }
    if (res.status != CoverStatus::Budget) return res;

    // DFS hit its node cap: hand the instance to the learning engine.
    CdclState cd;
    cd.p = &problem;
    cd.off = st.off;
    cd.nv = static_cast<int>(ncnt);
    cd.cell_of.resize(cd.nv);
    for (std::size_t i = 0; i < problem.cells.size(); ++i)
        for (int c = 0; c < problem.cells[i].num_colors; ++c)
            cd.cell_of[st.off[i] + c] = static_cast<int>(i);
    cd.watches.resize(2 * cd.nv);
    cd.assign.assign(cd.nv, -1);
    cd.level.assign(cd.nv, 0);
    cd.reason.assign(cd.nv, -1);
    cd.ccount.assign(problem.cells.size(), 0);
    cd.act.assign(cd.nv, 0.0);
    cd.seen.assign(cd.nv, 0);
    cd.phase.assign(cd.nv, 1);
    cd.max_conflicts = max_nodes;

    bool cok = true;
    for (std::size_t c = 0; c < problem.clauses.size() && cok; ++c) {
        std::vector<int> lits;
        for (auto [cell, color] : problem.clauses[c])
            lits.push_back(2 * (static_cast<int>(st.off[cell]) + color));
        if (lits.size() == 1) {
            cok = cd.enqueue(lits[0], -1);
        } else {
            cd.add_clause(std::move(lits), false);
        }
    }
    for (auto [cell, color] : problem.forced)
        cok = cok && cd.enqueue(2 * (static_cast<int>(st.off[cell]) + color), -1);
    if (!cok) {
        res.status = CoverStatus::Unsat;
        return res;
    }

    res.status = cd.run();
    res.nodes = st.nodes + cd.conflicts;
    if (res.status == CoverStatus::Sat) {
        res.chosen.resize(problem.cells.size());
        for (std::size_t i = 0; i < problem.cells.size(); ++i) {
            std::vector<int> row;
            for (int c = 0; c < problem.cells[i].num_colors; ++c)
                if (cd.assign[st.off[i] + c] == 1) row.push_back(c);
            for (int c = 0;
                 c < problem.cells[i].num_colors &&
                 static_cast<int>(row.size()) < problem.cells[i].capacity;
                 ++c)
                if (cd.assign[st.off[i] + c] != 1)
                    row.insert(std::lower_bound(row.begin(), row.end(), c), c);
            res.chosen[i] = std::move(row);
        }
    }
    return res;
}

}  // namespace hg
