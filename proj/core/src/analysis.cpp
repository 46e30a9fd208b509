#include "redsyl/analysis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace redsyl {

const char* cover_method_name(CoverMethod method) {
    switch (method) {
        case CoverMethod::Transversal: return "transversal";
        case CoverMethod::CommonTransversal: return "common_transversal";
        case CoverMethod::Greedy: return "greedy";
        case CoverMethod::Exact: return "exact";
        case CoverMethod::All: return "all";
    }
    return "?";
}

namespace {

Vec vec_add(const FieldGF& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_decode(const FieldGF& f, std::uint64_t code, std::size_t dim) {
    Vec v(dim, 0);
    for (std::size_t i = dim; i-- > 0;) {
        v[i] = static_cast<Felem>(code % f.order());
        code /= f.order();
    }
    return v;
}

// The p+1 maximal subgroups P_i with their fixed spaces N_i = C_N(P_i).
struct CoverStructure {
    std::vector<SubgroupOfP> subgroups;
    std::vector<Subspace> fixed;
};

CoverStructure maximal_fixed_structure(const SemidirectGroup& G) {
    const LinearAction& action = G.action();
    CoverStructure out;
    switch (action.provenance()) {
        case Provenance::Thm2:
            out.subgroups = action.thm2()->maximal_subgroups;
            break;
        case Provenance::Thm1:
            out.subgroups = action.group().maximal_cover();
            break;
        case Provenance::Custom:
            throw Error(ErrorKind::WrongProvenance,
                        "cover constructions need thm1 or thm2 provenance");
    }
    for (const auto& sub : out.subgroups) {
        out.fixed.push_back(action.fixed_space_of(sub.members));
    }
    return out;
}

// v - rho(x) v, the N-part of the conjugate (v,1)(0,x)(v,1)^-1.
Vec displacement(const SemidirectGroup& G, int x, const Vec& v) {
    Vec moved = G.action().matrix(x).apply(v);
    const FieldGF& f = G.field();
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.sub(v[i], moved[i]);
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Felem x) { return x == 0; });
}

std::uint64_t checked_u64(const BigInt& value, const char* what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::InternalError, std::string(what) + " out of range");
    }
    return value.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// Set-cover machinery over the p-elements.

struct PUniverse {
    // Every p-element of G is ((I - rho(x)) n, x) for a unique pair (x, v).
    std::vector<std::pair<int, Vec>> elements;
    std::map<std::pair<int, Vec>, int> index;
    std::vector<Vec> sylow_reps;
    std::vector<std::vector<int>> sets; // per Sylow rep, sorted element ids
};

PUniverse build_universe(const SemidirectGroup& G, const Budgets& budgets) {
    if (G.sylow_count() > budgets.enumeration_ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate, "Sylow count exceeds the enumeration ceiling");
    }
    PUniverse u;
    const PGroup& P = G.pgroup();
    const FieldGF& f = G.field();
    const MatrixGF ident = MatrixGF::identity(f, G.dim());
    for (int x = 0; x < P.order(); ++x) {
        const MatrixGF d = ident.sub(G.action().matrix(x));
        // Column space of I - rho(x): row space of the transpose.
        MatrixGF t = d.transpose();
        t.rref();
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            Vec row(G.dim());
            bool nonzero = false;
            for (std::size_t j = 0; j < G.dim(); ++j) {
                row[j] = t.at(i, j);
                nonzero = nonzero || row[j] != 0;
            }
            if (nonzero) basis.push_back(std::move(row));
        }
        Subspace image(f, G.dim(), basis);
        image.for_each_member(budgets.enumeration_ceiling, [&](const Vec& v) {
            const int id = static_cast<int>(u.elements.size());
            u.elements.emplace_back(x, v);
            u.index[{x, v}] = id;
        });
        if (u.elements.size() > budgets.exhaustive_group_ceiling) {
            throw Error(ErrorKind::TooLargeToEnumerate, "p-element universe exceeds the exhaustive ceiling");
        }
    }
    if (BigInt(u.elements.size()) != G.count_p_elements().total) {
        throw Error(ErrorKind::InternalError, "p-element universe disagrees with the class formula");
    }
    G.for_each_sylow_rep(budgets.enumeration_ceiling, [&](const Vec& n) {
        std::vector<int> ids;
        ids.reserve(static_cast<std::size_t>(P.order()));
        for (int x = 0; x < P.order(); ++x) {
            const auto it = u.index.find({x, displacement(G, x, n)});
            if (it == u.index.end()) {
                throw Error(ErrorKind::InternalError, "Sylow element missing from universe");
            }
            ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        u.sets.push_back(std::move(ids));
        u.sylow_reps.push_back(n);
    });
    return u;
}

// Greedy set cover / max coverage with lexicographic tie-breaking (set ids
// follow the lexicographic order of the Sylow representatives).
std::vector<int> greedy_cover(const std::vector<std::vector<int>>& sets, std::size_t universe,
                              int max_sets, bool* complete) {
    std::vector<bool> covered(universe, false);
    std::size_t remaining = universe;
    std::vector<int> chosen;
    while (remaining > 0 && (max_sets < 0 || static_cast<int>(chosen.size()) < max_sets)) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            std::size_t gain = 0;
            for (int id : sets[static_cast<std::size_t>(s)]) {
                if (!covered[static_cast<std::size_t>(id)]) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = s;
            }
        }
        if (best < 0) break;
        for (int id : sets[static_cast<std::size_t>(best)]) {
            if (!covered[static_cast<std::size_t>(id)]) {
                covered[static_cast<std::size_t>(id)] = true;
                --remaining;
            }
        }
        chosen.push_back(best);
    }
    if (complete) *complete = remaining == 0;
    return chosen;
}

struct BranchAndBound {
    const std::vector<std::vector<int>>& sets;
    std::vector<std::vector<int>> elem_sets;
    std::vector<int> cover_count;
    std::size_t uncovered;
    std::size_t best;
    std::vector<int> best_sets;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    std::size_t max_set_size;

    BranchAndBound(const std::vector<std::vector<int>>& sets_, std::size_t universe,
                   std::vector<int> incumbent, std::uint64_t budget)
        : sets(sets_),
          elem_sets(universe),
          cover_count(universe, 0),
          uncovered(universe),
          best(incumbent.size()),
          best_sets(std::move(incumbent)),
          node_budget(budget),
          max_set_size(0) {
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            max_set_size = std::max(max_set_size, sets[static_cast<std::size_t>(s)].size());
            for (int id : sets[static_cast<std::size_t>(s)]) {
                elem_sets[static_cast<std::size_t>(id)].push_back(s);
            }
        }
    }

    void take(int s) {
        for (int id : sets[static_cast<std::size_t>(s)]) {
            if (cover_count[static_cast<std::size_t>(id)]++ == 0) --uncovered;
        }
        chosen.push_back(s);
    }
    void untake(int s) {
        for (int id : sets[static_cast<std::size_t>(s)]) {
            if (--cover_count[static_cast<std::size_t>(id)] == 0) ++uncovered;
        }
        chosen.pop_back();
    }

    void dfs() {
        if (++nodes > node_budget) {
            throw Error(ErrorKind::ExactBudgetExceeded, "set-cover search exceeded the node budget");
        }
        if (uncovered == 0) {
            if (chosen.size() < best) {
                best = chosen.size();
                best_sets = chosen;
            }
            return;
        }
        const std::size_t lower = (uncovered + max_set_size - 1) / max_set_size;
        if (chosen.size() + lower >= best) return;
        // Branch on the uncovered element with the fewest covering sets.
        int pick = -1;
        std::size_t degree = 0;
        for (std::size_t id = 0; id < cover_count.size(); ++id) {
            if (cover_count[id] != 0) continue;
            const std::size_t d = elem_sets[id].size();
            if (pick < 0 || d < degree) {
                pick = static_cast<int>(id);
                degree = d;
            }
        }
        if (pick < 0) return;
        for (int s : elem_sets[static_cast<std::size_t>(pick)]) {
            take(s);
            dfs();
            untake(s);
        }
    }
};

} // namespace

RedundancyResult is_redundant(const SemidirectGroup& G, const Budgets& budgets) {
    RedundancyResult out;
    const LinearAction& action = G.action();
    const Subspace& fixed_all = action.fixed_space_all();
    const auto& classes = G.pgroup().conjugacy_classes();

    out.redundant = true;
    std::vector<RedundancyWitness> witnesses;
    for (int rep : classes.representatives) {
        const Subspace& fixed = action.fixed_space(rep);
        if (fixed.dim() <= fixed_all.dim()) {
            out.redundant = false;
            break;
        }
        // A basis vector of C_N(x) outside C_N(P) exists by the strict
        // dimension gap.
        RedundancyWitness w;
        w.rep = rep;
        for (const Vec& b : fixed.basis()) {
            if (!fixed_all.contains(b)) {
                w.vector = b;
                break;
            }
        }
        if (w.vector.empty() && G.dim() > 0) {
            throw Error(ErrorKind::InternalError, "no witness vector despite dimension gap");
        }
        // Self-check: (w,1) centralizes (0,x) and moves P.
        const GElement conj = G.conjugate(G.embed_p(rep), G.embed_n(w.vector));
        if (!(conj == G.embed_p(rep))) {
            throw Error(ErrorKind::InternalError, "witness does not centralize its element");
        }
        witnesses.push_back(std::move(w));
    }
    if (out.redundant) out.witnesses = std::move(witnesses);

    // Enumeration oracle: every element of P must lie in a Sylow subgroup
    // other than P itself.
    if (G.sylow_count() <= budgets.enumeration_ceiling) {
        bool oracle = true;
        const PGroup& P = G.pgroup();
        for (int x = 0; x < P.order() && oracle; ++x) {
            bool found = false;
            const GElement xe = G.embed_p(x);
            G.for_each_sylow_rep(budgets.enumeration_ceiling, [&](const Vec& n) {
                if (found || vec_is_zero(n)) return;
                const GElement t = G.embed_n(n);
                const GElement c = G.multiply(G.multiply(G.inverse(t), xe), t);
                if (vec_is_zero(c.n)) found = true;
            });
            if (!found) oracle = false;
        }
        out.oracle_redundant = oracle;
    }
    return out;
}

std::vector<LambdaEntry> lambda_table(const SemidirectGroup& G, const Budgets& budgets) {
    std::vector<LambdaEntry> out;
    const auto& classes = G.pgroup().conjugacy_classes();
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        LambdaEntry e;
        e.rep = classes.representatives[c];
        e.class_size = static_cast<int>(classes.classes[c].size());
        e.linear = G.lambda_linear(e.rep);
        e.enumerated = G.lambda_enumerated(e.rep, budgets.enumeration_ceiling);
        out.push_back(std::move(e));
    }
    return out;
}

std::pair<bool, bool> verify_cover(const SemidirectGroup& G, const std::vector<Vec>& reps,
                                   const Budgets& budgets) {
    const PGroup& P = G.pgroup();
    // Coset criterion: {tPt^-1} covers G_p iff for every x the
    // representatives hit every coset of C_N(x).
    for (int x = 0; x < P.order(); ++x) {
        const Subspace& fixed = G.centralizer_in_n(x);
        const BigInt needed = fixed.coset_count();
        if (needed > budgets.enumeration_ceiling) {
            throw Error(ErrorKind::TooLargeToEnumerate, "coset system exceeds the enumeration ceiling");
        }
        std::set<Vec> hit;
        for (const Vec& t : reps) hit.insert(fixed.coset_rep(t));
        if (BigInt(hit.size()) != needed) return {false, false};
    }
    // Literal pass when G is small: mark the elements of every listed Sylow
    // subgroup, then confirm each p-element is marked.
    bool exhaustive = false;
    if (G.order() <= budgets.exhaustive_group_ceiling &&
        G.n_order() <= budgets.enumeration_ceiling) {
        exhaustive = true;
        std::set<std::pair<int, Vec>> marked;
        for (const Vec& t : reps) {
            const GElement te = G.embed_n(t);
            for (int x = 0; x < P.order(); ++x) {
                const GElement g = G.conjugate(G.embed_p(x), te);
                marked.insert({g.x, g.n});
            }
        }
        bool ok = true;
        G.for_each_n(budgets.enumeration_ceiling, [&](const Vec& n) {
            if (!ok) return;
            for (int x = 0; x < P.order(); ++x) {
                const GElement g = G.conjugate(G.embed_p(x), G.embed_n(n));
                if (!marked.count({g.x, g.n})) {
                    ok = false;
                    return;
                }
            }
        });
        if (!ok) return {false, true};
    }
    return {true, exhaustive};
}

SylowCover transversal_cover(const SemidirectGroup& G, const Budgets& budgets) {
    const CoverStructure structure = maximal_fixed_structure(G);
    std::set<Vec> reps;
    for (const Subspace& ni : structure.fixed) {
        ni.for_each_coset_rep(budgets.enumeration_ceiling, [&](const Vec& t) { reps.insert(t); });
    }
    SylowCover cover;
    cover.representatives.assign(reps.begin(), reps.end());
    cover.method = CoverMethod::Transversal;
    auto [ok, exhaustive] = verify_cover(G, cover.representatives, budgets);
    cover.verified = ok;
    cover.verified_exhaustively = exhaustive;
    if (!ok) throw Error(ErrorKind::InternalError, "transversal cover failed verification");
    return cover;
}

namespace {

// Hopcroft-Karp maximum matching on a bipartite graph given as adjacency
// lists from the left side.
class HopcroftKarp {
public:
    HopcroftKarp(std::size_t left, std::size_t right, std::vector<std::vector<int>> adj)
        : nl_(left), nr_(right), adj_(std::move(adj)), match_l_(left, -1), match_r_(right, -1) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < nl_; ++u) {
                if (match_l_[u] < 0 && dfs(static_cast<int>(u))) ++matched;
            }
        }
        return matched;
    }

    const std::vector<int>& left_matches() const { return match_l_; }

private:
    bool bfs() {
        std::vector<int> queue;
        dist_.assign(nl_, -1);
        for (std::size_t u = 0; u < nl_; ++u) {
            if (match_l_[u] < 0) {
                dist_[u] = 0;
                queue.push_back(static_cast<int>(u));
            }
        }
        bool reachable = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                const int w = match_r_[static_cast<std::size_t>(v)];
                if (w < 0) {
                    reachable = true;
                } else if (dist_[static_cast<std::size_t>(w)] < 0) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(int u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            const int w = match_r_[static_cast<std::size_t>(v)];
            if (w < 0 || (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
                match_l_[static_cast<std::size_t>(u)] = v;
                match_r_[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(u)] = -1;
        return false;
    }

    std::size_t nl_, nr_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_;
    std::vector<int> dist_;
};

} // namespace

std::vector<Vec> common_transversal_for(const SemidirectGroup& G, const Subspace& na,
                                        const Subspace& nb, const Budgets& budgets) {
    if (na.dim() != nb.dim()) {
        throw Error(ErrorKind::IndexMismatch, "paired subspaces have different indices in N");
    }
    const FieldGF& f = G.field();

    std::vector<Vec> left, right;
    na.for_each_coset_rep(budgets.enumeration_ceiling, [&](const Vec& v) { left.push_back(v); });
    nb.for_each_coset_rep(budgets.enumeration_ceiling, [&](const Vec& v) { right.push_back(v); });
    std::map<Vec, int> right_index;
    for (std::size_t i = 0; i < right.size(); ++i) right_index[right[i]] = static_cast<int>(i);

    // Cosets u + N_a and v + N_b intersect iff v = u + w (mod N_b) for some
    // w in N_a.
    std::vector<std::vector<int>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::set<int> nbrs;
        na.for_each_member(budgets.enumeration_ceiling, [&](const Vec& w) {
            nbrs.insert(right_index.at(nb.coset_rep(vec_add(f, left[i], w))));
        });
        adj[i].assign(nbrs.begin(), nbrs.end());
    }

    HopcroftKarp hk(left.size(), right.size(), std::move(adj));
    if (hk.run() != left.size()) {
        throw Error(ErrorKind::MatchingFailed,
                    "no perfect matching between the two coset systems (Hall condition violated)");
    }

    // One point in each matched intersection, via the stacked basis system
    // basisA * alpha + basisB * beta = v - u.
    const std::size_t da = na.dim(), db = nb.dim();
    MatrixGF system(f, G.dim(), da + db);
    for (std::size_t j = 0; j < da; ++j) {
        for (std::size_t r = 0; r < G.dim(); ++r) system.set(r, j, na.basis()[j][r]);
    }
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t r = 0; r < G.dim(); ++r) system.set(r, da + j, nb.basis()[j][r]);
    }

    std::vector<Vec> points;
    for (std::size_t i = 0; i < left.size(); ++i) {
        const Vec& u = left[i];
        const Vec& v = right[static_cast<std::size_t>(hk.left_matches()[i])];
        Vec diff(G.dim());
        for (std::size_t r = 0; r < G.dim(); ++r) diff[r] = f.sub(v[r], u[r]);
        const auto sol = system.solve_right(diff);
        if (!sol) throw Error(ErrorKind::InternalError, "matched cosets do not intersect");
        Vec point = u;
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t r = 0; r < G.dim(); ++r) {
                point[r] = f.add(point[r], f.mul((*sol)[j], na.basis()[j][r]));
            }
        }
        points.push_back(std::move(point));
    }
    std::sort(points.begin(), points.end());

    // The points must hit every coset of both subspaces exactly once.
    for (const Subspace* s : {&na, &nb}) {
        std::set<Vec> labels;
        for (const Vec& t : points) labels.insert(s->coset_rep(t));
        if (labels.size() != points.size()) {
            throw Error(ErrorKind::InternalError, "common transversal misses a coset");
        }
    }
    return points;
}

std::vector<Vec> common_transversal(const SemidirectGroup& G, int pair_index, const Budgets& budgets) {
    const CoverStructure structure = maximal_fixed_structure(G);
    const int pairs = static_cast<int>(structure.fixed.size()) / 2;
    if (pair_index < 1 || pair_index > pairs) {
        throw Error(ErrorKind::ConfigError,
                    "pair index must be between 1 and " + std::to_string(pairs));
    }
    return common_transversal_for(G, structure.fixed[static_cast<std::size_t>(2 * pair_index - 2)],
                                 structure.fixed[static_cast<std::size_t>(2 * pair_index - 1)], budgets);
}

SylowCover improved_cover(const SemidirectGroup& G, const Budgets& budgets) {
    const CoverStructure structure = maximal_fixed_structure(G);
    std::set<Vec> reps;
    const std::size_t blocks = structure.fixed.size(); // p + 1
    for (std::size_t i = 0; i + 1 < blocks; i += 2) {
        for (const Vec& t : common_transversal_for(G, structure.fixed[i], structure.fixed[i + 1], budgets)) {
            reps.insert(t);
        }
    }
    if (blocks % 2 == 1) {
        structure.fixed.back().for_each_coset_rep(budgets.enumeration_ceiling,
                                                  [&](const Vec& t) { reps.insert(t); });
    }
    SylowCover cover;
    cover.representatives.assign(reps.begin(), reps.end());
    cover.method = CoverMethod::CommonTransversal;
    auto [ok, exhaustive] = verify_cover(G, cover.representatives, budgets);
    cover.verified = ok;
    cover.verified_exhaustively = exhaustive;
    if (!ok) throw Error(ErrorKind::InternalError, "improved cover failed verification");
    return cover;
}

MinimalCoverResult minimal_cover(const SemidirectGroup& G, CoverMethod mode, const Budgets& budgets) {
    if (mode != CoverMethod::Greedy && mode != CoverMethod::Exact) {
        throw Error(ErrorKind::ConfigError, "minimal cover mode must be greedy or exact");
    }
    const PUniverse u = build_universe(G, budgets);

    bool complete = false;
    std::vector<int> greedy = greedy_cover(u.sets, u.elements.size(), -1, &complete);
    if (!complete) {
        throw Error(ErrorKind::InternalError, "Sylow subgroups do not cover the p-elements");
    }

    std::vector<int> chosen = greedy;
    bool exact = false;
    if (mode == CoverMethod::Exact) {
        const bool within =
            BigInt(u.sets.size()) <= budgets.exact_cover_max_sylows ||
            BigInt(u.elements.size()) <= budgets.exact_cover_max_universe;
        if (within) {
            try {
                BranchAndBound bb(u.sets, u.elements.size(), greedy, budgets.exact_cover_node_budget);
                bb.dfs();
                chosen = bb.best_sets;
                exact = true;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ExactBudgetExceeded) throw;
                chosen = greedy; // search aborted: fall back to the greedy cover
            }
        }
    }

    SylowCover cover;
    for (int s : chosen) cover.representatives.push_back(u.sylow_reps[static_cast<std::size_t>(s)]);
    std::sort(cover.representatives.begin(), cover.representatives.end());
    cover.method = exact ? CoverMethod::Exact : CoverMethod::Greedy;
    auto [ok, exhaustive] = verify_cover(G, cover.representatives, budgets);
    cover.verified = ok;
    cover.verified_exhaustively = exhaustive;
    if (!ok) throw Error(ErrorKind::InternalError, "minimal cover failed verification");
    return MinimalCoverResult{std::move(cover), exact};
}

RestrictedCoverResult restricted_cover_size(const SemidirectGroup& G, const Budgets& budgets) {
    if (G.sylow_count() > budgets.enumeration_ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate, "Sylow count exceeds the enumeration ceiling");
    }
    const PGroup& P = G.pgroup();
    // Universe: the elements of P itself; sets: the other Sylow subgroups.
    std::vector<std::vector<int>> sets;
    G.for_each_sylow_rep(budgets.enumeration_ceiling, [&](const Vec& n) {
        if (vec_is_zero(n)) return; // skip P
        std::vector<int> ids;
        for (int x = 0; x < P.order(); ++x) {
            if (vec_is_zero(displacement(G, x, n))) ids.push_back(x);
        }
        sets.push_back(std::move(ids));
    });

    bool complete = false;
    std::vector<int> greedy = greedy_cover(sets, static_cast<std::size_t>(P.order()), -1, &complete);
    RestrictedCoverResult out;
    if (!complete) return out; // P is not redundant: no such cover exists

    std::vector<int> chosen = greedy;
    out.exact = false;
    const bool within = BigInt(sets.size()) <= budgets.exact_cover_max_sylows ||
                        BigInt(P.order()) <= budgets.exact_cover_max_universe;
    if (within) {
        try {
            BranchAndBound bb(sets, static_cast<std::size_t>(P.order()), greedy,
                              budgets.exact_cover_node_budget);
            bb.dfs();
            chosen = bb.best_sets;
            out.exact = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ExactBudgetExceeded) throw;
            chosen = greedy;
        }
    }
    out.k = BigInt(chosen.size());
    return out;
}

CasoloResult check_casolo(const SemidirectGroup& G, const Budgets& budgets) {
    CasoloResult out;
    out.verified = true;
    const BigInt normalizer_index = G.action().fixed_space_all().size(); // |N_G(P):P| = |C_N(P)|
    for (const SubgroupOfP& h : G.pgroup().cyclic_subgroups()) {
        CasoloEntry e;
        e.subgroup_order = static_cast<std::uint64_t>(h.size());
        // A generator: any member whose order is |H|.
        e.generator = 0;
        for (int x : h.members) {
            if (G.pgroup().order_of(x) == e.subgroup_order) {
                e.generator = x;
                break;
            }
        }
        e.normalizer_index = normalizer_index;
        e.fixed_order = G.action().fixed_space_of(h.members).size();
        e.lambda_linear = G.lambda_linear_subgroup(h.members);
        const auto enumerated = G.lambda_enumerated(e.generator, budgets.enumeration_ceiling);
        if (enumerated) {
            e.lambda = *enumerated;
            e.lambda_was_enumerated = true;
        } else {
            e.lambda = e.lambda_linear;
        }
        e.holds = e.lambda * e.normalizer_index == e.fixed_order && e.lambda == e.lambda_linear;
        out.verified = out.verified && e.holds;
        out.entries.push_back(std::move(e));
    }
    return out;
}

GheriResult check_gheri(const SemidirectGroup& G, const Budgets& budgets) {
    GheriResult out;
    const PGroup& P = G.pgroup();
    out.lhs = big_pow(G.sylow_count(), static_cast<std::uint64_t>(P.order()) / P.p());
    out.rhs = 1;
    for (const LambdaEntry& e : lambda_table(G, budgets)) {
        out.rhs *= big_pow(e.value(), static_cast<std::uint64_t>(e.class_size));
    }
    out.satisfied = out.lhs >= out.rhs;
    return out;
}

std::vector<BoundCheck> check_bounds(const SemidirectGroup& G, const RedundancyResult& redundancy,
                                     const GheriResult& gheri,
                                     const std::vector<LambdaEntry>& lambdas, const Budgets& budgets) {
    std::vector<BoundCheck> out;
    const BigInt nu = G.sylow_count();
    const std::uint64_t p = G.pgroup().p();
    const auto counts = G.count_p_elements();

    out.push_back({"nu_congruent_1_mod_p", "==", nu % p, BigInt(1), true, nu % p == 1});
    out.push_back({"frobenius_integral", "==", counts.total,
                   counts.frobenius_multiplier * G.pgroup().order(), true,
                   counts.total == counts.frobenius_multiplier * G.pgroup().order()});

    const bool red = redundancy.redundant;
    out.push_back({"nu_ge_p2_plus_p_plus_1", ">=", nu, BigInt(p * p + p + 1), red,
                   !red || nu >= p * p + p + 1});
    const BigInt qmin_bound = big_pow(BigInt(smallest_prime_power_1modp(p)), p + 1);
    out.push_back({"nu_ge_qmin_pow_p_plus_1", ">=", nu, qmin_bound, red, !red || nu >= qmin_bound});
    const BigInt gheri_bound = big_pow(BigInt(p + 1), p);
    const bool gheri_applicable = red && gheri.satisfied;
    out.push_back({"nu_gt_p_plus_1_pow_p", ">", nu, gheri_bound, gheri_applicable,
                   !gheri_applicable || nu > gheri_bound});
    // nu_p = q^t with q prime, so nu_p is prime exactly when t = 1.
    const bool nu_prime = G.dim() - G.action().fixed_space_all().dim() == 1;
    out.push_back({"nu_not_prime", "not prime", nu, BigInt(0), red, !red || !nu_prime});

    BigInt lambda_min;
    bool first = true;
    for (const LambdaEntry& e : lambdas) {
        if (first || e.value() < lambda_min) {
            lambda_min = e.value();
            first = false;
        }
    }
    out.push_back({"lambda_ge_p_plus_1", ">=", lambda_min, BigInt(p + 1), red,
                   !red || lambda_min >= p + 1});

    const Provenance prov = G.action().provenance();
    if (prov == Provenance::Thm2) {
        out.push_back({"thm2_nu_eq_qmin_pow", "==", nu, qmin_bound, true, nu == qmin_bound});
    }
    if (prov == Provenance::Thm1) {
        const BigInt qpow = big_pow(BigInt(G.action().thm1_q()), p - 1);
        const bool applicable = qpow > G.pgroup().order();
        out.push_back({"gp_lt_nu_when_q_large", "<", counts.total, nu, applicable,
                       !applicable || counts.total < nu});
    }
    if (red && G.sylow_count() <= budgets.enumeration_ceiling) {
        const RestrictedCoverResult k = restricted_cover_size(G, budgets);
        if (k.k) {
            out.push_back({"restricted_cover_k_ge_p_plus_1", ">=", *k.k, BigInt(p + 1), true,
                           *k.k >= p + 1});
        }
    }
    return out;
}

std::vector<BoundCheck> cover_bound_checks(const SemidirectGroup& G, const SylowCover& cover) {
    std::vector<BoundCheck> out;
    if (cover.method != CoverMethod::Transversal && cover.method != CoverMethod::CommonTransversal) {
        return out;
    }
    const BigInt size(cover.representatives.size());
    const BigInt nu = G.sylow_count();
    const std::uint64_t p = G.pgroup().p();
    const CoverStructure structure = maximal_fixed_structure(G);

    BigInt sum_indices = 0, max_index = 0;
    for (const Subspace& ni : structure.fixed) {
        const BigInt idx = ni.coset_count();
        sum_indices += idx;
        max_index = std::max(max_index, idx);
    }
    if (cover.method == CoverMethod::Transversal) {
        out.push_back({"cover_transversal_le_sum_of_indices", "<=", size, sum_indices, true,
                       size <= sum_indices});
        if (G.action().provenance() == Provenance::Thm1) {
            // |T| <= ((p+1)/q^(p-1)) nu_p, cleared of the denominator.
            const BigInt qpow = big_pow(BigInt(G.action().thm1_q()), p - 1);
            out.push_back({"cover_transversal_fraction_bound", "<=", size * qpow, BigInt(p + 1) * nu,
                           true, size * qpow <= BigInt(p + 1) * nu});
        }
    } else {
        const BigInt half = BigInt((p + 1 + 1) / 2); // ceil((p+1)/2)
        out.push_back({"cover_improved_le_half_indices", "<=", size, half * max_index, true,
                       size <= half * max_index});
        // |T| <= (2/3) nu_p, cleared of the denominator.
        out.push_back({"cover_improved_two_thirds", "<=", 3 * size, 2 * nu, true, 3 * size <= 2 * nu});
    }
    return out;
}

UnionRatioResult union_ratio(const SemidirectGroup& G, int n, CoverMethod mode, const Budgets& budgets) {
    if (n < 1) throw Error(ErrorKind::ConfigError, "n must be positive");
    const PUniverse u = build_universe(G, budgets);
    UnionRatioResult out;
    out.n = n;
    out.denominator = BigInt(u.elements.size());

    const bool want_exact = mode == CoverMethod::Exact;
    const bool can_exact = want_exact && n <= budgets.union_ratio_max_n &&
                           BigInt(u.sets.size()) <= budgets.exact_cover_max_sylows;
    if (n >= static_cast<int>(u.sets.size())) {
        // Every subset of this size is all Sylow subgroups.
        out.numerator = out.denominator;
        out.exact = true;
        out.covers_all = true;
        return out;
    }
    if (can_exact) {
        // Enumerate all n-subsets.
        std::vector<int> stamp(u.elements.size(), -1);
        int generation = 0;
        std::size_t best = 0;
        std::vector<int> combo(static_cast<std::size_t>(n));
        const int s = static_cast<int>(u.sets.size());
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == n) {
                ++generation;
                std::size_t size = 0;
                for (int idx : combo) {
                    for (int id : u.sets[static_cast<std::size_t>(idx)]) {
                        if (stamp[static_cast<std::size_t>(id)] != generation) {
                            stamp[static_cast<std::size_t>(id)] = generation;
                            ++size;
                        }
                    }
                }
                best = std::max(best, size);
                return;
            }
            for (int i = start; i < s - (n - depth - 1); ++i) {
                combo[static_cast<std::size_t>(depth)] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        out.numerator = BigInt(best);
        out.exact = true;
    } else {
        bool complete = false;
        std::vector<int> chosen = greedy_cover(u.sets, u.elements.size(), n, &complete);
        std::set<int> covered;
        for (int s : chosen) {
            covered.insert(u.sets[static_cast<std::size_t>(s)].begin(),
                           u.sets[static_cast<std::size_t>(s)].end());
        }
        out.numerator = BigInt(covered.size());
        out.exact = false;
    }
    out.covers_all = out.numerator == out.denominator;
    return out;
}

SemidirectFingerprint semidirect_fingerprint(const SemidirectGroup& G, const Budgets& budgets) {
    if (G.order() > budgets.exhaustive_group_ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate, "group too large for a fingerprint");
    }
    const PGroup& P = G.pgroup();
    const std::uint64_t n_count = checked_u64(G.n_order(), "|N|");
    const std::uint64_t total = n_count * static_cast<std::uint64_t>(P.order());

    auto decode_el = [&](std::uint64_t id) {
        return GElement{vec_decode(G.field(), id / P.order(), G.dim()),
                        static_cast<int>(id % static_cast<std::uint64_t>(P.order()))};
    };
    auto encode_el = [&](const GElement& g) {
        return vec_code(G.field(), g.n) * static_cast<std::uint64_t>(P.order()) +
               static_cast<std::uint64_t>(g.x);
    };

    SemidirectFingerprint fp;
    fp.order = G.order();
    std::map<BigInt, BigInt> hist;
    std::vector<bool> seen(total, false);
    std::vector<BigInt> class_sizes;
    for (std::uint64_t id = 0; id < total; ++id) {
        const GElement g = decode_el(id);
        hist[G.element_order(g)] += 1;
        if (seen[id]) continue;
        // Conjugacy class of g by a full scan.
        std::set<std::uint64_t> orbit;
        for (std::uint64_t hid = 0; hid < total; ++hid) {
            orbit.insert(encode_el(G.conjugate(g, decode_el(hid))));
        }
        for (std::uint64_t e : orbit) seen[e] = true;
        class_sizes.push_back(BigInt(orbit.size()));
    }
    std::sort(class_sizes.begin(), class_sizes.end());
    fp.class_sizes = std::move(class_sizes);
    fp.order_hist.assign(hist.begin(), hist.end());
    return fp;
}

BigInt count_p_elements_exhaustive(const SemidirectGroup& G, const Budgets& budgets) {
    if (G.order() > budgets.exhaustive_group_ceiling) {
        throw Error(ErrorKind::TooLargeToEnumerate, "group too large for exhaustive counting");
    }
    const PGroup& P = G.pgroup();
    BigInt count = 0;
    const std::uint64_t p_order = static_cast<std::uint64_t>(P.order());
    G.for_each_n(budgets.enumeration_ceiling, [&](const Vec& n) {
        for (int x = 0; x < P.order(); ++x) {
            // g^(|P|) = 1 exactly for the p-elements, by square and multiply.
            GElement base{n, x};
            GElement acc = G.identity();
            std::uint64_t e = p_order;
            while (e > 0) {
                if (e & 1) acc = G.multiply(acc, base);
                base = G.multiply(base, base);
                e >>= 1;
            }
            if (G.is_identity(acc)) count += 1;
        }
    });
    return count;
}

} // namespace redsyl
