// Independent brute-force oracles used by the test suites. These deliberately
// avoid the library's linear-algebra and counting paths: orders come from
// literal repeated multiplication, Sylow subgroups are explicit element sets,
// and row reduction is reimplemented on plain integers.
#ifndef REDSYL_TESTS_ORACLES_HPP
#define REDSYL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "redsyl/pgroup.hpp"
#include "redsyl/semidirect.hpp"

namespace oracle {

// Row reduction over GF(p) on plain integers; returns the rank.
inline int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m) {
        for (auto& v : row) v = ((v % p) + p) % p;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        // Scale the pivot row by the inverse of the pivot.
        long long inv = 1, base = m[r][c] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& v : m[r]) v = v * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const long long f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline int kernel_dim_mod_p(const std::vector<std::vector<long long>>& m, long long p) {
    if (m.empty()) return 0;
    return static_cast<int>(m[0].size()) - rank_mod_p(m, p);
}

// A semidirect product materialized as integer element ids with its own
// multiplication; shares only the raw action matrices with the library.
class ExplicitGroup {
public:
    static ExplicitGroup from(const redsyl::SemidirectGroup& g) {
        ExplicitGroup e;
        if (g.field().degree() != 1) throw std::runtime_error("oracle expects a prime field");
        e.l_ = static_cast<long long>(g.field().characteristic());
        e.dim_ = static_cast<int>(g.dim());
        e.p_order_ = g.pgroup().order();
        e.n_count_ = 1;
        for (int i = 0; i < e.dim_; ++i) {
            e.n_count_ *= e.l_;
            if (e.n_count_ > (1LL << 40)) throw std::runtime_error("oracle group too large");
        }
        e.ptable_.assign(static_cast<std::size_t>(e.p_order_),
                         std::vector<int>(static_cast<std::size_t>(e.p_order_)));
        for (int a = 0; a < e.p_order_; ++a) {
            for (int b = 0; b < e.p_order_; ++b) {
                e.ptable_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.pgroup().mul(a, b);
            }
        }
        e.mats_.resize(static_cast<std::size_t>(e.p_order_));
        for (int x = 0; x < e.p_order_; ++x) {
            auto& m = e.mats_[static_cast<std::size_t>(x)];
            m.assign(static_cast<std::size_t>(e.dim_), std::vector<long long>(static_cast<std::size_t>(e.dim_)));
            for (int i = 0; i < e.dim_; ++i) {
                for (int j = 0; j < e.dim_; ++j) {
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        g.action().matrix(x).at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                }
            }
        }
        return e;
    }

    long long size() const { return n_count_ * p_order_; }
    long long identity() const { return 0; }

    std::vector<long long> decode_n(long long code) const {
        std::vector<long long> v(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            v[static_cast<std::size_t>(i)] = code % l_;
            code /= l_;
        }
        return v;
    }
    long long encode_n(const std::vector<long long>& v) const {
        long long code = 0;
        for (int i = dim_; i-- > 0;) code = code * l_ + v[static_cast<std::size_t>(i)];
        return code;
    }

    long long make(const std::vector<long long>& n, int x) const {
        return encode_n(n) * p_order_ + x;
    }
    int p_part(long long id) const { return static_cast<int>(id % p_order_); }
    std::vector<long long> n_part(long long id) const { return decode_n(id / p_order_); }

    long long mul(long long a, long long b) const {
        const int ax = p_part(a), bx = p_part(b);
        const auto an = n_part(a), bn = n_part(b);
        const auto& m = mats_[static_cast<std::size_t>(ax)];
        std::vector<long long> out(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            long long acc = an[static_cast<std::size_t>(i)];
            for (int j = 0; j < dim_; ++j) {
                acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * bn[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(i)] = acc % l_;
        }
        return make(out, ptable_[static_cast<std::size_t>(ax)][static_cast<std::size_t>(bx)]);
    }

    long long inv(long long a) const {
        long long acc = a, prev = identity();
        while (acc != identity()) {
            prev = acc;
            acc = mul(acc, a);
        }
        return prev;
    }

    // Literal repeated multiplication.
    long long order(long long a) const {
        long long acc = a, ord = 1;
        while (acc != identity()) {
            acc = mul(acc, a);
            ++ord;
        }
        return ord;
    }

    bool is_p_element(long long a, long long p) const {
        long long ord = order(a);
        while (ord % p == 0) ord /= p;
        return ord == 1;
    }

    std::vector<long long> p_elements(long long p) const {
        std::vector<long long> out;
        for (long long id = 0; id < size(); ++id) {
            if (is_p_element(id, p)) out.push_back(id);
        }
        return out;
    }

    // The embedded copy of P.
    std::vector<long long> base_sylow() const {
        std::vector<long long> out;
        for (int x = 0; x < p_order_; ++x) out.push_back(x);
        return out;
    }

    std::vector<long long> conjugate_set(const std::vector<long long>& set, long long g) const {
        std::vector<long long> out;
        const long long gi = inv(g);
        out.reserve(set.size());
        for (long long s : set) out.push_back(mul(mul(g, s), gi));
        std::sort(out.begin(), out.end());
        return out;
    }

    // All distinct conjugates of the embedded P, as sorted element sets.
    std::set<std::vector<long long>> sylow_sets() const {
        std::set<std::vector<long long>> out;
        const auto base = base_sylow();
        for (long long g = 0; g < size(); ++g) out.insert(conjugate_set(base, g));
        return out;
    }

    long long centralizer_size(long long a) const {
        long long count = 0;
        for (long long g = 0; g < size(); ++g) {
            if (mul(g, a) == mul(a, g)) ++count;
        }
        return count;
    }

    long long normalizer_size(const std::vector<long long>& subgroup) const {
        std::vector<long long> sorted = subgroup;
        std::sort(sorted.begin(), sorted.end());
        long long count = 0;
        for (long long g = 0; g < size(); ++g) {
            if (conjugate_set(sorted, g) == sorted) ++count;
        }
        return count;
    }

    std::vector<long long> class_sizes() const {
        std::vector<long long> sizes;
        std::set<long long> seen;
        for (long long id = 0; id < size(); ++id) {
            if (seen.count(id)) continue;
            std::set<long long> orbit;
            for (long long g = 0; g < size(); ++g) orbit.insert(mul(mul(g, id), inv(g)));
            for (long long e : orbit) seen.insert(e);
            sizes.push_back(static_cast<long long>(orbit.size()));
        }
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    std::map<long long, long long> order_histogram() const {
        std::map<long long, long long> hist;
        for (long long id = 0; id < size(); ++id) hist[order(id)]++;
        return hist;
    }

private:
    long long l_ = 0;
    int dim_ = 0;
    int p_order_ = 0;
    long long n_count_ = 0;
    std::vector<std::vector<int>> ptable_;
    std::vector<std::vector<std::vector<long long>>> mats_;
};

// All subgroups of a small p-group, as sorted member lists (closures of up to
// three generators; enough for every catalog group used in the tests).
inline std::set<std::vector<int>> all_subgroups(const redsyl::PGroup& p) {
    std::set<std::vector<int>> out;
    const int n = p.order();
    auto closure = [&](std::vector<int> gens) {
        std::set<int> members{0};
        std::vector<int> work{0};
        for (int g : gens) {
            if (members.insert(g).second) work.push_back(g);
        }
        for (std::size_t head = 0; head < work.size(); ++head) {
            std::vector<int> snapshot(members.begin(), members.end());
            for (int m : snapshot) {
                for (int prod : {p.mul(work[head], m), p.mul(m, work[head])}) {
                    if (members.insert(prod).second) work.push_back(prod);
                }
            }
        }
        return std::vector<int>(members.begin(), members.end());
    };
    out.insert(closure({}));
    for (int a = 0; a < n; ++a) {
        out.insert(closure({a}));
        for (int b = a; b < n; ++b) {
            out.insert(closure({a, b}));
            for (int c = b; c < n; ++c) out.insert(closure({a, b, c}));
        }
    }
    return out;
}

// Frattini subgroup by its definition: the intersection of all maximal
// subgroups.
inline std::vector<int> frattini_by_definition(const redsyl::PGroup& p) {
    const auto subs = all_subgroups(p);
    std::vector<std::vector<int>> proper;
    for (const auto& s : subs) {
        if (static_cast<int>(s.size()) < p.order()) proper.push_back(s);
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& s : proper) {
        bool contained = false;
        for (const auto& t : proper) {
            if (&s == &t || t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(s);
    }
    std::set<int> inter(maximal.front().begin(), maximal.front().end());
    for (const auto& m : maximal) {
        std::set<int> next;
        for (int x : m) {
            if (inter.count(x)) next.insert(x);
        }
        inter = std::move(next);
    }
    return {inter.begin(), inter.end()};
}

} // namespace oracle

#endif
