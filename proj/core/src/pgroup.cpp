#include "redsyl/pgroup.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "redsyl/gf.hpp"

namespace redsyl {

bool SubgroupOfP::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

bool SubgroupOfP::operator<(const SubgroupOfP& other) const {
    if (members.size() != other.members.size()) return members.size() < other.members.size();
    return members < other.members;
}

PGroup::PGroup(std::uint64_t p, std::vector<std::vector<int>> table, std::string name)
    : p_(p), order_(static_cast<int>(table.size())), name_(std::move(name)) {
    table_.reserve(static_cast<std::size_t>(order_) * order_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != order_) {
            throw Error(ErrorKind::InvalidGroupTable, "table is not square");
        }
        table_.insert(table_.end(), row.begin(), row.end());
    }
    validate();
    compute_derived();
}

void PGroup::validate() const {
    if (!is_prime(p_)) throw Error(ErrorKind::InvalidPrime, "p = " + std::to_string(p_) + " is not prime");
    if (order_ < 1) throw Error(ErrorKind::InvalidGroupTable, "empty table");
    if (order_ > kMaxGroupOrder) {
        throw Error(ErrorKind::GroupTooLarge,
                    "order " + std::to_string(order_) + " exceeds supported maximum " +
                        std::to_string(kMaxGroupOrder));
    }
    {
        int m = order_;
        while (m % static_cast<int>(p_) == 0) m /= static_cast<int>(p_);
        if (m != 1) {
            throw Error(ErrorKind::InvalidGroupTable,
                        "order " + std::to_string(order_) + " is not a power of " + std::to_string(p_));
        }
    }
    const int n = order_;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int v = table_[static_cast<std::size_t>(i) * n + j];
            if (v < 0 || v >= n) throw Error(ErrorKind::InvalidGroupTable, "entry out of range");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i) {
            throw Error(ErrorKind::InvalidGroupTable, "index 0 is not an identity");
        }
    }
    // Latin square property.
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(mul(i, j))] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw Error(ErrorKind::InvalidGroupTable, "row " + std::to_string(i) + " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(mul(j, i))] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw Error(ErrorKind::InvalidGroupTable, "column " + std::to_string(i) + " is not a permutation");
        }
    }
    // Exhaustive associativity; the supported order cap keeps this feasible.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int ab = mul(a, b);
            for (int c = 0; c < n; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c))) {
                    throw Error(ErrorKind::InvalidGroupTable, "multiplication is not associative");
                }
            }
        }
    }
}

void PGroup::compute_derived() {
    const int n = order_;
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw Error(ErrorKind::InvalidGroupTable, "one-sided inverse");
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] < 0) {
            throw Error(ErrorKind::InvalidGroupTable, "element without inverse");
        }
    }
    element_order_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        std::uint64_t ord = 1;
        int x = a;
        while (x != 0) {
            x = mul(x, a);
            ++ord;
        }
        std::uint64_t m = ord;
        while (m % p_ == 0) m /= p_;
        if (m != 1) {
            throw Error(ErrorKind::InvalidGroupTable,
                        "element " + std::to_string(a) + " has order " + std::to_string(ord) +
                            ", not a power of " + std::to_string(p_));
        }
        element_order_[static_cast<std::size_t>(a)] = ord;
    }
    // Conjugacy classes; the ascending scan makes the smallest index the
    // representative.
    classes_.class_of.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        if (classes_.class_of[static_cast<std::size_t>(x)] >= 0) continue;
        const int id = static_cast<int>(classes_.classes.size());
        std::set<int> orbit;
        for (int g = 0; g < n; ++g) orbit.insert(conj(x, g));
        for (int y : orbit) classes_.class_of[static_cast<std::size_t>(y)] = id;
        classes_.classes.emplace_back(orbit.begin(), orbit.end());
        classes_.representatives.push_back(x);
    }
}

int PGroup::pow(int a, std::uint64_t e) const {
    int acc = 0, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool PGroup::is_cyclic() const {
    for (int a = 0; a < order_; ++a) {
        if (element_order_[static_cast<std::size_t>(a)] == static_cast<std::uint64_t>(order_)) return true;
    }
    return false;
}

bool PGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a) {
        for (int b = a + 1; b < order_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

std::vector<int> PGroup::centralizer(int x) const {
    std::vector<int> out;
    for (int g = 0; g < order_; ++g) {
        if (mul(g, x) == mul(x, g)) out.push_back(g);
    }
    return out;
}

std::uint64_t PGroup::centralizer_size(int x) const { return centralizer(x).size(); }

SubgroupOfP PGroup::generated_subgroup(const std::vector<int>& generators) const {
    std::vector<bool> in(static_cast<std::size_t>(order_), false);
    std::vector<int> work{0};
    in[0] = true;
    for (int g : generators) {
        if (!in[static_cast<std::size_t>(g)]) {
            in[static_cast<std::size_t>(g)] = true;
            work.push_back(g);
        }
    }
    std::vector<int> members = work;
    for (std::size_t head = 0; head < work.size(); ++head) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            // Products in both orders; members grows as we go.
            for (int prod : {mul(work[head], members[j]), mul(members[j], work[head])}) {
                if (!in[static_cast<std::size_t>(prod)]) {
                    in[static_cast<std::size_t>(prod)] = true;
                    work.push_back(prod);
                    members.push_back(prod);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return SubgroupOfP{std::move(members)};
}

bool PGroup::is_subgroup(const SubgroupOfP& s) const {
    if (s.members.empty() || s.members.front() != 0) return false;
    for (int a : s.members) {
        if (a < 0 || a >= order_) return false;
        for (int b : s.members) {
            if (!s.contains(mul(a, b))) return false;
        }
    }
    return true;
}

SubgroupOfP PGroup::frattini() const {
    std::vector<int> gens;
    for (int a = 0; a < order_; ++a) gens.push_back(pow(a, p_));
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            gens.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
        }
    }
    return generated_subgroup(gens);
}

std::vector<SubgroupOfP> PGroup::maximal_cover() const {
    const SubgroupOfP phi = frattini();
    const int n = order_;
    const int p = static_cast<int>(p_);

    // Label each Frattini coset by its smallest member.
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        std::vector<int> coset;
        for (int h : phi.members) coset.push_back(mul(g, h));
        const int label = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) coset_of[static_cast<std::size_t>(y)] = label;
    }

    // Greedy basis of the elementary abelian quotient, smallest labels first.
    std::map<int, std::vector<int>> coords; // coset label -> coordinates
    coords[coset_of[0]] = {};
    std::vector<int> basis;
    std::vector<int> labels;
    for (int g = 0; g < n; ++g) {
        if (coset_of[static_cast<std::size_t>(g)] == g) labels.push_back(g);
    }
    for (int lab : labels) {
        if (coords.count(lab)) continue;
        basis.push_back(lab);
        std::map<int, std::vector<int>> grown;
        for (const auto& [l, c] : coords) {
            int cur = l;
            for (int j = 0; j < p; ++j) {
                std::vector<int> c2 = c;
                c2.push_back(j);
                grown[coset_of[static_cast<std::size_t>(cur)]] = std::move(c2);
                cur = mul(cur, lab);
            }
        }
        coords = std::move(grown);
    }
    const int rank = static_cast<int>(basis.size());
    if (rank < 2) {
        throw Error(ErrorKind::CyclicGroup, "group " + name_ + " is cyclic; no maximal cover exists");
    }
    for (auto& [l, c] : coords) c.resize(static_cast<std::size_t>(rank), 0);

    // Preimages of the p+1 index-p subgroups of the rank-2 projection.
    std::vector<std::pair<int, int>> functionals;
    for (int t = 0; t < p; ++t) functionals.emplace_back(1, t);
    functionals.emplace_back(0, 1);

    std::vector<SubgroupOfP> cover;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (auto [alpha, beta] : functionals) {
        std::vector<int> members;
        for (int g = 0; g < n; ++g) {
            const auto& c = coords[coset_of[static_cast<std::size_t>(g)]];
            if ((alpha * c[0] + beta * c[1]) % p == 0) {
                members.push_back(g);
                covered[static_cast<std::size_t>(g)] = true;
            }
        }
        SubgroupOfP sub{std::move(members)};
        if (sub.size() * p != n || !is_subgroup(sub)) {
            throw Error(ErrorKind::InternalError, "maximal cover produced a non-subgroup");
        }
        cover.push_back(std::move(sub));
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw Error(ErrorKind::InternalError, "maximal cover does not cover the group");
    }
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            if (cover[i] == cover[j]) throw Error(ErrorKind::InternalError, "maximal cover repeats a subgroup");
        }
    }
    return cover;
}

std::vector<int> PGroup::hom_to_cp(const SubgroupOfP& maximal) const {
    if (!is_subgroup(maximal) || maximal.size() * static_cast<int>(p_) != order_) {
        throw Error(ErrorKind::NotMaximal, "subgroup does not have index p");
    }
    const int p = static_cast<int>(p_);
    int x = -1;
    for (int g = 0; g < order_; ++g) {
        if (!maximal.contains(g)) {
            x = g;
            break;
        }
    }
    std::vector<int> value(static_cast<std::size_t>(order_), -1);
    int xi = 0; // x^i
    for (int i = 0; i < p; ++i) {
        for (int h : maximal.members) {
            const int g = mul(xi, h);
            if (value[static_cast<std::size_t>(g)] >= 0) {
                throw Error(ErrorKind::NotMaximal, "cosets of the subgroup do not partition the group");
            }
            value[static_cast<std::size_t>(g)] = i;
        }
        xi = mul(xi, x);
    }
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h) {
            if (value[static_cast<std::size_t>(mul(g, h))] !=
                (value[static_cast<std::size_t>(g)] + value[static_cast<std::size_t>(h)]) % p) {
                throw Error(ErrorKind::NotMaximal, "coset map is not a homomorphism");
            }
        }
    }
    return value;
}

std::vector<SubgroupOfP> PGroup::cyclic_subgroups() const {
    std::set<SubgroupOfP> seen;
    for (int x = 0; x < order_; ++x) {
        std::vector<int> members;
        int cur = 0;
        do {
            members.push_back(cur);
            cur = mul(cur, x);
        } while (cur != 0);
        std::sort(members.begin(), members.end());
        seen.insert(SubgroupOfP{std::move(members)});
    }
    return {seen.begin(), seen.end()};
}

GroupFingerprint PGroup::fingerprint() const {
    GroupFingerprint fp;
    fp.order = static_cast<std::uint64_t>(order_);
    for (const auto& cls : classes_.classes) fp.class_sizes.push_back(static_cast<int>(cls.size()));
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    for (int a = 0; a < order_; ++a) fp.order_hist[element_order_[static_cast<std::size_t>(a)]]++;
    fp.cyclic_subgroup_count = static_cast<int>(cyclic_subgroups().size());
    return fp;
}

PGroup PGroup::direct_product(const PGroup& a, const PGroup& b, const std::string& name) {
    if (a.p() != b.p()) {
        throw Error(ErrorKind::UnknownGroup, "direct product factors must share the prime p");
    }
    const int na = a.order(), nb = b.order();
    if (static_cast<long long>(na) * nb > kMaxGroupOrder) {
        throw Error(ErrorKind::GroupTooLarge, "direct product order exceeds supported maximum");
    }
    const int n = na * nb;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.mul(ai, aj) * nb + b.mul(bi, bj);
        }
    }
    return PGroup(a.p(), std::move(table), name);
}

namespace {

PGroup make_cyclic(std::uint64_t n, std::uint64_t p, const std::string& name) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>((i + j) % n);
        }
    }
    return PGroup(p, std::move(table), name);
}

// Dihedral of order 8: <r, s | r^4 = s^2 = 1, s r s = r^-1>, index = i + 4j
// for r^i s^j.
PGroup make_d8() {
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 2; ++l) {
                    const int rot = ((i + (j ? 4 - k : k)) % 4 + 4) % 4;
                    const int flip = (j + l) % 2;
                    table[static_cast<std::size_t>(i + 4 * j)][static_cast<std::size_t>(k + 4 * l)] =
                        rot + 4 * flip;
                }
            }
        }
    }
    return PGroup(2, std::move(table), "D8");
}

// Quaternion group: <a, b | a^4 = 1, b^2 = a^2, b a b^-1 = a^-1>, index =
// i + 4j for a^i b^j.
PGroup make_q8() {
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 2; ++l) {
                    const int rot = (i + (j ? 4 - k : k) + ((j && l) ? 2 : 0)) % 4;
                    const int fl = (j + l) % 2;
                    table[static_cast<std::size_t>(i + 4 * j)][static_cast<std::size_t>(k + 4 * l)] = rot + 4 * fl;
                }
            }
        }
    }
    return PGroup(2, std::move(table), "Q8");
}

// Modular group of order 16: <a, b | a^8 = b^2 = 1, b a b^-1 = a^5>, index =
// i + 8j for a^i b^j.
PGroup make_m16() {
    std::vector<std::vector<int>> table(16, std::vector<int>(16));
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 8; ++k) {
                for (int l = 0; l < 2; ++l) {
                    const int rot = (i + k * (j ? 5 : 1)) % 8;
                    const int fl = (j + l) % 2;
                    table[static_cast<std::size_t>(i + 8 * j)][static_cast<std::size_t>(k + 8 * l)] = rot + 8 * fl;
                }
            }
        }
    }
    return PGroup(2, std::move(table), "M16");
}

// Extraspecial 3^{1+2} of exponent 3 (Heisenberg group over GF(3)): triples
// (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'), index =
// 9a + 3b + c.
PGroup make_heis3() {
    auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
    std::vector<std::vector<int>> table(27, std::vector<int>(27));
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                for (int a2 = 0; a2 < 3; ++a2) {
                    for (int b2 = 0; b2 < 3; ++b2) {
                        for (int c2 = 0; c2 < 3; ++c2) {
                            table[static_cast<std::size_t>(idx(a, b, c))][static_cast<std::size_t>(idx(a2, b2, c2))] =
                                idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
                        }
                    }
                }
            }
        }
    }
    return PGroup(3, std::move(table), "Heis3");
}

std::vector<std::string> split_product(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < name.size();) {
        if (name.compare(i, 2, "\xC3\x97") == 0) { // UTF-8 multiplication sign
            parts.push_back(cur);
            cur.clear();
            i += 2;
        } else if (name[i] == 'x') {
            parts.push_back(cur);
            cur.clear();
            i += 1;
        } else {
            cur += name[i];
            i += 1;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

PGroup PGroup::catalog(const std::string& name) {
    if (name == "D8") return make_d8();
    if (name == "Q8") return make_q8();
    if (name == "M16") return make_m16();
    if (name == "Heis3") return make_heis3();
    if (name == "C4xC2") return direct_product(make_cyclic(4, 2, "C4"), make_cyclic(2, 2, "C2"), "C4xC2");
    if (name == "C9xC3") return direct_product(make_cyclic(9, 3, "C9"), make_cyclic(3, 3, "C3"), "C9xC3");

    static const std::regex homocyclic(R"(^C(\d+)\^(\d+)$)");
    static const std::regex cyclic(R"(^C(\d+)$)");
    std::smatch m;
    if (std::regex_match(name, m, homocyclic)) {
        const std::uint64_t n = std::stoull(m[1]);
        const int k = std::stoi(m[2]);
        auto pp = prime_power_decompose(n);
        if (!pp || k < 1) throw Error(ErrorKind::UnknownGroup, name + " is not a p-group name");
        PGroup g = make_cyclic(n, pp->first, name);
        for (int i = 1; i < k; ++i) {
            g = direct_product(g, make_cyclic(n, pp->first, "C" + std::to_string(n)), name);
        }
        return g;
    }
    if (std::regex_match(name, m, cyclic)) {
        const std::uint64_t n = std::stoull(m[1]);
        auto pp = prime_power_decompose(n);
        if (!pp) throw Error(ErrorKind::UnknownGroup, name + " is not a p-group name");
        return make_cyclic(n, pp->first, name);
    }

    const std::vector<std::string> parts = split_product(name);
    if (parts.size() >= 2) {
        bool ok = std::all_of(parts.begin(), parts.end(), [](const std::string& s) { return !s.empty(); });
        if (ok) {
            PGroup g = catalog(parts[0]);
            for (std::size_t i = 1; i < parts.size(); ++i) {
                g = direct_product(g, catalog(parts[i]), name);
            }
            return g;
        }
    }
    throw Error(ErrorKind::UnknownGroup, "unknown group name: " + name);
}

PGroup PGroup::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidGroupTable, std::string("invalid JSON: ") + e.what());
    }
    try {
        const std::uint64_t p = j.at("p").get<std::uint64_t>();
        const int order = j.at("order").get<int>();
        const auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(table.size()) != order) {
            throw Error(ErrorKind::InvalidGroupTable, "table size does not match order");
        }
        std::string name = j.value("name", std::string("custom"));
        return PGroup(p, table, name);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidGroupTable, std::string("bad group file: ") + e.what());
    }
}

PGroup PGroup::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidGroupTable, "cannot open group file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

} // namespace redsyl
