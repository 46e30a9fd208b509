#ifndef REDSYL_PGROUP_HPP
#define REDSYL_PGROUP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "redsyl/errors.hpp"

namespace redsyl {

inline constexpr int kMaxGroupOrder = 512;

// A subgroup given by its sorted member indices.
struct SubgroupOfP {
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    bool operator==(const SubgroupOfP& other) const { return members == other.members; }
    bool operator<(const SubgroupOfP& other) const;
};

struct ConjugacyClasses {
    std::vector<std::vector<int>> classes; // sorted members, ordered by representative
    std::vector<int> representatives;      // smallest index per class
    std::vector<int> class_of;             // element index -> class index
};

// Structural invariants that agree on isomorphic groups. A matching
// fingerprint is a necessary condition only, never a proof of isomorphism.
struct GroupFingerprint {
    std::uint64_t order = 0;
    std::vector<int> class_sizes;            // sorted ascending
    std::map<std::uint64_t, int> order_hist; // element order -> count
    int cyclic_subgroup_count = 0;

    bool operator==(const GroupFingerprint& other) const = default;
};

// A finite p-group as a full multiplication table, identity at index 0.
// Group axioms, p-power element orders and the order cap are verified at
// construction; instances are immutable afterwards.
class PGroup {
public:
    PGroup(std::uint64_t p, std::vector<std::vector<int>> table, std::string name);

    std::uint64_t p() const { return p_; }
    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    // g a g^-1
    int conj(int a, int g) const { return mul(mul(g, a), inv(g)); }
    int pow(int a, std::uint64_t e) const;
    std::uint64_t order_of(int a) const { return element_order_[a]; }

    bool is_cyclic() const;
    bool is_abelian() const;

    const ConjugacyClasses& conjugacy_classes() const { return classes_; }
    std::vector<int> centralizer(int x) const;
    std::uint64_t centralizer_size(int x) const;

    // Closure of the given elements under multiplication.
    SubgroupOfP generated_subgroup(const std::vector<int>& generators) const;
    bool is_subgroup(const SubgroupOfP& s) const;

    // Frattini subgroup: closure of all p-th powers and commutators.
    SubgroupOfP frattini() const;

    // p+1 distinct index-p subgroups whose union is the whole group, obtained
    // by projecting the Frattini quotient onto its first two coordinates.
    // Requires a non-cyclic group.
    std::vector<SubgroupOfP> maximal_cover() const;

    // The surjection onto Z/p with kernel exactly the given maximal subgroup:
    // phi(g) = i where g lies in x^i * Pi for the smallest x outside Pi.
    std::vector<int> hom_to_cp(const SubgroupOfP& maximal) const;

    // All distinct subgroups <x>, sorted by (size, members).
    std::vector<SubgroupOfP> cyclic_subgroups() const;

    GroupFingerprint fingerprint() const;

    static PGroup catalog(const std::string& name);
    static PGroup from_json_file(const std::string& path);
    static PGroup from_json_text(const std::string& text);

    static PGroup direct_product(const PGroup& a, const PGroup& b, const std::string& name);

private:
    void validate() const;
    void compute_derived();

    std::uint64_t p_;
    int order_;
    std::string name_;
    std::vector<int> table_; // row-major order_ x order_
    std::vector<int> inverse_;
    std::vector<std::uint64_t> element_order_;
    ConjugacyClasses classes_;
};

} // namespace redsyl

#endif
