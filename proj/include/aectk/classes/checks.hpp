#pragma once

#include <aectk/classes/structure_class.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    /// Intersection of the strong sets containing A.
    struct Closure
    {
        ElementSet elements;
        /// Whether the intersection is itself strong.
        bool strong = false;
        /// Number of strong sets containing A; 0 means NOT-CLOSED with an empty family.
        int family_size = 0;
    };

    auto cl_k(const StructureClass & c, const Structure & n, ElementSet a) -> Closure;

    auto strong_subs(const StructureClass & c, const Structure & n) -> std::vector<Substructure>;

    struct CoherenceWitness
    {
        Structure ambient;
        ElementSet m0;
        ElementSet m1;
    };

    struct CoherenceReport
    {
        bool pass = true;
        std::size_t triples_checked = 0;
        /// m0 ⊆ m1, both strong in ambient, but m0 is not strong in m1.
        std::optional<CoherenceWitness> witness;
    };

    auto check_coherence(const StructureClass & c) -> CoherenceReport;

    struct ChainWitness
    {
        Structure ambient;
        std::vector<ElementSet> chain;
        std::string clause;
    };

    struct ChainReport
    {
        bool pass = true;
        std::size_t chains_checked = 0;
        int longest_chain = 0;
        /// No chain of length >= 2 exists at scale.
        bool vacuous = false;
        /// Every finite chain has a top element, so union and limit clauses only test the top.
        bool degenerate = true;
        /// Forbid presentations satisfy the union axioms for any chain, not just at scale.
        bool structurally_certified = false;
        std::optional<ChainWitness> witness;
    };

    /// Chains of at most `max_length` strong sets inside each member at scale.
    auto check_chain_axioms(const StructureClass & c, int max_length = 3) -> ChainReport;

    struct LsWitness
    {
        Structure ambient;
        ElementSet a;
    };

    struct LsEstimate
    {
        /// bound[a] for a = 0..scale, monotone.
        std::vector<int> bound;
        /// Per-size maxima before taking the monotone envelope.
        std::vector<int> raw;
        bool failed = false;
        std::optional<LsWitness> witness;

        auto worst() const -> int { return bound.empty() ? 0 : bound.back(); }
    };

    auto estimate_ls(const StructureClass & c) -> LsEstimate;

    struct IntersectionWitness
    {
        Structure ambient;
        ElementSet a;
        Closure closure;
    };

    struct IntersectionReport
    {
        bool pass = true;
        std::optional<IntersectionWitness> witness;
    };

    auto check_admits_intersections(const StructureClass & c) -> IntersectionReport;

    struct PseudoUniversalWitness
    {
        Structure source;
        Structure target;
        ElementMap f;
        ElementMap g;
        /// f and g agree on a but not on closure.
        ElementSet a;
        ElementSet closure;
    };

    struct PseudoUniversalReport
    {
        enum class Status
        {
            pass,
            fail,
            precondition_failed
        };
        Status status = Status::pass;
        std::size_t pairs_checked = 0;
        std::optional<PseudoUniversalWitness> witness;
        std::optional<IntersectionWitness> precondition_witness;

        auto pass() const -> bool { return status == Status::pass; }
    };

    auto check_pseudo_universal(const StructureClass & c) -> PseudoUniversalReport;

    struct UniversalWitness
    {
        enum class Kind
        {
            substructure_not_member,
            substructure_not_strong
        };
        Kind kind;
        Structure ambient;
        ElementSet subset;
        Structure missing;
    };

    struct UniversalReport
    {
        bool pass = true;
        bool structurally_certified = false;
        std::optional<UniversalWitness> witness;
    };

    auto check_universal(const StructureClass & c) -> UniversalReport;

    /// A least-size A0 ⊆ a with b ⊆ cl(A0) (hence inclusion-minimal). Requires b ⊆ cl(a) with cl(a) strong.
    auto local_character(const StructureClass & c, const Structure & n, ElementSet a, ElementSet b) -> ElementSet;
}
