#pragma once

#include <aectk/core/canonical.hpp>
#include <aectk/core/structure.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace aectk
{
    /// Default ceiling on the number of labelled structures an enumeration may visit.
    inline constexpr std::uint64_t default_enumeration_ceiling = std::uint64_t{1} << 22;

    /// A structure paired with its canonical code; lists of these are sorted by code.
    struct CanonicalStructure
    {
        CanonicalCode code;
        Structure structure;
    };

    /// Number of labelled structures with universe exactly 0..n-1 (saturating at UINT64_MAX).
    auto labelled_count(const Vocabulary & v, int n) -> std::uint64_t;

    /// One canonical representative per isomorphism class of structures of size <= max_size, sorted by
    /// code (hence by size first). Results are memoized per signature and bound.
    /// Throws ResourceLimit when the labelled count exceeds `ceiling`.
    auto enumerate_structures(const VocabularyPtr & v, int max_size, std::uint64_t ceiling = default_enumeration_ceiling)
        -> std::shared_ptr<const std::vector<CanonicalStructure>>;
}
