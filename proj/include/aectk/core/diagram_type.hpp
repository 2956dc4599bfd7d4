#pragma once

#include <aectk/core/canonical.hpp>
#include <aectk/core/structure.hpp>

namespace aectk
{
    /// A finite structure with a distinguished tuple that generates it, stored in pointed canonical form.
    /// Serves both as a forbidden configuration and as the representative of a pointed isomorphism class.
    class DiagramType
    {
    public:
        /// Throws InvariantViolation unless `point` generates `shape`.
        DiagramType(const Structure & shape, const Tuple & point);

        /// The point enumerates the whole universe in canonical order.
        static auto of(const Structure & shape) -> DiagramType;

        auto shape() const -> const Structure & { return shape_; }
        auto point() const -> const Tuple & { return point_; }
        auto code() const -> const CanonicalCode & { return code_; }

        friend auto operator==(const DiagramType & a, const DiagramType & b) -> bool { return a.code_ == b.code_; }
        friend auto operator<(const DiagramType & a, const DiagramType & b) -> bool { return a.code_ < b.code_; }

    private:
        Structure shape_;
        Tuple point_;
        CanonicalCode code_;
    };
}
