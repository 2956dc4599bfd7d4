#include <aectk/core/diagram_type.hpp>
#include <aectk/core/error.hpp>
#include <aectk/core/morphism.hpp>

namespace aectk
{
    DiagramType::DiagramType(const Structure & shape, const Tuple & point) :
        shape_(shape)
    {
        ElementSet range;
        for (auto e : point) {
            if (e < 0 || e >= shape.size())
                throw InvariantViolation("diagram point element " + std::to_string(e) + " outside the shape");
            range.insert(e);
        }
        if (closure_under_functions(shape, range) != shape.universe())
            throw InvariantViolation("diagram point " + range.to_string() + " does not generate its shape");
        auto form = canonical_form(shape, point);
        shape_ = relabel(shape, form.witness);
        point_.reserve(point.size());
        for (auto e : point)
            point_.push_back(form.witness[e]);
        code_ = std::move(form.code);
    }

    auto DiagramType::of(const Structure & shape) -> DiagramType
    {
        auto canon = canonical_structure(shape);
        return DiagramType(canon, identity_map(canon.size()));
    }
}
