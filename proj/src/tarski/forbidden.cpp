#include <aectk/tarski/forbidden.hpp>

#include <aectk/classes/checks.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>

namespace aectk
{
    auto pointed_embeds(const DiagramType & d, const Structure & m) -> bool
    {
        require_same_signature(d.shape(), m, "pointed embedding");
        return exists_embedding(d.shape(), m);
    }

    auto minimal_forbidden(const StructureClass & c) -> ForbiddenBasis
    {
        if (auto u = check_universal(c); ! u.pass)
            throw PreconditionFailed("class " + c.name() + " is not closed under substructures at scale");
        ForbiddenBasis basis;
        basis.scale = c.scale();
        auto all = enumerate_structures(c.vocabulary_ptr(), c.scale(), c.definition().enumeration_ceiling);
        for (const auto & s : *all) {
            const auto & m = s.structure;
            if (c.member(m))
                continue;
            bool minimal = true;
            for (auto sub : subsets_of(m.universe())) {
                if (sub == m.universe() || ! is_function_closed(m, sub))
                    continue;
                if (! c.member(induced_substructure(m, sub).structure)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                basis.gamma.push_back(DiagramType::of(m));
        }
        std::sort(basis.gamma.begin(), basis.gamma.end());
        return basis;
    }

    auto omits(const Structure & m, const ForbiddenBasis & basis) -> bool
    {
        for (const auto & d : basis.gamma)
            if (pointed_embeds(d, m))
                return false;
        return true;
    }

    auto antichain_violations(const ForbiddenBasis & basis) -> std::vector<std::pair<std::size_t, std::size_t>>
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < basis.gamma.size(); ++i)
            for (std::size_t j = 0; j < basis.gamma.size(); ++j)
                if (i != j && pointed_embeds(basis.gamma[i], basis.gamma[j].shape()))
                    out.emplace_back(i, j);
        return out;
    }
}
