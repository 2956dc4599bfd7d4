#include <aectk/expansions/expanded_class.hpp>

#include <aectk/core/error.hpp>

namespace aectk
{
    auto added_functions(const Vocabulary & vocab, const Vocabulary & base) -> std::vector<SymbolDecl>
    {
        std::vector<SymbolDecl> out;
        for (const auto & f : vocab.functions())
            if (! base.find_function(f.name))
                out.push_back(f);
        return out;
    }

    void require_fresh(const Vocabulary & v, const std::vector<std::string> & names)
    {
        for (const auto & n : names)
            if (v.has_symbol(n))
                throw InvariantViolation("symbol " + n + " already belongs to vocabulary " + v.name());
    }
}
