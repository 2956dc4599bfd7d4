#include <aectk/core/vocabulary.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>
#include <set>

namespace aectk
{
    Vocabulary::Vocabulary(std::string name, std::vector<SymbolDecl> relations, std::vector<SymbolDecl> functions) :
        name_(std::move(name)),
        relations_(std::move(relations)),
        functions_(std::move(functions))
    {
        std::set<std::string> seen;
        auto check = [&] (const SymbolDecl & d) {
            if (d.arity < 0)
                throw InvariantViolation("symbol '" + d.name + "' has negative arity");
            if (d.name.empty())
                throw InvariantViolation("empty symbol name in vocabulary '" + name_ + "'");
            if (! seen.insert(d.name).second)
                throw InvariantViolation("symbol '" + d.name + "' declared twice in vocabulary '" + name_ + "'");
        };
        std::for_each(relations_.begin(), relations_.end(), check);
        std::for_each(functions_.begin(), functions_.end(), check);
    }

    auto Vocabulary::find_relation(const std::string & symbol) const -> std::optional<std::size_t>
    {
        for (std::size_t i = 0; i < relations_.size(); ++i)
            if (relations_[i].name == symbol)
                return i;
        return std::nullopt;
    }

    auto Vocabulary::find_function(const std::string & symbol) const -> std::optional<std::size_t>
    {
        for (std::size_t i = 0; i < functions_.size(); ++i)
            if (functions_[i].name == symbol)
                return i;
        return std::nullopt;
    }

    auto Vocabulary::has_symbol(const std::string & symbol) const -> bool
    {
        return find_relation(symbol) || find_function(symbol);
    }

    auto Vocabulary::has_constants() const -> bool
    {
        return std::any_of(functions_.begin(), functions_.end(), [] (const SymbolDecl & d) { return d.arity == 0; });
    }

    auto Vocabulary::same_signature(const Vocabulary & other) const -> bool
    {
        return relations_ == other.relations_ && functions_ == other.functions_;
    }

    auto Vocabulary::contains_signature(const Vocabulary & sub) const -> bool
    {
        for (auto & r : sub.relations()) {
            auto i = find_relation(r.name);
            if (! i || relations_[*i].arity != r.arity)
                return false;
        }
        for (auto & f : sub.functions()) {
            auto i = find_function(f.name);
            if (! i || functions_[*i].arity != f.arity)
                return false;
        }
        return true;
    }

    auto make_vocabulary(std::string name, std::vector<SymbolDecl> relations, std::vector<SymbolDecl> functions)
        -> VocabularyPtr
    {
        return std::make_shared<const Vocabulary>(std::move(name), std::move(relations), std::move(functions));
    }
}
