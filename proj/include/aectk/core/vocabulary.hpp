#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    struct SymbolDecl
    {
        std::string name;
        int arity = 0;

        friend auto operator==(const SymbolDecl &, const SymbolDecl &) -> bool = default;
    };

    /// A finitary one-sorted signature: relation symbols and function symbols (arity 0 = constant).
    class Vocabulary
    {
    public:
        Vocabulary(std::string name, std::vector<SymbolDecl> relations, std::vector<SymbolDecl> functions);

        auto name() const -> const std::string & { return name_; }
        auto relations() const -> const std::vector<SymbolDecl> & { return relations_; }
        auto functions() const -> const std::vector<SymbolDecl> & { return functions_; }

        auto find_relation(const std::string & symbol) const -> std::optional<std::size_t>;
        auto find_function(const std::string & symbol) const -> std::optional<std::size_t>;
        auto has_symbol(const std::string & symbol) const -> bool;

        auto has_constants() const -> bool;

        /// Same symbols with the same arities in the same order; the name is not compared.
        auto same_signature(const Vocabulary & other) const -> bool;

        /// True when every symbol of `sub` appears here with the same arity and kind.
        auto contains_signature(const Vocabulary & sub) const -> bool;

    private:
        std::string name_;
        std::vector<SymbolDecl> relations_;
        std::vector<SymbolDecl> functions_;
    };

    using VocabularyPtr = std::shared_ptr<const Vocabulary>;

    auto make_vocabulary(std::string name, std::vector<SymbolDecl> relations, std::vector<SymbolDecl> functions)
        -> VocabularyPtr;
}
