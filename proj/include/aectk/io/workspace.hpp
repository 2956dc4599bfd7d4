#pragma once

#include <aectk/classes/structure_class.hpp>
#include <aectk/core/error.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    struct SourcePosition
    {
        int line = 1;
        int column = 1;
    };

    /// First problem found in a workspace file. what() reads `line:column: message`.
    class ParseError : public Error
    {
    public:
        ParseError(SourcePosition where, const std::string & message);

        auto where() const -> SourcePosition { return where_; }
        auto message() const -> const std::string & { return message_; }

    private:
        SourcePosition where_;
        std::string message_;
    };

    struct NamedStructure
    {
        std::string name;
        Structure structure;
        SourcePosition where;
    };

    struct PairDecl
    {
        std::string lower;
        std::string upper;
        ElementMap inclusion;
    };

    /// A class as written: member and forbidden structures by name, so printing gives the source back.
    struct ClassDecl
    {
        std::string name;
        std::string vocab;
        Presentation kind = Presentation::explicit_list;
        std::vector<std::string> members;
        std::vector<std::string> forbidden;
        OrderKind order = OrderKind::substructure;
        std::vector<PairDecl> pairs;
        int scale = 4;
        SourcePosition where;
    };

    class Workspace
    {
    public:
        std::vector<VocabularyPtr> vocabularies;
        std::vector<NamedStructure> structures;
        std::vector<ClassDecl> classes;

        auto find_vocabulary(const std::string & name) const -> VocabularyPtr;
        auto find_structure(const std::string & name) const -> const Structure *;
        auto find_class(const std::string & name) const -> const ClassDecl *;
        /// Builds the class; throws PreconditionFailed for unknown names.
        auto build_class(const std::string & name) const -> StructureClass;
        /// Name of the first declared structure equal to `m` (same labelling), if any.
        auto name_of(const Structure & m) const -> std::optional<std::string>;
    };

    auto operator==(const Workspace & a, const Workspace & b) -> bool;

    auto parse_workspace(const std::string & text) -> Workspace;
    auto print_workspace(const Workspace & ws) -> std::string;

    auto print_vocabulary(const Vocabulary & v) -> std::string;
    auto print_class(const ClassDecl & c) -> std::string;

    /// `0->1,1->2`: source element i goes to the value after `i->`; every source element exactly once.
    auto parse_element_map(const std::string & text) -> ElementMap;
    auto print_element_map(const ElementMap & f) -> std::string;
}
