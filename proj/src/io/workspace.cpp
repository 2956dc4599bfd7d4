#include <aectk/io/workspace.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace aectk
{
    ParseError::ParseError(SourcePosition where, const std::string & message)
        : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message)
        , where_(where)
        , message_(message)
    {
    }

    namespace
    {
        enum class Tok
        {
            ident,
            number,
            punct,
            arrow,
            end
        };

        struct Token
        {
            Tok kind = Tok::end;
            std::string text;
            SourcePosition where;
        };

        auto ident_char(char c) -> bool
        {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
        }

        auto lex(const std::string & text) -> std::vector<Token>
        {
            std::vector<Token> out;
            SourcePosition at;
            std::size_t i = 0;
            auto advance = [&](std::size_t k) {
                for (; k > 0; --k, ++i) {
                    if (text[i] == '\n') {
                        ++at.line;
                        at.column = 1;
                    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                        ++at.column;
                    }
                }
            };
            while (i < text.size()) {
                char c = text[i];
                if (std::isspace(static_cast<unsigned char>(c))) {
                    advance(1);
                    continue;
                }
                if (c == '#') {
                    while (i < text.size() && text[i] != '\n')
                        advance(1);
                    continue;
                }
                Token t{Tok::end, "", at};
                if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
                    t.kind = Tok::arrow;
                    t.text = "->";
                    advance(2);
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    std::size_t j = i;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                        ++j;
                    if (j < text.size() && ident_char(text[j]) && text[j] != '-') {
                        while (j < text.size() && ident_char(text[j]) && ! (text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>'))
                            ++j;
                        t.kind = Tok::ident;
                    } else {
                        t.kind = Tok::number;
                    }
                    t.text = text.substr(i, j - i);
                    advance(j - i);
                } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    std::size_t j = i;
                    while (j < text.size() && ident_char(text[j]) && ! (text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>'))
                        ++j;
                    t.kind = Tok::ident;
                    t.text = text.substr(i, j - i);
                    advance(j - i);
                } else if (std::string("{}()[],;:/").find(c) != std::string::npos) {
                    t.kind = Tok::punct;
                    t.text = std::string(1, c);
                    advance(1);
                } else {
                    throw ParseError(at, std::string("unexpected character '") + c + "'");
                }
                out.push_back(std::move(t));
            }
            out.push_back({Tok::end, "", at});
            return out;
        }

        auto describe(const Token & t) -> std::string
        {
            return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        }

        auto render_tuple(const Tuple & t) -> std::string
        {
            std::string out = "(";
            for (std::size_t i = 0; i < t.size(); ++i)
                out += (i ? "," : "") + std::to_string(t[i]);
            return out + ")";
        }

        class Parser
        {
        public:
            explicit Parser(const std::string & text)
                : tokens_(lex(text))
            {
            }

            auto run() -> Workspace
            {
                while (peek().kind != Tok::end) {
                    auto kw = expect_ident("'vocab', 'structure' or 'class'");
                    if (kw.text == "vocab")
                        vocab();
                    else if (kw.text == "structure")
                        structure(kw.where);
                    else if (kw.text == "class")
                        klass(kw.where);
                    else
                        throw ParseError(kw.where, "expected 'vocab', 'structure' or 'class', found " + describe(kw));
                }
                return std::move(ws_);
            }

        private:
            std::vector<Token> tokens_;
            std::size_t pos_ = 0;
            Workspace ws_;
            std::set<std::string> names_[3];

            auto peek() const -> const Token & { return tokens_[pos_]; }
            auto next() -> const Token & { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

            auto is(const char * punct) const -> bool
            {
                return peek().kind == Tok::punct && peek().text == punct;
            }

            auto accept(const char * punct) -> bool
            {
                if (! is(punct))
                    return false;
                next();
                return true;
            }

            void expect(const char * punct)
            {
                if (! accept(punct))
                    throw ParseError(peek().where, std::string("expected '") + punct + "', found " + describe(peek()));
            }

            auto expect_ident(const std::string & what) -> Token
            {
                if (peek().kind != Tok::ident)
                    throw ParseError(peek().where, "expected " + what + ", found " + describe(peek()));
                return next();
            }

            auto expect_number(const std::string & what) -> std::pair<int, SourcePosition>
            {
                if (peek().kind != Tok::number)
                    throw ParseError(peek().where, "expected " + what + ", found " + describe(peek()));
                const auto & t = next();
                if (t.text.size() > 6)
                    throw ParseError(t.where, "number too large: " + t.text);
                return {std::stoi(t.text), t.where};
            }

            void declare(int kind, const Token & name)
            {
                static const char * kinds[] = {"vocabulary", "structure", "class"};
                if (! names_[kind].insert(name.text).second)
                    throw ParseError(name.where, std::string("duplicate ") + kinds[kind] + " '" + name.text + "'");
            }

            auto vocabulary_ref() -> VocabularyPtr
            {
                auto name = expect_ident("a vocabulary name");
                auto v = ws_.find_vocabulary(name.text);
                if (! v)
                    throw ParseError(name.where, "unknown vocabulary '" + name.text + "'");
                return v;
            }

            auto structure_ref() -> std::string
            {
                auto name = expect_ident("a structure name");
                if (! ws_.find_structure(name.text))
                    throw ParseError(name.where, "unknown structure '" + name.text + "'");
                return name.text;
            }

            void vocab()
            {
                auto name = expect_ident("a vocabulary name");
                declare(0, name);
                expect("{");
                std::vector<SymbolDecl> rels;
                std::vector<SymbolDecl> funs;
                std::set<std::string> seen;
                while (! accept("}")) {
                    auto kw = expect_ident("'rel' or 'fun'");
                    if (kw.text != "rel" && kw.text != "fun")
                        throw ParseError(kw.where, "expected 'rel' or 'fun', found " + describe(kw));
                    do {
                        auto sym = expect_ident("a symbol");
                        expect("/");
                        auto [arity, where] = expect_number("an arity");
                        if (! seen.insert(sym.text).second)
                            throw ParseError(sym.where, "duplicate symbol '" + sym.text + "'");
                        (kw.text == "rel" ? rels : funs).push_back({sym.text, arity});
                    } while (peek().kind == Tok::ident && peek().text != "rel" && peek().text != "fun");
                    accept(";");
                }
                ws_.vocabularies.push_back(make_vocabulary(name.text, rels, funs));
            }

            auto tuple(int arity, int universe) -> Tuple
            {
                auto open = peek().where;
                expect("(");
                Tuple t;
                if (! is(")")) {
                    do {
                        auto [e, where] = expect_number("an element");
                        if (e >= universe)
                            throw ParseError(where, "element " + std::to_string(e) + " outside universe of size "
                                                        + std::to_string(universe));
                        t.push_back(e);
                    } while (accept(","));
                }
                expect(")");
                if (static_cast<int>(t.size()) != arity)
                    throw ParseError(open, "tuple " + render_tuple(t) + " has length " + std::to_string(t.size())
                                               + ", expected " + std::to_string(arity));
                return t;
            }

            void structure(SourcePosition where)
            {
                auto name = expect_ident("a structure name");
                declare(1, name);
                expect(":");
                auto v = vocabulary_ref();
                expect("{");
                auto kw = expect_ident("'universe'");
                if (kw.text != "universe")
                    throw ParseError(kw.where, "expected 'universe', found " + describe(kw));
                auto [n, nwhere] = expect_number("a universe size");
                accept(";");
                if (n > 64)
                    throw ParseError(nwhere, "universe size above 64");
                std::optional<Structure> m;
                try {
                    m.emplace(v, n);
                } catch (const Error & e) {
                    throw ParseError(nwhere, e.what());
                }
                std::vector<std::vector<bool>> defined(v->functions().size());
                for (std::size_t f = 0; f < v->functions().size(); ++f)
                    defined[f].assign(table_size(n, v->functions()[f].arity), false);
                while (! is("}")) {
                    auto kw2 = expect_ident("'rel' or 'fun'");
                    auto sym = expect_ident("a symbol");
                    expect(":");
                    if (kw2.text == "rel") {
                        auto r = v->find_relation(sym.text);
                        if (! r)
                            throw ParseError(sym.where, "'" + sym.text + "' is not a relation of " + v->name());
                        while (is("("))
                            m->set_relation(*r, tuple(v->relations()[*r].arity, n), true);
                    } else if (kw2.text == "fun") {
                        auto f = v->find_function(sym.text);
                        if (! f)
                            throw ParseError(sym.where, "'" + sym.text + "' is not a function of " + v->name());
                        while (is("(")) {
                            auto at = peek().where;
                            auto t = tuple(v->functions()[*f].arity, n);
                            if (peek().kind != Tok::arrow)
                                throw ParseError(peek().where, "expected '->', found " + describe(peek()));
                            next();
                            auto [value, vwhere] = expect_number("a value");
                            if (value >= n)
                                throw ParseError(vwhere, "element " + std::to_string(value) + " outside universe of size "
                                                             + std::to_string(n));
                            auto idx = tuple_index(t, n);
                            if (defined[*f][idx])
                                throw ParseError(at, "'" + sym.text + "' defined twice at " + render_tuple(t));
                            defined[*f][idx] = true;
                            m->set_function(*f, t, value);
                        }
                    } else {
                        throw ParseError(kw2.where, "expected 'rel' or 'fun', found " + describe(kw2));
                    }
                    accept(";");
                }
                auto close = peek().where;
                expect("}");
                for (std::size_t f = 0; f < defined.size(); ++f)
                    for (std::size_t i = 0; i < defined[f].size(); ++i)
                        if (! defined[f][i])
                            throw ParseError(close, "function '" + v->functions()[f].name + "' of structure '"
                                                        + name.text + "' is undefined at "
                                                        + render_tuple(decode_tuple(i, v->functions()[f].arity, n)));
                ws_.structures.push_back({name.text, std::move(*m), where});
            }

            void klass(SourcePosition where)
            {
                auto name = expect_ident("a class name");
                declare(2, name);
                expect(":");
                auto v = vocabulary_ref();
                ClassDecl c;
                c.name = name.text;
                c.vocab = v->name();
                c.where = where;
                expect("{");
                auto check_vocab = [&](const Token & t) {
                    if (ws_.find_structure(t.text)->vocabulary_ptr() != v)
                        throw ParseError(t.where, "structure '" + t.text + "' is not over " + v->name());
                };
                auto names = [&](std::vector<std::string> & into) {
                    while (peek().kind == Tok::ident) {
                        auto t = peek();
                        into.push_back(structure_ref());
                        check_vocab(t);
                    }
                };
                while (! accept("}")) {
                    auto kw = expect_ident("a class clause");
                    if (kw.text == "kind") {
                        auto k = expect_ident("'explicit' or 'forbid'");
                        if (k.text == "explicit")
                            c.kind = Presentation::explicit_list;
                        else if (k.text == "forbid")
                            c.kind = Presentation::forbid;
                        else
                            throw ParseError(k.where, "expected 'explicit' or 'forbid', found " + describe(k));
                    } else if (kw.text == "members") {
                        names(c.members);
                    } else if (kw.text == "forbidden") {
                        names(c.forbidden);
                    } else if (kw.text == "order") {
                        auto k = expect_ident("'substructure' or 'pairs'");
                        if (k.text == "substructure") {
                            c.order = OrderKind::substructure;
                        } else if (k.text == "pairs") {
                            c.order = OrderKind::explicit_pairs;
                            while (accept("(")) {
                                PairDecl p;
                                auto lt = peek();
                                p.lower = structure_ref();
                                check_vocab(lt);
                                expect(",");
                                auto ut = peek();
                                p.upper = structure_ref();
                                check_vocab(ut);
                                expect(",");
                                auto mwhere = peek().where;
                                expect("[");
                                std::map<int, int> entries;
                                if (! is("]")) {
                                    do {
                                        auto [from, fw] = expect_number("an element");
                                        if (peek().kind != Tok::arrow)
                                            throw ParseError(peek().where, "expected '->', found " + describe(peek()));
                                        next();
                                        auto [to, tw] = expect_number("an element");
                                        if (! entries.emplace(from, to).second)
                                            throw ParseError(fw, "element " + std::to_string(from) + " mapped twice");
                                    } while (accept(","));
                                }
                                expect("]");
                                expect(")");
                                int lower_size = ws_.find_structure(p.lower)->size();
                                int upper_size = ws_.find_structure(p.upper)->size();
                                for (int i = 0; i < lower_size; ++i) {
                                    auto it = entries.find(i);
                                    if (it == entries.end())
                                        throw ParseError(mwhere, "inclusion misses element " + std::to_string(i));
                                    if (it->second >= upper_size)
                                        throw ParseError(mwhere, "inclusion sends " + std::to_string(i)
                                                                     + " outside '" + p.upper + "'");
                                    p.inclusion.push_back(it->second);
                                }
                                if (static_cast<int>(entries.size()) != lower_size)
                                    throw ParseError(mwhere, "inclusion has elements outside '" + p.lower + "'");
                                c.pairs.push_back(std::move(p));
                            }
                        } else {
                            throw ParseError(k.where, "expected 'substructure' or 'pairs', found " + describe(k));
                        }
                    } else if (kw.text == "scale") {
                        auto [s, swhere] = expect_number("a scale");
                        if (s > 12)
                            throw ParseError(swhere, "scale above 12");
                        c.scale = s;
                    } else {
                        throw ParseError(kw.where, "unknown class clause " + describe(kw));
                    }
                    accept(";");
                }
                if (c.kind == Presentation::forbid && ! c.members.empty())
                    throw ParseError(where, "forbid class '" + c.name + "' lists members");
                if (c.kind == Presentation::explicit_list && ! c.forbidden.empty())
                    throw ParseError(where, "explicit class '" + c.name + "' lists forbidden structures");
                ws_.classes.push_back(std::move(c));
                try {
                    ws_.build_class(name.text);
                } catch (const Error & e) {
                    throw ParseError(where, e.what());
                }
            }
        };
    }

    auto Workspace::find_vocabulary(const std::string & name) const -> VocabularyPtr
    {
        for (const auto & v : vocabularies)
            if (v->name() == name)
                return v;
        return nullptr;
    }

    auto Workspace::find_structure(const std::string & name) const -> const Structure *
    {
        for (const auto & s : structures)
            if (s.name == name)
                return &s.structure;
        return nullptr;
    }

    auto Workspace::find_class(const std::string & name) const -> const ClassDecl *
    {
        for (const auto & c : classes)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    auto Workspace::build_class(const std::string & name) const -> StructureClass
    {
        const auto * decl = find_class(name);
        if (! decl)
            throw PreconditionFailed("unknown class '" + name + "'");
        ClassDefinition d;
        d.name = decl->name;
        d.vocab = find_vocabulary(decl->vocab);
        d.presentation = decl->kind;
        for (const auto & m : decl->members)
            d.members.push_back(*find_structure(m));
        for (const auto & f : decl->forbidden)
            d.forbidden.push_back(DiagramType::of(*find_structure(f)));
        d.order = decl->order;
        for (const auto & p : decl->pairs)
            d.pairs.push_back({*find_structure(p.lower), *find_structure(p.upper), p.inclusion});
        d.scale = decl->scale;
        return StructureClass{std::move(d)};
    }

    auto Workspace::name_of(const Structure & m) const -> std::optional<std::string>
    {
        for (const auto & s : structures)
            if (s.structure.vocabulary_ptr() == m.vocabulary_ptr() && s.structure == m)
                return s.name;
        return std::nullopt;
    }

    auto operator==(const Workspace & a, const Workspace & b) -> bool
    {
        if (a.vocabularies.size() != b.vocabularies.size() || a.structures.size() != b.structures.size()
            || a.classes.size() != b.classes.size())
            return false;
        for (std::size_t i = 0; i < a.vocabularies.size(); ++i)
            if (a.vocabularies[i]->name() != b.vocabularies[i]->name()
                || ! a.vocabularies[i]->same_signature(*b.vocabularies[i]))
                return false;
        for (std::size_t i = 0; i < a.structures.size(); ++i) {
            const auto & x = a.structures[i];
            const auto & y = b.structures[i];
            if (x.name != y.name || x.structure.vocabulary().name() != y.structure.vocabulary().name()
                || x.structure.size() != y.structure.size())
                return false;
            for (std::size_t r = 0; r < x.structure.vocabulary().relations().size(); ++r)
                if (x.structure.relation_table(r) != y.structure.relation_table(r))
                    return false;
            for (std::size_t f = 0; f < x.structure.vocabulary().functions().size(); ++f)
                if (x.structure.function_table(f) != y.structure.function_table(f))
                    return false;
        }
        for (std::size_t i = 0; i < a.classes.size(); ++i) {
            const auto & x = a.classes[i];
            const auto & y = b.classes[i];
            if (x.name != y.name || x.vocab != y.vocab || x.kind != y.kind || x.members != y.members
                || x.forbidden != y.forbidden || x.order != y.order || x.scale != y.scale
                || x.pairs.size() != y.pairs.size())
                return false;
            for (std::size_t p = 0; p < x.pairs.size(); ++p)
                if (x.pairs[p].lower != y.pairs[p].lower || x.pairs[p].upper != y.pairs[p].upper
                    || x.pairs[p].inclusion != y.pairs[p].inclusion)
                    return false;
        }
        return true;
    }

    auto parse_workspace(const std::string & text) -> Workspace
    {
        return Parser(text).run();
    }

    auto print_vocabulary(const Vocabulary & v) -> std::string
    {
        std::string out = "vocab " + v.name() + " {\n";
        for (const auto & r : v.relations())
            out += "    rel " + r.name + "/" + std::to_string(r.arity) + ";\n";
        for (const auto & f : v.functions())
            out += "    fun " + f.name + "/" + std::to_string(f.arity) + ";\n";
        return out + "}\n";
    }

    auto print_class(const ClassDecl & c) -> std::string
    {
        std::string out = "class " + c.name + " : " + c.vocab + " {\n";
        out += std::string("    kind ") + (c.kind == Presentation::forbid ? "forbid" : "explicit") + ";\n";
        auto list = [&](const char * kw, const std::vector<std::string> & names) {
            if (names.empty())
                return;
            out += std::string("    ") + kw;
            for (const auto & n : names)
                out += " " + n;
            out += ";\n";
        };
        list("members", c.members);
        list("forbidden", c.forbidden);
        if (c.order == OrderKind::substructure) {
            out += "    order substructure;\n";
        } else {
            out += "    order pairs";
            for (const auto & p : c.pairs)
                out += "\n        (" + p.lower + "," + p.upper + ",[" + print_element_map(p.inclusion) + "])";
            out += ";\n";
        }
        out += "    scale " + std::to_string(c.scale) + ";\n";
        return out + "}\n";
    }

    auto print_workspace(const Workspace & ws) -> std::string
    {
        std::string out;
        for (const auto & v : ws.vocabularies)
            out += print_vocabulary(*v) + "\n";
        for (const auto & s : ws.structures)
            out += to_dsl(s.structure, s.name) + "\n";
        for (const auto & c : ws.classes)
            out += print_class(c) + "\n";
        if (! out.empty())
            out.pop_back();
        return out;
    }

    auto parse_element_map(const std::string & text) -> ElementMap
    {
        std::map<int, int> entries;
        std::size_t i = 0;
        auto number = [&]() {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j == i || j - i > 6)
                throw InvariantViolation("malformed map '" + text + "' at offset " + std::to_string(i));
            int v = std::stoi(text.substr(i, j - i));
            i = j;
            return v;
        };
        while (i < text.size()) {
            int from = number();
            if (text.compare(i, 2, "->") != 0)
                throw InvariantViolation("malformed map '" + text + "': expected '->' at offset " + std::to_string(i));
            i += 2;
            int to = number();
            if (! entries.emplace(from, to).second)
                throw InvariantViolation("map '" + text + "' sends " + std::to_string(from) + " twice");
            if (i < text.size()) {
                if (text[i] != ',')
                    throw InvariantViolation("malformed map '" + text + "': expected ',' at offset " + std::to_string(i));
                ++i;
                if (i == text.size())
                    throw InvariantViolation("malformed map '" + text + "': trailing ','");
            }
        }
        ElementMap out;
        for (auto [from, to] : entries) {
            if (from != static_cast<int>(out.size()))
                throw InvariantViolation("map '" + text + "' misses element " + std::to_string(out.size()));
            out.push_back(to);
        }
        return out;
    }

    auto print_element_map(const ElementMap & f) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < f.size(); ++i)
            out += (i ? "," : "") + std::to_string(i) + "->" + std::to_string(f[i]);
        return out;
    }
}
