#include <aectk/tarski/theory.hpp>

#include <aectk/core/error.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace aectk
{
    namespace
    {
        constexpr std::string_view forall = "∀";
        constexpr std::string_view neg = "¬";
        constexpr std::string_view conj = "∧";
        constexpr std::string_view neq = "≠";
        constexpr std::string_view top = "⊤";

        auto var(int i) -> Term
        {
            Term t;
            t.variable = i;
            return t;
        }

        auto vars(const Tuple & tuple) -> std::vector<Term>
        {
            std::vector<Term> out;
            for (auto e : tuple)
                out.push_back(var(e));
            return out;
        }

        auto render_term(const Term & t) -> std::string
        {
            if (t.symbol.empty())
                return "x" + std::to_string(t.variable);
            if (t.args.empty())
                return t.symbol;
            std::string s = t.symbol + "(";
            for (std::size_t i = 0; i < t.args.size(); ++i)
                s += (i ? "," : "") + render_term(t.args[i]);
            return s + ")";
        }

        auto render_literal(const Literal & l) -> std::string
        {
            if (l.kind == Literal::Kind::equality)
                return render_term(l.args[0]) + std::string(l.negated ? neq : "=") + render_term(l.args[1]);
            std::string s = l.negated ? std::string(neg) : "";
            s += l.symbol + "(";
            for (std::size_t i = 0; i < l.args.size(); ++i)
                s += (i ? "," : "") + render_term(l.args[i]);
            return s + ")";
        }
    }

    auto theory_of(const ForbiddenBasis & basis) -> UniversalTheory
    {
        UniversalTheory t;
        t.certified_scale = basis.scale;
        for (const auto & d : basis.gamma) {
            const auto & m = d.shape();
            const auto & v = m.vocabulary();
            int n = m.size();
            // variable i stands for point[i]; relabel so that the diagram is written over positions
            ElementMap position(n, 0);
            for (int i = 0; i < static_cast<int>(d.point().size()); ++i)
                position[d.point()[i]] = i;
            auto at = [&](const Tuple & tuple) {
                Tuple out;
                for (auto e : tuple)
                    out.push_back(d.point()[e]);
                return out;
            };

            Sentence s;
            s.variables = n;
            for (std::size_t r = 0; r < v.relations().size(); ++r)
                for_each_tuple(n, v.relations()[r].arity, [&](const Tuple & tuple) {
                    Literal l;
                    l.symbol = v.relations()[r].name;
                    l.negated = ! m.holds(r, at(tuple));
                    l.args = vars(tuple);
                    s.conjuncts.push_back(std::move(l));
                });
            for (std::size_t f = 0; f < v.functions().size(); ++f)
                for_each_tuple(n, v.functions()[f].arity, [&](const Tuple & tuple) {
                    Literal l;
                    l.kind = Literal::Kind::equality;
                    Term lhs;
                    lhs.symbol = v.functions()[f].name;
                    lhs.args = vars(tuple);
                    l.args = {lhs, var(position[m.apply(f, at(tuple))])};
                    s.conjuncts.push_back(std::move(l));
                });
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Literal l;
                    l.kind = Literal::Kind::equality;
                    l.negated = true;
                    l.args = {var(i), var(j)};
                    s.conjuncts.push_back(std::move(l));
                }
            t.sentences.push_back(std::move(s));
        }
        return t;
    }

    auto render_sentence(const Sentence & s) -> std::string
    {
        std::string out;
        if (s.variables > 0) {
            out += forall;
            for (int i = 0; i < s.variables; ++i)
                out += (i ? " x" : "x") + std::to_string(i);
            out += " ";
        }
        out += neg;
        out += "(";
        if (s.conjuncts.empty())
            out += top;
        for (std::size_t i = 0; i < s.conjuncts.size(); ++i) {
            if (i)
                out += " " + std::string(conj) + " ";
            out += render_literal(s.conjuncts[i]);
        }
        return out + ")";
    }

    auto render_theory(const UniversalTheory & t) -> std::string
    {
        std::string out = "# certified-scale: " + std::to_string(t.certified_scale) + "\n";
        for (const auto & s : t.sentences)
            out += render_sentence(s) + "\n";
        return out;
    }

    auto emit_universal_theory(const ForbiddenBasis & basis) -> std::string
    {
        return render_theory(theory_of(basis));
    }

    namespace
    {
        class SentenceParser
        {
        public:
            SentenceParser(std::string_view text, const Vocabulary & vocab, int line) : text_(text), vocab_(vocab), line_(line) {}

            auto parse() -> Sentence
            {
                Sentence s;
                skip();
                if (eat(forall)) {
                    while (true) {
                        skip();
                        if (peek(neg))
                            break;
                        auto name = identifier();
                        if (bound_.contains(name))
                            fail("variable bound twice: " + name);
                        bound_.emplace(name, s.variables++);
                    }
                }
                expect(neg);
                expect("(");
                skip();
                if (! eat(top)) {
                    s.conjuncts.push_back(literal());
                    while (eat_ws(conj))
                        s.conjuncts.push_back(literal());
                }
                expect(")");
                skip();
                if (pos_ != text_.size())
                    fail("trailing input");
                return s;
            }

        private:
            [[noreturn]] void fail(const std::string & what) const
            {
                throw InvariantViolation("theory line " + std::to_string(line_) + ": " + what);
            }

            void skip()
            {
                while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }

            auto peek(std::string_view s) const -> bool { return text_.substr(pos_, s.size()) == s; }

            auto eat(std::string_view s) -> bool
            {
                if (! peek(s))
                    return false;
                pos_ += s.size();
                return true;
            }

            auto eat_ws(std::string_view s) -> bool
            {
                skip();
                return eat(s);
            }

            void expect(std::string_view s)
            {
                if (! eat_ws(s))
                    fail("expected '" + std::string(s) + "'");
            }

            auto identifier() -> std::string
            {
                skip();
                auto start = pos_;
                while (pos_ < text_.size()) {
                    auto ch = static_cast<unsigned char>(text_[pos_]);
                    if (std::isalnum(ch) || ch == '_' || ch == '-')
                        ++pos_;
                    else
                        break;
                }
                if (start == pos_)
                    fail("expected an identifier");
                return std::string(text_.substr(start, pos_ - start));
            }

            auto term() -> Term
            {
                auto name = identifier();
                if (auto it = bound_.find(name); it != bound_.end())
                    return var(it->second);
                auto f = vocab_.find_function(name);
                if (! f)
                    fail("unknown function or variable " + name);
                Term t;
                t.symbol = name;
                int arity = vocab_.functions()[*f].arity;
                if (arity > 0) {
                    t.args = arguments();
                    if (static_cast<int>(t.args.size()) != arity)
                        fail("wrong number of arguments to " + name);
                }
                return t;
            }

            auto arguments() -> std::vector<Term>
            {
                std::vector<Term> args;
                expect("(");
                skip();
                if (eat(")"))
                    return args;
                args.push_back(term());
                while (eat_ws(","))
                    args.push_back(term());
                expect(")");
                return args;
            }

            auto literal() -> Literal
            {
                Literal l;
                l.negated = eat_ws(neg);
                skip();
                auto save = pos_;
                auto name = identifier();
                if (auto r = vocab_.find_relation(name); r && ! bound_.contains(name)) {
                    l.symbol = name;
                    l.args = arguments();
                    if (static_cast<int>(l.args.size()) != vocab_.relations()[*r].arity)
                        fail("wrong number of arguments to " + name);
                    return l;
                }
                if (l.negated)
                    fail("negation applies only to relation atoms");
                pos_ = save;
                l.kind = Literal::Kind::equality;
                auto lhs = term();
                if (eat_ws(neq))
                    l.negated = true;
                else if (! eat_ws("="))
                    fail("expected '=' or '≠'");
                l.args = {lhs, term()};
                return l;
            }

            std::string_view text_;
            const Vocabulary & vocab_;
            int line_;
            std::size_t pos_ = 0;
            std::map<std::string, int> bound_;
        };

        auto evaluate(const Structure & m, const Term & t, const Tuple & assignment) -> Element
        {
            if (t.symbol.empty())
                return assignment[t.variable];
            Tuple args;
            for (const auto & a : t.args)
                args.push_back(evaluate(m, a, assignment));
            return m.apply(*m.vocabulary().find_function(t.symbol), args);
        }

        auto holds(const Structure & m, const Literal & l, const Tuple & assignment) -> bool
        {
            bool value = false;
            if (l.kind == Literal::Kind::equality) {
                value = evaluate(m, l.args[0], assignment) == evaluate(m, l.args[1], assignment);
            }
            else {
                Tuple args;
                for (const auto & a : l.args)
                    args.push_back(evaluate(m, a, assignment));
                value = m.holds(*m.vocabulary().find_relation(l.symbol), args);
            }
            return value != l.negated;
        }
    }

    auto parse_theory(const std::string & text, const Vocabulary & vocab) -> UniversalTheory
    {
        UniversalTheory t;
        bool header = false;
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            if (line.starts_with("#")) {
                constexpr std::string_view key = "# certified-scale:";
                if (line.starts_with(key)) {
                    try {
                        t.certified_scale = std::stoi(line.substr(key.size()));
                    }
                    catch (const std::exception &) {
                        throw InvariantViolation("theory line " + std::to_string(number) + ": bad certified scale");
                    }
                    header = true;
                }
                continue;
            }
            t.sentences.push_back(SentenceParser(line, vocab, number).parse());
        }
        if (! header)
            throw InvariantViolation("theory has no certified-scale header");
        return t;
    }

    auto satisfies(const Structure & m, const Sentence & s) -> bool
    {
        bool ok = true;
        for_each_tuple(m.size(), s.variables, [&](const Tuple & assignment) {
            if (! ok)
                return;
            bool all = true;
            for (const auto & l : s.conjuncts)
                if (! holds(m, l, assignment)) {
                    all = false;
                    break;
                }
            if (all)
                ok = false;
        });
        return ok;
    }

    auto satisfies(const Structure & m, const UniversalTheory & t) -> bool
    {
        for (const auto & s : t.sentences)
            if (! satisfies(m, s))
                return false;
        return true;
    }
}
