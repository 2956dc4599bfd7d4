#include <doctest.h>

#include <aectk/io/commands.hpp>

#include "support/golden_cases.hpp"

#include <set>

using namespace aectk;

namespace
{
    auto corpus() -> const Workspace &
    {
        static const Workspace ws = parse_workspace(golden::read_file(golden::data_dir() + "/corpus/corpus.aec"));
        return ws;
    }

    auto error_of(const std::string & text) -> ParseError
    {
        try {
            parse_workspace(text);
        } catch (const ParseError & e) {
            return e;
        }
        FAIL("no parse error for: " << text);
        return ParseError({}, "");
    }
}

TEST_CASE("minimal workspace")
{
    auto ws = parse_workspace("vocab g { rel E/2; }\nstructure k2 : g { universe 2; rel E: (0,1) (1,0); }\n");
    CHECK(ws.vocabularies.size() == 1);
    CHECK(ws.structures.size() == 1);
    CHECK(ws.classes.empty());
    const auto * k2 = ws.find_structure("k2");
    REQUIRE(k2);
    CHECK(k2->holds(0, Tuple{0, 1}));
    CHECK_FALSE(k2->holds(0, Tuple{0, 0}));
}

TEST_CASE("diagnostics carry positions")
{
    auto missing = error_of("vocab m { fun s/1; }\nstructure a : m {\n  universe 2;\n  fun s: (0)->1;\n}\n");
    CHECK(missing.where().line == 5);
    CHECK(missing.message().find("undefined at (1)") != std::string::npos);

    auto unknown = error_of("vocab g { rel E/2; }\nclass c : g {\n  kind forbid;\n  forbidden K3;\n}\n");
    CHECK(unknown.where().line == 4);
    CHECK(unknown.where().column == 13);
    CHECK(unknown.message() == "unknown structure 'K3'");

    auto range = error_of("vocab g { rel E/2; }\nstructure a : g { universe 2; rel E: (0,2); }");
    CHECK(range.where().line == 2);
    CHECK(range.where().column == 41);

    CHECK(error_of("vocab g { rel E/2; }\nvocab g { }").message() == "duplicate vocabulary 'g'");
    CHECK(error_of("vocab g { rel E/2 }\nstructure a : g { universe 1; rel E: (0); }").message()
          == "tuple (0) has length 1, expected 2");
    CHECK(error_of("vocab g { rel E/2; } $").message() == "unexpected character '$'");
    CHECK(error_of("vocab m { fun s/1; }\nstructure a : m { universe 1; fun s: (0)->0 (0)->0; }").message()
          == "'s' defined twice at (0)");
    CHECK(error_of("vocab o { rel lt/2; }\nstructure a : o { universe 1; }\nstructure b : o { universe 2; }\n"
                   "class c : o { kind explicit; members a b; order pairs (a,b,[0->2]); }")
              .message()
          == "inclusion sends 0 outside 'b'");
    CHECK_THROWS_WITH_AS(parse_workspace("structure a : nope { universe 1; }"), "1:15: unknown vocabulary 'nope'",
                         ParseError);
}

TEST_CASE("print and parse round trip")
{
    const auto & ws = corpus();
    CHECK(ws.classes.size() == 11);
    auto printed = print_workspace(ws);
    auto again = parse_workspace(printed);
    CHECK(again == ws);
    CHECK(print_workspace(again) == printed);

    auto changed = parse_workspace(printed);
    changed.classes.back().scale = 5;
    CHECK_FALSE(changed == ws);
}

TEST_CASE("element maps")
{
    CHECK(parse_element_map("0->1,1->2") == ElementMap{1, 2});
    CHECK(parse_element_map("1->0,0->3") == ElementMap{3, 0});
    CHECK(parse_element_map("").empty());
    CHECK_THROWS_AS(parse_element_map("0->1,0->2"), InvariantViolation);
    CHECK_THROWS_AS(parse_element_map("1->1"), InvariantViolation);
    CHECK_THROWS_AS(parse_element_map("0-1"), InvariantViolation);
    CHECK_THROWS_AS(parse_element_map("0->1,"), InvariantViolation);
    CHECK(print_element_map(ElementMap{1, 2}) == "0->1,1->2");
}

TEST_CASE("trailer")
{
    Report r{"tarski --class x", {"body"}, false, {{"set", "{0,1}"}, {"note", "a=b c"}}, 3};
    auto t = parse_trailer(r.render());
    CHECK_FALSE(t.pass);
    CHECK(t.witness == r.witness);
    CHECK(t.scale == 3);
    CHECK_THROWS_AS(parse_trailer("# x\n@@verdict pass\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_trailer("@@scale 1\n@@verdict pass\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_trailer("@@verdict maybe\n@@scale 1\n"), InvariantViolation);
}

TEST_CASE("golden reports")
{
    auto cases = golden::load_cases();
    REQUIRE(cases.size() >= 12);
    std::set<int> codes;
    for (const auto & c : cases) {
        CAPTURE(c.name);
        auto first = golden::replay(corpus(), c.args);
        auto second = golden::replay(corpus(), c.args);
        CHECK(first.exit_code == c.exit_code);
        CHECK(first.stdout_text == second.stdout_text);
        CHECK(first.stdout_text == golden::read_file(golden::data_dir() + "/golden/" + c.name + ".out"));
        codes.insert(first.exit_code);
        if (first.exit_code == 2)
            continue;
        auto r = run_command(corpus(), c.args);
        auto t = parse_trailer(first.stdout_text);
        CHECK(t.pass == r.report.pass);
        CHECK(t.witness == r.report.witness);
        CHECK(t.scale == r.report.scale);
        CHECK((t.pass ? 0 : 1) == first.exit_code);
    }
    CHECK(codes == std::set<int>{0, 1, 2});
}

TEST_CASE("listings re-parse")
{
    for (const auto * cls : {"initseg", "sets"}) {
        CommandArgs args;
        args.command = std::string(cls) == "sets" ? "pad" : "expand-shelah";
        args.class_name = cls;
        args.out = "-";
        auto r = run_command(corpus(), args);
        std::string body;
        bool started = false;
        for (const auto & line : r.report.body) {
            started = started || line.rfind("vocab ", 0) == 0;
            if (started)
                body += line + "\n";
        }
        auto ws = parse_workspace(body);
        CHECK(ws.vocabularies.size() == 1);
        CHECK_FALSE(ws.structures.empty());
    }
}

TEST_CASE("usage errors")
{
    CommandArgs args;
    args.command = "nope";
    CHECK_THROWS_AS(run_command(corpus(), args), UsageError);
    args.command = "tarski";
    CHECK_THROWS_AS(run_command(corpus(), args), UsageError);
    args.class_name = "sets";
    args.scale = 40;
    CHECK_THROWS_AS(run_command(corpus(), args), UsageError);
    CHECK(command_names().size() == 18);
}
