// Command-line front end: aectk COMMAND WORKSPACE [flags]

#include <aectk/io/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    auto read_file(const std::string & path, std::string & text) -> bool
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            return false;
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        return true;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Finite-scale checks for abstract classes of structures"};
    app.require_subcommand(1);

    aectk::CommandArgs args;
    std::string workspace_path;
    std::string class_name;
    int scale = -1;

    for (const auto & name : aectk::command_names()) {
        auto * sub = app.add_subcommand(name);
        sub->add_option("workspace", workspace_path, "workspace file")->required();
        sub->add_option("--class", class_name, "class name");
        sub->add_option("--structure", args.structures, "structure name (repeatable)");
        sub->add_option("--map", args.maps, "element map i->j,... or edge SRC>TGT:i->j,... (repeatable)");
        sub->add_option("--scale", scale, "size bound override");
        sub->add_option("--max-family", args.max_family, "largest family size for check-pullback-full");
        sub->add_option("--out", args.out, "listing destination: a path, or - for standard output");
        sub->callback([&args, name] { args.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }
    if (! class_name.empty())
        args.class_name = class_name;
    if (scale >= 0)
        args.scale = scale;

    std::string text;
    if (! read_file(workspace_path, text)) {
        std::cerr << workspace_path << ": cannot read\n";
        return 2;
    }
    try {
        auto ws = aectk::parse_workspace(text);
        auto result = aectk::run_command(ws, args);
        std::cout << result.report.render();
        return result.exit_code;
    } catch (const aectk::ParseError & e) {
        std::cerr << workspace_path << ":" << e.what() << "\n";
    } catch (const aectk::Error & e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
