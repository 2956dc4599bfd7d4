#pragma once

#include <aectk/io/report.hpp>
#include <aectk/io/workspace.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    /// Bad command line: unknown command, missing or unknown names, malformed maps.
    class UsageError : public Error
    {
    public:
        using Error::Error;
    };

    struct CommandArgs
    {
        std::string command;
        std::optional<std::string> class_name;
        std::vector<std::string> structures;
        std::vector<std::string> maps;
        std::optional<int> scale;
        int max_family = 2;
        /// `-` puts the listing into the report body; anything else is a file path.
        std::optional<std::string> out;
    };

    struct CommandResult
    {
        Report report;
        /// 0 pass, 1 the checked property fails.
        int exit_code = 0;
        /// The listing requested with --out, if any.
        std::string listing;
    };

    auto command_names() -> const std::vector<std::string> &;

    /// Echo of the invocation as it appears in the first report line.
    auto echo(const CommandArgs & args) -> std::string;

    /// Runs one command. Throws UsageError; precondition failures come back as exit 1.
    auto run_command(const Workspace & ws, const CommandArgs & args) -> CommandResult;
}
