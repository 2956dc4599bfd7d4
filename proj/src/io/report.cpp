#include <aectk/io/report.hpp>

#include <aectk/core/error.hpp>

#include <sstream>

namespace aectk
{
    auto Report::render() const -> std::string
    {
        std::string out = "# " + command + "\n";
        for (const auto & line : body)
            out += line + "\n";
        out += std::string("@@verdict ") + (pass ? "pass" : "fail") + "\n";
        for (const auto & [key, value] : witness)
            out += "@@witness " + key + "=" + value + "\n";
        out += "@@scale " + std::to_string(scale) + "\n";
        return out;
    }

    auto parse_trailer(const std::string & text) -> Trailer
    {
        std::istringstream in(text);
        std::string line;
        Trailer t;
        bool verdict = false;
        bool scale = false;
        while (std::getline(in, line)) {
            if (line.rfind("@@", 0) != 0)
                continue;
            if (scale)
                throw InvariantViolation("trailer line after @@scale: " + line);
            if (line == "@@verdict pass" || line == "@@verdict fail") {
                if (verdict)
                    throw InvariantViolation("second @@verdict line");
                verdict = true;
                t.pass = line == "@@verdict pass";
            } else if (line.rfind("@@witness ", 0) == 0) {
                if (! verdict)
                    throw InvariantViolation("@@witness before @@verdict");
                auto kv = line.substr(10);
                auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw InvariantViolation("malformed witness line: " + line);
                t.witness.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
            } else if (line.rfind("@@scale ", 0) == 0) {
                if (! verdict)
                    throw InvariantViolation("@@scale before @@verdict");
                try {
                    std::size_t used = 0;
                    t.scale = std::stoi(line.substr(8), &used);
                    if (used != line.size() - 8)
                        throw InvariantViolation("");
                } catch (const std::exception &) {
                    throw InvariantViolation("malformed scale line: " + line);
                }
                scale = true;
            } else {
                throw InvariantViolation("unknown trailer line: " + line);
            }
        }
        if (! verdict || ! scale)
            throw InvariantViolation("report has no complete trailer");
        return t;
    }
}
