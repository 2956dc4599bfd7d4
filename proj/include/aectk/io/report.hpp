#pragma once

#include <string>
#include <utility>
#include <vector>

namespace aectk
{
    using WitnessField = std::pair<std::string, std::string>;

    /// Command echo, free-form body, then the machine trailer
    /// `@@verdict pass|fail`, `@@witness key=value` lines and `@@scale N`.
    struct Report
    {
        std::string command;
        std::vector<std::string> body;
        bool pass = true;
        std::vector<WitnessField> witness;
        int scale = 0;

        auto render() const -> std::string;
    };

    struct Trailer
    {
        bool pass = true;
        std::vector<WitnessField> witness;
        int scale = 0;

        friend auto operator==(const Trailer &, const Trailer &) -> bool = default;
    };

    /// Reads the trailer of a rendered report. Throws InvariantViolation when it is missing or malformed.
    auto parse_trailer(const std::string & text) -> Trailer;
}
