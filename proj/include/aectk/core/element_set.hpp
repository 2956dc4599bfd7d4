#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace aectk
{
    using Element = int;

    /// Largest universe an ElementSet can address.
    inline constexpr int max_universe = 64;

    /// A subset of a universe 0..n-1, stored as a bit mask.
    class ElementSet
    {
    public:
        constexpr ElementSet() = default;
        constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

        static constexpr auto full(int n) -> ElementSet
        {
            return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        }

        static auto of(const std::vector<Element> & elements) -> ElementSet
        {
            ElementSet s;
            for (auto e : elements)
                s.insert(e);
            return s;
        }

        constexpr auto bits() const -> std::uint64_t { return bits_; }
        constexpr auto contains(Element e) const -> bool { return (bits_ >> e) & 1U; }
        constexpr auto empty() const -> bool { return bits_ == 0; }
        constexpr auto size() const -> int { return std::popcount(bits_); }
        constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
        constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

        constexpr auto subset_of(ElementSet other) const -> bool { return (bits_ & ~other.bits_) == 0; }
        constexpr auto proper_subset_of(ElementSet other) const -> bool { return subset_of(other) && bits_ != other.bits_; }

        auto elements() const -> std::vector<Element>
        {
            std::vector<Element> out;
            out.reserve(size());
            for (auto b = bits_; b != 0; b &= b - 1)
                out.push_back(std::countr_zero(b));
            return out;
        }

        /// Rendered as `{0,2,3}`.
        auto to_string() const -> std::string
        {
            std::string s = "{";
            bool first = true;
            for (auto e : elements()) {
                if (! first)
                    s += ",";
                s += std::to_string(e);
                first = false;
            }
            return s + "}";
        }

        friend constexpr auto operator|(ElementSet a, ElementSet b) -> ElementSet { return ElementSet{a.bits_ | b.bits_}; }
        friend constexpr auto operator&(ElementSet a, ElementSet b) -> ElementSet { return ElementSet{a.bits_ & b.bits_}; }
        friend constexpr auto operator==(ElementSet, ElementSet) -> bool = default;
        friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

    private:
        std::uint64_t bits_ = 0;
    };

    /// All subsets of `of`, in increasing mask order (so every subset precedes its supersets).
    inline auto subsets_of(ElementSet of) -> std::vector<ElementSet>
    {
        std::vector<ElementSet> out;
        out.reserve(std::size_t{1} << of.size());
        // enumerate submasks in increasing numeric order
        std::uint64_t s = 0;
        while (true) {
            out.emplace_back(s);
            if (s == of.bits())
                break;
            s = ((s | ~of.bits()) + 1) & of.bits();
        }
        return out;
    }
}
