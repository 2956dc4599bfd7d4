#include <aectk/core/enumerate.hpp>
#include <aectk/core/error.hpp>

#include <limits>
#include <map>
#include <mutex>
#include <string>

namespace aectk
{
    namespace
    {
        auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
                return std::numeric_limits<std::uint64_t>::max();
            return a * b;
        }

        auto saturating_pow(std::uint64_t base, std::uint64_t exp) -> std::uint64_t
        {
            std::uint64_t r = 1;
            for (std::uint64_t i = 0; i < exp; ++i) {
                r = saturating_mul(r, base);
                if (r == std::numeric_limits<std::uint64_t>::max())
                    break;
            }
            return r;
        }

        auto signature_key(const Vocabulary & v, int max_size) -> std::string
        {
            std::string k = v.name() + "|" + std::to_string(max_size) + "|";
            for (auto & r : v.relations())
                k += "r:" + r.name + "/" + std::to_string(r.arity) + ";";
            for (auto & f : v.functions())
                k += "f:" + f.name + "/" + std::to_string(f.arity) + ";";
            return k;
        }

        /// Visits every labelled structure of size n by counting through relation bits and function tables.
        template <typename Visit>
        void visit_labelled(const VocabularyPtr & v, int n, Visit && visit)
        {
            auto & voc = *v;
            if (n == 0 && voc.has_constants())
                return;
            std::vector<std::pair<std::size_t, Tuple>> rel_slots;
            for (std::size_t r = 0; r < voc.relations().size(); ++r)
                for_each_tuple(n, voc.relations()[r].arity, [&] (const Tuple & t) { rel_slots.emplace_back(r, t); });
            std::vector<std::pair<std::size_t, Tuple>> fun_slots;
            for (std::size_t f = 0; f < voc.functions().size(); ++f)
                for_each_tuple(n, voc.functions()[f].arity, [&] (const Tuple & t) { fun_slots.emplace_back(f, t); });

            std::vector<int> digits(rel_slots.size() + fun_slots.size(), 0);
            std::vector<int> radix;
            radix.reserve(digits.size());
            for (std::size_t i = 0; i < rel_slots.size(); ++i)
                radix.push_back(2);
            for (std::size_t i = 0; i < fun_slots.size(); ++i)
                radix.push_back(n);

            Structure s(v, n);
            while (true) {
                for (std::size_t i = 0; i < rel_slots.size(); ++i)
                    s.set_relation(rel_slots[i].first, rel_slots[i].second, digits[i] != 0);
                for (std::size_t i = 0; i < fun_slots.size(); ++i)
                    s.set_function(fun_slots[i].first, fun_slots[i].second, digits[rel_slots.size() + i]);
                visit(std::as_const(s));
                std::size_t p = 0;
                while (p < digits.size() && ++digits[p] == radix[p]) {
                    digits[p] = 0;
                    ++p;
                }
                if (p == digits.size())
                    return;
            }
        }
    }

    auto labelled_count(const Vocabulary & v, int n) -> std::uint64_t
    {
        if (n == 0 && v.has_constants())
            return 0;
        std::uint64_t total = 1;
        for (auto & r : v.relations())
            total = saturating_mul(total, saturating_pow(2, table_size(n, r.arity)));
        for (auto & f : v.functions())
            total = saturating_mul(total, saturating_pow(static_cast<std::uint64_t>(n), table_size(n, f.arity)));
        return total;
    }

    auto enumerate_structures(const VocabularyPtr & v, int max_size, std::uint64_t ceiling)
        -> std::shared_ptr<const std::vector<CanonicalStructure>>
    {
        if (max_size < 0)
            throw PreconditionFailed("enumerate_structures: negative size bound");
        std::uint64_t total = 0;
        for (int n = 0; n <= max_size; ++n) {
            auto c = labelled_count(*v, n);
            total = (total > std::numeric_limits<std::uint64_t>::max() - c) ? std::numeric_limits<std::uint64_t>::max() : total + c;
        }
        if (total > ceiling)
            throw ResourceLimit("enumerating all '" + v->name() + "'-structures up to size " + std::to_string(max_size) + " visits " +
                                std::to_string(total) + " labelled structures (ceiling " + std::to_string(ceiling) + ")");

        static std::mutex mutex;
        static std::map<std::string, std::shared_ptr<const std::vector<CanonicalStructure>>> memo;
        auto key = signature_key(*v, max_size);
        {
            std::lock_guard lock(mutex);
            if (auto it = memo.find(key); it != memo.end())
                return it->second;
        }

        std::map<CanonicalCode, Structure> classes;
        for (int n = 0; n <= max_size; ++n)
            visit_labelled(v, n, [&] (const Structure & s) {
                auto form = canonical_form(s);
                if (classes.find(form.code) == classes.end())
                    classes.emplace(std::move(form.code), relabel(s, form.witness));
            });
        auto out = std::make_shared<std::vector<CanonicalStructure>>();
        out->reserve(classes.size());
        for (auto & [code, s] : classes)
            out->push_back(CanonicalStructure{code, s});

        std::lock_guard lock(mutex);
        auto [it, inserted] = memo.emplace(key, std::move(out));
        return it->second;
    }
}
