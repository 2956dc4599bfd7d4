#include <aectk/io/commands.hpp>

#include <aectk/classes/checks.hpp>
#include <aectk/core/canonical.hpp>
#include <aectk/expansions/functorial.hpp>
#include <aectk/expansions/padding.hpp>
#include <aectk/expansions/shelah.hpp>
#include <aectk/expansions/translation.hpp>
#include <aectk/limits/limits.hpp>
#include <aectk/multi/families.hpp>
#include <aectk/tarski/forbidden.hpp>
#include <aectk/tarski/theory.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace aectk
{
    namespace
    {
        auto split_lines(const std::string & text) -> std::vector<std::string>
        {
            std::vector<std::string> out;
            std::istringstream in(text);
            for (std::string line; std::getline(in, line);)
                out.push_back(line);
            return out;
        }

        auto yes_no(bool b) -> std::string { return b ? "yes" : "no"; }

        auto show_map(const ElementMap & f) -> std::string { return f.empty() ? "(empty map)" : print_element_map(f); }

        auto render_chain(const std::vector<ElementSet> & chain) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < chain.size(); ++i)
                out += (i ? "<" : "") + chain[i].to_string();
            return out;
        }

        /// Report under construction plus the workspace used to name structures.
        class Builder
        {
        public:
            Builder(const Workspace & ws, const CommandArgs & args)
                : ws_(ws)
            {
                report_.command = echo(args);
            }

            void line(const std::string & text) { report_.body.push_back(text); }

            void block(const std::string & text)
            {
                for (auto & l : split_lines(text))
                    line(l);
            }

            void field(const std::string & key, const std::string & value) { report_.witness.emplace_back(key, value); }

            /// The declared name of `m`, or a DSL block in the body under a fresh name.
            auto name(const Structure & m, const std::string & hint) -> std::string
            {
                if (auto n = ws_.name_of(m))
                    return *n;
                auto fresh = hint;
                for (int i = 2; taken_.contains(fresh); ++i)
                    fresh = hint + "-" + std::to_string(i);
                taken_.insert(fresh);
                block(to_dsl(m, fresh));
                return fresh;
            }

            /// The first declared structure isomorphic to `m`, or a DSL block.
            auto iso_name(const Structure & m, const std::string & hint) -> std::string
            {
                for (const auto & s : ws_.structures)
                    if (s.structure.vocabulary_ptr() == m.vocabulary_ptr() && is_isomorphic(s.structure, m))
                        return s.name;
                return name(m, hint);
            }

            void structure_field(const std::string & key, const Structure & m) { field(key, name(m, "witness-" + key)); }

            auto finish(bool pass, int scale) -> Report
            {
                report_.pass = pass;
                report_.scale = scale;
                return std::move(report_);
            }

        private:
            const Workspace & ws_;
            Report report_;
            std::set<std::string> taken_;
        };

        struct Context
        {
            const Workspace & ws;
            const CommandArgs & args;
            Builder & out;
            std::string listing;

            auto klass() const -> StructureClass
            {
                if (! args.class_name)
                    throw UsageError(args.command + " needs --class");
                if (! ws.find_class(*args.class_name))
                    throw UsageError("unknown class '" + *args.class_name + "'");
                auto c = ws.build_class(*args.class_name);
                return args.scale ? c.with_scale(*args.scale) : c;
            }

            auto structure(const std::string & name) const -> StructurePtr
            {
                const auto * s = ws.find_structure(name);
                if (! s)
                    throw UsageError("unknown structure '" + name + "'");
                return share(*s);
            }

            auto structures(std::size_t at_least) const -> std::vector<StructurePtr>
            {
                if (args.structures.size() < at_least)
                    throw UsageError(args.command + " needs at least " + std::to_string(at_least) + " --structure");
                std::vector<StructurePtr> out;
                for (const auto & n : args.structures)
                    out.push_back(structure(n));
                return out;
            }

            auto map(std::size_t i) const -> ElementMap
            {
                if (i >= args.maps.size())
                    throw UsageError(args.command + " needs at least " + std::to_string(i + 1) + " --map");
                try {
                    return parse_element_map(args.maps[i]);
                } catch (const InvariantViolation & e) {
                    throw UsageError(e.what());
                }
            }

            /// `SRC>TGT:map` edges between the listed structures.
            template <typename Edge>
            auto edges() const -> std::vector<Edge>
            {
                std::map<std::string, int> index;
                for (std::size_t i = 0; i < args.structures.size(); ++i)
                    index.emplace(args.structures[i], static_cast<int>(i));
                std::vector<Edge> out;
                for (const auto & text : args.maps) {
                    auto gt = text.find('>');
                    auto colon = text.find(':');
                    if (gt == std::string::npos || colon == std::string::npos || gt > colon)
                        throw UsageError("edge '" + text + "' is not of the form SRC>TGT:map");
                    // a name, or the position in the --structure list when a structure is listed twice
                    auto node = [&](const std::string & ref) {
                        if (! ref.empty() && ref.find_first_not_of("0123456789") == std::string::npos
                            && ref.size() < 4 && std::stoul(ref) < args.structures.size())
                            return static_cast<int>(std::stoul(ref));
                        auto it = index.find(ref);
                        if (it == index.end())
                            throw UsageError("edge '" + text + "' names a structure not given with --structure");
                        return it->second;
                    };
                    Edge e;
                    e.from = node(text.substr(0, gt));
                    e.to = node(text.substr(gt + 1, colon - gt - 1));
                    try {
                        e.map = parse_element_map(text.substr(colon + 1));
                    } catch (const InvariantViolation & err) {
                        throw UsageError(err.what());
                    }
                    out.push_back(std::move(e));
                }
                return out;
            }

            void header(const StructureClass & c) const
            {
                out.line("class " + c.name() + " : " + c.vocabulary().name() + ", scale " + std::to_string(c.scale())
                         + ", " + std::to_string(c.members().size()) + " members");
            }

            /// Listing output: appended to the body for `-`, written to a file for a path.
            void emit_listing(const std::string & text)
            {
                if (! args.out)
                    return;
                if (*args.out == "-") {
                    out.block(text);
                    return;
                }
                std::ofstream file(*args.out, std::ios::binary);
                if (! file)
                    throw UsageError("cannot write '" + *args.out + "'");
                file << text;
                listing = text;
                out.line("listing written to " + *args.out);
            }
        };

        struct Outcome
        {
            bool pass;
            int scale;
        };

        auto check_aec(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto coh = check_coherence(c);
            auto chain = check_chain_axioms(c);
            auto ls = estimate_ls(c);
            cx.out.line("coherence: " + std::string(coh.pass ? "pass" : "fail") + " (" + std::to_string(coh.triples_checked)
                        + " triples)");
            std::string notes;
            if (chain.vacuous)
                notes += ", vacuous";
            if (chain.degenerate)
                notes += ", degenerate";
            if (chain.structurally_certified)
                notes += ", structurally certified";
            cx.out.line("chain axioms: " + std::string(chain.pass ? "pass" : "fail") + " ("
                        + std::to_string(chain.chains_checked) + " chains, longest " + std::to_string(chain.longest_chain)
                        + notes + ")");
            std::string bound;
            for (auto b : ls.bound)
                bound += " " + std::to_string(b);
            cx.out.line("ls bound by size:" + bound + (ls.failed ? " (failed)" : ""));
            if (coh.witness) {
                cx.out.structure_field("ambient", coh.witness->ambient);
                cx.out.field("m0", coh.witness->m0.to_string());
                cx.out.field("m1", coh.witness->m1.to_string());
            } else if (chain.witness) {
                cx.out.structure_field("ambient", chain.witness->ambient);
                cx.out.field("chain", render_chain(chain.witness->chain));
                cx.out.field("clause", chain.witness->clause);
            } else if (ls.witness) {
                cx.out.structure_field("ambient", ls.witness->ambient);
                cx.out.field("set", ls.witness->a.to_string());
            }
            return {coh.pass && chain.pass && ! ls.failed, c.scale()};
        }

        void intersection_witness(Context & cx, const IntersectionWitness & w)
        {
            cx.out.structure_field("ambient", w.ambient);
            cx.out.field("set", w.a.to_string());
            cx.out.field("intersection", w.closure.elements.to_string());
            cx.out.field("strong", yes_no(w.closure.strong));
        }

        auto check_intersections(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto r = check_admits_intersections(c);
            cx.out.line(std::string("admits intersections: ") + (r.pass ? "yes" : "no"));
            if (r.witness) {
                const auto & w = *r.witness;
                cx.out.line("the " + std::to_string(w.closure.family_size) + " strong sets containing "
                            + w.a.to_string() + " meet in " + w.closure.elements.to_string() + ", which is not strong");
                intersection_witness(cx, w);
            }
            return {r.pass, c.scale()};
        }

        auto check_pseudo(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto r = check_pseudo_universal(c);
            cx.out.line("pairs of K-embeddings checked: " + std::to_string(r.pairs_checked));
            if (r.precondition_witness) {
                cx.out.line("pseudo-universal: no (does not admit intersections)");
                cx.out.field("reason", "not-admits-intersections");
                intersection_witness(cx, *r.precondition_witness);
            } else if (r.witness) {
                const auto & w = *r.witness;
                cx.out.line("pseudo-universal: no (two K-embeddings agree on " + w.a.to_string() + " but not on "
                            + w.closure.to_string() + ")");
                cx.out.structure_field("source", w.source);
                cx.out.structure_field("target", w.target);
                cx.out.field("f", print_element_map(w.f));
                cx.out.field("g", print_element_map(w.g));
                cx.out.field("set", w.a.to_string());
                cx.out.field("closure", w.closure.to_string());
            } else {
                cx.out.line("pseudo-universal: yes");
            }
            return {r.pass(), c.scale()};
        }

        void universal_witness(Context & cx, const UniversalWitness & w)
        {
            bool not_member = w.kind == UniversalWitness::Kind::substructure_not_member;
            cx.out.field("kind", not_member ? "substructure-not-member" : "substructure-not-strong");
            cx.out.structure_field("ambient", w.ambient);
            cx.out.field("subset", w.subset.to_string());
            if (not_member)
                cx.out.structure_field("missing", w.missing);
        }

        auto check_universal_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto r = check_universal(c);
            cx.out.line(std::string("universal: ") + (r.pass ? "yes" : "no")
                        + (r.structurally_certified ? " (structurally certified)" : ""));
            if (r.witness)
                universal_witness(cx, *r.witness);
            return {r.pass, c.scale()};
        }

        auto tarski(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto u = check_universal(c);
            if (! u.pass) {
                cx.out.line("not universal at scale; no forbidden basis");
                universal_witness(cx, *u.witness);
                return {false, c.scale()};
            }
            auto basis = minimal_forbidden(c);
            std::string names;
            for (std::size_t i = 0; i < basis.gamma.size(); ++i)
                names += (i ? "," : "") + cx.out.iso_name(basis.gamma[i].shape(), "gamma-" + std::to_string(i));
            cx.out.line("gamma: {" + names + "}");
            auto theory = emit_universal_theory(basis);
            cx.out.block(theory);
            cx.out.field("gamma", "{" + names + "}");
            if (cx.args.out && *cx.args.out != "-")
                cx.emit_listing(theory);
            return {true, c.scale()};
        }

        void limit_report(Context & cx, const LimitOutcome & r)
        {
            if (! r) {
                cx.out.line("no limit: " + r.reason);
                cx.out.field("reason", r.reason);
                cx.out.field("set", r.offending.to_string());
                cx.out.field("closure", r.closure.to_string());
                return;
            }
            const auto & cert = *r.certificate;
            cx.out.line("limit apex " + cx.out.name(cert.cone.apex, "apex") + ", legs:");
            for (std::size_t i = 0; i < cert.cone.legs.size(); ++i)
                cx.out.line("  " + std::to_string(i) + ": " + show_map(cert.cone.legs[i]));
            cx.out.line("competing cones factored: " + std::to_string(cert.log.size()) + " (apex size bound "
                        + std::to_string(cert.competitor_bound) + ")");
            if (! cert.verified) {
                cx.out.line("certificate failed: " + cert.failure.value_or(""));
                cx.out.field("failure", cert.failure.value_or(""));
            }
        }

        auto equalizer_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            auto s = cx.structures(2);
            cx.header(c);
            auto r = equalizer(c, Morphism{s[0], s[1], cx.map(0)}, Morphism{s[0], s[1], cx.map(1)});
            limit_report(cx, r);
            return {r && r.certificate->verified, c.scale()};
        }

        auto pullback_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            auto s = cx.structures(2);
            cx.header(c);
            std::vector<Morphism> legs;
            for (std::size_t i = 1; i < s.size(); ++i)
                legs.push_back(Morphism{s[i], s[0], cx.map(i - 1)});
            auto r = wide_pullback(c, legs);
            limit_report(cx, r);
            return {r && r.certificate->verified, c.scale()};
        }

        auto colimit_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            DirectedSystem system{cx.structures(1), cx.edges<DirectedSystem::Edge>()};
            cx.header(c);
            auto r = directed_colimit(c, system);
            cx.out.line("colimit: " + cx.args.structures[r.top] + (r.degenerate ? " (greatest index)" : ""));
            for (std::size_t i = 0; i < r.cocone.legs.size(); ++i)
                cx.out.line("  " + cx.args.structures[i] + ": " + show_map(r.cocone.legs[i]));
            cx.out.line("upper bounds checked: " + std::to_string(r.upper_bounds_checked) + ", smooth: " + yes_no(r.smooth));
            cx.out.field("top", cx.args.structures[r.top]);
            return {r.smooth, c.scale()};
        }

        auto family_cmd(Context & cx, bool poly) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto r = poly ? polyinitial_family(c) : multiinitial_family(c);
            std::string names;
            for (std::size_t i = 0; i < r.candidates.size(); ++i)
                names += (i ? "," : "") + cx.out.iso_name(r.candidates[i].structure, "candidate-" + std::to_string(i));
            cx.out.line("minimal members: {" + names + "}");
            if (r) {
                cx.out.line(std::string(poly ? "polyinitial" : "multiinitial") + " family certified against "
                            + std::to_string(r.family->members_checked) + " members");
                cx.out.field("family", "{" + names + "}");
            } else {
                const auto & v = *r.violation;
                cx.out.line("no family: " + v.reason);
                cx.out.structure_field("member", v.member);
                cx.out.field("sources", std::to_string(v.sources));
                cx.out.field("morphisms", std::to_string(v.morphisms));
                cx.out.field("reason", v.reason);
            }
            return {static_cast<bool>(r), c.scale()};
        }

        auto multicolimit_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            Diagram d{cx.structures(1), cx.edges<Diagram::Edge>()};
            cx.header(c);
            auto r = multicolimit(c, d);
            cx.out.line("cocones checked: " + std::to_string(r.cocones_checked));
            auto legs = [&](const Cone & cone) {
                for (std::size_t i = 0; i < cone.legs.size(); ++i)
                    cx.out.line("  " + cx.args.structures[i] + ": " + show_map(cone.legs[i]));
            };
            if (r) {
                cx.out.line("multicolimit of " + std::to_string(r.family.size()) + " cocones");
                std::string apexes;
                for (std::size_t i = 0; i < r.family.size(); ++i) {
                    auto n = cx.out.iso_name(r.family[i].apex, "apex-" + std::to_string(i));
                    apexes += (i ? "," : "") + n;
                    cx.out.line("cocone " + std::to_string(i) + " with apex " + n);
                    legs(r.family[i]);
                }
                cx.out.field("apexes", "{" + apexes + "}");
            } else {
                cx.out.line("no multicolimit");
                if (r.violating) {
                    cx.out.structure_field("apex", r.violating->apex);
                    legs(*r.violating);
                }
                cx.out.field("sources", std::to_string(r.sources));
                cx.out.field("morphisms", std::to_string(r.morphisms));
            }
            return {r.exists, c.scale()};
        }

        auto generated_cmd(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            auto s = cx.structures(1);
            cx.header(c);
            auto r = is_generated(c, *s[0], s[0]->size() + 1);
            if (r) {
                cx.out.line(cx.args.structures[0] + " is the closure of " + r->to_string() + " (" + std::to_string(r->size())
                            + " generators)");
                cx.out.field("generators", r->to_string());
            } else {
                cx.out.line(cx.args.structures[0] + " is not the closure of any of its subsets");
            }
            return {r.has_value(), c.scale()};
        }

        auto table_listing(const ExpandedClass & e) -> std::string
        {
            std::string text = print_vocabulary(*e.vocab);
            for (std::size_t i = 0; i < e.table.size(); ++i)
                text += "\n" + to_dsl(e.table[i].expanded, e.base.name() + "-" + std::to_string(i));
            return text;
        }

        void expansion_summary(Context & cx, const ExpandedClass & e)
        {
            auto added = added_functions(*e.vocab, e.base.vocabulary());
            std::string symbols;
            for (std::size_t i = 0; i < added.size(); ++i)
                symbols += (i ? " " : "") + added[i].name + "/" + std::to_string(added[i].arity);
            cx.out.line("vocabulary " + e.vocab->name() + " adds " + std::to_string(added.size()) + " symbols: " + symbols);
            for (const auto & l : e.log)
                cx.out.line(l);
        }

        auto expand_universal(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto e = functorial_expansion_universal(c);
            expansion_summary(cx, e);
            auto contract = check_expansion_contract(e);
            auto universal = check_expansion_universal(e);
            cx.out.line("reduct bijective on objects: " + yes_no(contract.objects_bijective)
                        + ", on hom-sets: " + yes_no(contract.homs_bijective) + " (" + std::to_string(contract.pairs_checked)
                        + " pairs)");
            cx.out.line("closed subsets strong in the reduct: " + yes_no(universal.pass) + " ("
                        + std::to_string(universal.subsets_checked) + " subsets)");
            if (contract.failure)
                cx.out.field("contract", *contract.failure);
            if (universal.ambient) {
                cx.out.structure_field("ambient", *universal.ambient);
                cx.out.field("subset", universal.subset.to_string());
            }
            cx.emit_listing(table_listing(e));
            return {contract.pass() && universal.pass, c.scale()};
        }

        auto expand_shelah(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto e = shelah_expansion(c, estimate_ls(c));
            expansion_summary(cx, e);
            std::size_t outside = 0;
            for (const auto & entry : e.table)
                if (! in_k_prime(c, entry.expanded)) {
                    if (outside++ == 0)
                        cx.out.structure_field("outside", entry.expanded);
                }
            auto f = check_reduct_functor(e);
            cx.out.line("expanded members outside K': " + std::to_string(outside));
            cx.out.line("reduct functor: surjective " + yes_no(f.surjective_on_objects) + ", faithful " + yes_no(f.faithful)
                        + ", preserves directed colimits " + yes_no(f.preserves_directed_colimits));
            cx.emit_listing(table_listing(e));
            return {outside == 0 && f.pass(), c.scale()};
        }

        auto kpp(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            auto r = k_double_prime(shelah_expansion(c, estimate_ls(c)));
            cx.out.line("members violating K'' before repair: " + std::to_string(r.violations.size()));
            for (const auto & v : r.violations)
                cx.out.line("  strong set " + v.strong_set.to_string() + " not closed in a " + std::to_string(v.expanded.size())
                            + "-element member");
            expansion_summary(cx, r.repaired);
            std::size_t outside = 0;
            for (const auto & entry : r.repaired.table)
                if (! in_k_double_prime(c, entry.expanded)) {
                    if (outside++ == 0)
                        cx.out.structure_field("outside", entry.expanded);
                }
            cx.out.line("repaired members outside K'': " + std::to_string(outside));
            cx.emit_listing(table_listing(r.repaired));
            return {outside == 0, c.scale()};
        }

        auto pullback_full(Context & cx) -> Outcome
        {
            auto c = cx.klass();
            cx.header(c);
            bool intersections = check_admits_intersections(c).pass;
            auto e = shelah_expansion(c, estimate_ls(c));
            if (intersections)
                e = k_double_prime(e).repaired;
            cx.out.line(std::string("functor: reduct from ") + (intersections ? "K''" : "K' (class lacks intersections)"));
            auto r = check_pullback_full(e, cx.args.max_family);
            cx.out.line("families of size <= " + std::to_string(r.max_family) + ", instances checked: "
                        + std::to_string(r.instances_checked));
            cx.out.line(std::string("pullback-full: ") + (r.pass ? "yes" : "no"));
            if (r.witness) {
                const auto & w = *r.witness;
                cx.out.structure_field("c", w.c);
                std::string fam;
                for (std::size_t i = 0; i < w.family.size(); ++i)
                    fam += (i ? "," : "") + w.family[i].to_string();
                cx.out.field("family", fam);
                cx.out.structure_field("a", w.a);
                cx.out.field("h", print_element_map(w.h));
            }
            return {r.pass, c.scale()};
        }

        auto translate(Context & cx) -> Outcome
        {
            auto s = cx.structures(1);
            auto t = emb_to_mod_translation(s[0]->vocabulary_ptr());
            for (const auto & m : s)
                if (m->vocabulary_ptr() != s[0]->vocabulary_ptr())
                    throw UsageError("translate-emb-mod needs structures over one vocabulary");
            cx.out.line("vocabulary " + t.target->name() + " adds " + std::to_string(t.target->relations().size()
                                                                                      - t.source->relations().size())
                        + " relations");
            bool agree = true;
            bool reported = false;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s.size(); ++j) {
                    auto emb = enumerate_embeddings(*s[i], *s[j]);
                    auto hom = enumerate_homomorphisms(t.structure(*s[i]), t.structure(*s[j]));
                    cx.out.line("emb(" + cx.args.structures[i] + "," + cx.args.structures[j] + ") = "
                                + std::to_string(emb.size()) + ", hom of translates = " + std::to_string(hom.size()));
                    if (emb != hom && ! reported) {
                        reported = true;
                        agree = false;
                        cx.out.field("source", cx.args.structures[i]);
                        cx.out.field("target", cx.args.structures[j]);
                    }
                }
            std::string text = print_vocabulary(*t.target);
            for (std::size_t i = 0; i < s.size(); ++i)
                text += "\n" + to_dsl(t.structure(*s[i]), cx.args.structures[i] + "-mod");
            cx.emit_listing(text);
            return {agree, cx.args.scale.value_or(4)};
        }

        auto pad(Context & cx) -> Outcome
        {
            if (! cx.args.class_name) {
                auto s = cx.structures(1);
                auto pv = padded_vocabulary(s[0]->vocabulary());
                std::string text = print_vocabulary(*pv);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (s[i]->vocabulary_ptr() != s[0]->vocabulary_ptr())
                        throw UsageError("pad needs structures over one vocabulary");
                    text += "\n" + to_dsl(pad_structure(*s[i], pv), cx.args.structures[i] + "-padded");
                }
                cx.out.line("padded " + std::to_string(s.size()) + " structures with constant c");
                cx.emit_listing(text);
                return {true, cx.args.scale.value_or(4)};
            }
            auto c = cx.klass();
            cx.header(c);
            auto p = pad_nonempty(c);
            auto pv = p.vocabulary_ptr();
            bool same = p.members().size() == c.members().size() && ! p.contains_empty_member();
            std::size_t pairs = 0;
            for (const auto & m : c.members())
                for (const auto & n : c.members()) {
                    ++pairs;
                    same = same
                        && c.k_embeddings(m.structure, n.structure).size()
                               == p.k_embeddings(pad_structure(m.structure, pv), pad_structure(n.structure, pv)).size();
                }
            cx.out.line("padded class " + p.name() + ", scale " + std::to_string(p.scale()) + ", "
                        + std::to_string(p.members().size()) + " members");
            cx.out.line("hom-set sizes preserved on " + std::to_string(pairs) + " pairs: " + yes_no(same));

            Workspace w;
            w.vocabularies.push_back(pv);
            ClassDecl decl;
            decl.name = p.name();
            decl.vocab = pv->name();
            decl.order = OrderKind::explicit_pairs;
            decl.scale = p.scale();
            auto add = [&](const Structure & m) {
                for (const auto & ns : w.structures)
                    if (ns.structure == m)
                        return ns.name;
                auto n = c.name() + "-" + std::to_string(w.structures.size());
                w.structures.push_back({n, m, {}});
                return n;
            };
            for (const auto & m : p.definition().members)
                decl.members.push_back(add(m));
            for (const auto & pr : p.definition().pairs)
                decl.pairs.push_back({add(pr.lower), add(pr.upper), pr.inclusion});
            w.classes.push_back(decl);
            cx.emit_listing(print_workspace(w));
            return {same, p.scale()};
        }

        using Handler = std::function<Outcome(Context &)>;

        auto handlers() -> const std::vector<std::pair<std::string, Handler>> &
        {
            static const std::vector<std::pair<std::string, Handler>> table = {
                {"check-aec", check_aec},
                {"check-intersections", check_intersections},
                {"check-pseudo-universal", check_pseudo},
                {"check-universal", check_universal_cmd},
                {"tarski", tarski},
                {"equalizer", equalizer_cmd},
                {"pullback", pullback_cmd},
                {"colimit", colimit_cmd},
                {"multiinitial", [](Context & cx) { return family_cmd(cx, false); }},
                {"polyinitial", [](Context & cx) { return family_cmd(cx, true); }},
                {"multicolimit", multicolimit_cmd},
                {"generated", generated_cmd},
                {"expand-universal", expand_universal},
                {"expand-shelah", expand_shelah},
                {"kpp", kpp},
                {"check-pullback-full", pullback_full},
                {"translate-emb-mod", translate},
                {"pad", pad},
            };
            return table;
        }
    }

    auto command_names() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> names = [] {
            std::vector<std::string> out;
            for (const auto & [name, handler] : handlers())
                out.push_back(name);
            return out;
        }();
        return names;
    }

    auto echo(const CommandArgs & args) -> std::string
    {
        std::string out = args.command;
        if (args.class_name)
            out += " --class " + *args.class_name;
        for (const auto & s : args.structures)
            out += " --structure " + s;
        for (const auto & m : args.maps)
            out += " --map " + m;
        if (args.scale)
            out += " --scale " + std::to_string(*args.scale);
        if (args.max_family != 2)
            out += " --max-family " + std::to_string(args.max_family);
        if (args.out)
            out += " --out " + *args.out;
        return out;
    }

    auto run_command(const Workspace & ws, const CommandArgs & args) -> CommandResult
    {
        const Handler * handler = nullptr;
        for (const auto & [name, h] : handlers())
            if (name == args.command)
                handler = &h;
        if (! handler)
            throw UsageError("unknown command '" + args.command + "'");
        if (args.scale && (*args.scale < 0 || *args.scale > 12))
            throw UsageError("--scale must be between 0 and 12");
        if (args.max_family < 1)
            throw UsageError("--max-family must be at least 1");

        Builder out(ws, args);
        Context cx{ws, args, out, {}};
        CommandResult result;
        try {
            auto o = (*handler)(cx);
            result.report = out.finish(o.pass, o.scale);
        } catch (const PreconditionFailed & e) {
            out.line("precondition failed: " + std::string(e.what()));
            out.field("precondition", e.what());
            int scale = args.scale.value_or(4);
            if (args.class_name && ws.find_class(*args.class_name) && ! args.scale)
                scale = ws.find_class(*args.class_name)->scale;
            result.report = out.finish(false, scale);
        }
        result.exit_code = result.report.pass ? 0 : 1;
        result.listing = std::move(cx.listing);
        return result;
    }
}
