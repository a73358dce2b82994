#include <recolour/circular.hpp>
#include <recolour/cycle_invariants.hpp>
#include <recolour/errors.hpp>
#include <recolour/extension.hpp>
#include <recolour/generators.hpp>
#include <recolour/graph_io.hpp>
#include <recolour/hom.hpp>
#include <recolour/hom_graph.hpp>
#include <recolour/parameters.hpp>
#include <recolour/structure.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>

using namespace recolour;
using json = nlohmann::json;

namespace
{
    constexpr int exit_usage = 1;
    constexpr int exit_cap = 2;
    constexpr int exit_expect = 3;

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct RunConfig
    {
        std::uint64_t cap = default_hom_cap;
        int threads = 1;
        std::string output = "json";
    };

    auto to_json(const Hom & f) -> json
    {
        return json(f.image);
    }

    auto to_json(const Frac & f) -> json
    {
        return f.to_string();
    }

    auto to_int(const std::string & text, const std::string & what) -> int
    {
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return value;
        }
        catch (const std::exception &) {
            throw UsageError("bad " + what + ": '" + text + "'");
        }
    }

    auto parse_pair(const std::string & text) -> std::pair<int, int>
    {
        auto f = parse_frac(text);
        return {static_cast<int>(f.k), static_cast<int>(f.q)};
    }

    struct Fixture
    {
        std::string name;
        std::string description;
        std::function<Graph ()> make;
    };

    auto fixtures() -> const std::vector<Fixture> &
    {
        static const std::vector<Fixture> list{
            {"gadget:g62x", "G_{6,2} plus vertex 6 joined to 0, 1, 4, 5", gadget_g62x},
            {"frozen:f22", "F_{2,2}, with a frozen (7,2)-colouring", [] { return frozen_family(2, 2); }},
            {"hexagon:c6", "the 6-cycle", [] { return cycle_graph(6); }},
            {"reflexive:i3", "reflexive path on 3 vertices", [] { return path_graph(3, true); }},
            {"ladder:k2p7", "K_2 times the reflexive path on 7 vertices", [] { return extension_product(complete_graph(2), path_graph(7)); }},
        };
        return list;
    }

    // clique:r, circ:k/q, cycle:r, path:n, named fixtures, file:PATH or a plain path
    auto load_graph(const std::string & text) -> Graph
    {
        auto colon = text.find(':');
        if (colon != std::string::npos) {
            auto kind = text.substr(0, colon);
            auto rest = text.substr(colon + 1);
            if (kind == "clique")
                return complete_graph(to_int(rest, "clique size"));
            if (kind == "circ") {
                auto [k, q] = parse_pair(rest);
                return circular_clique(k, q);
            }
            if (kind == "cycle")
                return cycle_graph(to_int(rest, "cycle length"));
            if (kind == "path")
                return path_graph(to_int(rest, "path length"));
            if (kind == "file")
                return read_graph_file(rest);
            for (auto & fixture : fixtures())
                if (fixture.name == text)
                    return fixture.make();
        }
        return read_graph_file(text);
    }

    auto graph_summary(const Graph & g) -> json
    {
        return json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"loops", g.loop_set().count()}};
    }

    void print_text(const json & value, const std::string & prefix, std::ostream & out)
    {
        if (value.is_object()) {
            for (auto & [key, item] : value.items())
                print_text(item, prefix.empty() ? key : prefix + "." + key, out);
            return;
        }
        out << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }

    void emit(const RunConfig & config, const json & report)
    {
        if (config.output == "text")
            print_text(report, "", std::cout);
        else
            std::cout << report.dump(2) << "\n";
    }

    auto check_expect(const std::string & expect, const std::string & actual) -> int
    {
        if (expect.empty() || expect == actual)
            return 0;
        std::cerr << "expected " << expect << ", got " << actual << "\n";
        return exit_expect;
    }

    auto generate(const std::string & kind, const std::vector<int> & args, bool reflexive) -> Graph
    {
        auto need = [&] (std::size_t count) {
            if (args.size() != count)
                throw UsageError("gen " + kind + " takes " + std::to_string(count) + " integer arguments");
        };
        if (kind == "complete") { need(1); return complete_graph(args[0]); }
        if (kind == "cycle") { need(1); return cycle_graph(args[0], reflexive); }
        if (kind == "path") { need(1); return path_graph(args[0], reflexive); }
        if (kind == "circular-clique") { need(2); return circular_clique(args[0], args[1]); }
        if (kind == "frozen-family") { need(2); return frozen_family(args[0], args[1]); }
        if (kind == "star") { need(1); return star_graph(args[0]); }
        if (kind == "complete-bipartite") { need(2); return complete_bipartite(args[0], args[1]); }
        if (kind == "empty") { need(1); return empty_graph(args[0], reflexive); }
        if (kind == "gadget") { need(0); return gadget_g62x(); }
        throw UsageError("unknown graph kind '" + kind + "'");
    }

    void write_output(const std::string & path, const std::string & text)
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw UsageError("cannot write " + path);
        out << text;
    }

    auto components_json(const ComponentReport & report, std::size_t limit) -> json
    {
        json classes = json::array();
        for (std::size_t i = 0 ; i < report.classes.size() && i < limit ; ++i) {
            auto & c = report.classes[i];
            classes.push_back({{"representative", to_json(c.rep)}, {"size", c.size},
                    {"non_surjective", c.non_surjective}, {"frozen", c.frozen}});
        }
        return json{{"kind", to_string(report.kind)}, {"total", report.total},
            {"class_count", report.class_count()}, {"classes", classes}};
    }

    auto certificate_json(const NonMixingCertificate & c) -> json
    {
        return json{{"k", c.k}, {"q", c.q}, {"subgraph", c.subgraph}, {"subgraph_is_clique", c.subgraph_is_clique},
            {"cycle", c.cycle}, {"colouring", to_json(c.g)}, {"reflected", to_json(c.reflected)},
            {"sigma", c.sigma}, {"reflected_sigma", c.reflected_sigma}};
    }

    auto env_number(const char * name) -> std::optional<long long>
    {
        const char * value = std::getenv(name);
        if (! value || ! *value)
            return std::nullopt;
        try {
            return std::stoll(value);
        }
        catch (const std::exception &) {
            throw UsageError(std::string("bad value in ") + name);
        }
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Graph recolouring and homomorphism reconfiguration toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::optional<std::uint64_t> cap_flag;
    std::optional<int> threads_flag;
    app.add_option("--cap", cap_flag, "maximum number of homomorphisms (env RECOLOUR_CAP)");
    app.add_option("--threads", threads_flag, "search threads (env RECOLOUR_THREADS)");
    app.add_option("--format", config.output, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string graph_path, target_text, output_path, expect, frac_text, colouring_text, cycle_text, kind_text = "colour";
    std::size_t limit = 20;
    std::vector<std::string> pin_texts, frac_list;
    std::function<int ()> action;

    auto add_graph = [&] (CLI::App * sub) {
        sub->add_option("--graph", graph_path, "graph file, or clique:r, circ:k/q, cycle:r, path:n, a fixture name")->required();
    };
    auto add_target = [&] (CLI::App * sub) {
        sub->add_option("--target", target_text, "clique:k, circ:k/q or file:PATH")->required();
    };

    // gen
    auto gen = app.add_subcommand("gen", "generate a graph");
    std::string gen_kind;
    std::vector<int> gen_args;
    bool reflexive = false;
    gen->add_option("kind", gen_kind, "complete, cycle, path, circular-clique, frozen-family, star, complete-bipartite, empty, gadget")->required();
    gen->add_option("args", gen_args, "integer parameters");
    gen->add_flag("--reflexive", reflexive, "add a loop at every vertex (cycle, path, empty)");
    gen->add_option("-o,--output", output_path, "output file (default stdout)");
    gen->callback([&] {
        action = [&] {
            write_output(output_path, format_graph(generate(gen_kind, gen_args, reflexive)));
            return 0;
        };
    });

    // hom
    auto hom = app.add_subcommand("hom", "enumerate homomorphisms");
    add_graph(hom);
    add_target(hom);
    hom->add_option("--limit", limit, "number of homomorphisms to list");
    hom->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto h = load_graph(target_text);
            auto space = enumerate_homs(g, h, config.cap);
            json list = json::array();
            for (std::size_t i = 0 ; i < space.size() && i < limit ; ++i)
                list.push_back(to_json(space.hom(i)));
            emit(config, {{"graph", graph_summary(g)}, {"target", graph_summary(h)}, {"count", space.size()}, {"homs", list}});
            return 0;
        };
    });

    // mixing
    auto mixing = app.add_subcommand("mixing", "decide whether the colour graph is connected");
    add_graph(mixing);
    add_target(mixing);
    mixing->add_option("--expect", expect, "exit 3 unless the verdict matches")
        ->check(CLI::IsMember({"Mixing", "NotMixing", "NoColourings"}));
    mixing->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto h = load_graph(target_text);
            auto r = is_mixing(g, h, config.cap);
            json witness = nullptr;
            if (r.witness)
                witness = json::array({to_json(r.witness->first), to_json(r.witness->second)});
            auto verdict = to_string(r.verdict);
            emit(config, {{"verdict", verdict}, {"total", r.total}, {"classes", r.classes}, {"witness", witness}});
            return check_expect(expect, verdict);
        };
    });

    // components
    auto comps = app.add_subcommand("components", "components of the colour or homomorphism graph");
    add_graph(comps);
    add_target(comps);
    comps->add_option("--kind", kind_text, "colour or homomorphism")->check(CLI::IsMember({"colour", "homomorphism"}));
    comps->add_option("--limit", limit, "number of classes to list");
    comps->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto h = load_graph(target_text);
            auto kind = kind_text == "colour" ? GraphKind::colour : GraphKind::homomorphism;
            emit(config, components_json(components(g, h, kind, config.cap), limit));
            return 0;
        };
    });

    // frozen
    auto frozen = app.add_subcommand("frozen", "frozen colourings");
    add_graph(frozen);
    add_target(frozen);
    frozen->add_option("--colouring", colouring_text, "check one colouring c0,c1,...");
    frozen->add_option("--limit", limit, "number of frozen colourings to list");
    frozen->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto h = load_graph(target_text);
            if (g.has_loops())
                throw UsageError("frozen colourings are defined for loop-free graphs");
            if (! colouring_text.empty()) {
                auto f = parse_hom(colouring_text, h.size());
                if (! is_hom(g, h, f))
                    throw UsageError("not a homomorphism");
                emit(config, {{"colouring", to_json(f)}, {"frozen", is_frozen(g, h, f)}});
                return 0;
            }
            auto report = components(g, h, GraphKind::colour, config.cap);
            json list = json::array();
            std::size_t count = 0;
            for (auto & c : report.classes)
                if (c.frozen) {
                    if (count < limit)
                        list.push_back(to_json(c.rep));
                    ++count;
                }
            emit(config, {{"total", report.total}, {"frozen_count", count}, {"frozen", list}});
            return 0;
        };
    });

    // lower-parent
    auto parent = app.add_subcommand("lower-parent", "the lower parent (k', q') of k/q");
    std::int64_t lp_k = 0, lp_q = 0;
    parent->add_option("k", lp_k)->required();
    parent->add_option("q", lp_q)->required();
    parent->callback([&] {
        action = [&] {
            auto lp = lower_parent(lp_k, lp_q);
            emit(config, {{"k'", lp.parent_k}, {"q'", lp.parent_q}});
            return 0;
        };
    });

    // structure
    auto structure = app.add_subcommand("structure", "folds, stiff terminal, dismantlability and core");
    add_graph(structure);
    structure->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto d = is_dismantlable(g);
            json steps = json::array();
            for (auto & s : d.reduction.steps)
                steps.push_back({{"removed", s.removed}, {"absorber", s.absorber}});
            auto core = core_of(g);
            auto self = self_mixing(g, config.cap);
            emit(config, {
                {"graph", graph_summary(g)},
                {"folds", steps},
                {"stiff_terminal", {{"vertices", d.reduction.terminal_vertices}, {"summary", graph_summary(d.reduction.terminal)},
                    {"rigid", d.reduction.terminal_is_rigid.value_or(false)}}},
                {"dismantlable", d.dismantlable},
                {"core", {{"vertices", core.vertices}, {"retraction", to_json(core.retraction)}}},
                {"self_mixing", {{"value", self.value}, {"provenance", self.provenance}}},
            });
            return 0;
        };
    });

    // sigma
    auto sigma = app.add_subcommand("sigma", "tau steps and sigma of a colouring along a cycle");
    add_graph(sigma);
    sigma->add_option("--cycle", cycle_text, "v0,v1,...")->required();
    sigma->add_option("--colouring", colouring_text, "c0,c1,...")->required();
    sigma->add_option("--frac", frac_text, "k/q")->required();
    sigma->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto [k, q] = parse_pair(frac_text);
            auto f = parse_hom(colouring_text, k);
            auto t = trace(g, f, parse_image(cycle_text), k, q);
            auto reflected = reflect(f, k);
            auto c = is_constricting(g, f, k, q);
            emit(config, {{"cycle", t.cycle}, {"taus", t.taus}, {"sigma", t.sigma}, {"k", k}, {"q", q},
                {"reflected", to_json(reflected)}, {"reflected_sigma", trace(g, reflected, t.cycle, k, q).sigma},
                {"constricting", c.constricting},
                {"violating_vertex", c.violating_vertex ? json(*c.violating_vertex) : json(nullptr)}});
            return 0;
        };
    });

    // certify-nonmixing
    auto certify = app.add_subcommand("certify-nonmixing", "sigma certificate that G is not (k,q)-mixing");
    add_graph(certify);
    certify->add_option("--frac", frac_text, "k/q")->required();
    certify->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            auto [k, q] = parse_pair(frac_text);
            auto cert = nonmixing_certificate(g, k, q);
            if (! cert) {
                emit(config, {{"status", "NoCertificate"}, {"certificate", nullptr}, {"verified", false}});
                return 0;
            }
            emit(config, {{"status", "NotMixing"}, {"certificate", certificate_json(*cert)}, {"verified", verify_certificate(g, *cert)}});
            return 0;
        };
    });

    // extend
    auto ext = app.add_subcommand("extend", "extend a precolouring");
    add_graph(ext);
    add_target(ext);
    ext->add_option("--pin", pin_texts, "v=c, repeatable");
    ext->add_option("--expect", expect, "exit 3 unless the status matches")->check(CLI::IsMember({"Extends", "NoExtension"}));
    ext->callback([&] {
        action = [&] {
            PrecolouringInstance instance{load_graph(graph_path), load_graph(target_text), {}, {}};
            for (auto & text : pin_texts) {
                auto eq = text.find('=');
                if (eq == std::string::npos)
                    throw UsageError("pins look like v=c, got '" + text + "'");
                instance.pins.push_back({to_int(text.substr(0, eq), "pin vertex"), to_int(text.substr(eq + 1), "pin colour")});
            }
            auto e = extend(instance, config.cap);
            std::string status = e ? "Extends" : "NoExtension";
            json certificate = e ? json{{"method", "verified homomorphism"}, {"valid", is_hom(instance.host, instance.target, *e)}}
                                 : json{{"method", "exhaustive search"}, {"pins", instance.pins.size()}};
            emit(config, {{"status", status}, {"extension", e ? to_json(*e) : json(nullptr)}, {"certificate", certificate}});
            return check_expect(expect, status);
        };
    });

    // scan
    auto scan = app.add_subcommand("scan", "mixing verdicts over a list of fractions, with bounds");
    add_graph(scan);
    int max_k = 0;
    scan->add_option("--frac", frac_list, "k/q, repeatable");
    scan->add_option("--max-k", max_k, "all reduced k/q >= 2 with k up to this");
    scan->callback([&] {
        action = [&] {
            auto g = load_graph(graph_path);
            std::vector<Frac> fracs;
            for (auto & text : frac_list)
                fracs.push_back(parse_frac(text));
            for (int k = 2 ; k <= max_k ; ++k)
                for (int q = 1 ; 2 * q <= k ; ++q)
                    if (std::gcd(k, q) == 1)
                        fracs.push_back(Frac{k, q});
            if (fracs.empty())
                throw UsageError("give --frac or --max-k");
            std::sort(fracs.begin(), fracs.end(), [] (const Frac & a, const Frac & b) {
                return a < b || (a == b && a.k < b.k);
            });
            fracs.erase(std::unique(fracs.begin(), fracs.end(), [] (const Frac & a, const Frac & b) { return a.same_pair(b); }), fracs.end());
            auto result = mixing_scan(g, fracs, config.cap);
            json rows = json::array(), bounds = json::array();
            for (auto & row : result.rows)
                rows.push_back({{"frac", to_json(row.frac)}, {"verdict", to_string(row.verdict)},
                    {"hom_count", row.hom_count}, {"class_count", row.class_count}});
            for (auto & b : result.bounds)
                bounds.push_back({{"quantity", b.quantity}, {"relation", b.relation}, {"value", to_json(b.value)}, {"source", b.source}});
            emit(config, {{"graph", graph_summary(g)}, {"rows", rows}, {"bounds", bounds}});
            return 0;
        };
    });

    // fixtures
    auto fixture_cmd = app.add_subcommand("fixtures", "list named fixtures or write one");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "fixture to write");
    fixture_cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    fixture_cmd->callback([&] {
        action = [&] {
            if (fixture_name.empty()) {
                json list = json::array();
                for (auto & f : fixtures())
                    list.push_back({{"name", f.name}, {"description", f.description}, {"summary", graph_summary(f.make())}});
                emit(config, {{"fixtures", list}});
                return 0;
            }
            for (auto & f : fixtures())
                if (f.name == fixture_name) {
                    write_output(output_path, format_graph(f.make()));
                    return 0;
                }
            throw UsageError("unknown fixture '" + fixture_name + "'");
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        if (auto env = env_number("RECOLOUR_CAP"))
            config.cap = static_cast<std::uint64_t>(*env);
        if (auto env = env_number("RECOLOUR_THREADS"))
            config.threads = static_cast<int>(*env);
        if (cap_flag)
            config.cap = *cap_flag;
        if (threads_flag)
            config.threads = *threads_flag;
        if (config.threads < 1)
            throw UsageError("threads must be positive");
        set_search_threads(config.threads);
        return action();
    }
    catch (const CapExceeded & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    }
    catch (const NoColourings & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
