#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "symfock/dsl.hpp"
#include "symfock/fock.hpp"
#include "symfock/json_io.hpp"
#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"
#include "symfock/verify.hpp"

namespace symfock {

namespace cli_detail {

inline void print_report_text(const VerificationReport& rep, std::ostream& out) {
    out << "suite=" << rep.suite << " p={";
    for (std::size_t k = 0; k < rep.config.p_values.size(); ++k)
        out << (k ? "," : "") << rep.config.p_values[k];
    out << "} max_degree=" << rep.config.max_degree << " cases=" << rep.cases_run
        << " failures=" << rep.failures.size() << (rep.pass() ? " PASS" : " FAIL") << "\n";
    std::size_t shown = 0;
    for (auto& f : rep.failures) {
        if (shown++ == 5) {
            out << "  ... " << rep.failures.size() - 5 << " more\n";
            break;
        }
        out << "  FAIL " << f.input << ": expected " << f.expected.to_string() << ", got "
            << f.got.to_string() << "\n";
    }
}

} // namespace cli_detail

/// Single-shot command dispatcher behind the `symfock` binary. Returns the
/// process exit code: 0 success, 1 verification failures, 2 usage or
/// configuration errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "symfock: exact operators on the Fock space of symmetric functions.\n"
        "Operator composition '*' acts right to left: in \"adj(h[1])*mul(e[2])\" the\n"
        "multiplication hits the state first. States look like \"s[2,1] - 1/2*p[2]\";\n"
        "p is always an explicit flag."};
    app.require_subcommand(1);

    // apply
    std::string apply_expr, apply_state;
    int apply_p = 0;
    bool apply_json = false;
    auto* apply = app.add_subcommand("apply", "Apply an operator expression to a state");
    apply->add_option("expr", apply_expr, "operator expression")->required();
    apply->add_option("state", apply_state, "state to act on")->required();
    apply->add_option("--p", apply_p, "residue modulus (0 or >= 2)")->required();
    apply->add_flag("--json", apply_json, "emit JSON");

    // inner
    std::string inner_a, inner_b;
    bool inner_json = false;
    auto* inner = app.add_subcommand("inner", "Hall inner product of two states");
    inner->add_option("a", inner_a)->required();
    inner->add_option("b", inner_b)->required();
    inner->add_flag("--json", inner_json, "emit JSON");

    // convert
    std::string conv_elt, conv_to;
    bool conv_json = false;
    auto* conv = app.add_subcommand("convert", "Rewrite an element in another basis");
    conv->add_option("elt", conv_elt)->required();
    conv->add_option("--to", conv_to, "target basis: schur|elementary|complete|power (or s|e|h|p)")
        ->required();
    conv->add_flag("--json", conv_json, "emit JSON");

    // core
    std::string core_part;
    int core_p = 0;
    bool core_json = false;
    auto* core = app.add_subcommand("core", "p-core and p-quotient of a partition");
    core->add_option("partition", core_part, "e.g. [4,4,2,1]")->required();
    core->add_option("--p", core_p, "rim hook length (>= 2)")->required();
    core->add_flag("--json", core_json, "emit JSON");

    // blocks
    std::vector<std::string> blocks_parts;
    int blocks_p = 0;
    bool blocks_json = false;
    auto* blocks = app.add_subcommand("blocks", "Group partitions into blocks by weight label");
    blocks->add_option("partitions", blocks_parts, "partitions, e.g. [2] [1,1]")->required();
    blocks->add_option("--p", blocks_p, "residue modulus (0 or >= 2)")->required();
    blocks->add_flag("--json", blocks_json, "emit JSON");

    // basic-rep
    int brep_p = 0, brep_deg = 0;
    bool brep_json = false;
    auto* brep = app.add_subcommand("basic-rep", "Graded basis of the submodule generated by the vacuum");
    brep->add_option("--p", brep_p, "residue modulus (>= 2)")->required();
    brep->add_option("--max-degree", brep_deg, "top degree")->required();
    brep->add_flag("--json", brep_json, "emit JSON");

    // verify
    std::string ver_suite;
    std::vector<int> ver_p;
    int ver_deg = 0, ver_bound = 0, ver_triples = 0;
    unsigned long long ver_seed = 0;
    bool ver_neg = false, ver_json = false;
    auto* ver = app.add_subcommand("verify", "Run a named identity suite");
    std::string suites_help = "one of:";
    for (auto& n : suite_names()) suites_help += " " + n;
    ver->add_option("--suite", ver_suite, suites_help)->required();
    ver->add_option("--p", ver_p, "residue moduli, e.g. --p 0,2,3")->delimiter(',');
    auto* ver_deg_opt = ver->add_option("--max-degree", ver_deg, "partition size bound");
    auto* ver_bound_opt = ver->add_option("--bound", ver_bound, "generator index bound (r,s,n,m)");
    auto* ver_triples_opt = ver->add_option("--triples", ver_triples, "random triples (adjointness)");
    auto* ver_seed_opt = ver->add_option("--seed", ver_seed, "seed for randomized cases");
    ver->add_flag("--negative-control", ver_neg, "inject the suite's designated broken operator");
    ver->add_flag("--json", ver_json, "emit JSON report");

    // twist
    std::string twist_elt;
    int twist_p = 0;
    bool twist_json = false;
    auto* twi = app.add_subcommand("twist", "Apply the p-power twist to an element");
    twi->add_option("elt", twist_elt)->required();
    twi->add_option("--p", twist_p, "twist exponent (>= 2)")->required();
    twi->add_flag("--json", twist_json, "emit JSON");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (apply->parsed()) {
            FockElt v = eval(parse_operator(apply_expr), parse_state(apply_state), apply_p);
            out << (apply_json ? symelt_to_json(v).dump(2) : print_state(v)) << "\n";
        } else if (inner->parsed()) {
            Rational r = hall_inner(parse_state(inner_a), parse_state(inner_b));
            if (inner_json) {
                OrderedJson j;
                j["num"] = numerator(r).str();
                j["den"] = denominator(r).str();
                out << j.dump(2) << "\n";
            } else {
                out << rational_string(r) << "\n";
            }
        } else if (conv->parsed()) {
            SymElt x = convert(parse_state(conv_elt), basis_from_name(conv_to));
            out << (conv_json ? symelt_to_json(x).dump(2) : print_state(x)) << "\n";
        } else if (core->parsed()) {
            auto [c, q] = p_core_and_quotient(Partition::parse(core_part), core_p);
            if (core_json) {
                out << core_to_json(core_p, c, q).dump(2) << "\n";
            } else {
                out << "core: " << c.to_string() << "\n" << "quotient:";
                for (auto& qq : q) out << " " << qq.to_string();
                out << "\n";
            }
        } else if (blocks->parsed()) {
            std::vector<std::pair<WeightLabel, std::vector<Partition>>> groups;
            for (auto& text : blocks_parts) {
                Partition la = Partition::parse(text);
                WeightLabel w = weight_label(la, blocks_p);
                auto it = std::find_if(groups.begin(), groups.end(),
                                       [&](auto& g) { return g.first == w; });
                if (it == groups.end())
                    groups.push_back({std::move(w), {std::move(la)}});
                else
                    it->second.push_back(std::move(la));
            }
            if (blocks_json) {
                OrderedJson j;
                j["p"] = blocks_p;
                j["blocks"] = OrderedJson::array();
                for (auto& [w, members] : groups) {
                    OrderedJson g;
                    g["label"] = weight_label_to_json(w);
                    g["partitions"] = OrderedJson::array();
                    for (auto& la : members) g["partitions"].push_back(partition_to_json(la));
                    j["blocks"].push_back(std::move(g));
                }
                out << j.dump(2) << "\n";
            } else {
                for (auto& [w, members] : groups) {
                    out << "block " << w.to_string() << ":";
                    for (auto& la : members) out << " " << la.to_string();
                    out << "\n";
                }
            }
        } else if (brep->parsed()) {
            auto graded = basic_rep_span(brep_p, brep_deg);
            if (brep_json) {
                out << span_to_json(brep_p, graded).dump(2) << "\n";
            } else {
                for (std::size_t n = 0; n < graded.size(); ++n) {
                    out << "degree " << n << ": dimension " << graded[n].size() << "\n";
                    for (auto& v : graded[n]) out << "  " << print_state(v) << "\n";
                }
            }
        } else if (ver->parsed()) {
            SuiteConfig cfg = default_config(ver_suite);
            if (!ver_p.empty()) cfg.p_values = ver_p;
            if (ver_deg_opt->count()) cfg.max_degree = ver_deg;
            if (ver_bound_opt->count())
                for (auto key : {"r", "s", "n", "m"}) cfg.generator_bounds[key] = ver_bound;
            if (ver_triples_opt->count()) cfg.generator_bounds["triples"] = ver_triples;
            if (ver_seed_opt->count()) cfg.seed = ver_seed;
            cfg.negative_control = ver_neg;
            VerificationReport rep = run_suite(cfg);
            if (ver_json)
                out << report_to_json(rep).dump(2) << "\n";
            else
                cli_detail::print_report_text(rep, out);
            return rep.pass() ? 0 : 1;
        } else if (twi->parsed()) {
            SymElt x = twist(parse_state(twist_elt), twist_p);
            out << (twist_json ? symelt_to_json(x).dump(2) : print_state(x)) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace symfock
