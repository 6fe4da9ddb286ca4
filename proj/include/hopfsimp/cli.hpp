#ifndef HOPFSIMP_CLI_HPP
#define HOPFSIMP_CLI_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfsimp/hopfsimp.hpp"

namespace hopfsimp::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInputError = 2,
    kCapacityError = 3,
    kVerificationFailed = 4,
};

namespace detail {

struct Options {
    std::string file;
    std::string complex_text;
    bool json = false;
    unsigned threads = 1;
    int s = 1;
    bool q = false;
    std::optional<long long> at;
    bool via_psi = false;
    int k = 1;
    int n = 0;
    int max_n = 4;
    std::uint64_t seed = 20150901;
    std::string suite;
};

inline SimplicialComplex load_complex(const Options& o) {
    if (!o.file.empty() && !o.complex_text.empty()) {
        throw InputError("give either --file or --complex, not both");
    }
    if (!o.file.empty()) {
        return read_complex_file(o.file);
    }
    if (!o.complex_text.empty()) {
        return parse_complex(o.complex_text);
    }
    throw InputError("no input complex: use --file PATH or --complex TEXT");
}

inline json flat_to_json(const Flat& f) {
    json edges = json::array();
    for (auto [u, v] : f.edges()) {
        edges.push_back({u, v});
    }
    return json{{"blocks", f.block_lists()}, {"edges", edges}};
}

inline std::string flat_to_text(const Flat& f) {
    if (f.edges().empty()) {
        return "{}";
    }
    std::ostringstream os;
    bool first = true;
    for (auto [u, v] : f.edges()) {
        os << (first ? "" : ",") << "{" << u << "," << v << "}";
        first = false;
    }
    return os.str();
}

inline int cmd_antipode(const Options& o, std::ostream& out) {
    const LinComb s = antipode_flat(load_complex(o));
    if (o.json) {
        out << to_json(s).dump() << "\n";
    } else {
        out << to_text(s);
    }
    return kOk;
}

inline int cmd_antipode_table(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const auto rows = antipode_table(c);
    if (o.json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back(json{{"flat", flat_to_json(r.flat)},
                               {"components", r.flat.component_count()},
                               {"sign", r.sign},
                               {"acyclic", r.acyclic.str()},
                               {"complex", to_json(r.complex)}});
        }
        out << arr.dump() << "\n";
        return kOk;
    }
    for (const auto& r : rows) {
        out << flat_to_text(r.flat) << "\t(-1)^" << r.flat.component_count() << "\t" << r.acyclic.str()
            << "\t" << to_text(r.complex) << "\n";
    }
    return kOk;
}

inline int cmd_coproduct(const Options& o, std::ostream& out) {
    const TensorLinComb d = coproduct(load_complex(o));
    if (o.json) {
        out << to_json(d).dump() << "\n";
    } else {
        out << to_text(d);
    }
    return kOk;
}

inline int cmd_psi(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const SymPoly f = psi(c, o.q ? Character::zeta_q(o.s) : Character::zeta(o.s));
    if (o.json) {
        out << to_json(f).dump() << "\n";
    } else {
        out << f.to_string() << "\n";
    }
    return kOk;
}

inline int cmd_chromatic(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const PolyT p = chromatic_poly_s(c, o.s);
    if (o.json) {
        json j{{"s", o.s}, {"polynomial", poly_to_json(p)}};
        if (o.at) {
            j["t"] = *o.at;
            j["value"] = p.evaluate(Rational(*o.at)).str();
        }
        out << j.dump() << "\n";
        return kOk;
    }
    if (o.at) {
        out << p.evaluate(Rational(*o.at)).str() << "\n";
    } else {
        out << p.to_string() << "\n";
    }
    return kOk;
}

inline int cmd_fvector(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const FVector f = o.via_psi ? f_vector_via_psi(c) : f_vector(c);
    if (o.json) {
        out << to_json(f).dump() << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << (i ? " " : "") << f[i].str();
    }
    out << "\n";
    return kOk;
}

inline int cmd_skeleton(const Options& o, std::ostream& out) {
    const SimplicialComplex sk = k_skeleton(load_complex(o), o.k);
    out << (o.json ? to_json(sk).dump() : to_text(sk)) << "\n";
    return kOk;
}

inline int cmd_euler(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const PolyQ value = euler_character(c, o.s);
    const bool eulerian = is_eulerian(c, o.s);
    if (o.json) {
        out << json{{"s", o.s}, {"euler_character", value.coefficient(0).str()}, {"eulerian", eulerian}}.dump()
            << "\n";
    } else {
        out << "euler_character " << value.coefficient(0).str() << "\n"
            << "eulerian " << (eulerian ? "true" : "false") << "\n";
    }
    return kOk;
}

inline int cmd_subalgebra(const Options& o, std::ostream& out) {
    const SimplicialComplex c = load_complex(o);
    const bool even = in_even(c, o.s);
    const bool odd = in_odd(c, o.s);
    const bool eulerian = is_eulerian(c, o.s);
    if (o.json) {
        out << json{{"s", o.s}, {"even", even}, {"odd", odd}, {"eulerian", eulerian}}.dump() << "\n";
    } else {
        const auto b = [](bool x) { return x ? "true" : "false"; };
        out << "even " << b(even) << "\nodd " << b(odd) << "\neulerian " << b(eulerian) << "\n";
    }
    return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    SuiteOptions so;
    so.max_n = o.max_n;
    so.seed = o.seed;
    if (o.max_n > kEnumerationLimit) {
        throw CapacityError("verify: --max-n above " + std::to_string(kEnumerationLimit) +
                            " needs complex enumeration beyond its limit");
    }
    const auto reports = run_suite(o.suite, so);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.equal; });
    if (o.json) {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
        }
        out << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            out << r.to_line() << "\n";
        }
    }
    return ok ? kOk : kVerificationFailed;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto all = enumerate_complexes(o.n);
    if (o.json) {
        json arr = json::array();
        for (const auto& c : all) {
            arr.push_back(to_json(c));
        }
        out << arr.dump() << "\n";
    } else {
        for (const auto& c : all) {
            out << to_text(c) << "\n";
        }
    }
    return kOk;
}

}  // namespace detail

/// Runs one command line (program name excluded) against the given streams.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Hopf algebra of simplicial complexes: antipodes, characters, chromatic invariants",
                 "hopfsimp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_option("--threads", o.threads, "Worker thread cap")->check(CLI::Range(1U, 256U));

    const auto input = [&](CLI::App* sub) {
        sub->add_option("--file", o.file, "Complex file (JSON or text)");
        sub->add_option("--complex", o.complex_text, "Complex given inline, e.g. \"n=4; {0,1,2},{2,3}\"");
    };
    struct Verb {
        CLI::App* app;
        int (*run)(const detail::Options&, std::ostream&);
    };
    std::vector<Verb> verbs;

    auto* antipode = app.add_subcommand("antipode", "Cancellation-free antipode S(complex)");
    input(antipode);
    verbs.push_back({antipode, detail::cmd_antipode});

    auto* table = app.add_subcommand("antipode-table", "Per-flat rows of the antipode formula");
    input(table);
    verbs.push_back({table, detail::cmd_antipode_table});

    auto* cop = app.add_subcommand("coproduct", "Coproduct of a complex");
    input(cop);
    verbs.push_back({cop, detail::cmd_coproduct});

    auto* psi_cmd = app.add_subcommand("psi", "Symmetric function of a complex in the m basis");
    input(psi_cmd);
    psi_cmd->add_option("--s", o.s, "Character parameter s")->required()->check(CLI::PositiveNumber);
    psi_cmd->add_flag("--q", o.q, "Use the q-analog character");
    verbs.push_back({psi_cmd, detail::cmd_psi});

    auto* chrom = app.add_subcommand("chromatic", "s-chromatic polynomial");
    input(chrom);
    chrom->add_option("--s", o.s, "Character parameter s")->required()->check(CLI::PositiveNumber);
    chrom->add_option("--at", o.at, "Evaluate at this integer");
    verbs.push_back({chrom, detail::cmd_chromatic});

    auto* fvec = app.add_subcommand("fvector", "f-vector of a complex");
    input(fvec);
    fvec->add_flag("--via-psi", o.via_psi, "Recover it from the symmetric functions");
    verbs.push_back({fvec, detail::cmd_fvector});

    auto* skel = app.add_subcommand("skeleton", "k-skeleton of a complex");
    input(skel);
    skel->add_option("--k", o.k, "Skeleton dimension")->required()->check(CLI::NonNegativeNumber);
    verbs.push_back({skel, detail::cmd_skeleton});

    auto* euler = app.add_subcommand("euler", "Euler character and Eulerian test");
    input(euler);
    euler->add_option("--s", o.s, "Character parameter s")->required()->check(CLI::PositiveNumber);
    verbs.push_back({euler, detail::cmd_euler});

    auto* sub = app.add_subcommand("subalgebra", "Even / odd / Eulerian subalgebra membership");
    input(sub);
    sub->add_option("--s", o.s, "Character parameter s")->required()->check(CLI::PositiveNumber);
    verbs.push_back({sub, detail::cmd_subalgebra});

    auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
    verify->add_option("suite", o.suite, "hopf|kn|tree|star|theorem45|trace|kostka|all")
        ->required()
        ->check(CLI::IsMember({"hopf", "kn", "tree", "star", "theorem45", "trace", "kostka", "all"}));
    verify->add_option("--max-n", o.max_n, "Largest vertex count for enumerated complexes")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", o.seed, "Seed for random trees");
    verbs.push_back({verify, detail::cmd_verify});

    auto* enumerate = app.add_subcommand("enumerate", "All complexes on n vertices up to isomorphism");
    enumerate->add_option("--n", o.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    verbs.push_back({enumerate, detail::cmd_enumerate});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    const unsigned previous = thread_count();
    set_thread_count(o.threads);
    int code = kUsage;
    try {
        for (const Verb& v : verbs) {
            if (v.app->parsed()) {
                code = v.run(o, out);
                break;
            }
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        code = kInputError;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        code = kCapacityError;
    }
    set_thread_count(previous);
    return code;
}

}  // namespace hopfsimp::cli

#endif  // HOPFSIMP_CLI_HPP
