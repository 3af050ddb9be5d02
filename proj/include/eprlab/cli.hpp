#pragma once

// Command-line surface. All verbs write machine-parseable output to stdout
// (a word, the matrix text format, or JSON) and diagnostics to stderr.
// Exit codes: 0 success, 1 predicate-false for `match`, 2 usage error,
// 3 I/O error, 4 precondition violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eprlab/checkpoint.hpp"
#include "eprlab/construct.hpp"
#include "eprlab/epr.hpp"
#include "eprlab/equimodular.hpp"
#include "eprlab/exact.hpp"
#include "eprlab/graph.hpp"
#include "eprlab/json_io.hpp"
#include "eprlab/pattern.hpp"
#include "eprlab/rules.hpp"
#include "eprlab/scan.hpp"
#include "eprlab/version.hpp"

namespace eprlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitPrecondition = 4;

namespace detail {

inline IntMatrix read_matrix_arg(const std::string& path, std::istream& stdin_stream) {
    try {
        if (path == "-") return read_int_matrix(stdin_stream);
        std::ifstream f(path);
        if (!f) throw IoError("cannot open file: " + path);
        return read_int_matrix(f);
    } catch (const ParseError& e) {
        throw IoError("malformed matrix in " + path + ": " + e.what());
    }
}

/// "kind:n" for generate --left/--right.
inline IntMatrix matrix_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw PreconditionError("matrix spec must look like kind:n, got '" + spec + "'");
    const MatrixKind kind = parse_matrix_kind(spec.substr(0, colon));
    int n = 0;
    try {
        n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw PreconditionError("bad order in matrix spec '" + spec + "'");
    }
    return construct(kind, n);
}

inline int enumeration_cap_from_env(std::ostream& err) {
    const char* raw = std::getenv("EPRLAB_MAX_N");
    if (raw == nullptr || raw[0] == '\0') return kMaxEnumerationOrder;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) {
        err << "EPRLAB_MAX_N must be a positive integer, got '" << raw << "'\n";
        throw PreconditionError("invalid EPRLAB_MAX_N");
    }
    // the env var can lower the cap, never raise it
    return v < kMaxEnumerationOrder ? static_cast<int>(v) : kMaxEnumerationOrder;
}

inline Shard parse_shard(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw PreconditionError("shard must look like index/count, got '" + text + "'");
    Shard s;
    try {
        s.index = std::stoi(text.substr(0, slash));
        s.count = std::stoi(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw PreconditionError("bad shard '" + text + "'");
    }
    s.validate();
    return s;
}

inline Json graph_facts_json(const IntMatrix& m, const EprSequence& seq) {
    const Graph g = graph_of(m);
    Json j;
    j["odd_girth"] = Json{{"search", odd_girth_search(g).str()},
                          {"from_epr", odd_girth_from_epr(seq).str()}};
    j["bipartite"] = Json{{"coloring", is_bipartite_by_coloring(g)},
                          {"from_epr", bipartite_from_epr(seq)}};
    j["odd_cycle"] = Json{{"structural", is_odd_cycle_structural(g)},
                          {"from_epr", odd_cycle_from_epr(seq)}};
    return j;
}

inline Json analyze_json(const IntMatrix& m) {
    Json j;
    j["version"] = std::string(kVersion);
    j["n"] = m.order();
    const bool symmetric = m.is_symmetric();
    const bool zero_one = m.is_zero_one();
    const bool zero_diag = m.has_zero_diagonal();
    j["symmetric"] = symmetric;
    j["zero_one"] = zero_one;
    j["zero_diagonal"] = zero_diag;
    const BigInt d = det(m);
    j["det"] = d.str();

    std::optional<EprSequence> seq;
    if (symmetric) seq = epr(m);
    j["epr"] = seq ? Json(seq->tagged()) : Json(nullptr);
    j["epr2"] = (symmetric && zero_one) ? Json(epr2(m).tagged()) : Json(nullptr);

    const EquimodularReport rep = equimodular_report(m);
    j["equimodular"] = to_json(rep);
    j["battery"] = zero_one ? to_json(condition_battery(m)) : Json(nullptr);

    if (symmetric && zero_one && m.order() >= 3 && d != 0)
        j["conjecture"] = to_json(conjecture_verdict(m));
    else
        j["conjecture"] = nullptr;

    if (symmetric && zero_one && m.order() >= 5 && check_ends_naa(m).ends_naa)
        j["dichotomy"] = to_json(dichotomy_check(m));
    else
        j["dichotomy"] = nullptr;

    if (symmetric && zero_diag && seq)
        j["graph"] = graph_facts_json(m, *seq);
    else
        j["graph"] = nullptr;

    return j;
}

inline void emit(const std::string& text, const std::optional<std::string>& out_path,
                 std::ostream& out) {
    if (!out_path) {
        out << text;
        return;
    }
    std::ofstream f(*out_path, std::ios::trunc);
    if (!f) throw IoError("cannot open output file: " + *out_path);
    f << text;
    if (!f) throw IoError("failed writing output file: " + *out_path);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Exact epr-sequence and equimodular-inverse toolkit"};
    app.require_subcommand(1);

    std::string file_arg;
    auto* cmd_epr = app.add_subcommand("epr", "Print the epr-sequence of a symmetric matrix");
    cmd_epr->add_option("file", file_arg, "matrix file, or - for stdin")->required();
    auto* cmd_epr2 =
        app.add_subcommand("epr2", "Print the epr-sequence over GF(2) of a symmetric 0-1 matrix");
    cmd_epr2->add_option("file", file_arg, "matrix file, or - for stdin")->required();
    auto* cmd_inverse =
        app.add_subcommand("inverse", "Print the exact rational inverse of a matrix");
    cmd_inverse->add_option("file", file_arg, "matrix file, or - for stdin")->required();
    auto* cmd_analyze = app.add_subcommand("analyze", "Print a JSON bundle of all facts");
    cmd_analyze->add_option("file", file_arg, "matrix file, or - for stdin")->required();

    bool graph_edges_only = false;
    auto* cmd_graph = app.add_subcommand(
        "graph", "Print odd-girth / bipartite / odd-cycle facts, by search and from the epr-sequence");
    cmd_graph->add_option("file", file_arg, "matrix file, or - for stdin")->required();
    cmd_graph->add_flag("--edges", graph_edges_only,
                        "print the graph in the text format instead of JSON facts");

    std::string pattern_text, seq_text;
    auto* cmd_match = app.add_subcommand("match", "Match a sequence against a pattern");
    cmd_match->add_option("--pattern", pattern_text, "pattern, e.g. (NS)*NAA")->required();
    cmd_match->add_option("--seq", seq_text, "sequence word, e.g. NSNAA")->required();

    std::string kind_name;
    int gen_n = 0;
    std::string left_spec, right_spec;
    std::optional<std::string> out_path;
    auto* cmd_generate = app.add_subcommand("generate", "Write a named matrix");
    cmd_generate->add_option("--kind", kind_name, "cycle | ones | identity | jn-2i | zero | kron")
        ->required();
    cmd_generate->add_option("--n", gen_n, "order for the base kinds");
    cmd_generate->add_option("--left", left_spec, "kron left factor, kind:n");
    cmd_generate->add_option("--right", right_spec, "kron right factor, kind:n");
    std::string gen_out;
    cmd_generate->add_option("--out", gen_out, "output file (default stdout)");

    int scan_n = 0;
    std::string scan_mode_name_arg = "conjecture";
    std::string shard_text = "0/1";
    std::string properties_csv = "forbidden,dichotomy,epr2,battery,oddgirth";
    std::string checkpoint_path;
    std::uint64_t checkpoint_every = 0;
    bool resume = false;
    bool canonical_census = false;
    int jobs = 1;
    std::string scan_out;
    auto* cmd_scan = app.add_subcommand("scan", "Exhaustive scan over symmetric 0-1 matrices");
    cmd_scan->add_option("--n", scan_n, "matrix order")->required();
    cmd_scan->add_option("--mode", scan_mode_name_arg, "conjecture | properties")->required();
    cmd_scan->add_option("--shard", shard_text, "shard as index/count (default 0/1)");
    cmd_scan->add_option("--properties", properties_csv,
                         "comma list: forbidden,dichotomy,epr2,battery,oddgirth");
    cmd_scan->add_option("--checkpoint", checkpoint_path, "checkpoint file path");
    cmd_scan->add_option("--checkpoint-every", checkpoint_every,
                         "masks between checkpoints (default 2^20)");
    cmd_scan->add_flag("--resume", resume, "resume from the checkpoint file");
    cmd_scan->add_flag("--canonical-census", canonical_census,
                       "also count NAA-enders up to permutation similarity (n <= 8)");
    cmd_scan->add_option("--jobs", jobs, "parallel workers (default 1)");
    cmd_scan->add_option("--out", scan_out, "write the report here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("eprlab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_epr->parsed()) {
            const IntMatrix m = detail::read_matrix_arg(file_arg, in);
            out << epr(m).str() << "\n";
            return kExitOk;
        }
        if (cmd_epr2->parsed()) {
            const IntMatrix m = detail::read_matrix_arg(file_arg, in);
            out << epr2(m).str() << "\n";
            return kExitOk;
        }
        if (cmd_inverse->parsed()) {
            const IntMatrix m = detail::read_matrix_arg(file_arg, in);
            write_matrix(out, inverse(m));
            return kExitOk;
        }
        if (cmd_analyze->parsed()) {
            const IntMatrix m = detail::read_matrix_arg(file_arg, in);
            out << detail::analyze_json(m).dump(2) << "\n";
            return kExitOk;
        }
        if (cmd_graph->parsed()) {
            const IntMatrix m = detail::read_matrix_arg(file_arg, in);
            if (graph_edges_only) {
                write_graph(out, graph_of(m));
                return kExitOk;
            }
            Json j;
            j["version"] = std::string(kVersion);
            j["n"] = m.order();
            const EprSequence seq = epr(m); // graph_of checks the diagonal below
            j.update(detail::graph_facts_json(m, seq));
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (cmd_match->parsed()) {
            EprPattern pat;
            EprSequence seq;
            try {
                pat = parse_pattern(pattern_text);
                seq = parse_sequence(seq_text);
            } catch (const ParseError& e) {
                err << e.what() << "\n";
                return kExitUsage;
            }
            return matches(seq, pat) ? kExitOk : kExitNoMatch;
        }
        if (cmd_generate->parsed()) {
            IntMatrix m(1);
            if (kind_name == "kron") {
                if (left_spec.empty() || right_spec.empty()) {
                    err << "generate --kind kron requires --left and --right\n";
                    return kExitUsage;
                }
                m = kronecker(detail::matrix_from_spec(left_spec),
                              detail::matrix_from_spec(right_spec));
            } else {
                if (gen_n <= 0) {
                    err << "generate requires --n for kind " << kind_name << "\n";
                    return kExitUsage;
                }
                m = construct(parse_matrix_kind(kind_name), gen_n);
            }
            detail::emit(matrix_to_string(m),
                         gen_out.empty() ? std::nullopt : std::make_optional(gen_out), out);
            return kExitOk;
        }
        if (cmd_scan->parsed()) {
            const int cap = detail::enumeration_cap_from_env(err);
            if (scan_n < 1 || scan_n > cap)
                throw PreconditionError("scan order must be in [1, " + std::to_string(cap) +
                                        "], got " + std::to_string(scan_n));
            ScanMode mode;
            if (scan_mode_name_arg == "conjecture")
                mode = ScanMode::Conjecture;
            else if (scan_mode_name_arg == "properties")
                mode = ScanMode::Properties;
            else {
                err << "unknown scan mode '" << scan_mode_name_arg << "'\n";
                return kExitUsage;
            }
            const Shard shard = detail::parse_shard(shard_text);
            const PropertySet props =
                mode == ScanMode::Properties ? PropertySet::parse(properties_csv) : PropertySet{};
            if (resume && checkpoint_path.empty()) {
                err << "--resume requires --checkpoint\n";
                return kExitUsage;
            }
            if (!checkpoint_path.empty() && jobs > 1) {
                err << "checkpointing requires --jobs 1\n";
                return kExitUsage;
            }
            if (jobs < 1) {
                err << "--jobs must be >= 1\n";
                return kExitUsage;
            }

            ScanReport report;
            if (!checkpoint_path.empty()) {
                report = scan_with_checkpoints(scan_n, mode, props, shard, checkpoint_path,
                                               checkpoint_every, resume);
            } else {
                ScanOptions opt;
                opt.shard = shard;
                opt.jobs = jobs;
                report = mode == ScanMode::Conjecture ? scan_conjecture(scan_n, opt)
                                                      : scan_properties(scan_n, props, opt);
            }

            Json j = scan_report_to_json(report);
            if (canonical_census && mode == ScanMode::Conjecture) {
                if (scan_n > 8)
                    throw PreconditionError("--canonical-census supports n <= 8 only");
                std::set<BigInt> classes;
                const auto [lo, hi] = shard_range(scan_n, shard);
                for_each_in_range(scan_n, lo, hi,
                                  [&](const BigInt& mask, const FlatMatrix& flat) {
                                      const std::int64_t d = det_flat(flat);
                                      if (d == 0 || !ends_naa_flat(flat, d)) return;
                                      classes.insert(
                                          canonical_mask(matrix_from_mask(scan_n, mask)));
                                  });
                j["counts"]["naa_canonical_classes"] = classes.size();
            }
            detail::emit(j.dump(2) + "\n",
                         scan_out.empty() ? std::nullopt : std::make_optional(scan_out), out);
            return kExitOk;
        }
        err << "no verb given\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitPrecondition;
    }
}

} // namespace eprlab::cli
