// splitmat command line front end.
//
// Exit codes: 0 all pass, 1 any fail, 2 usage or parse error,
// 3 precondition-unmet only.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "splitmat/io.hpp"
#include "splitmat/theorems.hpp"

namespace {

using namespace splitmat;

std::vector<std::string> split_commas(const std::string& list) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : list) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string opt_text(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : "inf";
}

void apply_filter(EnumerationSpec& spec, const std::string& filter) {
    const auto ge_value = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (filter.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string digits = filter.substr(prefix.size());
        if (digits.empty()) throw Error("filter '" + filter + "' needs a number");
        std::size_t value = 0;
        for (const char c : digits) {
            if (c < '0' || c > '9') throw Error("filter '" + filter + "' needs a number");
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        return value;
    };
    if (filter == "connected")
        spec.require_connected = true;
    else if (filter == "disconnected")
        spec.require_disconnected = true;
    else if (filter == "loopless")
        spec.require_loopless = true;
    else if (filter == "coloopless")
        spec.require_coloopless = true;
    else if (auto g = ge_value("girth>="))
        spec.min_girth = g;
    else if (auto c = ge_value("cogirth>="))
        spec.min_cogirth = c;
    else if (auto k = ge_value("nconn>="))
        spec.min_n_connected = k;
    else
        throw Error("unknown filter '" + filter +
                    "' (use connected, disconnected, loopless, coloopless, girth>=G, cogirth>=C, nconn>=K)");
}

struct ReportSink {
    std::ostream& out;
    std::ofstream file;
    std::size_t passes = 0, fails = 0, unmet = 0;

    explicit ReportSink(std::ostream& o, const std::string& path) : out(o) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw Error("cannot write file '" + path + "'");
        }
    }

    void take(const CheckReport& r) {
        switch (r.verdict) {
            case Verdict::pass: ++passes; break;
            case Verdict::fail: ++fails; break;
            case Verdict::precondition_unmet: ++unmet; break;
        }
        const std::string line = r.render();
        out << line << "\n";
        if (file.is_open()) file << line << "\n";
    }

    int exit_code() const {
        if (fails > 0) return 1;
        if (passes > 0) return 0;
        return unmet > 0 ? 3 : 0;
    }
};

int verdict_exit(const CheckReport& r) {
    switch (r.verdict) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::precondition_unmet: return 3;
    }
    return 2;
}

struct CheckArgs {
    std::string statement;
    std::string input;
    std::string x, y, z, v, x_set;
    std::size_t n = 2;
    bool n_given = false;
    std::uint64_t seed = 0;
    bool lenient = false;
    bool alt_reading = false;
    std::size_t samples = 128;
    std::size_t exhaustive = 0;
};

void require_arg(bool present, const std::string& what, const std::string& statement) {
    if (!present) throw Error(what + " is required for " + statement);
}

int run_check(const CheckArgs& a) {
    VerifyOptions opts;
    opts.lenient = a.lenient;
    opts.alt_cocircuit_reading = a.alt_reading;
    opts.seed = a.seed;
    opts.sample_subsets = a.samples;

    const auto& s = a.statement;
    CheckReport report;

    if (s == "figure-1" || s == "figure-2") {
        report = (s == "figure-1") ? figure1_scenario() : figure2_scenario();
        if (a.exhaustive > 0) {
            const auto witnesses =
                (s == "figure-1") ? figure1_witness_search(a.exhaustive) : figure2_witness_search(a.exhaustive);
            report.detail += "; search<=" + std::to_string(a.exhaustive) +
                             "-edges-witnesses=" + std::to_string(witnesses.size());
            if (witnesses.empty()) report.verdict = Verdict::fail;
        }
    } else if (s == "commutation") {
        require_arg(!a.input.empty(), "a graph file", s);
        require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
        report = commutation_check(read_graph_file(a.input), a.x, a.y);
    } else if (s == "lemma-1.1" || s == "splitting-lemma") {
        require_arg(!a.input.empty(), "a graph file", s);
        require_arg(!a.v.empty() && !a.x.empty() && !a.y.empty() && !a.z.empty(), "--v, --x, --y and --z", s);
        report = splitting_lemma_check(read_graph_file(a.input), a.v, a.x, a.y, a.z);
    } else {
        require_arg(!a.input.empty(), "a matroid file", s);
        const BinaryMatroid m = read_matroid_file(a.input);
        const auto x_labels = split_commas(a.x_set);
        if (s == "lemma-1.3") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_lemma_1_3(m, a.x, a.y, opts);
        } else if (s == "lemma-1.4") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_lemma_1_4(m, a.x, a.y, opts);
        } else if (s == "lemma-1.6") {
            report = verify_lemma_1_6(m, x_labels, opts);
        } else if (s == "lemma-1.7") {
            report = verify_lemma_1_7(m, x_labels, opts);
        } else if (s == "lemma-1.8") {
            require_arg(a.n_given, "--n", s);
            report = verify_lemma_1_8(m, a.n, opts);
        } else if (s == "lemma-2.1") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_lemma_2_1(m, a.x, a.y, opts);
        } else if (s == "lemma-2.2") {
            report = verify_lemma_2_2(m, opts);
        } else if (s == "lemma-2.3") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_lemma_2_3(m, a.x, a.y, opts);
        } else if (s == "lemma-2.3-converse") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_lemma_2_3_converse(m, a.x, a.y, opts);
        } else if (s == "thm-1.9") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_thm_1_9(m, a.x, a.y, opts);
        } else if (s == "thm-1.10") {
            require_arg(!a.x.empty() && !a.y.empty(), "--x and --y", s);
            report = verify_thm_1_10(m, a.x, a.y, opts);
        } else if (s == "thm-1.11") {
            require_arg(a.n_given, "--n", s);
            report = verify_thm_1_11(m, x_labels, a.n, opts);
        } else {
            throw UnknownStatement(s);
        }
    }
    std::cout << report.render() << "\n";
    return verdict_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitmat - splitting operation toolkit for binary matroids"};
    app.require_subcommand(1);
    int rc = 0;

    // rank / circuits / cocircuits / components / connectivity
    std::string input;
    auto* rank_cmd = app.add_subcommand("rank", "GF(2) rank of a matroid file");
    rank_cmd->add_option("file", input, "matroid file")->required();
    rank_cmd->callback([&] { std::cout << read_matroid_file(input).rank() << "\n"; });

    auto* circuits_cmd = app.add_subcommand("circuits", "list the circuits");
    circuits_cmd->add_option("file", input, "matroid file")->required();
    circuits_cmd->callback([&] {
        const auto m = read_matroid_file(input);
        for (const auto c : m.circuit_masks()) std::cout << m.set_text(c) << "\n";
    });

    auto* cocircuits_cmd = app.add_subcommand("cocircuits", "list the cocircuits");
    cocircuits_cmd->add_option("file", input, "matroid file")->required();
    cocircuits_cmd->callback([&] {
        const auto m = read_matroid_file(input);
        for (const auto c : m.cocircuit_masks()) std::cout << m.set_text(c) << "\n";
    });

    auto* components_cmd = app.add_subcommand("components", "list the connected components");
    components_cmd->add_option("file", input, "matroid file")->required();
    components_cmd->callback([&] {
        const auto m = read_matroid_file(input);
        for (const auto c : m.components()) std::cout << m.set_text(c) << "\n";
    });

    auto* conn_cmd = app.add_subcommand("connectivity", "connectivity summary");
    conn_cmd->add_option("file", input, "matroid file")->required();
    conn_cmd->callback([&] {
        const auto m = read_matroid_file(input);
        // Compute everything before printing so guard errors cannot leave
        // partial output behind.
        const auto loops = m.set_text(m.loop_mask());
        const auto coloops = m.set_text(m.coloop_mask());
        const bool connected = m.is_connected();
        const auto component_count = m.components().size();
        const auto girth = opt_text(m.girth());
        const auto cogirth = opt_text(m.cogirth());
        const auto tutte = opt_text(m.tutte_connectivity());
        const auto vertical = opt_text(m.vertical_connectivity());
        std::cout << "elements " << m.size() << "\n";
        std::cout << "rank " << m.rank() << "\n";
        std::cout << "loops " << loops << "\n";
        std::cout << "coloops " << coloops << "\n";
        std::cout << "connected " << (connected ? "true" : "false") << "\n";
        std::cout << "components " << component_count << "\n";
        std::cout << "girth " << girth << "\n";
        std::cout << "cogirth " << cogirth << "\n";
        std::cout << "tutte-connectivity " << tutte << "\n";
        std::cout << "vertical-connectivity " << vertical << "\n";
    });

    // split
    std::string split_x, split_out, split_result_path, split_mode = "auto";
    auto* split_cmd = app.add_subcommand("split", "apply the splitting operation");
    split_cmd->add_option("file", input, "matroid file")->required();
    split_cmd->add_option("-x,--x", split_x, "comma separated split elements")->required();
    split_cmd->add_option("-o,--out", split_out, "write the split matroid here");
    split_cmd->add_option("--result", split_result_path, "write the full split result here");
    split_cmd->add_option("--mode", split_mode, "pair|set (default: pair when |X|=2)");
    split_cmd->callback([&] {
        const auto m = read_matroid_file(input);
        const auto labels = split_commas(split_x);
        SplitMode mode;
        if (split_mode == "auto")
            mode = (labels.size() == 2) ? SplitMode::pair : SplitMode::set;
        else if (split_mode == "pair")
            mode = SplitMode::pair;
        else if (split_mode == "set")
            mode = SplitMode::set;
        else
            throw Error("--mode must be 'pair' or 'set'");
        if (mode == SplitMode::pair && labels.size() != 2)
            throw Error("pair mode needs exactly two elements");
        const SplitResult sr = (mode == SplitMode::pair) ? split_pair(m, labels[0], labels[1])
                                                         : split_set(m, m.mask_of(labels), mode);
        const std::string text = write_matroid(sr.split);
        if (split_out.empty())
            std::cout << text;
        else
            write_file(split_out, text);
        if (!split_result_path.empty()) write_file(split_result_path, write_split_result(sr));
    });

    // graph-split
    std::string gx, gy, gout;
    auto* gsplit_cmd = app.add_subcommand("graph-split", "split two adjacent edges away from their shared vertex");
    gsplit_cmd->add_option("file", input, "graph file")->required();
    gsplit_cmd->add_option("-x,--x", gx, "first edge")->required();
    gsplit_cmd->add_option("-y,--y", gy, "second edge")->required();
    gsplit_cmd->add_option("-o,--out", gout, "write the split graph here");
    gsplit_cmd->callback([&] {
        const auto g = read_graph_file(input);
        const std::string text = write_graph(split_graph(g, gx, gy));
        if (gout.empty())
            std::cout << text;
        else
            write_file(gout, text);
    });

    // check
    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "run one statement checker");
    check_cmd->add_option("statement", check_args.statement, "statement id")->required();
    check_cmd->add_option("file", check_args.input, "matroid or graph file");
    check_cmd->add_option("--x", check_args.x, "element or edge label");
    check_cmd->add_option("--y", check_args.y, "element or edge label");
    check_cmd->add_option("--z", check_args.z, "edge label (splitting lemma)");
    check_cmd->add_option("--v", check_args.v, "vertex id (splitting lemma)");
    check_cmd->add_option("--X", check_args.x_set, "comma separated element set");
    auto* n_opt = check_cmd->add_option("--n", check_args.n, "connectivity parameter");
    check_cmd->add_option("--seed", check_args.seed, "seed for sampling checkers");
    check_cmd->add_option("--samples", check_args.samples, "subset sample size when |E|>7");
    check_cmd->add_flag("--lenient", check_args.lenient, "run conclusions even when gates fail");
    check_cmd->add_flag("--alt-cocircuit-reading", check_args.alt_reading,
                        "thm-1.10: read 'contains no 2-circuit' as 'meets no 2-circuit'");
    check_cmd->add_option("--exhaustive", check_args.exhaustive,
                          "figure scenarios: also search all multigraphs with at most this many edges");
    check_cmd->callback([&] {
        check_args.n_given = n_opt->count() > 0;
        rc = run_check(check_args);
    });

    // enum
    std::size_t enum_n = 4;
    std::vector<std::string> filters;
    std::string enum_check, report_path;
    std::uint64_t enum_seed = 0;
    bool enum_lenient = false;
    long long rank_min = -1, rank_max = -1;
    const auto as_rank = [](long long v) -> std::optional<std::size_t> {
        if (v < 0) return std::nullopt;
        return static_cast<std::size_t>(v);
    };
    auto* enum_cmd = app.add_subcommand("enum", "enumerate all binary matroids on n elements");
    enum_cmd->add_option("--n", enum_n, "ground set size (<=8)")->required();
    enum_cmd->add_option("--filter", filters, "connected|disconnected|loopless|coloopless|girth>=G|cogirth>=C|nconn>=K");
    enum_cmd->add_option("--rank-min", rank_min, "minimum rank");
    enum_cmd->add_option("--rank-max", rank_max, "maximum rank");
    enum_cmd->add_option("--check", enum_check, "run this statement on every enumerated matroid");
    enum_cmd->add_option("--report", report_path, "also write report lines to this file");
    enum_cmd->add_option("--seed", enum_seed, "seed for sampling checkers");
    enum_cmd->add_flag("--lenient", enum_lenient, "run conclusions even when gates fail");
    enum_cmd->callback([&] {
        EnumerationSpec spec;
        spec.ground_size = enum_n;
        spec.min_rank = as_rank(rank_min);
        spec.max_rank = as_rank(rank_max);
        for (const auto& f : filters) apply_filter(spec, f);
        if (enum_check.empty()) {
            const std::size_t count = enumerate_binary_matroids(spec, [](const BinaryMatroid&) {});
            std::cout << "scanned " << count << " matroids\n";
            return;
        }
        VerifyOptions opts;
        opts.seed = enum_seed;
        opts.lenient = enum_lenient;
        ReportSink sink(std::cout, report_path);
        const std::size_t count = enumerate_binary_matroids(spec, [&](const BinaryMatroid& m) {
            run_statement_on(enum_check, m, opts, [&](const CheckReport& r) { sink.take(r); });
        });
        std::cout << "scanned=" << count << " checks=" << (sink.passes + sink.fails + sink.unmet)
                  << " pass=" << sink.passes << " fail=" << sink.fails
                  << " precondition-unmet=" << sink.unmet << "\n";
        rc = sink.exit_code();
    });

    // search
    std::string search_statement;
    auto* search_cmd = app.add_subcommand("search", "stream counterexample (fail) reports for a statement");
    search_cmd->add_option("statement", search_statement, "statement id")->required();
    search_cmd->add_option("--n", enum_n, "ground set size (<=8)")->required();
    search_cmd->add_option("--filter", filters, "enumeration filters");
    search_cmd->add_option("--rank-min", rank_min, "minimum rank");
    search_cmd->add_option("--rank-max", rank_max, "maximum rank");
    search_cmd->add_option("--report", report_path, "also write fail lines to this file");
    search_cmd->add_option("--seed", enum_seed, "seed for sampling checkers");
    search_cmd->callback([&] {
        EnumerationSpec spec;
        spec.ground_size = enum_n;
        spec.min_rank = as_rank(rank_min);
        spec.max_rank = as_rank(rank_max);
        for (const auto& f : filters) apply_filter(spec, f);
        VerifyOptions opts;
        opts.seed = enum_seed;
        ReportSink sink(std::cout, report_path);
        const SearchSummary summary =
            search_counterexamples(search_statement, spec, [&](const CheckReport& r) { sink.take(r); }, opts);
        std::cout << "scanned=" << summary.matroids << " checks=" << summary.checks
                  << " fails=" << summary.fails << "\n";
        rc = summary.fails > 0 ? 1 : 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const splitmat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
