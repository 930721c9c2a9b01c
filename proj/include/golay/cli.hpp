#pragma once
// Command-line surface.  Subcommands: construct, verify, table, encode,
// decode, simulate.  Exit codes: 0 success, 1 usage or input error, 2 a
// verification that ran to completion and failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golay/analysis.hpp"
#include "golay/codec.hpp"
#include "golay/construction.hpp"

namespace golay::cli {

namespace detail {

struct CommonOpts {
    std::string parity = default_parity().to_string();
    int variant = 1;
    std::string g78 = default_g78_choices().to_string();
    std::string seed_file;
    std::string companion_file;
    std::string out_path;
    std::string format = "text";
};

inline void add_code_options(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--p", o.parity, "Seed parity rows, e.g. 1101,0111,1110,1011");
    sub->add_option("--variant", o.variant, "Companion variant 1..8")->check(CLI::Range(1, 8));
    sub->add_option("--g78", o.g78, "Half-row choices x,y,r71,r72,r81,r82 for variants 7/8");
    sub->add_option("--seed-file", o.seed_file, "Read the seed generator from a matrix file");
    sub->add_option("--companion-file", o.companion_file, "Read the companion generator from a matrix file");
}

inline void add_output_options(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--out", o.out_path, "Write output to a file instead of stdout");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
}

inline BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return BitMatrix::from_string(buf.str());
}

inline GolayCode build_code(const CommonOpts& o) {
    if (!o.seed_file.empty() || !o.companion_file.empty()) {
        if (o.seed_file.empty() || o.companion_file.empty())
            throw std::invalid_argument("--seed-file and --companion-file must be given together");
        const Code844 seed = Code844::from_generator(read_matrix_file(o.seed_file));
        const Code844 comp = Code844::from_generator(read_matrix_file(o.companion_file));
        return direct_sum(seed, comp);
    }
    const ParitySubmatrix p = ParitySubmatrix::from_string(o.parity);
    const Code844 seed = build_systematic(p);
    if (o.variant <= 6)
        return direct_sum(seed, apply_permutation(p, companion_permutations()[static_cast<std::size_t>(o.variant - 1)]));
    const auto pair78 = build_g7_g8(p, G78Choices::from_string(o.g78));
    return direct_sum(seed, o.variant == 7 ? pair78.first : pair78.second);
}

inline void emit(const CommonOpts& o, std::ostream& out, const std::string& payload) {
    if (o.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
    f << payload;
}

inline nlohmann::json report_json(const ConstructionReport& r) {
    nlohmann::json wd = nlohmann::json::object();
    for (const auto& [w, c] : r.weight_dist) wd[std::to_string(w)] = c;
    return {{"n", r.n},           {"k", r.k},
            {"d", r.d},           {"weight_dist", wd},
            {"self_dual", r.self_dual}, {"doubly_even", r.doubly_even},
            {"disjoint", r.disjoint},   {"lemma2_ok", r.lemma2_ok}};
}

inline nlohmann::json stats_json(const SimStats& s) {
    return {{"p", s.p},           {"trials", s.trials},
            {"seed", s.seed},     {"word_errors", s.word_errors},
            {"wer", s.wer},       {"channel_ber", s.channel_ber}};
}

// The 24 orderings of the weight-3 tuples, each a seed parity block, in
// lexicographic order of the joined row strings.
inline std::vector<ParitySubmatrix> all_seed_parities() {
    std::array<std::string, 4> rows = {"0111", "1011", "1101", "1110"};
    std::sort(rows.begin(), rows.end());
    std::vector<ParitySubmatrix> out;
    do {
        out.push_back(ParitySubmatrix::from_string(rows[0] + "," + rows[1] + "," + rows[2] + "," + rows[3]));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

// Full sweep: every seed ordering, all eight companions apiece, plus the
// table properties, the block design and the two classic-construction
// equivalences.  Returns true iff everything passes.
inline bool run_full_verify(const CommonOpts& o, std::ostream& out) {
    nlohmann::json jseeds = nlohmann::json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (const ParitySubmatrix& p : all_seed_parities()) {
        const Code844 seed = build_systematic(p);
        bool cons_ok = true;
        for (int r = 1; r <= 6; ++r) {
            const Code844 comp = apply_permutation(p, companion_permutations()[static_cast<std::size_t>(r - 1)]);
            if (!verify_golay(direct_sum(seed, comp)).ok()) cons_ok = false;
        }
        const auto ns = enumerate_nonsystematic_companions(p);
        if (ns.size() != 2) cons_ok = false;
        for (const Code844& comp : ns)
            if (!verify_golay(direct_sum(seed, comp)).ok()) cons_ok = false;
        const Weight4Table table = weight4_table(p);
        const bool props_ok = verify_properties(table).ok();
        const bool design_ok = props_ok && incidence_matrix(table).ok();
        all_ok = all_ok && cons_ok && props_ok && design_ok;
        text << "seed " << p.to_string() << ": constructions "
             << (cons_ok ? "ok" : "FAIL") << ", properties " << (props_ok ? "ok" : "FAIL")
             << ", design " << (design_ok ? "ok" : "FAIL") << '\n';
        jseeds.push_back({{"parity", p.to_string()},
                          {"constructions_ok", cons_ok},
                          {"properties_ok", props_ok},
                          {"design_ok", design_ok}});
    }
    const bool turyn_ok = check_turyn_equivalence();
    const bool forney_ok = check_forney_equivalence();
    all_ok = all_ok && turyn_ok && forney_ok;
    text << "turyn_equivalence: " << (turyn_ok ? "ok" : "FAIL") << '\n';
    text << "forney_equivalence: " << (forney_ok ? "ok" : "FAIL") << '\n';
    text << "result: " << (all_ok ? "pass" : "fail") << '\n';
    if (o.format == "machine") {
        nlohmann::json j = {{"seeds", jseeds},
                            {"turyn_ok", turyn_ok},
                            {"forney_ok", forney_ok},
                            {"pass", all_ok}};
        emit(o, out, j.dump(2) + "\n");
    } else {
        emit(o, out, text.str());
    }
    return all_ok;
}

inline std::vector<std::string> gather_words(const std::vector<std::string>& positional,
                                             std::istream& in) {
    if (!positional.empty()) return positional;
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        words.push_back(line.substr(first, last - first + 1));
    }
    return words;
}

}  // namespace detail

// Runs the tool on an argument list (without the program name).  All output
// goes to the given streams; encode/decode read words from `in` when none are
// passed as arguments.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    using detail::CommonOpts;
    CLI::App app{"(24,12,8) Golay code via the direct sum of two array codes"};
    app.require_subcommand(1);

    CommonOpts construct_o, verify_o, table_o, encode_o, decode_o, simulate_o;
    std::vector<std::string> encode_words, decode_words;
    bool table_design = false;
    double sim_p = 0.0;
    long long sim_trials = 10000;
    std::uint64_t sim_seed = 1;

    CLI::App* c_construct = app.add_subcommand("construct", "Print the 12x24 generator matrix");
    detail::add_code_options(c_construct, construct_o);
    detail::add_output_options(c_construct, construct_o);

    CLI::App* c_verify = app.add_subcommand(
        "verify", "Verify one construction, or everything when no variant is given");
    detail::add_code_options(c_verify, verify_o);
    detail::add_output_options(c_verify, verify_o);

    CLI::App* c_table = app.add_subcommand("table", "Print the weight-4 codeword table");
    c_table->add_option("--p", table_o.parity, "Seed parity rows");
    c_table->add_option("--g78", table_o.g78, "Half-row choices for companions 7/8");
    c_table->add_flag("--q", table_design, "Print the block-design incidence matrix instead");
    detail::add_output_options(c_table, table_o);

    CLI::App* c_encode = app.add_subcommand("encode", "Encode 12-bit messages");
    detail::add_code_options(c_encode, encode_o);
    detail::add_output_options(c_encode, encode_o);
    c_encode->add_option("words", encode_words, "Messages as 12-symbol bit strings");

    CLI::App* c_decode = app.add_subcommand("decode", "Decode 24-bit received words");
    detail::add_code_options(c_decode, decode_o);
    detail::add_output_options(c_decode, decode_o);
    c_decode->add_option("words", decode_words, "Received words as 24-symbol bit strings");

    CLI::App* c_simulate = app.add_subcommand("simulate", "Monte Carlo over a binary symmetric channel");
    detail::add_code_options(c_simulate, simulate_o);
    detail::add_output_options(c_simulate, simulate_o);
    c_simulate->add_option("--p-flip", sim_p, "Crossover probability")->required();
    c_simulate->add_option("--trials", sim_trials, "Number of trials");
    c_simulate->add_option("--seed", sim_seed, "Random seed");

    std::vector<std::string> argv_storage = args;
    argv_storage.insert(argv_storage.begin(), "golay");
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return 1;
    }

    try {
        if (*c_construct) {
            const GolayCode code = detail::build_code(construct_o);
            if (construct_o.format == "machine") {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& r : code.generator().rows()) rows.push_back(r.to_string());
                nlohmann::json j = {{"n", 24}, {"k", 12}, {"generator", rows}};
                detail::emit(construct_o, out, j.dump(2) + "\n");
            } else {
                detail::emit(construct_o, out, code.generator().to_string());
            }
            return 0;
        }
        if (*c_verify) {
            const bool single = c_verify->count("--variant") > 0 ||
                                !verify_o.seed_file.empty() || !verify_o.companion_file.empty();
            if (!single) return detail::run_full_verify(verify_o, out) ? 0 : 2;
            const ConstructionReport rep = verify_golay(detail::build_code(verify_o));
            if (verify_o.format == "machine")
                detail::emit(verify_o, out, detail::report_json(rep).dump(2) + "\n");
            else
                detail::emit(verify_o, out, rep.to_text());
            return rep.ok() ? 0 : 2;
        }
        if (*c_table) {
            const ParitySubmatrix p = ParitySubmatrix::from_string(table_o.parity);
            const Weight4Table t =
                c_table->count("--g78") > 0
                    ? weight4_table(p, G78Choices::from_string(table_o.g78))
                    : weight4_table(p);
            if (table_design) {
                const IncidenceMatrix im = incidence_matrix(t);
                if (table_o.format == "machine") {
                    nlohmann::json rows = nlohmann::json::array();
                    for (const auto& r : im.entries.rows()) rows.push_back(r.to_string());
                    nlohmann::json j = {{"v", im.v}, {"b", im.b},         {"r", im.r},
                                        {"k", im.k}, {"lambda", im.lambda}, {"rows", rows}};
                    detail::emit(table_o, out, j.dump(2) + "\n");
                } else {
                    detail::emit(table_o, out, incidence_to_text(im));
                }
            } else {
                detail::emit(table_o, out,
                             table_o.format == "machine" ? table_to_csv(t) : table_to_text(t));
            }
            return 0;
        }
        if (*c_encode) {
            const GolayCode code = detail::build_code(encode_o);
            std::ostringstream payload;
            for (const auto& w : detail::gather_words(encode_words, in))
                payload << code.encode(BitVector::from_string(w)).to_string() << '\n';
            detail::emit(encode_o, out, payload.str());
            return 0;
        }
        if (*c_decode) {
            const GolayCode code = detail::build_code(decode_o);
            const Trellis trellis(code);
            const auto words = detail::gather_words(decode_words, in);
            if (decode_o.format == "machine") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& w : words) {
                    const DecodeResult r = decode_trellis(BitVector::from_string(w), trellis);
                    arr.push_back({{"codeword", r.codeword.to_string()},
                                   {"message", r.message.to_string()},
                                   {"distance", r.distance},
                                   {"tie", r.tie}});
                }
                detail::emit(decode_o, out, arr.dump(2) + "\n");
            } else {
                std::ostringstream payload;
                for (const auto& w : words) {
                    const DecodeResult r = decode_trellis(BitVector::from_string(w), trellis);
                    payload << r.codeword.to_string() << ' ' << r.message.to_string() << ' '
                            << r.distance << ' ' << (r.tie ? 1 : 0) << '\n';
                }
                detail::emit(decode_o, out, payload.str());
            }
            return 0;
        }
        if (*c_simulate) {
            const SimStats st = simulate_bsc(detail::build_code(simulate_o), sim_p,
                                             sim_trials, sim_seed);
            if (simulate_o.format == "machine")
                detail::emit(simulate_o, out, detail::stats_json(st).dump(2) + "\n");
            else
                detail::emit(simulate_o, out, st.to_text());
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace golay::cli
