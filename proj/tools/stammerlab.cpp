// stammerlab: batch front end for the walk/placement/chain/history toolbox.
//
// Subcommands: enumerate, convert, verify, count, ansatz, render.
// Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
// STAMMERLAB_MAX_N caps enumeration sizes (default 7).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stammerlab/ansatz.hpp"
#include "stammerlab/convert.hpp"
#include "stammerlab/counting.hpp"
#include "stammerlab/growth.hpp"
#include "stammerlab/json_io.hpp"
#include "stammerlab/laguerre.hpp"
#include "stammerlab/poset.hpp"
#include "stammerlab/profile.hpp"
#include "stammerlab/render.hpp"
#include "stammerlab/verify.hpp"

using namespace stammerlab;
using nlohmann::json;

namespace {

struct GlobalOptions {
    bool json_output = false;
    std::string output_file;
    std::string seed_order = "canonical";
};

int max_n_cap() {
    if (const char* env = std::getenv("STAMMERLAB_MAX_N")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            return 7;
        }
    }
    return 7;
}

void write_output(const GlobalOptions& opts, const std::string& content) {
    if (opts.output_file.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.output_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.output_file);
    out << content;
}

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) parts.push_back(std::stoi(item));
    return Partition(std::move(parts));
}

mpq_class parse_rational(const std::string& text) {
    mpq_class value(text);
    value.canonicalize();
    return value;
}

// enumerate: stream objects of one kind, one JSON document per line.
int run_enumerate(const GlobalOptions& opts, const std::string& kind_name, int n,
                  const std::string& mu_text, const std::string& nu_text) {
    auto kind = kind_from_string(kind_name);
    std::ostringstream out;
    std::vector<json> items;
    auto emit = [&](json j) {
        if (opts.json_output)
            items.push_back(std::move(j));
        else
            out << j.dump() << '\n';
    };
    switch (*kind) {
        case ObjectKind::Stammering:
            for_each_stammering(n, parse_partition(mu_text), parse_partition(nu_text),
                                [&](const StammeringTableau& t) { emit(to_json(t)); });
            break;
        case ObjectKind::Rook:
            for_each_rook(n, [&](const RookPlacement& r) { emit(to_json(r)); });
            break;
        case ObjectKind::Chain:
            for_each_chain(n, [&](const ChainOfDyckShapes& c) { emit(to_json(c)); });
            break;
        case ObjectKind::Permutation:
            for_each_permutation(n, [&](const Permutation& s) { emit(to_json(s)); });
            break;
        case ObjectKind::Laguerre:
            for_each_history_of_rank(n, [&](const LaguerreHistory& h) { emit(to_json(h)); });
            break;
        case ObjectKind::DyckTableauKind:
            for (const DyckPath& d : all_dyck_paths(n))
                for_each_dyck_tableau(d, [&](const DyckTableau& t) { emit(to_json(t)); });
            break;
        case ObjectKind::DyckPathKind:
            for (const DyckPath& d : all_dyck_paths(n)) emit(to_json(d));
            break;
    }
    if (opts.json_output) out << json(items).dump() << '\n';
    write_output(opts, out.str());
    return 0;
}

int run_verify(const GlobalOptions& opts, const std::string& suite, int max_n) {
    VerifyReport rep = run_suite(suite, max_n);
    std::ostringstream out;
    if (opts.json_output) {
        json checks = json::array();
        for (const CheckResult& c : rep.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
        out << json{{"suite", rep.suite},
                    {"max_n", rep.max_n},
                    {"passed", rep.passed()},
                    {"checks", checks}}
                   .dump()
            << '\n';
    } else {
        for (const CheckResult& c : rep.checks) {
            out << (c.passed ? "PASS" : "FAIL") << ' ' << c.name;
            if (!c.details.empty()) out << " (" << c.details << ")";
            out << '\n';
        }
        out << (rep.passed() ? "OK" : "FAILED") << '\n';
    }
    write_output(opts, out.str());
    return rep.passed() ? 0 : 1;
}

int run_count(const GlobalOptions& opts, const std::string& what, int n, int k,
              const std::string& lam_text, bool oracle) {
    mpz_class value, brute;
    bool have_brute = false;
    if (what == "a") {
        value = a_count(n, k);
        if (oracle) {
            brute = a_count_bruteforce(n, k);
            have_brute = true;
        }
    } else {
        Partition lam = parse_partition(lam_text);
        if (what == "t-empty-to") {
            value = t_empty_to(n, lam);
            if (oracle) {
                brute = t_bruteforce(n, Partition(), lam);
                have_brute = true;
            }
        } else {
            value = t_to_empty(n, lam);
            if (oracle) {
                brute = t_bruteforce(n, lam, Partition());
                have_brute = true;
            }
        }
    }
    if (have_brute && brute != value)
        throw std::invalid_argument("closed form " + value.get_str() +
                                    " disagrees with the brute-force count " + brute.get_str());
    std::ostringstream out;
    if (opts.json_output) {
        json j{{"what", what}, {"n", n}, {"value", value.get_str()}};
        if (what == "a") j["k"] = k;
        if (what != "a") j["lambda"] = to_json(parse_partition(lam_text));
        if (have_brute) j["oracle"] = brute.get_str();
        out << j.dump() << '\n';
    } else {
        out << value.get_str() << '\n';
    }
    write_output(opts, out.str());
    return 0;
}

int run_ansatz(const GlobalOptions& opts, const std::string& op, const std::string& arg,
               const std::string& eval_q, const std::string& eval_a, const std::string& eval_b) {
    TrivariatePoly poly;
    if (op == "normal-order")
        poly = to_trivariate(normal_order(arg));
    else if (op == "prob")
        poly = unnormalized_prob(arg);
    else
        poly = partition_function(std::stoi(arg));

    std::ostringstream out;
    if (!eval_q.empty() || !eval_a.empty() || !eval_b.empty()) {
        mpq_class value = evaluate(poly, parse_rational(eval_q.empty() ? "1" : eval_q),
                                   parse_rational(eval_a.empty() ? "1" : eval_a),
                                   parse_rational(eval_b.empty() ? "1" : eval_b));
        if (opts.json_output)
            out << json{{"value", value.get_str()}}.dump() << '\n';
        else
            out << value.get_str() << '\n';
    } else {
        out << to_json(poly).dump() << '\n';
    }
    write_output(opts, out.str());
    return 0;
}

int run_render(const GlobalOptions& opts, const std::string& kind, const std::string& format_name,
               const std::string& input_path) {
    RenderFormat format = format_name == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
    json input = read_input(input_path);
    std::string content;
    if (kind == "growth")
        content = render_growth(GrowthDiagram::from_rook(rook_from_json(input)), format);
    else if (kind == "rook")
        content = render_rook(partial_rook_from_json(input), format);
    else if (kind == "stammering")
        content = render_stammering(stammering_from_json(input), format);
    else if (kind == "chain")
        content = render_chain(chain_from_json(input), format);
    else if (kind == "laguerre")
        content = render_laguerre(laguerre_from_json(input), format);
    else if (kind == "dyck-tableau")
        content = render_dyck_tableau(dyck_tableau_from_json(input), format);
    else if (kind == "permutation")
        content = render_permutation(permutation_from_json(input), format);
    else
        content = render_dyck_path(dyck_path_from_json(input), format);
    write_output(opts, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walks, rook placements, Dyck chains, Laguerre histories and the PASEP "
                 "matrix ansatz"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--json", opts.json_output, "machine-readable output");
    app.add_option("--output", opts.output_file, "write output to FILE instead of stdout");
    app.add_option("--seed-order", opts.seed_order, "enumeration order (only: canonical)")
        ->check(CLI::IsMember({"canonical"}));

    const int cap = max_n_cap();
    auto check_cap = [cap](int n, const std::string& what) {
        if (n > cap)
            throw CLI::ValidationError(what + " exceeds the STAMMERLAB_MAX_N cap of " +
                                       std::to_string(cap));
    };

    // enumerate
    std::string enum_kind, enum_mu, enum_nu;
    int enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list all objects of one kind and size");
    enumerate->fallthrough();
    enumerate->add_option("--kind", enum_kind, "object kind")
        ->required()
        ->check(CLI::IsMember({"stammering", "rook", "chain", "permutation", "laguerre",
                               "dyck-tableau", "dyck-path"}));
    enumerate->add_option("--n", enum_n, "size")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--mu", enum_mu, "start partition, e.g. 2,1 (stammering only)");
    enumerate->add_option("--nu", enum_nu, "end partition (stammering only)");

    // convert
    std::string conv_from, conv_to, conv_input;
    auto* conv = app.add_subcommand("convert", "convert between representations");
    conv->fallthrough();
    auto kind_check = CLI::IsMember({"stammering", "rook", "chain", "permutation", "laguerre",
                                     "dyck-tableau", "dyck-path"});
    conv->add_option("--from", conv_from, "source kind")->required()->check(kind_check);
    conv->add_option("--to", conv_to, "target kind")->required()->check(kind_check);
    conv->add_option("--input", conv_input, "input file (default: stdin)");

    // verify
    std::string verify_suite;
    int verify_max_n = 4;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->fallthrough();
    verify->add_option("suite", verify_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", verify_max_n, "exhaustive size bound (default 4)")
        ->check(CLI::NonNegativeNumber);

    // count
    std::string count_what, count_lam;
    int count_n = 0, count_k = 0;
    bool count_oracle = false;
    auto* count = app.add_subcommand("count", "closed-form counts with optional oracle check");
    count->fallthrough();
    count->add_option("what", count_what, "a | t-empty-to | t-to-empty")
        ->required()
        ->check(CLI::IsMember({"a", "t-empty-to", "t-to-empty"}));
    count->add_option("--n", count_n, "staircase size")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--k", count_k, "dot count (a only)");
    count->add_option("--lam", count_lam, "partition, e.g. 2,1");
    count->add_flag("--oracle", count_oracle, "cross-check against brute-force enumeration");

    // ansatz
    std::string ansatz_op, ansatz_arg, eval_q, eval_a, eval_b;
    auto* ansatz = app.add_subcommand("ansatz", "symbolic matrix-ansatz computations");
    ansatz->fallthrough();
    ansatz->add_option("op", ansatz_op, "normal-order | prob | z")
        ->required()
        ->check(CLI::IsMember({"normal-order", "prob", "z"}));
    ansatz->add_option("arg", ansatz_arg, "word over E/F, state over o/x, or N")->required();
    ansatz->add_option("--eval-q", eval_q, "evaluate at this rational q");
    ansatz->add_option("--eval-a", eval_a, "evaluate at this rational a = 1/alpha");
    ansatz->add_option("--eval-b", eval_b, "evaluate at this rational b = 1/beta");

    // render
    std::string render_kind, render_format = "ascii", render_input;
    auto* render = app.add_subcommand("render", "draw an object as text or SVG");
    render->fallthrough();
    render->add_option("--kind", render_kind, "object kind or 'growth' (takes a rook placement)")
        ->required()
        ->check(CLI::IsMember({"stammering", "rook", "chain", "permutation", "laguerre",
                               "dyck-tableau", "dyck-path", "growth"}));
    render->add_option("--format", render_format, "ascii | svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--input", render_input, "input file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) {
            check_cap(enum_n, "--n");
            return run_enumerate(opts, enum_kind, enum_n, enum_mu, enum_nu);
        }
        if (*conv) {
            json result = convert(read_input(conv_input), *kind_from_string(conv_from),
                                  *kind_from_string(conv_to));
            write_output(opts, result.dump() + "\n");
            return 0;
        }
        if (*verify) {
            check_cap(verify_max_n, "--max-n");
            return run_verify(opts, verify_suite, verify_max_n);
        }
        if (*count) return run_count(opts, count_what, count_n, count_k, count_lam, count_oracle);
        if (*ansatz) return run_ansatz(opts, ansatz_op, ansatz_arg, eval_q, eval_a, eval_b);
        if (*render) return run_render(opts, render_kind, render_format, render_input);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
