#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "multrans/laws.hpp"
#include "multrans/numeral.hpp"
#include "multrans/quotient.hpp"
#include "multrans/render.hpp"
#include "multrans/reports.hpp"
#include "multrans/transducer.hpp"
#include "multrans/traversal.hpp"

namespace multrans::cli {

namespace {

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file " + config.out_path);
    file << text;
    if (!file)
        throw std::runtime_error("cannot write output file " + config.out_path);
}

void print_step(std::ostream& out, const StepRecord& s) {
    out << "(c=" << s.carry_in << ", r=" << s.read << ") -> t=" << s.total
        << ", w=" << s.write << ", c'=" << s.carry_out << "\n";
}

template <class T>
void print_joined(std::ostream& out, const char* name, const std::vector<T>& xs) {
    out << name << ": ";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i == 0 ? "" : ",") << xs[i];
    out << "\n";
}

std::vector<nat> parse_digit_list(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("--digits must not be empty");
    std::vector<nat> digits;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            throw std::invalid_argument("--digits has an empty entry: " + text);
        for (char ch : token) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("--digits entry is not a number: " + token);
        }
        try {
            digits.push_back(std::stoull(token));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("--digits entry is out of range: " + token);
        }
    }
    if (text.back() == ',')
        throw std::invalid_argument("--digits has an empty entry: " + text);
    return digits;
}

void run_build(const RunConfig& config, std::ostream& out) {
    TransducerSpec spec{config.base, config.multiplier};
    const Transducer t = build(spec);
    std::ostringstream text;
    text << "base: " << spec.base << "\n";
    text << "multiplier: " << spec.multiplier << "\n";
    text << "states: " << t.states() << "\n";
    text << "transitions: " << t.transition_count() << "\n";
    for (nat c = 0; c < t.states(); ++c) {
        for (nat r = 0; r < spec.base; ++r)
            print_step(text, t.transition(c, r));
    }
    emit(config, text.str(), out);
}

void run_multiply(const RunConfig& config, std::ostream& out) {
    TransducerSpec spec{config.base, config.multiplier};
    const DigitString input = parse_numeral(config.value, config.base);
    const MultiplicationTrace trace = run(build(spec), input);
    std::ostringstream text;
    text << "product: " << format_numeral(trace.output) << "\n";
    for (const StepRecord& s : trace.steps)
        print_step(text, s);
    emit(config, text.str(), out);
}

void print_loop(std::ostream& out, const TransducerSpec& spec, const Loop& loop) {
    print_joined(out, "carries", loop.carries);
    print_joined(out, "reads", loop.reads);
    print_joined(out, "writes", loop.writes);
    out << "write value: " << to_nat(DigitString{spec.base, loop.writes}) << "\n";
    out << "length: " << loop.length() << "\n";
}

void run_loop(const RunConfig& config, std::ostream& out) {
    TransducerSpec spec{config.base, config.multiplier};
    const Transducer t = build(spec);
    std::ostringstream text;
    if (config.algo == "bfs") {
        print_loop(text, spec, shortest_zero_loop_bfs(t));
    } else if (config.algo == "dfs") {
        print_loop(text, spec, shortest_zero_loop_dfs(t));
    } else {
        const Loop a = shortest_zero_loop_bfs(t);
        const Loop b = shortest_zero_loop_dfs(t);
        print_loop(text, spec, a);
        text << "algorithms agree: " << (a == b ? "true" : "false") << "\n";
    }
    emit(config, text.str(), out);
}

void run_sweep(const RunConfig& config, std::ostream& out) {
    const std::vector<CellReport> reports =
        sweep(config.b_max, config.m_max, config.workers);
    const ReportFormat format =
        config.format == "json" ? ReportFormat::json : ReportFormat::csv;
    emit(config, write_reports(reports, format), out);
}

void run_quotient(const RunConfig& config, std::ostream& out) {
    if (config.n == 0 && config.n_max == 0)
        throw std::invalid_argument("quotient needs --n or --n-max");
    const nat lo = config.n == 0 ? 1 : config.n;
    const nat hi = config.n_max == 0 ? lo : config.n_max;
    if (hi < lo)
        throw std::invalid_argument("--n-max is below --n");
    const DigitSet ds = make_digit_set(config.base, parse_digit_list(config.digits));

    std::ostringstream text;
    for (nat n = lo; n <= hi; ++n) {
        const MembershipResult r = quotient_member(n, ds);
        if (r.is_member)
            text << "n=" << n << ": member, s=" << *r.witness_s
                 << ", product=" << *r.witness_product << "\n";
        else
            text << "n=" << n << ": not a member\n";
    }
    emit(config, text.str(), out);
}

void run_export_dot(const RunConfig& config, std::ostream& out) {
    TransducerSpec spec{config.base, config.multiplier};
    emit(config, to_dot(build(spec), default_style()), out);
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
    if (config.subcommand == "build")
        run_build(config, out);
    else if (config.subcommand == "multiply")
        run_multiply(config, out);
    else if (config.subcommand == "loop")
        run_loop(config, out);
    else if (config.subcommand == "sweep")
        run_sweep(config, out);
    else if (config.subcommand == "quotient")
        run_quotient(config, out);
    else if (config.subcommand == "export-dot")
        run_export_dot(config, out);
    else
        throw std::invalid_argument("unknown subcommand " + config.subcommand);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    RunConfig config;
    CLI::App app{"base-b multiplication transducer toolkit"};
    app.require_subcommand(1);

    CLI::App* build_cmd = app.add_subcommand("build", "print a transition table");
    build_cmd->add_option("--base", config.base, "numeral base")->required();
    build_cmd->add_option("--mult", config.multiplier, "multiplier")->required();
    build_cmd->add_option("--out", config.out_path, "output file");

    CLI::App* multiply_cmd =
        app.add_subcommand("multiply", "multiply a numeral by running the transducer");
    multiply_cmd->add_option("--base", config.base, "numeral base")->required();
    multiply_cmd->add_option("--mult", config.multiplier, "multiplier")->required();
    multiply_cmd->add_option("--value", config.value, "input numeral")->required();
    multiply_cmd->add_option("--out", config.out_path, "output file");

    CLI::App* loop_cmd =
        app.add_subcommand("loop", "find the shortest loop through carry 0");
    loop_cmd->add_option("--base", config.base, "numeral base")->required();
    loop_cmd->add_option("--mult", config.multiplier, "multiplier")->required();
    loop_cmd->add_option("--algo", config.algo, "search algorithm")
        ->check(CLI::IsMember({"bfs", "dfs", "both"}));
    loop_cmd->add_option("--out", config.out_path, "output file");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "verify loop laws over a (b, m) grid");
    sweep_cmd->add_option("--b-max", config.b_max, "largest base")->required();
    sweep_cmd->add_option("--m-max", config.m_max, "largest multiplier")->required();
    sweep_cmd->add_option("--workers", config.workers, "worker threads");
    sweep_cmd->add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", config.out_path, "output file");

    CLI::App* quotient_cmd =
        app.add_subcommand("quotient", "decide digit-restricted quotient membership");
    quotient_cmd->add_option("--base", config.base, "numeral base")->required();
    quotient_cmd->add_option("--digits", config.digits, "allowed digits, e.g. 0,1")
        ->required();
    quotient_cmd->add_option("--n", config.n, "candidate quotient");
    quotient_cmd->add_option("--n-max", config.n_max, "check all n up to this");
    quotient_cmd->add_option("--out", config.out_path, "output file");

    CLI::App* export_cmd =
        app.add_subcommand("export-dot", "emit the transducer as Graphviz DOT");
    export_cmd->add_option("--base", config.base, "numeral base")->required();
    export_cmd->add_option("--mult", config.multiplier, "multiplier")->required();
    export_cmd->add_option("--out", config.out_path, "output file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("multrans");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* cmd : {build_cmd, multiply_cmd, loop_cmd, sweep_cmd,
                          quotient_cmd, export_cmd}) {
        if (cmd->parsed())
            config.subcommand = cmd->get_name();
    }

    try {
        run(config, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace multrans::cli
