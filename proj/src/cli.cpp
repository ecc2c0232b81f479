#include "logalg/cli.hpp"

#include "logalg/classic.hpp"
#include "logalg/euler_maclaurin.hpp"
#include "logalg/numeric.hpp"
#include "logalg/roman.hpp"
#include "logalg/serialize.hpp"
#include "logalg/sheffer.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logalg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SeqFlags {
    std::string sigma;
    std::string grade;

    std::map<std::string, Rat> parameters() const {
        std::map<std::string, Rat> p;
        if (!sigma.empty()) p["sigma"] = parse_rat(sigma);
        if (!grade.empty()) p["grade"] = parse_rat(grade);
        return p;
    }
};

void add_seq_flags(CLI::App* cmd, SeqFlags& flags) {
    cmd->add_option("--sigma", flags.sigma, "Weierstrass parameter for hermite (default 1/2)");
    cmd->add_option("--grade", flags.grade, "Laguerre grade b (default 0)");
}

// A JSON literal, "@path" for a file, or "-" for standard input.
Json read_json_argument(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot read " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        text = arg;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

// Either a single series or every row of an emitted table.
std::vector<std::pair<std::optional<int>, LogSeries>> series_inputs(const Json& j) {
    std::vector<std::pair<std::optional<int>, LogSeries>> out;
    if (j.is_object() && j.contains("rows")) {
        for (const auto& row : j["rows"]) {
            if (!row.contains("a") || !row.contains("series"))
                throw std::invalid_argument("table rows need \"a\" and \"series\"");
            out.emplace_back(row["a"].get<int>(), log_series_from_json(row["series"]));
        }
        return out;
    }
    out.emplace_back(std::nullopt, log_series_from_json(j));
    return out;
}

// Same sequence with h replaced by h (1 + D^2/7); used as a negative control.
GradedSeq perturbed(const GradedSeq& seq) {
    OpFamily bump = [](int cap) { return make(op::Custom{{{0, Rat(1)}, {2, Rat(1, 7)}}}, cap); };
    OpFamily h = [seq, bump](int cap) { return op_mul(seq.normalizer(cap), bump(cap)); };
    if (std::holds_alternative<rule::Harmonic>(seq.rule()) || std::holds_alternative<rule::Appell>(seq.rule()))
        return GradedSeq::appell(h, seq.name() + "*");
    OpFamily f = [seq](int cap) { return seq.delta(cap); };
    return GradedSeq::sheffer(h, f, seq.name() + "*");
}

class Checklist {
public:
    explicit Checklist(std::ostream& out) : out_(out) {}
    void record(const std::string& label, bool ok) {
        out_ << (ok ? "PASS " : "FAIL ") << label << "\n";
        all_ &= ok;
    }
    int exit_code() const { return all_ ? kExitOk : kExitFailed; }

private:
    std::ostream& out_;
    bool all_ = true;
};

int run_table(const std::string& name, int from, int to, int depth, const SeqFlags& flags,
              const std::string& order, const std::string& format, std::ostream& out) {
    SeqTable table;
    try {
        table = emit_table(name, from, to, depth, flags.parameters(), order_from_string(order));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (format == "latex")
        out << latex_table(table);
    else
        out << to_json(table).dump(2) << "\n";
    return kExitOk;
}

int run_expand(const std::string& basis, const std::string& series_arg, std::optional<int> a_min,
               const SeqFlags& flags, std::ostream& out) {
    GradedSeq seq = [&] {
        try {
            return named_sequence(basis, flags.parameters());
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto inputs = series_inputs(read_json_argument(series_arg));
    Json rows = Json::array();
    for (const auto& [a, p] : inputs) {
        const int start = a_min ? std::max(*a_min, p.floor()) : p.floor();
        Json entry{{"amin", start}, {"coeffs", coeffs_to_json(taylor_coeffs(seq, p, start))}};
        if (a) entry["a"] = *a;
        rows.push_back(entry);
    }
    Json doc{{"basis", basis}};
    if (inputs.size() == 1 && !inputs.front().first) {
        doc["amin"] = rows[0]["amin"];
        doc["coeffs"] = rows[0]["coeffs"];
    } else {
        doc["rows"] = rows;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int verify_em(int depth, bool corrupt, std::ostream& out) {
    Checklist list(out);
    out << "K  residual_lead  numeric_abs_err\n";
    for (int k = 1; k <= depth; ++k) {
        EMReport r = em_operator_residual(k, corrupt);
        char line[96];
        std::snprintf(line, sizeof line, "%-2d %-14d %.3e\n", k, r.residual_lead,
                      r.numeric_abs_err ? *r.numeric_abs_err : 0.0);
        out << line;
        list.record("euler-maclaurin residual through D^" + std::to_string(k), r.symbolic_ok);
    }
    return list.exit_code();
}

int verify_sheffer(const GradedSeq& seq, int range, bool corrupt, std::ostream& out) {
    Checklist list(out);
    const GradedSeq duals = corrupt ? perturbed(seq) : seq;
    const int floor_depth = 8;
    for (int a = -range; a <= range; ++a) {
        list.record("lowering generic a=" + std::to_string(a),
                    check_lowering(seq, Order::Generic, a, a - floor_depth));
        if (a >= 0) list.record("lowering zero a=" + std::to_string(a), check_lowering(seq, Order::Zero, a, 0));
        for (const Rat& z : {Rat(1), Rat(-1), Rat(1, 2)})
            list.record("binomial shift a=" + std::to_string(a) + " z=" + to_string(z),
                        check_binomial_shift(seq, Order::Generic, a, z, a - floor_depth));
    }
    for (int a = -range; a <= range; ++a) {
        for (int b = 0; b <= range + 2; ++b) {
            LogSeries s = seq.member(Order::Generic, a, std::min(a, b));
            Rat value = eval_functional(apply(duals.dual_operator(b, std::max(a - b, 0)), s));
            Rat expected = a == b ? roman_factorial(a) : Rat(0);
            list.record("biorthogonality a=" + std::to_string(a) + " b=" + std::to_string(b), value == expected);
        }
    }
    return list.exit_code();
}

int verify_genfun(const GradedSeq& seq, int depth, bool corrupt, std::ostream& out) {
    Checklist list(out);
    const std::vector<LogSeries> generated = genfun_members(corrupt ? perturbed(seq) : seq, depth);
    for (int k = 0; k <= depth; ++k)
        list.record("generating function y^" + std::to_string(k),
                    generated[static_cast<std::size_t>(k)] == seq.member(Order::Zero, k, 0));
    return list.exit_code();
}

int run_sum(const std::string& kind, const std::string& x, int n, int order, std::ostream& out) {
    const Rat start = parse_rat(x);
    SumReport report;
    if (kind == "harmonic")
        report = harmonic_identity(start, n, order);
    else if (kind == "stirling")
        report = stirling_identity(start, n, order);
    else
        throw UsageError("sum kind must be harmonic or stirling");
    Json j = to_json(report);
    j["identity"] = kind;
    out << j.dump(2) << "\n";
    return kExitOk;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

int run_eval(const std::string& series_arg, int level, double x, std::ostream& out) {
    const NumericLevel lv = numeric_level(level);
    for (const auto& [a, p] : series_inputs(read_json_argument(series_arg))) {
        SeriesValue v = eval_series(p, lv, x);
        if (a) out << *a << " ";
        out << format_double(v.value) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact logarithmic Sheffer sequences and Euler-MacLaurin identities", "logalg"};
    app.require_subcommand(1);

    SeqFlags flags;

    std::string table_name, table_order = "generic", table_format = "json";
    int table_from = 0, table_to = 0, table_depth = 12;
    auto* table = app.add_subcommand("table", "Coefficient table of a named sequence");
    table->add_option("name", table_name, "bernoulli | hermite | laguerre | harmonic | delta")->required();
    table->add_option("--from", table_from, "First index")->required();
    table->add_option("--to", table_to, "Last index")->required();
    table->add_option("--depth", table_depth, "Row a is exact down to lambda_{a-depth}");
    table->add_option("--order", table_order, "generic | zero")->check(CLI::IsMember({"generic", "zero"}));
    table->add_option("--format", table_format, "json | latex")->check(CLI::IsMember({"json", "latex"}));
    add_seq_flags(table, flags);

    std::string basis, series_arg;
    std::optional<int> a_min;
    auto* expand = app.add_subcommand("expand", "Taylor coefficients of a series in a sequence basis");
    expand->add_option("--basis", basis, "bernoulli | hermite | harmonic | laguerre | delta")->required();
    expand->add_option("--series", series_arg, "Series JSON, @file, or - for stdin")->required();
    expand->add_option("--amin", a_min, "Lowest coefficient index (default: series floor)");
    add_seq_flags(expand, flags);

    int verify_depth = 12, verify_range = 4;
    std::string verify_seq = "bernoulli";
    bool corrupt = false;
    auto* verify = app.add_subcommand("verify", "Exact identity checks");
    verify->require_subcommand(1);
    auto* verify_em_cmd = verify->add_subcommand("em", "Euler-MacLaurin operator identity");
    verify_em_cmd->add_option("--depth", verify_depth, "Largest truncation order K");
    verify_em_cmd->add_flag("--corrupt", corrupt, "Drop the B_1 term (negative control)");
    auto* verify_sheffer_cmd = verify->add_subcommand("sheffer", "Lowering, shift and pairing identities");
    verify_sheffer_cmd->add_option("--seq", verify_seq, "Sequence name");
    verify_sheffer_cmd->add_option("--range", verify_range, "Check indices in [-range, range]");
    verify_sheffer_cmd->add_flag("--corrupt", corrupt, "Perturb the dual operator (negative control)");
    add_seq_flags(verify_sheffer_cmd, flags);
    auto* verify_genfun_cmd = verify->add_subcommand("genfun", "Order-(0) generating function");
    verify_genfun_cmd->add_option("--seq", verify_seq, "Sequence name");
    verify_genfun_cmd->add_option("--depth", verify_depth, "Highest power of y");
    verify_genfun_cmd->add_flag("--corrupt", corrupt, "Perturb the normalizing operator (negative control)");
    add_seq_flags(verify_genfun_cmd, flags);

    std::string sum_kind, sum_x = "10";
    int sum_n = 0, sum_order = 6;
    auto* sum = app.add_subcommand("sum", "Numeric Euler-MacLaurin instances");
    sum->add_option("kind", sum_kind, "harmonic | stirling")->required()->check(CLI::IsMember({"harmonic", "stirling"}));
    sum->add_option("--x", sum_x, "Starting point (rational, > 0)");
    sum->add_option("--n", sum_n, "Sum runs over x, x+1, ..., x+n");
    sum->add_option("--order", sum_order, "Truncation order of the Bernoulli expansion (<= 12)");

    std::string eval_series_arg;
    int eval_level = 1;
    double eval_x = 0.0;
    auto* eval = app.add_subcommand("eval", "Floating-point value of a series");
    eval->add_option("--series", eval_series_arg, "Series JSON, @file, or - for stdin")->required();
    eval->add_option("--level", eval_level, "Iterated-log level 0 or 1")->check(CLI::IsMember({0, 1}));
    eval->add_option("--x", eval_x, "Evaluation point (> 0 at level 1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table) return run_table(table_name, table_from, table_to, table_depth, flags, table_order, table_format, out);
        if (*expand) return run_expand(basis, series_arg, a_min, flags, out);
        if (*verify_em_cmd) return verify_em(verify_depth, corrupt, out);
        if (*verify_sheffer_cmd || *verify_genfun_cmd) {
            GradedSeq seq = [&] {
                try {
                    return named_sequence(verify_seq, flags.parameters());
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            if (*verify_sheffer_cmd) return verify_sheffer(seq, verify_range, corrupt, out);
            return verify_genfun(seq, verify_depth, corrupt, out);
        }
        if (*sum) return run_sum(sum_kind, sum_x, sum_n, sum_order, out);
        if (*eval) return run_eval(eval_series_arg, eval_level, eval_x, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace logalg
