#include "logalg/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace logalg {

namespace {

Json coeff_pairs(auto begin, auto end) {
    Json list = Json::array();
    for (auto it = begin; it != end; ++it) list.push_back(Json::array({it->first, to_string(it->second)}));
    return list;
}

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>()), 10));
    throw std::invalid_argument("coefficient must be a \"p/q\" string or an integer");
}

std::map<int, Rat> coeffs_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"coeffs\" must be an array of [degree, value] pairs");
    std::map<int, Rat> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
            throw std::invalid_argument("each coefficient must be a [degree, value] pair");
        const int degree = entry[0].get<int>();
        if (!out.emplace(degree, rat_from_json(entry[1])).second)
            throw std::invalid_argument("duplicate degree " + std::to_string(degree));
    }
    return out;
}

int int_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

Json coeffs_to_json(const std::map<int, Rat>& coeffs) { return coeff_pairs(coeffs.rbegin(), coeffs.rend()); }

Json to_json(const LogSeries& p) {
    return Json{{"order", order_name(p.order())},
                {"floor", p.floor()},
                {"coeffs", coeff_pairs(p.terms().rbegin(), p.terms().rend())}};
}

Json to_json(const ArtinOp& a) {
    return Json{{"lead", a.lead()}, {"cap", a.cap()}, {"coeffs", coeff_pairs(a.terms().begin(), a.terms().end())}};
}

Json to_json(const SeqTable& table) {
    Json params = Json::object();
    for (const auto& [key, value] : table.parameters) params[key] = to_string(value);
    Json rows = Json::array();
    for (const auto& [a, series] : table.rows) rows.push_back(Json{{"a", a}, {"series", to_json(series)}});
    return Json{{"rule", table.name},
                {"parameters", params},
                {"order", order_name(table.order)},
                {"depth", table.depth},
                {"rows", rows}};
}

Json to_json(const EMReport& report) {
    Json j{{"truncation_order", report.truncation_order},
           {"residual_lead", report.residual_lead},
           {"symbolic_ok", report.symbolic_ok}};
    if (report.numeric_abs_err) j["numeric_abs_err"] = *report.numeric_abs_err;
    return j;
}

Json to_json(const SumReport& report) {
    Json j{{"x", to_string(report.x)}, {"n", report.n}, {"order", report.truncation_order}};
    if (report.exact_lhs) j["exact_lhs"] = to_string(*report.exact_lhs);
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["abs_err"] = report.abs_err;
    j["rel_err"] = report.rel_err;
    return j;
}

Order order_from_string(const std::string& name) {
    if (name == "zero") return Order::Zero;
    if (name == "generic") return Order::Generic;
    throw std::invalid_argument("order must be \"zero\" or \"generic\", got \"" + name + "\"");
}

LogSeries log_series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j["order"].is_string())
        throw std::invalid_argument("log series needs a string field \"order\"");
    const Order order = order_from_string(j["order"].get<std::string>());
    const int floor = int_field(j, "floor");
    if (!j.contains("coeffs")) throw std::invalid_argument("log series needs a field \"coeffs\"");
    return LogSeries(order, floor, coeffs_from_json(j["coeffs"]));
}

ArtinOp artin_op_from_json(const Json& j) {
    const int cap = int_field(j, "cap");
    if (!j.contains("coeffs")) throw std::invalid_argument("operator needs a field \"coeffs\"");
    ArtinOp op(cap, coeffs_from_json(j["coeffs"]));
    if (j.contains("lead") && !op.is_zero() && int_field(j, "lead") != op.lead())
        throw std::invalid_argument("operator \"lead\" disagrees with its coefficients");
    return op;
}

namespace {

std::string superscript(Order order) { return order == Order::Zero ? "(0)" : "\\alpha"; }

std::string lambda_symbol(int degree, Order order) {
    return "\\lambda_{" + std::to_string(degree) + "}^{" + superscript(order) + "}(x)";
}

std::string latex_term(const Rat& c, int degree, Order order) {
    const Rat magnitude = abs(c);
    const std::string lambda = lambda_symbol(degree, order);
    if (magnitude == 1) return lambda;
    if (magnitude.get_den() == 1) return magnitude.get_num().get_str() + lambda;
    if (magnitude.get_num() == 1) return lambda + "/" + magnitude.get_den().get_str();
    return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}" + lambda;
}

}  // namespace

std::string latex_series(const LogSeries& p) {
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool negative = it->second < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += latex_term(it->second, it->first, p.order());
        first = false;
    }
    if (first) out = "0";
    if (p.order() == Order::Generic) out += " + \\cdots";
    return out;
}

std::string latex_row_symbol(const SeqTable& table, int a) {
    const std::string index = std::to_string(a);
    const std::string order = superscript(table.order);
    if (table.name == "bernoulli") return "B_{" + index + "}^{" + order + "}(x)";
    if (table.name == "hermite") return "H_{" + index + "}^{" + order + "}(x)";
    if (table.name == "laguerre") {
        auto it = table.parameters.find("grade");
        const std::string grade = it == table.parameters.end() ? "b" : to_string(it->second);
        return "L_{" + index + "}^{" + order + ";" + grade + "}(x)";
    }
    if (table.name == "harmonic") return lambda_symbol(a, table.order);
    return "p_{" + index + "}^{" + order + "}(x)";
}

std::string latex_table(const SeqTable& table) {
    std::ostringstream out;
    out << "\\begin{array}{rcl}\n";
    for (const auto& [a, series] : table.rows)
        out << latex_row_symbol(table, a) << " &=& " << latex_series(series) << " \\\\\n";
    out << "\\end{array}\n";
    return out.str();
}

}  // namespace logalg
