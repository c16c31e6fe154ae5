#include "bosonorder/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bosonorder/errors.hpp"
#include "bosonorder/genfun.hpp"
#include "bosonorder/genstirling.hpp"
#include "bosonorder/pade.hpp"
#include "bosonorder/parser.hpp"
#include "bosonorder/sheffer.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/version.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

namespace {

using Json = nlohmann::ordered_json;

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "p", "-p", or "p/q" with optional sign on the numerator.
Rat parse_rat_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("cannot parse rational '" + text + "'");
    }
}

// "k:coeff,k:coeff" with rational coefficients.
std::map<unsigned, Rat> parse_alpha_list(const std::string& text) {
    std::map<unsigned, Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw DomainError("alpha entries look like k:coeff, got '" + item + "'");
        }
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
        } catch (const std::exception&) {
            throw DomainError("bad alpha order in '" + item + "'");
        }
        out[k] = parse_rat_string(item.substr(colon + 1));
    }
    if (out.empty()) throw DomainError("empty alpha list");
    return out;
}

struct AlphaInputs {
    std::string expr;
    std::string alpha_list;
    unsigned d = 0;
    bool d_given = false;
};

HomogeneousPoly resolve_alpha(const AlphaInputs& in, Json& echoed) {
    if (!in.expr.empty() && !in.alpha_list.empty()) {
        throw DomainError("give either --expr or --alpha, not both");
    }
    if (!in.expr.empty()) {
        const HomogeneousPoly poly = extract_homogeneous(to_normal_form(parse_expression(in.expr)));
        echoed["expr"] = in.expr;
        Json alpha = Json::object();
        for (const auto& [k, c] : poly.coeffs()) alpha[std::to_string(k)] = to_string(c);
        echoed["d"] = poly.excess();
        echoed["alpha"] = alpha;
        return poly;
    }
    if (in.alpha_list.empty()) {
        throw DomainError("supply either --expr or --alpha (with optional --d)");
    }
    HomogeneousPoly poly(in.d, parse_alpha_list(in.alpha_list));
    Json alpha = Json::object();
    for (const auto& [k, c] : poly.coeffs()) alpha[std::to_string(k)] = to_string(c);
    echoed["d"] = poly.excess();
    echoed["alpha"] = alpha;
    return poly;
}

Json normal_form_json(const NormalForm& nf) {
    std::vector<NormalMonomial> keys;
    keys.reserve(nf.terms().size());
    for (const auto& [key, c] : nf.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const NormalMonomial& a, const NormalMonomial& b) {
        const unsigned wa = a.creators + a.annihilators;
        const unsigned wb = b.creators + b.annihilators;
        if (wa != wb) return wa < wb;
        return a.creators < b.creators;
    });
    Json terms = Json::array();
    for (const NormalMonomial& key : keys) {
        terms.push_back(Json{{"r", key.creators},
                             {"s", key.annihilators},
                             {"coeff", to_string(nf.coefficient(key.creators, key.annihilators))}});
    }
    return Json{{"kind", "normal_form"}, {"terms", std::move(terms)}};
}

std::string normal_form_table(const NormalForm& nf) {
    const Json j = normal_form_json(nf);
    std::ostringstream os;
    os << "r\ts\tcoeff\n";
    for (const auto& t : j["terms"]) {
        os << t["r"].get<unsigned>() << "\t" << t["s"].get<unsigned>() << "\t"
           << t["coeff"].get<std::string>() << "\n";
    }
    return os.str();
}

std::size_t max_terms_cap() {
    if (const char* env = std::getenv("BOSONORDER_MAX_TERMS")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
        throw DomainError("BOSONORDER_MAX_TERMS must be a positive integer");
    }
    return kDefaultMaxTerms;
}

struct Options {
    std::string format = "json";
    std::string out_path;

    std::string expr;
    std::string alpha_list;
    unsigned d = 0;

    unsigned n = 0;
    unsigned k = 0;
    double x = 1.0;
    double lambda = 0.0;
    double eps = 1e-12;
    unsigned trunc = 40;
    unsigned order = 8;
    unsigned pade_m = 4;
    unsigned pade_n = 4;
    std::string z_text = "1";
    std::string q_list = "0,1";  // polynomial coefficients, ascending
    std::string v_list = "0";
};

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
        return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw DomainError("cannot parse complex number '" + text + "' (want re or re,im)");
    }
}

Polynomial parse_poly_list(const std::string& text) {
    std::vector<Rat> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rat_string(item));
    return Polynomial(std::move(coeffs));
}

Json make_record(const std::string& command, const std::string& mode, Json inputs, Json result) {
    return Json{{"tool", "bosonorder"}, {"version", kVersion},       {"command", command},
                {"mode", mode},         {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

// ---- order ----------------------------------------------------------------

Json cmd_order(const Options& opt, std::string& table_text) {
    if (opt.expr.empty()) throw DomainError("order needs an expression (--expr or positional)");
    const NormalForm nf = to_normal_form(parse_expression(opt.expr));
    table_text = normal_form_table(nf);
    return make_record("order", "exact", Json{{"expr", opt.expr}}, normal_form_json(nf));
}

// ---- tables ---------------------------------------------------------------

Json cmd_tables(const std::string& kind, const Options& opt, std::string& table_text) {
    Json inputs{{"kind", kind}, {"n", opt.n}};
    std::ostringstream table;

    if (kind == "stirling") {
        StirlingTable t(opt.n);
        if (opt.k > 0) {
            const Int v = stirling2_recurrence(opt.n, opt.k);
            inputs["k"] = opt.k;
            table_text = to_string(v) + "\n";
            return make_record("tables", "exact", std::move(inputs),
                               Json{{"kind", "scalar"}, {"value", to_string(v)}});
        }
        Json rows = Json::array();
        for (unsigned n = 1; n <= opt.n; ++n) {
            Json entries = Json::object();
            for (const auto& [k, v] : t.row(n)) entries[std::to_string(k)] = to_string(v);
            rows.push_back(Json{{"n", n}, {"entries", std::move(entries)}});
            table << n << ":";
            for (const auto& [k, v] : t.row(n)) table << " " << v;
            table << "\n";
        }
        table_text = table.str();
        return make_record("tables", "exact", std::move(inputs),
                           Json{{"kind", "table"}, {"rows", std::move(rows)}});
    }

    if (kind == "bell") {
        Json values = Json::array();
        for (unsigned n = 0; n <= opt.n; ++n) {
            const Int b = bell_number(n);
            values.push_back(to_string(b));
            table << b << (n == opt.n ? "" : " ");
        }
        table << "\n";
        table_text = table.str();
        return make_record("tables", "exact", std::move(inputs),
                           Json{{"kind", "sequence"}, {"values", std::move(values)}});
    }

    if (kind == "genstirling" || kind == "genbell") {
        const HomogeneousPoly poly =
            resolve_alpha({opt.expr, opt.alpha_list, opt.d, true}, inputs);
        if (kind == "genstirling") {
            GenStirlingTable t(poly, opt.n);
            if (opt.k > 0) {
                const Rat v = t.value(opt.n, opt.k);
                inputs["k"] = opt.k;
                table_text = to_string(v) + "\n";
                return make_record("tables", "exact", std::move(inputs),
                                   Json{{"kind", "scalar"}, {"value", to_string(v)}});
            }
            Json rows = Json::array();
            for (unsigned n = 1; n <= opt.n; ++n) {
                Json entries = Json::object();
                for (const auto& [k, v] : t.row(n)) entries[std::to_string(k)] = to_string(v);
                rows.push_back(Json{{"n", n}, {"entries", std::move(entries)}});
                table << n << ":";
                for (const auto& [k, v] : t.row(n)) table << " " << k << ":" << v;
                table << "\n";
            }
            table_text = table.str();
            return make_record("tables", "exact", std::move(inputs),
                               Json{{"kind", "table"}, {"rows", std::move(rows)}});
        }
        Json values = Json::array();
        for (unsigned n = 0; n <= opt.n; ++n) {
            const Rat b = gen_bell_number(poly, n);
            values.push_back(to_string(b));
            table << b << (n == opt.n ? "" : " ");
        }
        table << "\n";
        table_text = table.str();
        return make_record("tables", "exact", std::move(inputs),
                           Json{{"kind", "sequence"}, {"values", std::move(values)}});
    }

    throw DomainError("unknown table kind '" + kind + "'");
}

// ---- numeric --------------------------------------------------------------

Json scalar_result(double value) {
    return Json{{"kind", "scalar"}, {"value", format_float(value)}};
}

Json cmd_numeric(const std::string& kind, const std::string& variant, const Options& opt,
                 std::string& table_text) {
    const std::size_t cap = max_terms_cap();

    if (kind == "dobinski") {
        Json inputs{{"kind", kind}, {"n", opt.n}, {"x", format_float(opt.x)},
                    {"eps", format_float(opt.eps)}, {"max_terms", cap}};
        const double value = dobinski_eval(opt.n, opt.x, opt.eps, cap);
        table_text = format_float(value) + "\n";
        return make_record("numeric", "float", std::move(inputs), scalar_result(value));
    }

    if (kind == "egf") {
        if (variant == "closed") {
            Json inputs{{"kind", kind}, {"variant", variant}, {"lambda", format_float(opt.lambda)},
                        {"x", format_float(opt.x)}};
            const double value = egf_bell_closed(opt.lambda, opt.x);
            table_text = format_float(value) + "\n";
            return make_record("numeric", "float", std::move(inputs), scalar_result(value));
        }
        Json inputs{{"kind", kind}, {"variant", variant}};
        const HomogeneousPoly poly =
            resolve_alpha({opt.expr, opt.alpha_list, opt.d, true}, inputs);
        inputs["lambda"] = format_float(opt.lambda);
        inputs["x"] = format_float(opt.x);
        if (variant == "series") {
            inputs["trunc"] = opt.trunc;
            const double value = egf_truncated({poly, opt.lambda, opt.x, opt.trunc});
            table_text = format_float(value) + "\n";
            return make_record("numeric", "float", std::move(inputs), scalar_result(value));
        }
        if (variant == "dobinski") {
            inputs["eps"] = format_float(opt.eps);
            inputs["max_terms"] = cap;
            const double value = egf_d0_dobinski(poly, opt.lambda, opt.x, opt.eps, cap);
            table_text = format_float(value) + "\n";
            return make_record("numeric", "float", std::move(inputs), scalar_result(value));
        }
        throw DomainError("egf variant must be closed, series, or dobinski");
    }

    if (kind == "coherent") {
        Json inputs{{"kind", kind}};
        const HomogeneousPoly poly =
            resolve_alpha({opt.expr, opt.alpha_list, opt.d, true}, inputs);
        const Complex z = parse_complex(opt.z_text);
        inputs["lambda"] = format_float(opt.lambda);
        inputs["z"] = Json{{"re", format_float(z.real())}, {"im", format_float(z.imag())}};
        inputs["trunc"] = opt.trunc;
        const Complex value = coherent_exp_element(poly, opt.lambda, z, opt.trunc);
        table_text = format_float(value.real()) + " " + format_float(value.imag()) + "i\n";
        return make_record("numeric", "float", std::move(inputs),
                           Json{{"kind", "complex"},
                                {"re", format_float(value.real())},
                                {"im", format_float(value.imag())}});
    }

    if (kind == "pade") {
        Json inputs{{"kind", kind}};
        const HomogeneousPoly poly =
            resolve_alpha({opt.expr, opt.alpha_list, opt.d, true}, inputs);
        inputs["lambda"] = format_float(opt.lambda);
        inputs["x"] = format_float(opt.x);
        inputs["m"] = opt.pade_m;
        inputs["pade_n"] = opt.pade_n;
        const double value = pade_resum_egf(poly, opt.lambda, opt.x, opt.pade_m, opt.pade_n);
        table_text = format_float(value) + "\n";
        return make_record("numeric", "float", std::move(inputs), scalar_result(value));
    }

    if (kind == "sheffer") {
        const Polynomial q = parse_poly_list(opt.q_list);
        const Polynomial v = parse_poly_list(opt.v_list);
        const Complex z = parse_complex(opt.z_text);
        Json inputs{{"kind", kind},
                    {"q", opt.q_list},
                    {"v", opt.v_list},
                    {"z", Json{{"re", format_float(z.real())}, {"im", format_float(z.imag())}}},
                    {"order", opt.order}};
        const auto series = coherent_egf_series(q, v, z, opt.order);
        Json values = Json::array();
        std::ostringstream table;
        for (const auto& c : series) {
            values.push_back(Json{{"re", format_float(c.real())}, {"im", format_float(c.imag())}});
            table << format_float(c.real()) << " " << format_float(c.imag()) << "i\n";
        }
        table_text = table.str();
        return make_record("numeric", "float", std::move(inputs),
                           Json{{"kind", "series"}, {"values", std::move(values)}});
    }

    throw DomainError("unknown numeric kind '" + kind + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact normal ordering of boson operators and the combinatorics it generates"};
    app.set_version_flag("--version", std::string(kVersion));

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", opt.out_path, "Write the record to this file instead of stdout");

    std::string positional_expr;
    std::string tables_kind;
    std::string numeric_kind;
    std::string numeric_variant;

    CLI::App* order = app.add_subcommand("order", "Normal order an operator expression");
    order->fallthrough();
    order->add_option("expression", positional_expr, "Expression, e.g. \"(ad a)^2\"");
    order->add_option("--expr", opt.expr, "Expression (alternative to the positional)");

    CLI::App* tables =
        app.add_subcommand("tables", "Exact Stirling/Bell tables, classical or generalized");
    tables->fallthrough();
    tables->add_option("kind", tables_kind, "stirling | bell | genstirling | genbell")
        ->required()
        ->check(CLI::IsMember({"stirling", "bell", "genstirling", "genbell"}));
    tables->add_option("--n", opt.n, "Number of rows / last index")->required();
    tables->add_option("--k", opt.k, "Restrict stirling/genstirling output to one entry S(n,k)");
    tables->add_option("--expr", opt.expr, "Homogeneous expression defining the polynomial");
    tables->add_option("--alpha", opt.alpha_list, "Coefficients k:coeff[,k:coeff...]");
    tables->add_option("--d", opt.d, "Excess (with --alpha)");

    CLI::App* numeric =
        app.add_subcommand("numeric", "Series, EGF, coherent-state and Pade evaluators");
    numeric->fallthrough();
    numeric->add_option("kind", numeric_kind, "dobinski | egf | coherent | pade | sheffer")
        ->required()
        ->check(CLI::IsMember({"dobinski", "egf", "coherent", "pade", "sheffer"}));
    numeric->add_option("variant", numeric_variant, "egf: closed|series|dobinski; pade: egf");
    numeric->add_option("--n", opt.n, "Index n");
    numeric->add_option("--x", opt.x, "Argument x (or |z|^2 scale)");
    numeric->add_option("--lambda", opt.lambda, "Exponential parameter lambda");
    numeric->add_option("--eps", opt.eps, "Truncation tolerance");
    numeric->add_option("--trunc", opt.trunc, "Partial-sum truncation order");
    numeric->add_option("--order", opt.order, "Series order (sheffer)");
    numeric->add_option("--m", opt.pade_m, "Pade numerator degree");
    numeric->add_option("--pade-n", opt.pade_n, "Pade denominator degree");
    numeric->add_option("--expr", opt.expr, "Homogeneous expression defining the polynomial");
    numeric->add_option("--alpha", opt.alpha_list, "Coefficients k:coeff[,k:coeff...]");
    numeric->add_option("--d", opt.d, "Excess (with --alpha)");
    numeric->add_option("--z", opt.z_text, "Coherent label, re or re,im");
    numeric->add_option("--q", opt.q_list, "q polynomial coefficients, ascending");
    numeric->add_option("--v", opt.v_list, "v polynomial coefficients, ascending");

    app.require_subcommand(0, 1);

    std::vector<const char*> argv;
    argv.push_back("bosonorder");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    }

    try {
        Json record;
        std::string table_text;
        if (order->parsed()) {
            if (opt.expr.empty()) opt.expr = positional_expr;
            record = cmd_order(opt, table_text);
        } else if (tables->parsed()) {
            record = cmd_tables(tables_kind, opt, table_text);
        } else if (numeric->parsed()) {
            record = cmd_numeric(numeric_kind, numeric_variant, opt, table_text);
        } else {
            out << app.help();
            return kExitOk;
        }

        std::string payload =
            (opt.format == "table") ? table_text : record.dump() + "\n";
        if (!opt.out_path.empty()) {
            std::ofstream f(opt.out_path, std::ios::binary);
            if (!f) throw DomainError("cannot open --out file '" + opt.out_path + "'");
            f << payload;
        } else {
            out << payload;
        }
        return kExitOk;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace bosonorder
