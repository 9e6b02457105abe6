#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaint/elliptic.hpp"
#include "etaint/errors.hpp"
#include "etaint/eta.hpp"
#include "etaint/identities.hpp"
#include "etaint/quadrature.hpp"
#include "etaint/report.hpp"
#include "etaint/special.hpp"

using namespace etaint;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kConvergence = 3 };

struct Options {
    double tol = kDefaultTol;
    std::int64_t max_terms = 1000000;
    int jobs = 1;
    std::string format = "text";
    std::string out;
    int digits = 10;
};

Complex parse_complex(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw DomainError("empty number");
    std::size_t used = 0;
    if (t.back() != 'i') {
        const double re = std::stod(t, &used);
        if (used != t.size()) throw DomainError("bad number: " + text);
        return {re, 0.0};
    }
    t.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    const std::string re_s = cut == std::string::npos ? "" : t.substr(0, cut);
    std::string im_s = cut == std::string::npos ? t : t.substr(cut);
    if (im_s.empty() || im_s == "+") im_s = "1";
    if (im_s == "-") im_s = "-1";
    double re = 0.0;
    if (!re_s.empty()) {
        re = std::stod(re_s, &used);
        if (used != re_s.size()) throw DomainError("bad complex number: " + text);
    }
    const double im = std::stod(im_s, &used);
    if (used != im_s.size()) throw DomainError("bad complex number: " + text);
    return {re, im};
}

double parse_real(const std::string& s) {
    const Complex z = parse_complex(s);
    if (z.imag() != 0.0) throw DomainError("expected a real number: " + s);
    return z.real();
}

std::string num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string num(Complex z, int digits) {
    if (z.imag() == 0.0) return num(z.real(), digits);
    std::string im = num(z.imag(), digits);
    if (im[0] != '-') im = "+" + im;
    return num(z.real(), digits) + im + "i";
}

json jvalue(Complex z) {
    if (z.imag() == 0.0) return z.real();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

void emit(const Options& o, const std::string& text, const json& doc) {
    std::string body;
    if (o.format == "json") body = doc.dump(2) + "\n";
    else if (o.format == "csv") {
        std::string header, row;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            header += (header.empty() ? "" : ",") + it.key();
            row += (row.empty() ? "" : ",") + (it->is_string() ? it->get<std::string>() : it->dump());
        }
        body = header + "\n" + row + "\n";
    } else body = text;
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out);
        if (!f) throw DomainError("cannot write " + o.out);
        f << body;
        if (o.format != "text") std::cout << text;
    }
}

struct EvalResult {
    Complex value;
    double bound;
};

EvalResult evaluate(const std::string& fn, const std::vector<std::string>& args, const std::string& tau) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw CLI::ValidationError(fn + " expects " + std::to_string(n) + " argument(s)");
    };
    if (fn == "eta") {
        if (tau.empty()) {
            need(1);
        } else {
            need(0);
        }
        const Complex t = parse_complex(tau.empty() ? args[0] : tau);
        const EtaValue v = eta(TauPoint(t));
        return {v.value, std::max(v.tail_bound, 1e-13 * std::abs(v.value))};
    }
    if (fn == "eta3") {
        need(1);
        const double v = eta_cubed(parse_real(args[0]));
        return {v, 1e-13 * std::fabs(v)};
    }
    if (fn == "beta") {
        need(1);
        const double v = dirichlet_beta(parse_real(args[0]));
        return {v, 1e-12 * std::fabs(v)};
    }
    if (fn == "gamma") {
        need(1);
        const Complex z = parse_complex(args[0]);
        const Complex v = z.imag() == 0.0 ? Complex(etaint::gamma(z.real())) : etaint::gamma(z);
        return {v, 1e-13 * std::abs(v)};
    }
    if (fn == "polygamma") {
        need(2);
        const double j = parse_real(args[0]);
        if (j != std::floor(j) || j < 0) throw DomainError("polygamma order must be a non-negative integer");
        const Complex z = parse_complex(args[1]);
        const Complex v = z.imag() == 0.0 ? Complex(etaint::polygamma(static_cast<int>(j), z.real())) : etaint::polygamma(static_cast<int>(j), z);
        return {v, 1e-12 * std::abs(v)};
    }
    if (fn == "K") {
        need(1);
        const double v = elliptic_K(parse_real(args[0]));
        return {v, 1e-14 * v};
    }
    if (fn == "2f1") {
        need(4);
        const double a = parse_real(args[0]), b = parse_real(args[1]), c = parse_real(args[2]), z = parse_real(args[3]);
        const double v = gauss_2f1(a, b, c, z);
        return {v, 1e-12 * std::fabs(v)};
    }
    if (fn == "stieltjes1") {
        need(1);
        return {stieltjes_gamma1(parse_real(args[0])), 1e-9};
    }
    throw CLI::ValidationError("unknown function " + fn);
}

std::string timestamp_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// stable across runs and job counts
std::string run_id_for(const std::string& filter, const Options& o) {
    std::uint64_t h = 1469598103934665603ull;
    const std::string key = filter + "|" + num(o.tol, 17) + "|" + std::to_string(o.max_terms);
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "run-%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string summary_table(const std::vector<CheckResult>& rs) {
    std::string s;
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %-8s %-10s %-10s %-8s %s\n", "id", "status", "abs_err", "rel_err", "tol", "time_s");
    s += line;
    int pass = 0, fail = 0, warn = 0, skip = 0;
    for (const auto& r : rs) {
        std::snprintf(line, sizeof line, "%-22s %-8s %-10.3g %-10.3g %-8.0e %.3f\n", r.id.c_str(), r.status().c_str(),
                      r.abs_err, r.rel_err, r.tol, r.wall_time);
        s += line;
        const std::string st = r.status();
        pass += st == "pass";
        fail += st == "fail";
        warn += st == "warn";
        skip += st == "skipped";
    }
    std::snprintf(line, sizeof line, "%zu checks: %d pass, %d fail, %d warn, %d skipped\n", rs.size(), pass, fail, warn, skip);
    s += line;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dedekind eta integrals, series and identity checks"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("ETAINT_TOL")) {
        try {
            o.tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "etaint: ETAINT_TOL is not a number\n";
            return kUsage;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    o.jobs = hw == 0 ? 1 : static_cast<int>(hw);

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "quadrature tolerance")->check(CLI::Range(1e-13, 1e-4));
        sub->add_option("--max-terms", o.max_terms, "series term budget")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", o.out, "write the report to this path");
        sub->add_option("--digits", o.digits, "significant digits")->check(CLI::Range(1, 15));
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a special function");
    std::string fn, tau;
    std::vector<std::string> eval_args;
    eval_cmd->add_option("function", fn, "eta, eta3, beta, gamma, polygamma, K, 2f1, stieltjes1")->required();
    eval_cmd->add_option("args", eval_args, "arguments");
    eval_cmd->add_option("--tau", tau, "point a+bi for eta");
    eval_cmd->allow_extras(false);
    common(eval_cmd);

    auto* int_cmd = app.add_subcommand("integrate", "integrate f(x) eta(ix)^n over (0, inf)");
    int power = 0;
    std::optional<double> moment, y, a, p;
    std::string weight = "unit";
    int_cmd->add_option("--power", power, "eta exponent n")->required()->check(CLI::Range(1, 26));
    int_cmd->add_option("--moment", moment, "weight x^j");
    int_cmd->add_option("--weight", weight, "unit, power, exp, exp_inverse, cos, cos_inverse, shifted, log, erfc_inverse, erfc_direct, hurwitz")
        ->check(CLI::IsMember({"unit", "power", "exp", "exp_inverse", "cos", "cos_inverse", "shifted", "log",
                               "erfc_inverse", "erfc_direct", "hurwitz"}));
    int_cmd->add_option("--y", y, "parameter y of exp and cos weights");
    int_cmd->add_option("--a", a, "parameter a");
    int_cmd->add_option("--p", p, "exponent p");
    common(int_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the identity checks");
    std::string filter;
    verify_cmd->add_option("--filter", filter, "tag or id prefix");
    verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    common(verify_cmd);

    auto* list_cmd = app.add_subcommand("list", "list the registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (!(o.tol >= 1e-13 && o.tol <= 1e-4)) {
        std::cerr << "etaint: tolerance must lie in [1e-13, 1e-4]\n";
        return kUsage;
    }

    try {
        if (*list_cmd) {
            for (const auto& c : registry())
                std::cout << c.id << "  [" << to_string(c.kind) << "]  " << c.description << "  {" << c.anchor << "}\n";
            return kOk;
        }
        if (*eval_cmd) {
            const EvalResult r = evaluate(fn, eval_args, tau);
            const std::string text = num(r.value, o.digits) + "  (error bound " + num(r.bound, 2) + ")\n";
            emit(o, text, json{{"function", fn}, {"value", jvalue(r.value)}, {"error_bound", r.bound}});
            return kOk;
        }
        if (*int_cmd) {
            auto need = [&](const std::optional<double>& v, const char* name) {
                if (!v) throw CLI::ValidationError(std::string("weight ") + weight + " needs --" + name);
                return *v;
            };
            if (moment && weight == "unit") weight = "power";
            WeightSpec w;
            if (weight == "unit") w = WeightSpec::unit();
            else if (weight == "power") w = WeightSpec::power(need(moment, "moment"));
            else if (weight == "exp") w = WeightSpec::exp_decay(need(y, "y"));
            else if (weight == "exp_inverse") w = WeightSpec::exp_inverse(need(a, "a"));
            else if (weight == "cos") w = WeightSpec::cos_xy(need(y, "y"));
            else if (weight == "cos_inverse") w = WeightSpec::cos_inverse(need(a, "a"));
            else if (weight == "shifted") w = WeightSpec::shifted_power(need(a, "a"), need(p, "p"));
            else if (weight == "log") w = WeightSpec::log_over_x();
            else if (weight == "erfc_inverse") w = WeightSpec::erfc_inverse(need(a, "a"));
            else if (weight == "erfc_direct") w = WeightSpec::erfc_direct(need(a, "a"));
            else if (weight == "hurwitz") w = WeightSpec::hurwitz(need(p, "p"));
            if (moment && weight != "power") w.extra_power = *moment;
            const QuadResult r = integrate_eta(w, power, o.tol);
            const std::string text = num(r.value, o.digits) + "  (abs_err_est " + num(r.abs_err_est, 2) + ", evals " +
                                     std::to_string(r.evals) + ")\n";
            emit(o, text,
                 json{{"weight", w.describe()}, {"power", power}, {"value", r.value}, {"abs_err_est", r.abs_err_est},
                      {"evals", r.evals}, {"segments", r.segments}});
            return kOk;
        }
        if (*verify_cmd) {
            const std::optional<std::string> f = filter.empty() ? std::nullopt : std::optional<std::string>(filter);
            if (select_checks(f).empty()) {
                std::cerr << "etaint: no checks match filter '" << filter << "'\n";
                return kUsage;
            }
            RunConfig cfg;
            cfg.tol = o.tol;
            cfg.max_terms = o.max_terms;
            cfg.jobs = o.jobs;
            const auto results = run_all(f, cfg);
            const std::string table = summary_table(results);
            std::string body;
            if (o.format == "json") body = make_report(results, cfg, run_id_for(filter, o), timestamp_now()).dump(2) + "\n";
            else if (o.format == "csv") body = to_csv(results);
            else body = table;
            if (o.out.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(o.out);
                if (!out) throw DomainError("cannot write " + o.out);
                out << body;
                std::cout << table;
            }
            if (suite_passed(results)) return kOk;
            std::cerr << "failing checks:";
            for (const auto& r : results)
                if (r.gating() && !r.pass) std::cerr << ' ' << r.id;
            std::cerr << '\n';
            return kFail;
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "etaint: " << e.what() << '\n';
        return kConvergence;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "etaint: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "etaint: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "etaint: bad number\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "etaint: number out of range\n";
        return kUsage;
    }
    return kUsage;
}
