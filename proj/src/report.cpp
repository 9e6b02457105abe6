#include "etaint/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace etaint {

using nlohmann::json;

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json value(Complex z) {
    if (z.imag() == 0.0) return num(z.real());
    return json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_value(Complex z) {
    if (z.imag() == 0.0) return g17(z.real());
    return g17(z.real()) + (z.imag() < 0 ? "" : "+") + g17(z.imag()) + "i";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json to_json(const CheckResult& r) {
    json cases = json::array();
    for (const auto& c : r.cases) {
        cases.push_back({{"label", c.label},
                         {"lhs", value(c.lhs)},
                         {"rhs", value(c.rhs)},
                         {"abs_err", num(c.abs_err)},
                         {"rel_err", num(c.rel_err)},
                         {"margin", num(c.margin)},
                         {"err_budget", num(c.err_budget)},
                         {"pass", c.pass}});
    }
    return {{"id", r.id},
            {"description", r.description},
            {"anchor", r.anchor},
            {"kind", to_string(r.kind)},
            {"status", r.status()},
            {"lhs_value", value(r.lhs_value)},
            {"rhs_value", value(r.rhs_value)},
            {"abs_err", num(r.abs_err)},
            {"rel_err", num(r.rel_err)},
            {"tol", r.tol},
            {"pass", r.pass},
            {"wall_time", r.wall_time},
            {"err_budget", num(r.err_budget)},
            {"note", r.note},
            {"cases", cases}};
}

json make_report(const std::vector<CheckResult>& results, const RunConfig& cfg, const std::string& run_id,
                 const std::string& timestamp) {
    json doc;
    doc["run_id"] = run_id;
    doc["timestamp"] = timestamp;
    doc["config"] = {{"tol", cfg.tol}, {"max_terms", cfg.max_terms}};
    int passed = 0, failed = 0, warned = 0, skipped = 0;
    json arr = json::array();
    for (const auto& r : results) {
        const std::string st = r.status();
        passed += st == "pass";
        failed += st == "fail";
        warned += st == "warn";
        skipped += st == "skipped";
        arr.push_back(to_json(r));
    }
    doc["results"] = arr;
    doc["summary"] = {{"total", results.size()}, {"passed", passed}, {"failed", failed},
                      {"warned", warned}, {"skipped", skipped}, {"suite_pass", suite_passed(results)}};
    return doc;
}

std::string to_csv(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "id,lhs,rhs,abs_err,rel_err,tol,pass,wall_time\n";
    for (const auto& r : results) {
        os << csv_field(r.id) << ',' << csv_value(r.lhs_value) << ',' << csv_value(r.rhs_value) << ','
           << g17(r.abs_err) << ',' << g17(r.rel_err) << ',' << g17(r.tol) << ',' << (r.pass ? "true" : "false")
           << ',' << g17(r.wall_time) << '\n';
    }
    return os.str();
}

namespace {

bool type_ok(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

void check(const json& v, const json& sch, const std::string& path, std::vector<std::string>& out) {
    if (sch.contains("type")) {
        bool ok = false;
        if (sch["type"].is_array()) {
            for (const auto& t : sch["type"]) ok = ok || type_ok(v, t.get<std::string>());
        } else {
            ok = type_ok(v, sch["type"].get<std::string>());
        }
        if (!ok) {
            out.push_back(path + ": expected type " + sch["type"].dump());
            return;
        }
    }
    if (sch.contains("enum")) {
        bool ok = false;
        for (const auto& e : sch["enum"]) ok = ok || e == v;
        if (!ok) out.push_back(path + ": value not in enum");
    }
    if (sch.contains("minimum") && v.is_number() && v.get<double>() < sch["minimum"].get<double>())
        out.push_back(path + ": below minimum");
    if (v.is_object()) {
        if (sch.contains("required"))
            for (const auto& k : sch["required"])
                if (!v.contains(k.get<std::string>())) out.push_back(path + ": missing " + k.get<std::string>());
        if (sch.contains("properties"))
            for (auto it = sch["properties"].begin(); it != sch["properties"].end(); ++it)
                if (v.contains(it.key())) check(v[it.key()], it.value(), path + "/" + it.key(), out);
    }
    if (v.is_array() && sch.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], sch["items"], path + "/" + std::to_string(i), out);
}

}  // namespace

std::vector<std::string> validate_schema(const json& doc, const json& schema) {
    std::vector<std::string> out;
    check(doc, schema, "", out);
    return out;
}

}  // namespace etaint
