#include "etaint/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "etaint/errors.hpp"

namespace etaint {

const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::equality: return "equality";
        case CheckKind::inequality: return "inequality";
        case CheckKind::warn_only: return "warn_only";
        case CheckKind::skipped: return "skipped";
    }
    return "?";
}

std::string CheckResult::status() const {
    if (kind == CheckKind::skipped) return "skipped";
    if (kind == CheckKind::warn_only) return "warn";
    return pass ? "pass" : "fail";
}

const IdentityCheck& find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw UnknownCheck("unknown check id: " + id);
}

bool matches_filter(const IdentityCheck& c, const std::string& filter) {
    if (std::find(c.tags.begin(), c.tags.end(), filter) != c.tags.end()) return true;
    if (c.id.compare(0, filter.size(), filter) != 0) return false;
    if (c.id.size() == filter.size()) return true;
    const char next = c.id[filter.size()];
    return !(next >= '0' && next <= '9');
}

std::vector<const IdentityCheck*> select_checks(const std::optional<std::string>& filter) {
    std::vector<const IdentityCheck*> out;
    for (const auto& c : registry())
        if (!filter || filter->empty() || matches_filter(c, *filter)) out.push_back(&c);
    return out;
}

namespace {

CaseResult judge(const IdentityCheck& chk, const CheckCase& cs) {
    CaseResult r;
    r.label = cs.label;
    r.lhs = cs.lhs;
    r.rhs = cs.rhs;
    r.err_budget = cs.err_budget;
    r.abs_err = std::abs(cs.lhs - cs.rhs);
    const double mag = std::abs(cs.rhs);
    r.rel_err = mag > 0.0 ? r.abs_err / mag : std::numeric_limits<double>::infinity();
    if (chk.kind == CheckKind::inequality) {
        r.margin = cs.rhs.real() - cs.lhs.real();
        // the ordering must survive the numerical error of both sides
        r.pass = r.margin > cs.err_budget && std::isfinite(r.margin);
    } else {
        r.pass = r.abs_err <= chk.tol || r.rel_err <= chk.tol;
    }
    return r;
}

// how close a case is to failing; larger is worse
double badness(const IdentityCheck& chk, const CaseResult& r) {
    if (chk.kind == CheckKind::inequality) return -r.margin;
    return std::min(r.abs_err, r.rel_err);
}

}  // namespace

CheckResult run_check(const IdentityCheck& chk, const RunConfig& cfg) {
    CheckResult res;
    res.id = chk.id;
    res.description = chk.description;
    res.anchor = chk.anchor;
    res.kind = chk.kind;
    res.tol = chk.tol;
    res.note = chk.note;
    if (chk.kind == CheckKind::skipped) return res;

    RunConfig inner = cfg;
    if (chk.tol > 0.0) inner.tol = std::min(cfg.tol, chk.tol / 10);
    inner.tol = std::max(inner.tol, 1e-12);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto cases = chk.evaluate(inner);
        res.pass = !cases.empty();
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& cs : cases) {
            CaseResult cr = judge(chk, cs);
            res.pass = res.pass && cr.pass;
            const double bad = cr.pass ? badness(chk, cr) : std::numeric_limits<double>::infinity();
            if (bad > worst || (res.cases.empty())) {
                worst = bad;
                res.lhs_value = cr.lhs;
                res.rhs_value = cr.rhs;
                res.abs_err = cr.abs_err;
                res.rel_err = cr.rel_err;
                res.err_budget = cr.err_budget;
            }
            res.cases.push_back(std::move(cr));
        }
    } catch (const Error& e) {
        res.pass = false;
        res.note = (res.note.empty() ? "" : res.note + "; ") + "error: " + e.what();
        res.cases.clear();
    }
    res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CheckResult run_check(const std::string& id, const RunConfig& cfg) { return run_check(find_check(id), cfg); }

std::vector<CheckResult> run_all(const std::optional<std::string>& filter, const RunConfig& cfg) {
    const auto sel = select_checks(filter);
    std::vector<CheckResult> out(sel.size());
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(sel.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < sel.size();) out[i] = run_check(*sel[i], cfg);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return out;
}

bool suite_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return !r.gating() || r.pass; });
}

}  // namespace etaint
