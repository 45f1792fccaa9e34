#include "fgof/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fgof/errors.hpp"

namespace fgof {

namespace {

using nlohmann::json;

const char* truth_name(Truth::Kind k) {
    switch (k) {
        case Truth::Kind::zero: return "zero";
        case Truth::Kind::sine: return "sin";
        case Truth::Kind::power: return "power";
        case Truth::Kind::neg_power: return "neg_power";
    }
    return "zero";
}

Truth::Kind truth_kind(const std::string& s) {
    if (s == "zero") return Truth::Kind::zero;
    if (s == "sin") return Truth::Kind::sine;
    if (s == "power") return Truth::Kind::power;
    if (s == "neg_power") return Truth::Kind::neg_power;
    raise(Errc::parse_error, "unknown truth '" + s + "'");
}

void put_gof(json& j, const GofOutcome& o, const GofConfig& c) {
    j["t"] = o.t;
    j["t1"] = o.breakdown.t1;
    j["s1"] = o.breakdown.s1;
    j["s2"] = o.breakdown.s2;
    j["s3"] = o.breakdown.s3;
    j["sum_sq"] = o.breakdown.sum_sq;
    j["correction_count"] = o.breakdown.correction_count;
    j["gamma_used"] = o.gamma_used;
    j["cx"] = o.cx;
    j["crit1"] = o.crit1;
    j["crit2"] = o.crit2;
    j["reject1"] = o.reject1;
    j["reject2"] = o.reject2;
    j["p1"] = o.p1;
    j["p2"] = o.p2;
    j["n_used"] = o.n_used;
    j["n_stat"] = o.n_stat;
    j["window_min"] = o.window_min;
    j["window_max"] = o.window_max;
    j["h"] = c.h;
    j["h1"] = c.h1;
    j["k"] = c.k;
    j["level"] = c.level;
    j["a1"] = c.a1;
    j["cx_policy"] = c.cx_policy == CxPolicy::fixed ? "fixed" : "auto";
    if (c.gamma) j["gamma_known"] = *c.gamma;
}

void get_gof(const json& j, GofOutcome& o, GofConfig& c) {
    o.t = j.at("t");
    o.breakdown.t = o.t;
    o.breakdown.t1 = j.at("t1");
    o.breakdown.s1 = j.at("s1");
    o.breakdown.s2 = j.at("s2");
    o.breakdown.s3 = j.at("s3");
    o.breakdown.sum_sq = j.at("sum_sq");
    o.breakdown.correction_count = j.at("correction_count");
    o.gamma_used = j.at("gamma_used");
    o.breakdown.gamma_used = o.gamma_used;
    o.cx = j.at("cx");
    o.crit1 = j.at("crit1");
    o.crit2 = j.at("crit2");
    o.reject1 = j.at("reject1");
    o.reject2 = j.at("reject2");
    o.p1 = j.at("p1");
    o.p2 = j.at("p2");
    o.n_used = j.at("n_used");
    o.n_stat = j.at("n_stat");
    o.window_min = j.at("window_min");
    o.window_max = j.at("window_max");
    c.h = j.at("h");
    c.h1 = j.at("h1");
    c.k = j.at("k");
    c.level = j.at("level");
    c.a1 = j.at("a1");
    c.cx_policy = j.at("cx_policy") == "fixed" ? CxPolicy::fixed : CxPolicy::automatic;
    if (j.contains("gamma_known")) c.gamma = j.at("gamma_known").get<double>();
    if (c.cx_policy == CxPolicy::fixed) c.cx_value = o.cx;
}

void put_experiment(json& j, const ExperimentReport& r) {
    j["rate_phi1"] = r.rate_phi1;
    j["rate_phi2"] = r.rate_phi2;
    j["reps_done"] = r.reps_done;
    j["reps_failed"] = r.reps_failed;
    j["ci3_phi1"] = r.ci3_phi1;
    j["ci3_phi2"] = r.ci3_phi2;
    j["n"] = r.spec.n;
    j["h"] = r.spec.h;
    j["h1"] = r.spec.h1;
    j["k"] = r.spec.k;
    j["level"] = r.spec.level;
    j["gamma_mode"] = r.spec.gamma_mode == GammaMode::known ? "known" : "estimated";
    j["gamma_known"] = r.spec.known_gamma;
    j["truth"] = truth_name(r.spec.truth.kind);
    j["c"] = r.spec.truth.c;
    j["alpha"] = r.spec.truth.alpha;
    j["p"] = r.spec.truth.p;
    j["x0"] = r.spec.truth.x0;
    j["errors"] = r.spec.errors == ErrorLaw::uniform_unit ? "uniform" : "neg_exponential";
    j["reps"] = r.spec.reps;
    j["seed"] = r.spec.seed;
    j["a1"] = r.spec.a1;
}

void get_experiment(const json& j, ExperimentReport& r) {
    r.rate_phi1 = j.at("rate_phi1");
    r.rate_phi2 = j.at("rate_phi2");
    r.reps_done = j.at("reps_done");
    r.reps_failed = j.at("reps_failed");
    r.ci3_phi1 = j.at("ci3_phi1");
    r.ci3_phi2 = j.at("ci3_phi2");
    r.spec.n = j.at("n");
    r.spec.h = j.at("h");
    r.spec.h1 = j.at("h1");
    r.spec.k = j.at("k");
    r.spec.level = j.at("level");
    r.spec.gamma_mode = j.at("gamma_mode") == "known" ? GammaMode::known : GammaMode::estimated;
    r.spec.known_gamma = j.at("gamma_known");
    r.spec.truth.kind = truth_kind(j.at("truth"));
    r.spec.truth.c = j.at("c");
    r.spec.truth.alpha = j.at("alpha");
    r.spec.truth.p = j.at("p");
    r.spec.truth.x0 = j.at("x0");
    r.spec.errors =
        j.at("errors") == "uniform" ? ErrorLaw::uniform_unit : ErrorLaw::neg_exponential;
    r.spec.reps = j.at("reps");
    r.spec.seed = j.at("seed");
    r.spec.a1 = j.at("a1");
}

void put_a1(json& j, const A1Estimate& e) {
    j["value"] = e.value;
    j["std_error"] = e.std_error;
    j["reps"] = e.reps;
    j["gamma"] = e.gamma;
    j["depth"] = e.depth;
    j["seed"] = e.seed;
    j["redraws"] = e.redraws;
}

void get_a1(const json& j, A1Estimate& e) {
    e.value = j.at("value");
    e.std_error = j.at("std_error");
    e.reps = j.at("reps");
    e.gamma = j.at("gamma");
    e.depth = j.at("depth");
    e.seed = j.at("seed");
    e.redraws = j.at("redraws");
}

}  // namespace

std::string to_json(const Report& report) {
    json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    j["warnings"] = report.warnings;
    j["wall_ms"] = report.wall_ms;
    if (report.gof && report.gof_config) put_gof(j, *report.gof, *report.gof_config);
    if (report.experiment) put_experiment(j, *report.experiment);
    if (report.a1) put_a1(j, *report.a1);
    return j.dump();
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::parse_error, e.what());
    }
    try {
        Report r;
        r.schema_version = j.at("schema_version");
        r.command = j.at("command");
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.wall_ms = j.at("wall_ms");
        if (r.command == "test") {
            GofOutcome o;
            GofConfig c;
            get_gof(j, o, c);
            r.gof = o;
            r.gof_config = c;
        } else if (r.command == "experiment") {
            ExperimentReport e;
            get_experiment(j, e);
            r.experiment = e;
        } else if (r.command == "calibrate-a1") {
            A1Estimate e{};
            get_a1(j, e);
            r.a1 = e;
        } else {
            raise(Errc::parse_error, "unknown command '" + r.command + "'");
        }
        return r;
    } catch (const json::exception& e) {
        raise(Errc::parse_error, e.what());
    }
}

namespace {

void line(std::ostringstream& os, const char* key, const std::string& value) {
    os << std::left << std::setw(18) << key << value << '\n';
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

std::string to_text(const Report& report) {
    std::ostringstream os;
    line(os, "command", report.command);
    if (report.gof) {
        const GofOutcome& o = *report.gof;
        line(os, "t", num(o.t));
        line(os, "gamma_used", num(o.gamma_used));
        line(os, "cx", num(o.cx));
        line(os, "n_stat", std::to_string(o.n_stat));
        line(os, "n_used", std::to_string(o.n_used));
        line(os, "crit1", num(o.crit1));
        line(os, "p1", num(o.p1));
        line(os, "reject1", o.reject1 ? "yes" : "no");
        line(os, "crit2", num(o.crit2));
        line(os, "p2", num(o.p2));
        line(os, "reject2", o.reject2 ? "yes" : "no");
    }
    if (report.experiment) {
        const ExperimentReport& e = *report.experiment;
        line(os, "rate_phi1", num(e.rate_phi1) + " +- " + num(e.ci3_phi1));
        line(os, "rate_phi2", num(e.rate_phi2) + " +- " + num(e.ci3_phi2));
        line(os, "reps_done", std::to_string(e.reps_done));
        line(os, "reps_failed", std::to_string(e.reps_failed));
        line(os, "seed", std::to_string(e.spec.seed));
    }
    if (report.a1) {
        const A1Estimate& e = *report.a1;
        line(os, "value", num(e.value));
        line(os, "std_error", num(e.std_error));
        line(os, "reps", std::to_string(e.reps));
        line(os, "gamma", num(e.gamma));
        line(os, "depth", num(e.depth));
        line(os, "seed", std::to_string(e.seed));
        line(os, "redraws", std::to_string(e.redraws));
    }
    for (const std::string& w : report.warnings) os << "warning: " << w << '\n';
    line(os, "wall_ms", num(report.wall_ms));
    return os.str();
}

namespace {

bool same(const std::optional<GofOutcome>& a, const std::optional<GofOutcome>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->t == b->t && a->gamma_used == b->gamma_used && a->cx == b->cx &&
           a->crit1 == b->crit1 && a->crit2 == b->crit2 && a->reject1 == b->reject1 &&
           a->reject2 == b->reject2 && a->p1 == b->p1 && a->p2 == b->p2 &&
           a->n_used == b->n_used && a->n_stat == b->n_stat &&
           a->breakdown.t1 == b->breakdown.t1 && a->breakdown.s1 == b->breakdown.s1 &&
           a->breakdown.s2 == b->breakdown.s2 && a->breakdown.s3 == b->breakdown.s3;
}

bool same(const std::optional<ExperimentReport>& a, const std::optional<ExperimentReport>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->rate_phi1 == b->rate_phi1 && a->rate_phi2 == b->rate_phi2 &&
           a->reps_done == b->reps_done && a->reps_failed == b->reps_failed &&
           a->spec.n == b->spec.n && a->spec.seed == b->spec.seed &&
           a->spec.reps == b->spec.reps;
}

bool same(const std::optional<A1Estimate>& a, const std::optional<A1Estimate>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->value == b->value && a->std_error == b->std_error && a->reps == b->reps &&
           a->gamma == b->gamma && a->depth == b->depth && a->seed == b->seed &&
           a->redraws == b->redraws;
}

}  // namespace

bool operator==(const Report& a, const Report& b) {
    return a.schema_version == b.schema_version && a.command == b.command &&
           a.warnings == b.warnings && a.wall_ms == b.wall_ms && same(a.gof, b.gof) &&
           same(a.experiment, b.experiment) && same(a.a1, b.a1);
}

}  // namespace fgof
