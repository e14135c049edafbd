// portraits: command-line front end for the orbit portrait library.
//
// Exit status: 0 success, 1 domain failure (invalid portrait, failed
// realization, ray that does not land), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "portraits/enumeration.hpp"
#include "portraits/errors.hpp"
#include "portraits/itinerary.hpp"
#include "portraits/numerics.hpp"
#include "portraits/portrait.hpp"
#include "portraits/realization.hpp"
#include "portraits/render.hpp"

using json = nlohmann::ordered_json;
using namespace portraits;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    int degree = 0;
    std::size_t max_period = 0;
    int workers = 0;
    std::string out;
    double landing_tol = 1e-9;
    double co_landing_tol = 1e-6;
    double separation_tol = 1e-3;
    int depth = TraceOptions{}.depth;
    int density = TraceOptions{}.density;
    std::string portrait;
    std::string t;
    std::string c;
    std::string angle;
    bool include_trivial = false;
    std::string rule = "simplest";
    bool translates = false;
    bool highlight = false;
    bool labels = false;
    int size = 512;
};

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s += ch;
        }
    }
    std::size_t comma = s.find(',');
    try {
        std::size_t used = 0;
        double re = std::stod(s.substr(0, comma), &used);
        if (used != (comma == std::string::npos ? s.size() : comma)) {
            throw UsageError("bad real part");
        }
        double im = 0.0;
        if (comma != std::string::npos) {
            std::string tail = s.substr(comma + 1);
            im = std::stod(tail, &used);
            if (used != tail.size()) {
                throw UsageError("bad imaginary part");
            }
        }
        return {re, im};
    } catch (const std::exception&) {
        throw UsageError("--c expects \"re,im\", got \"" + text + "\"");
    }
}

int require_degree(const Settings& s, const CLI::Option* opt) {
    if (opt->count() == 0) {
        throw UsageError("--degree is required (on the command line or in the --config file)");
    }
    if (s.degree < 2) {
        throw UsageError("--degree must be at least 2");
    }
    return s.degree;
}

std::size_t require_max_period(const Settings& s, const CLI::Option* opt) {
    if (opt->count() == 0 || s.max_period == 0) {
        throw UsageError("--max-period N (N >= 1) is required");
    }
    return s.max_period;
}

OrbitPortrait read_portrait(const Settings& s, int d) {
    if (s.portrait.empty()) {
        throw UsageError("a portrait argument such as \"{1/5,4/5};{2/5,3/5}\" is required");
    }
    try {
        return parse_portrait(s.portrait, d);
    } catch (const ParseError& e) {
        throw UsageError(std::string("portrait: ") + e.what());
    }
}

Angle read_angle(const std::string& text, const char* flag) {
    try {
        return Angle::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

// Writes to --out when given, otherwise to stdout.
void emit(const Settings& s, const std::string& data) {
    if (s.out.empty() || s.out == "-") {
        std::cout << data;
        return;
    }
    std::ofstream file(s.out, std::ios::binary);
    if (!file) {
        throw DomainFailure("cannot open " + s.out + " for writing");
    }
    file << data;
}

json class_json(const OrbitPortrait& p) {
    PortraitClass cls = classify(p);
    json j;
    j["portrait"] = format_portrait(p);
    j["degree"] = p.degree();
    j["class"] = cls.name();
    j["ray_period"] = cls.ray_period;
    if (cls.kind == PortraitClass::Kind::EvenPeriod) {
        j["transitive"] = cls.transitive;
    }
    if (cls.kind == PortraitClass::Kind::OddThreeRaysMixed) {
        MixedGeometryReport g = check_mixed_geometry(p);
        json m;
        m["t_minus"] = g.t_minus.str();
        m["t_mid"] = g.t_mid.str();
        m["t_plus"] = g.t_plus.str();
        m["periods_ok"] = g.periods_ok;
        m["inside_shorter"] = g.inside_shorter;
        m["length_identity"] = g.length_identity;
        m["shorter_component_length"] = g.shorter_component_length.str();
        m["characteristic_length"] = g.characteristic_length.str();
        j["mixed_geometry"] = m;
    }
    return j;
}

int cmd_validate(const Settings& s, int d) {
    ValidationReport r = validate_formal(read_portrait(s, d));
    json j;
    j["valid"] = r.valid;
    j["trivial"] = r.trivial;
    j["violations"] = json::array();
    for (const Violation& v : r.violations) {
        j["violations"].push_back({{"condition", to_string(v.condition)}, {"detail", v.detail}});
    }
    std::cout << j.dump(2) << '\n';
    if (!r.valid) {
        std::cerr << "portrait is not a formal orbit portrait\n";
    }
    return r.valid ? 0 : 1;
}

int cmd_classify(const Settings& s, int d) {
    std::cout << class_json(read_portrait(s, d)).dump(2) << '\n';
    return 0;
}

int cmd_char_arc(const Settings& s, int d) {
    CharacteristicArc ch = characteristic_arc(read_portrait(s, d));
    json j;
    j["arc"] = ch.arc.str();
    j["owner"] = ch.owner + 1;
    j["length"] = ch.arc.length().str();
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_realize(const Settings& s, int d) {
    OrbitPortrait p = read_portrait(s, d);
    ValidationReport r = validate_formal(p);
    if (!r.valid || r.trivial) {
        throw DomainFailure(r.valid ? "trivial portraits are not realized"
                                    : "portrait fails " + to_string(r.violations.front().condition) + ": " +
                                          r.violations.front().detail);
    }
    RealizationWitness w = realize(p);
    json j;
    j["portrait"] = format_portrait(w.portrait);
    j["degree"] = d;
    j["witness"] = w.witness_angle.str();
    j["admissible"] = json::array();
    for (const CircleArc& a : w.admissible_set) {
        j["admissible"].push_back(a.str());
    }
    j["case"] = to_string(w.case_id);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_portrait_at(const Settings& s, int d, std::size_t n) {
    if (s.t.empty()) {
        throw UsageError("--t a/b is required");
    }
    PortraitAtOptions opts;
    opts.include_trivial = s.include_trivial;
    std::string lines;
    for (const OrbitPortrait& p : portrait_at(read_angle(s.t, "--t"), d, n, opts)) {
        json j;
        j["portrait"] = format_portrait(p);
        j["period"] = p.period();
        j["class"] = classify(p).str();
        lines += j.dump() + '\n';
    }
    emit(s, lines);
    return 0;
}

int cmd_catalog(const Settings& s, int d, std::size_t n) {
    if (s.out.empty()) {
        throw UsageError("--out FILE is required (use - for stdout)");
    }
    CatalogOptions opts;
    opts.workers = s.workers;
    if (s.rule == "midpoint") {
        opts.rule = SampleRule::Midpoint;
    } else if (s.rule != "simplest") {
        throw UsageError("--rule must be simplest or midpoint");
    }
    Catalog cat = build_catalog(d, n, opts);
    emit(s, catalog_jsonl(cat));
    std::vector<CatalogViolation> bad = verify_catalog_against_theorem(cat);
    std::cerr << "catalog d=" << d << " N=" << n << ": " << cat.entries.size() << " portraits from "
              << cat.stats.samples << " samples\n";
    for (const CatalogViolation& v : bad) {
        std::cerr << "violation: " << v.portrait << ": " << v.reason << '\n';
    }
    return bad.empty() ? 0 : 1;
}

int cmd_render(const Settings& s, int d) {
    RenderOptions opts;
    opts.size_px = s.size;
    opts.show_translates = s.translates;
    opts.highlight_characteristic = s.highlight;
    opts.label_angles = s.labels;
    if (opts.size_px < 64) {
        throw UsageError("--size must be at least 64");
    }
    emit(s, portrait_svg(read_portrait(s, d), opts));
    return 0;
}

TraceOptions trace_options(const Settings& s) {
    TraceOptions t;
    t.depth = s.depth;
    t.density = s.density;
    t.landing_tol = s.landing_tol;
    if (t.depth < 1 || t.density < 1) {
        throw UsageError("--depth and --density must be positive");
    }
    return t;
}

int cmd_trace(const Settings& s, int d) {
    if (s.c.empty() || s.angle.empty()) {
        throw UsageError("trace-ray needs --c re,im and --angle a/b");
    }
    RayTrace t = trace_ray(d, parse_complex(s.c), read_angle(s.angle, "--angle"), trace_options(s));
    std::ostringstream csv;
    write_trace_csv(t, csv);
    emit(s, csv.str());
    if (t.status != TraceStatus::Landed) {
        std::cerr << "ray " << t.angle.str() << ": " << to_string(t.status) << (t.detail.empty() ? "" : " - ")
                  << t.detail << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const Settings& s, int d) {
    if (s.c.empty()) {
        throw UsageError("verify needs --c re,im");
    }
    OrbitPortrait p = read_portrait(s, d);
    NumericTolerances tol{s.co_landing_tol, s.separation_tol, s.co_landing_tol};
    NumericReport r = verify_portrait_numeric(d, parse_complex(s.c), p, tol, trace_options(s));
    json j;
    j["portrait"] = format_portrait(p);
    j["ok"] = r.ok;
    j["rays"] = json::array();
    for (const RayTrace& t : r.traces) {
        json ray;
        ray["angle"] = t.angle.str();
        ray["status"] = to_string(t.status);
        if (t.landing_estimate) {
            ray["landing"] = {t.landing_estimate->real(), t.landing_estimate->imag()};
        }
        j["rays"].push_back(ray);
    }
    j["failures"] = r.failures;
    std::cout << j.dump(2) << '\n';
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit portraits of unicritical anti-polynomials z -> conj(z)^d + c"};
    app.fallthrough();
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.set_config("--config", "", "key = value file pre-setting any option; command-line flags win");

    Settings s;
    CLI::Option* degree_opt = app.add_option("-d,--degree", s.degree, "degree d >= 2 (required)");
    CLI::Option* period_opt = app.add_option("-N,--max-period", s.max_period, "largest orbit period");
    app.add_option("--workers", s.workers, "threads for catalog (default: OpenMP default)");
    app.add_option("-o,--out", s.out, "output file (- for stdout)");
    app.add_option("--landing-tol", s.landing_tol, "ray landing tolerance")->check(CLI::PositiveNumber);
    app.add_option("--co-landing-tol", s.co_landing_tol, "numeric co-landing tolerance")->check(CLI::PositiveNumber);
    app.add_option("--separation-tol", s.separation_tol, "distinct landing points tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--depth", s.depth, "ray trace depth levels");
    app.add_option("--density", s.density, "ray trace samples per level");

    auto portrait_arg = [&](CLI::App* sub) {
        sub->add_option("portrait", s.portrait, "e.g. \"{1/5,4/5};{2/5,3/5}\"");
    };
    CLI::App* validate = app.add_subcommand("validate", "check the formal portrait conditions");
    portrait_arg(validate);
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a valid portrait");
    portrait_arg(classify_cmd);
    CLI::App* arc = app.add_subcommand("char-arc", "characteristic arc and owning set");
    portrait_arg(arc);
    CLI::App* realize_cmd = app.add_subcommand("realize", "find a parameter angle realizing a portrait");
    portrait_arg(realize_cmd);
    CLI::App* at = app.add_subcommand("portrait-at", "portraits formed at parameter angle t");
    at->add_option("--t", s.t, "parameter angle a/b");
    at->add_flag("--include-trivial", s.include_trivial, "also list trivial portraits");
    CLI::App* catalog = app.add_subcommand("catalog", "sweep parameter angles and write a JSON Lines catalog");
    catalog->add_option("--rule", s.rule, "sample rule: simplest or midpoint");
    CLI::App* render = app.add_subcommand("render", "SVG chord diagram");
    portrait_arg(render);
    render->add_flag("--translates", s.translates, "draw the translates A_j + k/d");
    render->add_flag("--highlight", s.highlight, "highlight the characteristic arc");
    render->add_flag("--labels", s.labels, "label the angles");
    render->add_option("--size", s.size, "image size in pixels");
    CLI::App* trace = app.add_subcommand("trace-ray", "trace a dynamical ray, CSV output");
    trace->add_option("--c", s.c, "parameter re,im");
    trace->add_option("--angle", s.angle, "ray angle a/b");
    CLI::App* verify = app.add_subcommand("verify", "numerically check a portrait at parameter c");
    portrait_arg(verify);
    verify->add_option("--c", s.c, "parameter re,im");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const int d = require_degree(s, degree_opt);
        if (*validate) return cmd_validate(s, d);
        if (*classify_cmd) return cmd_classify(s, d);
        if (*arc) return cmd_char_arc(s, d);
        if (*realize_cmd) return cmd_realize(s, d);
        if (*at) return cmd_portrait_at(s, d, require_max_period(s, period_opt));
        if (*catalog) return cmd_catalog(s, d, require_max_period(s, period_opt));
        if (*render) return cmd_render(s, d);
        if (*trace) return cmd_trace(s, d);
        if (*verify) return cmd_verify(s, d);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
