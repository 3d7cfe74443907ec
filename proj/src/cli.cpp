#include "omega/cli.hpp"

#include <algorithm>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "omega/algebra_file.hpp"
#include "omega/catalog.hpp"
#include "omega/domains.hpp"
#include "omega/term.hpp"
#include "omega/zariski.hpp"

namespace omega::cli {

namespace {

using nlohmann::json;

// A command result rendered either as `key: value` lines or as one JSON object.
class Report {
public:
    void add(const std::string& key, const std::string& text, json value) {
        lines_.emplace_back(key, text);
        if (value.is_null() && !text.empty()) value = text;
        fields_[key] = std::move(value);
    }
    void add(const std::string& key, const std::string& text) { add(key, text, text); }
    void add(const std::string& key, bool value) { add(key, value ? "true" : "false", value); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value), value); }
    // Repeated text lines collected under one JSON array.
    void add_list(const std::string& key, const std::string& json_key, const std::vector<std::string>& items,
                  json values) {
        for (const auto& item : items) lines_.emplace_back(key, item);
        fields_[json_key] = std::move(values);
    }

    void write(std::ostream& out, bool as_json) const {
        if (as_json) {
            out << fields_.dump(2) << '\n';
            return;
        }
        for (const auto& [key, text] : lines_) out << key << ": " << text << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
    json fields_ = json::object();
};

std::string tuple(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void add_points(Report& report, const std::string& key, const std::string& json_key, const PointSet& set) {
    std::vector<std::string> lines;
    json values = json::array();
    for (const Point& p : set.points()) {
        lines.push_back(tuple(p));
        values.push_back(p);
    }
    report.add_list(key, json_key, lines, values);
}

json witness_json(const WitnessedVerdict& v) {
    json w = json::object();
    for (const auto& [label, element] : v.witness) w[label] = element;
    return w;
}

// Points of V(x1) ∪ V(x2) in H^2, in CLI syntax.
std::string axes_points(std::size_t n) {
    PointSet axes(n, 2);
    for (Element a = 0; a < n; ++a) {
        axes.insert({a, 0});
        axes.insert({0, a});
    }
    return axes.to_string();
}

struct CheckOptions {
    std::string file;
    std::string property;
    std::size_t max_points = kDefaultMaxPoints;
};

int run_check(const CheckOptions& o, Report& report) {
    const FiniteOmegaGroup h = read_algebra_file(o.file);
    ZariskiOptions zopt;
    zopt.max_points = o.max_points;
    report.add("algebra", h.name());
    report.add("property", o.property);

    WitnessedVerdict v;
    std::string witness_key = "witness";
    std::string recipe;
    if (o.property == "domain") {
        v = zero_divisor_witness(h);
        v.verdict = !v.verdict;
        witness_key = "zero-divisors";
        recipe = "closure";
    } else if (o.property == "anticommutative") {
        v = is_anticommutative(h);
    } else if (o.property == "c-anticommutative") {
        v = is_c_anticommutative(h);
        recipe = "closure";
    } else if (o.property == "equational-domain") {
        v = equational_domain_check(h, zopt);
        witness_key = "closure-point";
        recipe = "closure";
    } else if (o.property == "formula5") {
        v = ring_satisfies_formula5(h);
        witness_key = "annihilating-pair";
        recipe = "solve";
    } else if (o.property == "remark1") {
        const GroupZeroDivisorSets sets = group_zero_divisor_sets(h);
        v = {sets.by_two_conjugates == sets.by_one_conjugate, {}, "conjugate-commutation-sets"};
        report.add("set-two-conjugates", sets.by_two_conjugates.to_string());
        report.add("set-one-conjugate", sets.by_one_conjugate.to_string());
    } else {
        throw Error(ErrorKind::ParseError, "unknown property '" + o.property + "'");
    }

    report.add(o.property, v.verdict);
    report.add("method", v.method);
    if (!v.verdict && v.has_witness()) {
        report.add(witness_key, v.witness_tuple(), witness_json(v));
        if (recipe == "closure") {
            // (a,b) lies in the closure of the axes whenever [<a>,<b>] = 0.
            report.add("verify", "omegaz closure " + o.file + " --vars 2 --points " + quote(axes_points(h.size())) +
                                      " # lists " + v.witness_tuple());
        } else if (recipe == "solve") {
            const std::string& mul = h.operation(0).name;
            report.add("verify", "omegaz solve " + o.file + " --vars 2 --eq " + quote(mul + "(x1,x2)") + " --eq " +
                                      quote(mul + "(x2,x1)") + " # lists " + v.witness_tuple());
        }
    }
    return v.verdict ? kExitOk : kExitPropertyFails;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Ω-groups: ideals, domains and algebraic sets", "omegaz"};
    app.require_subcommand(1);
    std::string format = "text";
    std::size_t max_points = kDefaultMaxPoints;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-points", max_points, "Refuse to enumerate more than this many points of H^n");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Parse and validate an algebra file");
    validate->add_option("file", file)->required();

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Decide one property");
    check_cmd->add_option("file", check.file)->required();
    check_cmd->add_option("--property", check.property)
        ->required()
        ->check(CLI::IsMember(
            {"domain", "anticommutative", "c-anticommutative", "equational-domain", "formula5", "remark1"}));

    std::size_t vars = 1;
    std::vector<std::string> equations;
    auto* solve = app.add_subcommand("solve", "Solve a system of equations");
    solve->add_option("file", file)->required();
    solve->add_option("--vars", vars)->required();
    solve->add_option("--eq", equations, "Term t or equation t1 = t2")->required();

    std::string points_text;
    bool no_memo = false;
    auto* closure = app.add_subcommand("closure", "Zariski closure of a point set");
    closure->add_option("file", file)->required();
    closure->add_option("--vars", vars)->required();
    closure->add_option("--points", points_text, "e.g. \"0,0;1,0\"")->required();
    closure->add_flag("--no-memo", no_memo, "Generate one subalgebra per candidate point");

    auto* lattice = app.add_subcommand("lattice", "Enumerate the algebraic sets");
    lattice->add_option("file", file)->required();
    lattice->add_option("--vars", vars);

    ClassificationGuards guards;
    auto* catalog = app.add_subcommand("catalog", "Classify the built-in catalog");
    catalog->add_option("--max-zariski-size", guards.max_zariski_size);

    std::string entry_name;
    auto* export_cmd = app.add_subcommand("export", "Print a catalog algebra in file format");
    export_cmd->add_option("name", entry_name)->required();

    for (auto* sub : {validate, check_cmd, solve, closure, lattice, catalog})
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitError;
    }
    const bool as_json = format == "json";
    check.max_points = max_points;

    try {
        Report report;
        int code = kExitOk;
        if (*validate) {
            const FiniteOmegaGroup h = read_algebra_file(file);
            report.add("algebra", h.name());
            report.add("size", h.size());
            json ops = json::array();
            std::vector<std::string> lines;
            for (const auto& op : h.operations()) {
                lines.push_back(op.name + "/" + std::to_string(op.arity));
                ops.push_back({{"name", op.name}, {"arity", op.arity}});
            }
            report.add_list("operation", "operations", lines, ops);
            report.add("additive-commutative", h.is_commutative());
            report.add("valid", true);
        } else if (*check_cmd) {
            code = run_check(check, report);
        } else if (*solve) {
            const FiniteOmegaGroup h = read_algebra_file(file);
            EquationSystem system{vars, {}};
            for (const auto& e : equations) system.terms.push_back(parse_term(e));
            const PointSet solutions = solve_system(h, system, max_points);
            report.add("algebra", h.name());
            report.add("count", solutions.size());
            add_points(report, "point", "points", solutions);
        } else if (*closure) {
            const FiniteOmegaGroup h = read_algebra_file(file);
            const PointSet input = parse_points(points_text, h.size(), vars, max_points);
            ZariskiOptions zopt;
            zopt.max_points = max_points;
            zopt.memoize = !no_memo;
            const PointSet result = zariski_closure(h, input, zopt);
            report.add("algebra", h.name());
            report.add("input-count", input.size());
            report.add("algebraic", result == input);
            report.add("count", result.size());
            add_points(report, "point", "points", result);
            PointSet added(h.size(), vars, max_points);
            for (Element i : result.mask().elements())
                if (!input.contains_index(i)) added.insert_index(i);
            add_points(report, "added", "added", added);
        } else if (*lattice) {
            const FiniteOmegaGroup h = read_algebra_file(file);
            ZariskiOptions zopt;
            zopt.max_points = max_points;
            const AlgebraicLattice l = enumerate_algebraic_sets(h, vars, zopt);
            report.add("algebra", h.name());
            report.add("count", l.sets.size());
            std::vector<std::string> lines;
            json sets = json::array();
            for (const PointSet& s : l.sets) {
                lines.push_back("{" + s.to_string() + "}");
                json pts = json::array();
                for (const Point& p : s.points()) pts.push_back(p);
                sets.push_back(pts);
            }
            report.add_list("set", "sets", lines, sets);
            report.add("meet-is-intersection", l.meet_is_intersection);
            report.add("join-is-union", l.join_is_union);
            report.add("distributive", l.distributive);
            if (!l.join_is_union) {
                const std::string a = l.sets[l.union_witness[0]].to_string(), b = l.sets[l.union_witness[1]].to_string();
                report.add("non-algebraic-union", "{" + a + "} | {" + b + "}", json::array({a, b}));
            }
        } else if (*catalog) {
            const ClassificationReport r = run_classification(build_catalog(), guards);
            out << (as_json ? report_to_json(r) : report_to_text(r));
            return r.violation_count() == 0 ? kExitOk : kExitPropertyFails;
        } else if (*export_cmd) {
            const auto entry = find_catalog_entry(entry_name);
            if (!entry) throw Error(ErrorKind::ParseError, "no catalog entry '" + entry_name + "'");
            out << serialize_algebra(entry->construct());
            return kExitOk;
        }
        report.write(out, as_json);
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace omega::cli
