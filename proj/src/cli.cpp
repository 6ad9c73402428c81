#include "wbafrac/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wbafrac/suites.hpp"

namespace wbafrac::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string example;
    std::vector<std::string> params;
    std::string r, alpha, cutoff;
    std::string format = "json";
    std::string output = "-";
    std::vector<std::string> suites;
    std::vector<std::string> at;
    std::string monoid = "default";
    std::string strategy;
    unsigned power_bound = 0;
    unsigned level = 3;
    std::string emit;
    std::string load;
    bool check = false;
    bool localized = false;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

Params collect_params(const Options& o)
{
    Params p;
    for (const auto& kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (!o.r.empty()) p["r"] = o.r;
    if (!o.alpha.empty()) p["alpha"] = o.alpha;
    if (!o.cutoff.empty()) p["cutoff"] = o.cutoff;
    return p;
}

Example build(const Options& o)
{
    try {
        return build_example(o.example, collect_params(o));
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

/// declared-regular | bounded:N | finite:W;W;... with words written as dot-separated generator indices
AnnihilatorStrategy parse_strategy(const std::string& s)
{
    if (s == "declared-regular" || s == "regular") return AnnihilatorStrategy::declared_regular();
    if (s.rfind("bounded:", 0) == 0) {
        try {
            return AnnihilatorStrategy::bounded(static_cast<unsigned>(std::stoul(s.substr(8))));
        } catch (const std::exception&) {
            throw UsageError("bad bounded strategy '" + s + "'");
        }
    }
    if (s.rfind("finite:", 0) == 0) {
        std::vector<Word> words;
        for (const auto& w : split(s.substr(7), ';')) {
            Word word;
            try {
                for (const auto& letter : split(w, '.')) word.push_back(std::stoi(letter));
            } catch (const std::exception&) {
                throw UsageError("bad test word '" + w + "'");
            }
            words.push_back(word);
        }
        return AnnihilatorStrategy::finite(words);
    }
    throw UsageError("unknown strategy '" + s + "' (declared-regular, bounded:N, finite:W;W)");
}

json header(const Example& ex, const std::string& command)
{
    json h = report_header(ex);
    h["command"] = command;
    return h;
}

unsigned emit_cutoff(const Wba& h) { return h.graded() ? h.cutoff() : kUnbounded; }

class Writer {
public:
    Writer(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void write(const json& j, const std::string& text) const
    {
        std::string body = o_.format == "text" ? text : j.dump(2) + "\n";
        if (o_.output == "-") {
            out_ << body;
            return;
        }
        std::ofstream f(o_.output);
        if (!f) throw UsageError("cannot write " + o_.output);
        f << body;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

std::string dims_text(const json& dims)
{
    std::ostringstream os;
    for (const auto& [k, v] : dims.items()) os << "  " << k << ": " << v.get<std::size_t>() << "\n";
    return os.str();
}

int cmd_list(const Options& o, std::ostream& out)
{
    json j;
    j["version"] = kVersion;
    j["command"] = "list";
    json list = json::array();
    std::ostringstream text;
    for (const auto& d : catalog_descriptors()) {
        list.push_back({{"name", d.name}, {"summary", d.summary}, {"defaults", d.defaults}, {"manifest", d.manifest}});
        text << d.name << "  " << d.summary << "\n";
    }
    j["examples"] = list;
    Writer(o, out).write(j, text.str());
    return kExitOk;
}

int cmd_info(const Options& o, std::ostream& out)
{
    Example ex = build(o);
    json j = header(ex, "info");
    j["description"] = ex.description;
    j["dimensions"] = dimension_json(*ex.wba, emit_cutoff(*ex.wba));
    json elements = json::array(), gl = json::array();
    for (const auto& [n, e] : ex.elements) elements.push_back(n);
    for (const auto& [n, e] : ex.group_likes) gl.push_back(n);
    j["elements"] = elements;
    j["group_likes"] = gl;
    json monoids = json::object();
    for (const auto& [k, m] : ex.monoids) monoids[k] = {{"generators", m->names()}, {"strategy", m->strategy().to_json()}};
    j["monoids"] = monoids;
    j["rejected_monoids"] = ex.rejected_monoids;
    j["manifest"] = ex.manifest;
    j["expected_failures"] = ex.expected_failures;
    j["notes"] = ex.notes;
    std::ostringstream text;
    text << ex.name << ": " << ex.description << "\n" << "dimensions:\n" << dims_text(j["dimensions"]);
    text << "manifest:";
    for (const auto& s : ex.manifest) text << " " << s;
    text << "\n";
    for (const auto& n : ex.notes) text << "note: " << n << "\n";
    Writer(o, out).write(j, text.str());
    return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out)
{
    Example ex = build(o);
    json j = header(ex, "build");
    j["name"] = ex.wba->name();
    j["dimension"] = ex.wba->dimension();
    j["dimensions"] = dimension_json(*ex.wba, emit_cutoff(*ex.wba));
    std::ostringstream text;
    text << "built " << ex.wba->name() << " (dimension " << ex.wba->dimension() << ")\n" << dims_text(j["dimensions"]);
    Writer(o, out).write(j, text.str());
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out)
{
    Example ex = build(o);
    std::vector<std::string> suites;
    for (const auto& s : o.suites)
        for (const auto& part : split(s, ',')) suites.push_back(part);
    if (suites.empty()) suites = ex.manifest;
    if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw UsageError("unknown suite '" + s + "'");

    json j = header(ex, "check");
    json reports = json::object();
    std::ostringstream text;
    bool all = true;
    for (const auto& s : suites) {
        Report rep = run_suite(ex, s);
        reports[s] = rep.to_json();
        all = all && rep.passed();
        text << rep.to_text();
    }
    j["suites"] = reports;
    j["passed"] = all;
    Writer(o, out).write(j, text.str());
    return all ? kExitOk : kExitFailure;
}

int cmd_localize(const Options& o, std::ostream& out)
{
    Example ex = build(o);
    json j = header(ex, "localize");
    std::ostringstream text;
    int code = kExitOk;
    try {
        std::optional<Localization> loc;
        if (!o.at.empty()) {
            std::vector<std::string> names;
            for (const auto& a : o.at)
                for (const auto& part : split(a, ',')) names.push_back(part);
            for (const auto& n : names)
                if (!ex.has_element(n)) throw UsageError("example " + ex.name + " has no element '" + n + "'");
            AnnihilatorStrategy strategy =
                o.strategy.empty() ? AnnihilatorStrategy::bounded(4) : parse_strategy(o.strategy);
            loc.emplace(monoid_from_names(ex, names, strategy), check_cutoff(ex), o.power_bound);
        } else {
            if (!ex.monoids.count(o.monoid)) throw UsageError("example " + ex.name + " has no monoid '" + o.monoid + "'");
            auto m = ex.monoids.at(o.monoid);
            if (!o.strategy.empty())
                m = std::make_shared<DenominatorMonoid>(m->host_ptr(), m->generators(), m->names(), m->action(),
                                                        parse_strategy(o.strategy));
            loc.emplace(m, check_cutoff(ex), o.power_bound);
        }
        j["localization"] = loc->report_json();
        text << "localized " << ex.name << " at";
        for (const auto& n : loc->monoid().names()) text << " " << n;
        text << " (strategy " << loc->monoid().strategy().name() << ")\n";
        if (loc->materialized()) {
            auto model = loc->wba();
            j["dimensions"] = dimension_json(*model, emit_cutoff(*model));
            if (!model->graded()) text << "dimension " << model->dimension() << "\n";
            text << dims_text(j["dimensions"]);
        }
    } catch (const StructureError& e) {
        j["error"] = e.what();
        text << "localization rejected: " << e.what() << "\n";
        code = kExitFailure;
    }
    Writer(o, out).write(j, text.str());
    return code;
}

int cmd_detq(const Options& o, std::ostream& out)
{
    if (o.level < 3) throw UsageError("--r must be at least 3");
    const unsigned cutoff = o.cutoff.empty() ? 3 : static_cast<unsigned>(std::stoul(o.cutoff));
    auto m = mhatq2(o.level, std::max(2u, cutoff));
    Element det = quantum_determinant(*m.free, o.level);
    json j;
    j["version"] = kVersion;
    j["command"] = "detq";
    j["params"] = {{"r", o.level}};
    j["field_conductor"] = m.free->field().conductor();
    j["element"] = to_json(det);
    json terms = json::object();
    for (const auto& [b, c] : det) terms[m.free->basis_label(b)] = c.to_string();
    j["terms"] = terms;
    std::ostringstream text;
    text << "det_q (r = " << o.level << ") = " << format(*m.free, det) << "\n";
    int code = kExitOk;
    if (o.check) {
        GroupLike kind = is_group_like(*m.wba, m.det);
        Report central = check_central(*m.wba, m.det, cutoff);
        j["cutoff"] = cutoff;
        j["group_like"] = to_string(kind);
        j["central"] = central.to_json();
        text << "group-like: " << to_string(kind) << "\n" << central.to_text();
        if (kind != GroupLike::both || !central.passed()) code = kExitFailure;
    }
    Options sink = o;
    if (!o.emit.empty()) sink.output = o.emit;
    Writer(sink, out).write(j, text.str());
    return code;
}

int cmd_emit(const Options& o, std::ostream& out)
{
    json j;
    if (!o.load.empty()) {
        std::ifstream f(o.load);
        if (!f) throw UsageError("cannot read " + o.load);
        json in;
        try {
            in = json::parse(f);
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed JSON: ") + e.what());
        }
        if (!in.contains("wba")) throw UsageError("input has no 'wba' object");
        std::shared_ptr<TableWba> h;
        try {
            h = wba_from_json(in["wba"]);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        j = in;
        j["wba"] = to_json(*h, emit_cutoff(*h));
    } else {
        Example ex = build(o);
        j = header(ex, "emit");
        j["wba"] = to_json(*ex.wba, emit_cutoff(*ex.wba));
    }
    Options sink = o;
    sink.format = "json";
    Writer(sink, out).write(j, "");
    return kExitOk;
}

int cmd_dims(const Options& o, std::ostream& out)
{
    Example ex = build(o);
    json j = header(ex, "dims");
    j["dimensions"] = dimension_json(*ex.wba, emit_cutoff(*ex.wba));
    std::ostringstream text;
    text << ex.wba->name() << ":\n" << dims_text(j["dimensions"]);
    if (o.localized) {
        Localization loc = localize_example(ex, o.monoid, o.power_bound);
        auto model = loc.wba();
        j["localized"] = dimension_json(*model, emit_cutoff(*model));
        text << model->name() << ":\n" << dims_text(j["localized"]);
    }
    Writer(o, out).write(j, text.str());
    return kExitOk;
}

void add_example_options(CLI::App* c, Options& o, bool require_name = true)
{
    c->add_option("example", o.example, "catalog example name")->required(require_name);
    c->add_option("--param,-p", o.params, "example parameter key=value (repeatable)");
    c->add_option("--r", o.r, "level r");
    c->add_option("--alpha", o.alpha, "Sweedler parameter alpha");
    c->add_option("--cutoff", o.cutoff, "degree cutoff");
}

void add_output_options(CLI::App* c, Options& o)
{
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--output,-o", o.output, "output file, - for standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak bialgebras, r-forms and their rings of fractions"};
    app.name("wbafrac");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto* list = app.add_subcommand("list", "list catalog examples");
    add_output_options(list, o);
    auto* info = app.add_subcommand("info", "describe an example");
    add_example_options(info, o);
    add_output_options(info, o);
    auto* buildc = app.add_subcommand("build", "build an example and report its dimensions");
    add_example_options(buildc, o);
    add_output_options(buildc, o);
    auto* check = app.add_subcommand("check", "run check suites (default: the example's manifest)");
    add_example_options(check, o);
    add_output_options(check, o);
    check->add_option("--suite,-s", o.suites, "comma-separated suites, or all");
    auto* loc = app.add_subcommand("localize", "localize an example at a monoid of group-likes");
    add_example_options(loc, o);
    add_output_options(loc, o);
    loc->add_option("--at", o.at, "comma-separated element names generating the monoid");
    loc->add_option("--monoid", o.monoid, "named catalog monoid (default: default)");
    loc->add_option("--strategy", o.strategy, "declared-regular, bounded:N or finite:W;W");
    loc->add_option("--power-bound", o.power_bound, "largest denominator power materialized");
    auto* detq = app.add_subcommand("detq", "quantum determinant of the level-r graph WBA");
    detq->add_option("--r", o.level, "level r >= 3");
    detq->add_option("--cutoff", o.cutoff, "cutoff for --check");
    detq->add_option("--emit", o.emit, "write the element JSON to this path (- for standard output)");
    detq->add_flag("--check", o.check, "test group-likeness and centrality in the quotient");
    add_output_options(detq, o);
    auto* emit = app.add_subcommand("emit", "serialize an example (or re-emit a loaded file)");
    add_example_options(emit, o, false);
    emit->add_option("--load", o.load, "previously emitted JSON file");
    emit->add_option("--output,-o", o.output, "output file, - for standard output");
    auto* dims = app.add_subcommand("dims", "graded dimension table");
    add_example_options(dims, o);
    add_output_options(dims, o);
    dims->add_flag("--localized", o.localized, "also report the localization at the default monoid");
    dims->add_option("--monoid", o.monoid, "named catalog monoid for --localized");

    auto* catalog = app.add_subcommand("catalog", "catalog list / catalog build <name>");
    catalog->require_subcommand(1);
    auto* clist = catalog->add_subcommand("list", "list catalog examples");
    add_output_options(clist, o);
    auto* cbuild = catalog->add_subcommand("build", "build an example");
    add_example_options(cbuild, o);
    add_output_options(cbuild, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (emit->parsed() && o.example.empty() && o.load.empty()) {
        err << "error: emit needs an example name or --load\n";
        return kExitUsage;
    }

    try {
        if (list->parsed() || clist->parsed()) return cmd_list(o, out);
        if (info->parsed()) return cmd_info(o, out);
        if (buildc->parsed() || cbuild->parsed()) return cmd_build(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (loc->parsed()) return cmd_localize(o, out);
        if (detq->parsed()) return cmd_detq(o, out);
        if (emit->parsed()) return cmd_emit(o, out);
        if (dims->parsed()) return cmd_dims(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid number: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    err << "error: no command\n";
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace wbafrac::cli
