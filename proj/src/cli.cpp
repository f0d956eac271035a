#include "mincodes/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mincodes/constructions.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/error.hpp"
#include "mincodes/format.hpp"
#include "mincodes/minimality.hpp"
#include "mincodes/search.hpp"

namespace mincodes::cli {

namespace {

using Record = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, structured };

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

FieldPtr field_option(const std::string& q) {
    try {
        return parse_field(q);
    } catch (const Error& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
}

DefiningSet read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_defining_set(in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    return parse_defining_set(file);
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

void emit(std::ostream& out, const Record& r) { out << r.dump() << '\n'; }

Record witness_record(const Witness& w) {
    Record r;
    if (const auto* h = std::get_if<HyperplaneWitness>(&w)) {
        r["kind"] = "hyperplane";
        r["y"] = h->y.to_string();
        r["span_dim"] = h->span_dim;
    } else if (const auto* c = std::get_if<CoveringWitness>(&w)) {
        r["kind"] = "covering_pair";
        r["x"] = c->x.to_string();
        r["y"] = c->y.to_string();
    } else if (const auto* d = std::get_if<WeightIdentityWitness>(&w)) {
        r["kind"] = "weight_identity";
        r["a"] = d->a_msg.to_string();
        r["b"] = d->b_msg.to_string();
        r["weight_sum"] = d->weight_sum;
        r["rhs"] = d->rhs;
    }
    return r;
}

Record verdict_record(const MinimalityVerdict& v) {
    Record r;
    r["record"] = "verdict";
    r["method"] = method_name(v.method);
    r["verdict"] = verdict_name(v.verdict);
    if (!std::holds_alternative<std::monostate>(v.witness)) r["witness"] = witness_record(v.witness);
    r["work"] = v.work;
    if (v.method == Method::ab) {
        r["w_min"] = v.w_min;
        r["w_max"] = v.w_max;
    }
    return r;
}

void print_verdict(std::ostream& out, const MinimalityVerdict& v, double ms) {
    out << "method: " << method_name(v.method) << '\n' << "verdict: " << verdict_name(v.verdict) << '\n';
    if (v.method == Method::ab) out << "w_min: " << v.w_min << '\n' << "w_max: " << v.w_max << '\n';
    if (!std::holds_alternative<std::monostate>(v.witness)) {
        for (const auto& [key, value] : witness_record(v.witness).items())
            out << "witness_" << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    out << "work: " << v.work << '\n' << "wall_time_ms: " << ms << '\n';
}

Manifest manifest_for(const ConstructionParams& p, const DefiningSet& d) {
    Manifest m{{"family", family_name(p.family)}, {"k", std::to_string(p.k)}};
    if (p.family != Family::full && p.family != Family::d0) m.emplace_back("t", std::to_string(p.t));
    m.emplace_back("q", p.field->name());
    m.emplace_back("n", std::to_string(d.n()));
    if (p.family == Family::d0) {
        m.emplace_back("|D'|", std::to_string(p.k));
        m.emplace_back("|D''|", std::to_string(d.n() - p.k));
    } else if (p.family != Family::full) {
        const auto fs = family_sets(p.k, p.t, p.field);
        m.emplace_back("|S|", std::to_string(fs.s.size()));
        m.emplace_back("|S'|", std::to_string(fs.s1.size()));
        m.emplace_back("|S''|", std::to_string(fs.s2.size()));
        m.emplace_back("|Omega1|", std::to_string(fs.omega1.size()));
        m.emplace_back("|Omega2|", std::to_string(fs.omega2.size()));
        m.emplace_back("|Omega3|", std::to_string(fs.omega3.size()));
    }
    return m;
}

Record search_record(const SearchReport& r) {
    Record rec;
    rec["record"] = "search";
    rec["k"] = r.k;
    rec["q"] = r.q;
    rec["status"] = search_status_name(r.status);
    rec["n_min"] = r.n_min ? Record(*r.n_min) : Record(nullptr);
    rec["bracket"] = {r.bracket_lo, r.bracket_hi};
    rec["lower_exclusive"] = r.bounds.lower_exclusive;
    rec["upper_inclusive"] = r.bounds.upper_inclusive;
    Record attempts = Record::array();
    for (const auto& a : r.attempts)
        attempts.push_back(Record{{"n", a.n}, {"status", existence_name(a.status)}, {"nodes", a.nodes}});
    rec["attempts"] = attempts;
    rec["budget"] = r.budget;
    rec["budget_used"] = r.budget_used;
    rec["witness"] = r.witness ? Record(to_text(*r.witness)) : Record(nullptr);
    return rec;
}

// ----------------------------------------------------------------- commands

struct Common {
    std::string format = "text";
    unsigned jobs = 1;

    Format fmt() const { return format == "structured" ? Format::structured : Format::text; }
};

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
}

int cmd_construct(const std::string& family, std::size_t k, std::size_t t, const std::string& q, bool manifest,
                  const std::string& output, Io io) {
    auto fam = parse_family(family);
    if (!fam) throw UsageError("unknown family '" + family + "'");
    ConstructionParams p{*fam, k, t, field_option(q)};
    if (k == 0) throw UsageError("--k must be at least 1");
    const DefiningSet d = construct(p);
    write_output(output, io.out, to_text(d, manifest ? manifest_for(p, d) : Manifest{}));
    return exit_ok;
}

int cmd_check(const std::string& method, const std::string& input, const Common& c, Io io) {
    std::vector<Method> methods;
    if (method == "all")
        methods = {Method::span, Method::brute, Method::dhz, Method::ab};
    else if (method == "span")
        methods = {Method::span};
    else if (method == "brute")
        methods = {Method::brute};
    else if (method == "dhz")
        methods = {Method::dhz};
    else if (method == "ab")
        methods = {Method::ab};
    else
        throw UsageError("unknown method '" + method + "'");

    const DefiningSet d = read_input(input, io.in);
    std::vector<MinimalityVerdict> verdicts;
    for (Method m : methods) {
        Stopwatch sw;
        MinimalityVerdict v{m, Verdict::inconclusive, {}};
        try {
            v = check(m, d, c.jobs);
        } catch (const Error& e) {
            if (methods.size() == 1 || e.code() != Errc::enumeration_too_large) throw;
            if (c.fmt() == Format::structured)
                emit(io.out, Record{{"record", "verdict"}, {"method", method_name(m)}, {"verdict", "skipped"}});
            else
                io.out << "method: " << method_name(m) << "\nverdict: skipped (" << e.what() << ")\n";
            continue;
        }
        if (c.fmt() == Format::structured)
            emit(io.out, verdict_record(v));
        else
            print_verdict(io.out, v, sw.ms());
        verdicts.push_back(v);
    }
    if (methods.size() == 1) return exit_ok;

    // Exact methods must agree; the sufficient test may only confirm.
    bool agree = true;
    std::optional<bool> exact;
    for (const auto& v : verdicts) {
        if (v.method == Method::ab) continue;
        if (exact && *exact != v.minimal()) agree = false;
        exact = v.minimal();
    }
    for (const auto& v : verdicts)
        if (v.method == Method::ab && v.minimal() && exact && !*exact) agree = false;
    if (c.fmt() == Format::structured)
        emit(io.out, Record{{"record", "agreement"}, {"consistent", agree}});
    else
        io.out << "agreement: " << (agree ? "consistent" : "INCONSISTENT") << '\n';
    return agree ? exit_ok : exit_domain;
}

int cmd_weights(const std::string& input, const Common& c, Io io) {
    const DefiningSet d = read_input(input, io.in);
    const auto wd = weight_distribution(d, c.jobs);
    if (c.fmt() == Format::structured) {
        Record counts = Record::object();
        for (const auto& [w, n] : wd.counts) counts[std::to_string(w)] = n;
        Record r{{"record", "weights"}, {"q", wd.q}, {"k", wd.k}, {"n", wd.n}, {"counts", counts}};
        r["w_min"] = wd.w_min() ? Record(*wd.w_min()) : Record(nullptr);
        r["w_max"] = wd.w_max() ? Record(*wd.w_max()) : Record(nullptr);
        emit(io.out, r);
    } else {
        for (const auto& [w, n] : wd.counts) io.out << "A_" << w << " = " << n << '\n';
        if (wd.w_min()) io.out << "w_min: " << *wd.w_min() << "\nw_max: " << *wd.w_max() << '\n';
    }
    return exit_ok;
}

int cmd_bounds(std::size_t k, const std::string& q, const Common& c, Io io) {
    if (k == 0) throw UsageError("--k must be at least 1");
    const Bounds b = bounds(k, field_option(q)->q());
    if (c.fmt() == Format::structured)
        emit(io.out, Record{{"record", "bounds"},
                            {"k", b.k},
                            {"q", b.q},
                            {"lower_exclusive", b.lower_exclusive},
                            {"upper_inclusive", b.upper_inclusive}});
    else
        io.out << "lower: " << b.lower_exclusive << "\nupper: " << b.upper_inclusive << '\n'
               << b.lower_exclusive << " < n(" << b.k << ";" << b.q << ") <= " << b.upper_inclusive << '\n';
    return exit_ok;
}

int cmd_search(std::size_t k, const std::string& q, std::optional<std::size_t> n_max, const SearchOptions& opts,
               const Common& c, Io io) {
    if (k == 0) throw UsageError("--k must be at least 1");
    Stopwatch sw;
    const SearchReport r = n_min(k, field_option(q), opts, n_max);
    if (c.fmt() == Format::structured) {
        emit(io.out, search_record(r));
    } else {
        io.out << "status: " << search_status_name(r.status) << '\n';
        if (r.n_min) io.out << "n_min: " << *r.n_min << '\n';
        io.out << "bracket: [" << r.bracket_lo << ", " << r.bracket_hi << "]\n"
               << "bounds: " << r.bounds.lower_exclusive << " < n <= " << r.bounds.upper_inclusive << '\n';
        for (const auto& a : r.attempts)
            io.out << "n=" << a.n << ' ' << existence_name(a.status) << " nodes=" << a.nodes << '\n';
        io.out << "budget: " << r.budget << "\nbudget_used: " << r.budget_used << '\n'
               << "wall_time_ms: " << sw.ms() << '\n';
        if (r.witness) io.out << "witness:\n" << to_text(*r.witness);
    }
    return r.status == SearchStatus::budget_exhausted ? exit_budget : exit_ok;
}

int cmd_extend(const std::string& input, std::size_t target, const std::string& padding, const std::string& pad_file,
               const std::string& output, Io io) {
    const auto pad = parse_padding(padding);
    if (!pad) throw UsageError("unknown padding '" + padding + "'");
    if (*pad == Padding::from_file && pad_file.empty()) throw UsageError("--padding from_file needs --pad-file");
    if (*pad != Padding::from_file && !pad_file.empty()) throw UsageError("--pad-file needs --padding from_file");
    const DefiningSet d = read_input(input, io.in);
    std::vector<Vector> source;
    if (!pad_file.empty()) {
        const DefiningSet src = read_input(pad_file, io.in);
        if (src.k() != d.k() || !(src.field() == d.field()))
            throw Error(Errc::dimension_mismatch, "padding file has a different field or dimension");
        source = src.columns();
    }
    write_output(output, io.out, to_text(extend(d, target, *pad, source)));
    return exit_ok;
}

int cmd_field_info(const std::string& q, const Common& c, Io io) {
    const FieldPtr f = field_option(q);
    std::string modulus;
    for (std::size_t i = 0; i < f->modulus().size(); ++i) modulus += (i ? " " : "") + std::to_string(f->modulus()[i]);
    if (c.fmt() == Format::structured) {
        emit(io.out, Record{{"record", "field"},
                            {"field", f->name()},
                            {"p", f->p()},
                            {"m", f->m()},
                            {"q", f->q()},
                            {"modulus", f->modulus()},
                            {"tabulated", f->tabulated()}});
    } else {
        io.out << "field: GF(" << f->name() << ")\np: " << f->p() << "\nm: " << f->m() << "\nq: " << f->q() << '\n'
               << "modulus (constant term first): " << (modulus.empty() ? "-" : modulus) << '\n'
               << "tables: " << (f->tabulated() ? "yes" : "no") << '\n';
    }
    return exit_ok;
}

int cmd_selftest(std::uint64_t seed, std::size_t count, const Common& c, Io io) {
    const auto corpus = random_corpus(seed, count);
    std::size_t minimal = 0, disagreements = 0, ab_confirmed = 0, bad_witness = 0, identity_failures = 0;
    for (const auto& d : corpus) {
        const auto span = check_span(d, c.jobs);
        const auto brute = check_brute(d, c.jobs);
        const auto dhz = check_dhz(d, c.jobs);
        const auto ab = check_ab(d, c.jobs);
        minimal += span.minimal();
        ab_confirmed += ab.minimal();
        if (span.minimal() != brute.minimal() || span.minimal() != dhz.minimal() || (ab.minimal() && !span.minimal()))
            ++disagreements;
        for (const auto* v : {&span, &brute, &dhz})
            if (!witness_holds(*v, d)) ++bad_witness;
        if (d.zero_columns() == 0) {
            const auto ci = counting_identity(d);
            identity_failures += ci.lhs != ci.rhs;
        }
    }
    const bool ok = disagreements == 0 && bad_witness == 0 && identity_failures == 0;
    if (c.fmt() == Format::structured) {
        emit(io.out, Record{{"record", "selftest"},
                            {"seed", seed},
                            {"codes", corpus.size()},
                            {"minimal", minimal},
                            {"ab_confirmed", ab_confirmed},
                            {"disagreements", disagreements},
                            {"bad_witnesses", bad_witness},
                            {"identity_failures", identity_failures},
                            {"ok", ok}});
    } else {
        io.out << "seed: " << seed << "\ncodes: " << corpus.size() << "\nminimal: " << minimal
               << "\nab_confirmed: " << ab_confirmed << "\ndisagreements: " << disagreements
               << "\nbad_witnesses: " << bad_witness << "\nidentity_failures: " << identity_failures
               << "\nresult: " << (ok ? "ok" : "FAILED") << '\n';
    }
    return ok ? exit_ok : exit_domain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Minimal linear codes over GF(q): constructions, minimality checks, and n(k;q) search", "mincodes"};
    app.require_subcommand(1);

    Common common;
    std::string family, q = "2", method = "span", input, output, padding = "repeat_last", pad_file;
    std::size_t k = 0, t = 0, target = 0, count = 200;
    std::optional<std::size_t> n_max;
    std::uint64_t seed = 1;
    bool manifest = false, no_prune = false, no_fix_basis = false;
    SearchOptions sopts;

    auto* construct = app.add_subcommand("construct", "emit a named defining set");
    construct->add_option("--family", family, "full, d0, d1, d2, d3 or d4")->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--q", q)->required();
    construct->add_option("--t", t, "split parameter for d1..d4, k/2 < t < k");
    construct->add_flag("--manifest", manifest, "prefix a comment header describing the construction");
    construct->add_option("-o,--output", output);

    auto* check = app.add_subcommand("check", "decide minimality of a defining set");
    check->add_option("--method", method, "span, dhz, brute, ab or all")->capture_default_str();
    check->add_option("-i,--input", input, "defining-set file (default stdin)");
    check->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_format(check, common);

    auto* weights = app.add_subcommand("weights", "weight distribution of C(D)");
    weights->add_option("-i,--input", input);
    weights->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_format(weights, common);

    auto* bnds = app.add_subcommand("bounds", "bounds on n(k;q)");
    bnds->add_option("--k", k)->required();
    bnds->add_option("--q", q)->required();
    add_format(bnds, common);

    auto* search = app.add_subcommand("search", "determine n(k;q) by exhaustive search");
    search->add_option("--k", k)->required();
    search->add_option("--q", q)->required();
    search->add_option("--n-max", n_max, "stop after this length");
    search->add_option("--budget", sopts.budget, "backtracking node budget")->capture_default_str();
    search->add_option("--jobs", sopts.jobs)->check(CLI::PositiveNumber);
    search->add_flag("--no-prune", no_prune, "disable deficit pruning");
    search->add_flag("--no-fix-basis", no_fix_basis, "do not force the unit vectors into the search");
    add_format(search, common);

    auto* ext = app.add_subcommand("extend", "pad a defining set to a longer length");
    ext->add_option("-i,--input", input);
    ext->add_option("--n", target, "target length")->required();
    ext->add_option("--padding", padding, "repeat_last, cycle or from_file")->capture_default_str();
    ext->add_option("--pad-file", pad_file, "columns used by --padding from_file");
    ext->add_option("-o,--output", output);

    auto* info = app.add_subcommand("field-info", "describe the canonical GF(q)");
    info->add_option("--q", q)->required();
    add_format(info, common);

    auto* selftest = app.add_subcommand("selftest", "cross-check all checkers on a random corpus");
    selftest->add_option("--seed", seed)->capture_default_str();
    selftest->add_option("--count", count)->capture_default_str();
    selftest->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_format(selftest, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    sopts.prune = !no_prune;
    sopts.fix_basis = !no_fix_basis;
    try {
        if (construct->parsed()) return cmd_construct(family, k, t, q, manifest, output, io);
        if (check->parsed()) return cmd_check(method, input, common, io);
        if (weights->parsed()) return cmd_weights(input, common, io);
        if (bnds->parsed()) return cmd_bounds(k, q, common, io);
        if (search->parsed()) return cmd_search(k, q, n_max, sopts, common, io);
        if (ext->parsed()) return cmd_extend(input, target, padding, pad_file, output, io);
        if (info->parsed()) return cmd_field_info(q, common, io);
        if (selftest->parsed()) return cmd_selftest(seed, count, common, io);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

}  // namespace mincodes::cli
