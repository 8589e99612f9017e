// tavtool: knot and group inspection, twisted Alexander polynomials, TAV
// order scans and certificate checks.
//
// Exit codes: 0 success, 2 scan ended without a Zero ("> max order"),
// 64 usage, 65 bad input data or failed verification, 70 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tav/catalog.hpp"
#include "tav/certificate.hpp"
#include "tav/classifier.hpp"
#include "tav/epi_search.hpp"
#include "tav/error.hpp"
#include "tav/fox.hpp"
#include "tav/knot_table.hpp"
#include "tav/report.hpp"
#include "tav/tav_scan.hpp"

using nlohmann::json;
using namespace tav;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIndefinite = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct RunConfig {
    std::string knots = std::string(TAV_DATA_DIR) + "/knots.jsonl";
    std::string catalog = std::string(TAV_DATA_DIR) + "/groups.jsonl";
    std::string cache;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string mode = "screen";
    std::string format = "text";
    size_t max_order = 30;
    uint64_t seed = 20240611;
};

bool structured(const RunConfig& c)
{
    return c.format == "structured" || c.format == "json";
}

void check_file(const std::string& what, const std::string& path)
{
    if (!std::filesystem::is_regular_file(path))
        fail(ErrorKind::InvalidArgument, what + " file not found: " + path);
}

std::string words(const std::vector<Word>& ws)
{
    std::string s;
    for (size_t i = 0; i < ws.size(); ++i)
        s += (i ? ", " : "") + word_to_string(ws[i]);
    return s;
}

std::pair<size_t, size_t> parse_range(const std::string& s)
{
    try {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            size_t v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "order range must look like 24 or 1..23, got '" + s + "'");
    }
}

DetMode det_mode(const RunConfig& c)
{
    return parse_scan_mode(c.mode) == ScanMode::Certify ? DetMode::Certify : DetMode::Screen;
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream f(path);
    if (!f)
        fail(ErrorKind::Io, "cannot write " + path);
    f << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- knot-info

int cmd_knot_info(const RunConfig& cfg, const std::string& name, std::ostream& out)
{
    KnotTable kt = load_knot_table(cfg.knots);
    KnotPresentation p = kt.resolve(name);
    LaurentPoly delta = classical_alexander(p);
    if (structured(cfg)) {
        json j{{"knot", name},
               {"source", source_name(p.source)},
               {"generators", p.n},
               {"relators", json::array()},
               {"redundant", json::array()},
               {"meridian", word_to_string(p.meridian)},
               {"longitude", p.longitude ? json(word_to_string(*p.longitude)) : json(nullptr)},
               {"phi", p.phi},
               {"alexander", delta.to_string()},
               {"alexander_coefficients", json::array()},
               {"content_hash", p.content_hash()}};
        for (const auto& r : p.relators)
            j["relators"].push_back(word_to_string(r));
        for (const auto& r : p.redundant)
            j["redundant"].push_back(word_to_string(r));
        for (const auto& c : delta.dense())
            j["alexander_coefficients"].push_back(c.get_str());
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "knot        " << name << "\n";
    out << "source      " << source_name(p.source) << "\n";
    out << "generators  " << p.n << "\n";
    out << "relators    " << p.relators.size() << "\n";
    for (const auto& r : p.relators)
        out << "  " << word_to_string(r) << "\n";
    if (!p.redundant.empty())
        out << "redundant   " << words(p.redundant) << "\n";
    out << "meridian    " << word_to_string(p.meridian) << "\n";
    if (p.longitude)
        out << "longitude   " << word_to_string(*p.longitude) << "\n";
    out << "phi        ";
    for (auto v : p.phi)
        out << ' ' << v;
    out << "\n";
    out << "alexander   " << delta.to_string() << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& ids, const std::string& range,
                 std::ostream& out)
{
    Catalog cat = load_catalog(cfg.catalog);
    ClassificationTable t;
    if (!ids.empty()) {
        for (const auto& id : ids) {
            const CatalogEntry& e = cat.find(id);
            t.rows.push_back(ClassificationRow{e.id, e.name, e.order, classify_tav(*e.group)});
        }
        t.min_order = t.max_order = t.rows.front().order;
        for (const auto& r : t.rows) {
            t.min_order = std::min(t.min_order, r.order);
            t.max_order = std::max(t.max_order, r.order);
        }
    } else {
        auto [lo, hi] = range.empty() ? std::pair<size_t, size_t>{1, cfg.max_order} : parse_range(range);
        t = classify_catalog(cat, lo, hi, cfg.threads);
    }
    if (structured(cfg))
        out << classification_to_json(t).dump(2) << "\n";
    else
        out << classification_text(t);
    return kExitOk;
}

// --------------------------------------------------------------------- epis

int cmd_epis(const RunConfig& cfg, const std::string& knot, const std::string& group, bool all_homs,
             std::ostream& out)
{
    KnotTable kt = load_knot_table(cfg.knots);
    Catalog cat = load_catalog(cfg.catalog);
    KnotPresentation p = kt.resolve(knot);
    const CatalogEntry& e = cat.find(group);
    auto orbits = enumerate_orbit_reps(p, *e.group, {!all_homs, cfg.threads});
    size_t total = 0;
    for (const auto& o : orbits)
        total += o.size;
    if (structured(cfg)) {
        json j{{"knot", knot}, {"group", e.id}, {"surjective_only", !all_homs}, {"count", total}};
        j["orbits"] = json::array();
        for (const auto& o : orbits)
            j["orbits"].push_back(json{{"hom", o.rep.images}, {"size", o.size}, {"surjective", o.rep.surjective}});
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << (all_homs ? "homomorphisms " : "epimorphisms ") << knot << " -> " << e.id << ": " << total << " in "
        << orbits.size() << " conjugation orbits\n";
    for (const auto& o : orbits)
        out << "  " << hom_to_string(o.rep) << "  orbit " << o.size << (o.rep.surjective ? "" : "  (not onto)")
            << "\n";
    return kExitOk;
}

// --------------------------------------------------------------------- poly

int cmd_poly(const RunConfig& cfg, const std::string& knot, const std::string& group, const std::string& spec,
             bool all_orbits, const std::string& rep_name, const std::string& cert_out, std::ostream& out)
{
    if (spec.empty() == !all_orbits)
        fail(ErrorKind::InvalidArgument, "give exactly one of --hom or --all-orbits");
    KnotTable kt = load_knot_table(cfg.knots);
    Catalog cat = load_catalog(cfg.catalog);
    KnotPresentation p = kt.resolve(knot);
    const CatalogEntry& e = cat.find(group);
    auto rep = std::make_shared<Representation>(make_representation(e, rep_name));

    std::vector<std::vector<size_t>> homs;
    if (!spec.empty())
        homs.push_back(parse_hom_spec(spec, p, *e.group));
    else
        for (const auto& o : enumerate_orbit_reps(p, *e.group, {true, cfg.threads}))
            homs.push_back(o.rep.images);

    DetOptions det;
    det.threads = cfg.threads;
    DetMode mode = det_mode(cfg);
    json results = json::array();
    std::ostringstream text;
    std::optional<TavCertificate> first_zero;
    for (const auto& img : homs) {
        TwistedSetup s = make_setup(p, *e.group, img, rep);
        TwistedResult r = twisted_alexander(s, mode, det, true);
        if (r.zero && r.verdict.mode == DetMode::Screen)
            r = twisted_alexander(s, DetMode::Certify, det, false);
        json j{{"hom", img},
               {"surjective", s.hom.surjective},
               {"pivot", s.pivot + 1},
               {"verdict", r.zero ? "Zero" : "NonZero"},
               {"denominator", r.denominator.to_string()},
               {"engine", verdict_to_json(r.verdict)}};
        text << "hom         " << hom_to_string(s.hom) << "\n";
        text << "surjective  " << (s.hom.surjective ? "yes" : "no") << "\n";
        if (r.zero) {
            text << "verdict     Zero (" << r.verdict.points.size() << " exact evaluations, span bound "
                 << r.verdict.span << ")\n";
            if (!first_zero) {
                TavCertificate c;
                c.knot = knot;
                c.knot_hash = p.content_hash();
                c.knot_table_hash = kt.file_hash;
                c.group_id = e.id;
                c.group_order = e.order;
                c.group_hash = e.content_hash;
                c.catalog_hash = cat.file_hash;
                c.representation = rep_name;
                c.hom = img;
                c.zero = true;
                c.engine = r.verdict;
                c.timestamp = utc_timestamp();
                c.version = toolkit_version();
                first_zero = c;
            }
        } else {
            const LaurentPoly& poly = r.normal.poly;
            LaurentPoly unit = LaurentPoly::monomial(r.normal.sign, r.normal.shift);
            j["polynomial"] = poly.to_string();
            j["unit"] = unit.to_string();
            j["exact_quotient"] = r.quotient.has_value();
            text << "verdict     NonZero\n";
            if (r.quotient) {
                text << "polynomial  " << poly.to_string() << "\n";
            } else {
                text << "numerator   " << poly.to_string() << "\n";
                text << "denominator " << r.denominator.to_string() << "\n";
            }
            text << "unit        " << unit.to_string() << "\n";
        }
        text << "\n";
        results.push_back(j);
    }
    if (!cert_out.empty()) {
        if (!first_zero)
            fail(ErrorKind::InvalidArgument, "no Zero verdict, nothing to write to " + cert_out);
        write_json_file(cert_out, certificate_to_json(*first_zero));
    }
    if (structured(cfg))
        out << json{{"knot", knot}, {"group", e.id}, {"representation", rep_name}, {"results", results}}.dump(2)
            << "\n";
    else
        out << text.str();
    return kExitOk;
}

// ---------------------------------------------------------------- tav-order

int cmd_tav_order(const RunConfig& cfg, const std::string& knot, size_t min_order, double recertify,
                  const std::string& rep_name, const std::string& report_out, const std::string& cert_out,
                  std::ostream& out)
{
    KnotTable kt = load_knot_table(cfg.knots);
    Catalog cat = load_catalog(cfg.catalog);
    ScanOptions opt;
    opt.min_order = min_order;
    opt.max_order = cfg.max_order;
    opt.mode = parse_scan_mode(cfg.mode);
    opt.representation = rep_name;
    opt.threads = cfg.threads;
    opt.seed = cfg.seed;
    opt.recertify_fraction = recertify;
    if (!cfg.cache.empty())
        opt.cache_dir = cfg.cache;
    TavReport r = tav_scan(knot, kt, cat, opt);
    if (!report_out.empty())
        write_json_file(report_out, report_to_json(r));
    if (!cert_out.empty() && r.certificate)
        write_json_file(cert_out, certificate_to_json(*r.certificate));
    if (structured(cfg))
        out << report_to_json(r).dump(2) << "\n";
    else
        out << report_text(r);
    return r.definitive() ? kExitOk : kExitIndefinite;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, const std::string& path, std::ostream& out)
{
    std::ifstream f(path);
    if (!f)
        fail(ErrorKind::InvalidArgument, "cannot read certificate " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
    TavCertificate c = certificate_from_json(j);
    KnotTable kt = load_knot_table(cfg.knots);
    Catalog cat = load_catalog(cfg.catalog);
    DetOptions det;
    det.threads = cfg.threads;
    VerifyResult v = verify_certificate(c, kt, cat, det);
    if (structured(cfg))
        out << json{{"certificate", path}, {"ok", v.ok}, {"points", v.points_checked}, {"message", v.message}}.dump(2)
            << "\n";
    else
        out << "ok: " << c.knot << " -> " << c.group_id << ", " << v.message << "\n";
    return kExitOk;
}

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument:
        return kExitUsage;
    default:
        return kExitData;
    }
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"twisted Alexander vanishing toolkit"};
    app.set_version_flag("--version", std::string(TAV_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--knots", cfg.knots, "knot table (JSON lines)")->envname("TAV_KNOTS");
    app.add_option("--catalog", cfg.catalog, "group catalog (JSON lines)")->envname("TAV_CATALOG");
    app.add_option("--cache", cfg.cache, "verdict cache directory")->envname("TAV_CACHE");
    app.add_option("--threads", cfg.threads, "worker threads")->envname("TAV_THREADS")->check(CLI::Range(1u, 1024u));
    app.add_option("--mode", cfg.mode, "screen (then certify zeros) or certify")
        ->envname("TAV_MODE")
        ->check(CLI::IsMember({"screen", "certify"}));
    app.add_option("--format", cfg.format, "text or structured (JSON)")
        ->envname("TAV_FORMAT")
        ->check(CLI::IsMember({"text", "structured", "json"}));
    app.add_option("--max-order", cfg.max_order, "largest group order")->envname("TAV_MAX_ORDER");
    app.add_option("--seed", cfg.seed, "seed for the NonZero re-check sample")->envname("TAV_SEED");

    std::string knot, group, spec, range, rep_name = "regular", cert_out, report_out, cert_path;
    std::vector<std::string> ids;
    bool all_orbits = false, all_homs = false;
    size_t min_order = 1;
    double recertify = 0.05;

    auto* ki = app.add_subcommand("knot-info", "presentation and Alexander polynomial");
    ki->add_option("knot", knot, "knot name or expression (3_1, 3_1#4_1, 3_1(2,3), 3_1:reduced)")->required();

    auto* cl = app.add_subcommand("classify", "TAV classification of catalog groups");
    cl->add_option("groups", ids, "group ids or names");
    cl->add_option("--order", range, "order or range, e.g. 24 or 1..23");

    auto* ep = app.add_subcommand("epis", "epimorphisms up to conjugation");
    ep->add_option("knot", knot)->required();
    ep->add_option("group", group)->required();
    ep->add_flag("--all", all_homs, "list all homomorphisms, not only onto ones");

    auto* po = app.add_subcommand("poly", "twisted Alexander polynomial for one hom or all orbits");
    po->add_option("knot", knot)->required();
    po->add_option("group", group)->required();
    po->add_option("--hom", spec, "x1=e17,x2=e5,... or x1=g2*g4,...");
    po->add_flag("--all-orbits", all_orbits, "every epimorphism orbit");
    po->add_option("--rep", rep_name, "regular, natural or a catalog action name");
    po->add_option("--certificate-out", cert_out, "write a certificate for the first Zero");

    auto* to = app.add_subcommand("tav-order", "smallest TAV group order up to --max-order");
    to->add_option("knot", knot)->required();
    to->add_option("--min-order", min_order)->check(CLI::PositiveNumber);
    to->add_option("--recertify", recertify, "share of NonZero screens re-checked exactly")
        ->check(CLI::Range(0.0, 1.0));
    to->add_option("--rep", rep_name, "regular, natural or a catalog action name");
    to->add_option("--out", report_out, "write the structured report here");
    to->add_option("--certificate-out", cert_out, "write the Zero certificate here");

    auto* ve = app.add_subcommand("verify", "recompute a certificate");
    ve->add_option("certificate", cert_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    // whole output is assembled first so failures never leave partial output
    std::ostringstream out;
    try {
        check_file("knot table", cfg.knots);
        check_file("catalog", cfg.catalog);
        int rc = kExitInternal;
        if (*ki)
            rc = cmd_knot_info(cfg, knot, out);
        else if (*cl)
            rc = cmd_classify(cfg, ids, range, out);
        else if (*ep)
            rc = cmd_epis(cfg, knot, group, all_homs, out);
        else if (*po)
            rc = cmd_poly(cfg, knot, group, spec, all_orbits, rep_name, cert_out, out);
        else if (*to)
            rc = cmd_tav_order(cfg, knot, min_order, recertify, rep_name, report_out, cert_out, out);
        else if (*ve)
            rc = cmd_verify(cfg, cert_path, out);
        std::cout << out.str() << std::flush;
        return rc;
    } catch (const Error& e) {
        std::cerr << "tavtool: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "tavtool: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
