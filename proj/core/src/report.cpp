#include "tav/report.hpp"

#include <iomanip>
#include <sstream>

#include "tav/error.hpp"

namespace tav {

using nlohmann::json;

namespace {

std::string hom_text(const std::vector<size_t>& images)
{
    std::ostringstream os;
    for (size_t i = 0; i < images.size(); ++i)
        os << (i ? "," : "") << 'x' << i + 1 << "=e" << images[i];
    return os.str();
}

json orbit_to_json(const OrbitResult& o)
{
    return json{{"hom", o.hom},
                {"orbit_size", o.orbit_size},
                {"verdict", o.zero ? "Zero" : "NonZero"},
                {"screened_zero", o.screened_zero},
                {"certified", o.certified},
                {"recertified", o.recertified},
                {"cached", o.cached},
                {"engine", verdict_to_json(o.verdict)}};
}

OrbitResult orbit_from_json(const json& j)
{
    OrbitResult o;
    o.hom = j.at("hom").get<std::vector<size_t>>();
    o.orbit_size = j.at("orbit_size").get<size_t>();
    o.zero = j.at("verdict").get<std::string>() == "Zero";
    o.screened_zero = j.at("screened_zero").get<bool>();
    o.certified = j.at("certified").get<bool>();
    o.recertified = j.at("recertified").get<bool>();
    o.cached = j.at("cached").get<bool>();
    o.verdict = verdict_from_json(j.at("engine"));
    return o;
}

} // namespace

json report_to_json(const TavReport& r)
{
    json groups = json::array();
    for (const auto& g : r.groups) {
        json orbits = json::array();
        for (const auto& o : g.orbits)
            orbits.push_back(orbit_to_json(o));
        groups.push_back(json{{"id", g.id},
                              {"name", g.name},
                              {"order", g.order},
                              {"tav", g.is_tav},
                              {"reasons", g.reasons},
                              {"computed", g.computed},
                              {"epimorphisms", g.epimorphisms},
                              {"orbits", orbits}});
    }
    json j;
    j["format"] = "tav-report/1";
    j["knot"] = r.knot;
    j["knot_hash"] = r.knot_hash;
    j["knot_table_hash"] = r.knot_table_hash;
    j["catalog_hash"] = r.catalog_hash;
    j["min_order"] = r.min_order;
    j["max_order"] = r.max_order;
    j["mode"] = r.mode;
    j["representation"] = r.representation;
    j["seed"] = r.seed;
    j["recertify_fraction"] = r.recertify_fraction;
    j["groups"] = groups;
    j["result"] = r.order ? json(std::to_string(*r.order)) : json("> " + std::to_string(r.max_order));
    j["order"] = r.order ? json(*r.order) : json(nullptr);
    j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    j["incomplete_orders"] = r.incomplete_orders;
    j["status"] = r.status;
    j["warnings"] = r.warnings;
    j["timestamp"] = r.timestamp;
    j["version"] = r.version;
    return j;
}

TavReport report_from_json(const json& j)
{
    try {
        if (j.at("format").get<std::string>() != "tav-report/1")
            fail(ErrorKind::ParseError, "unknown report format");
        TavReport r;
        r.knot = j.at("knot").get<std::string>();
        r.knot_hash = j.at("knot_hash").get<std::string>();
        r.knot_table_hash = j.at("knot_table_hash").get<std::string>();
        r.catalog_hash = j.at("catalog_hash").get<std::string>();
        r.min_order = j.at("min_order").get<size_t>();
        r.max_order = j.at("max_order").get<size_t>();
        r.mode = j.at("mode").get<std::string>();
        r.representation = j.at("representation").get<std::string>();
        r.seed = j.at("seed").get<uint64_t>();
        r.recertify_fraction = j.at("recertify_fraction").get<double>();
        for (const auto& g : j.at("groups")) {
            GroupSummary s;
            s.id = g.at("id").get<std::string>();
            s.name = g.at("name").get<std::string>();
            s.order = g.at("order").get<size_t>();
            s.is_tav = g.at("tav").get<bool>();
            s.reasons = g.at("reasons").get<std::vector<std::string>>();
            s.computed = g.at("computed").get<bool>();
            s.epimorphisms = g.at("epimorphisms").get<size_t>();
            for (const auto& o : g.at("orbits"))
                s.orbits.push_back(orbit_from_json(o));
            r.groups.push_back(std::move(s));
        }
        if (!j.at("order").is_null())
            r.order = j.at("order").get<size_t>();
        if (!j.at("certificate").is_null())
            r.certificate = certificate_from_json(j.at("certificate"));
        r.incomplete_orders = j.at("incomplete_orders").get<std::vector<size_t>>();
        r.status = j.at("status").get<std::string>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.timestamp = j.at("timestamp").get<std::string>();
        r.version = j.at("version").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("report: ") + e.what());
    }
}

std::string report_text(const TavReport& r)
{
    std::ostringstream os;
    os << "knot        " << r.knot << "\n";
    os << "orders      " << r.min_order << ".." << r.max_order << "\n";
    os << "mode        " << r.mode << ", representation " << r.representation << ", seed " << r.seed << "\n";
    os << "knot table  " << r.knot_table_hash.substr(0, 16) << "\n";
    os << "catalog     " << r.catalog_hash.substr(0, 16) << "\n";
    os << "\n";
    os << std::left << std::setw(18) << "group" << std::setw(7) << "order" << std::setw(9) << "tav"
       << std::setw(8) << "epis" << std::setw(8) << "orbits" << "outcome\n";
    for (const auto& g : r.groups) {
        os << std::setw(18) << g.id << std::setw(7) << g.order << std::setw(9) << (g.is_tav ? "yes" : "no");
        if (!g.computed) {
            os << std::setw(8) << "-" << std::setw(8) << "-" << "skipped: ";
            for (size_t i = 0; i < g.reasons.size(); ++i)
                os << (i ? "; " : "") << g.reasons[i];
            os << "\n";
            continue;
        }
        size_t zeros = 0, certified_zeros = 0, unresolved = 0;
        for (const auto& o : g.orbits) {
            if (o.zero && o.certified)
                ++certified_zeros;
            else if (o.zero)
                ++unresolved;
            zeros += o.zero ? 1 : 0;
        }
        os << std::setw(8) << g.epimorphisms << std::setw(8) << g.orbits.size();
        if (g.orbits.empty())
            os << "no epimorphisms";
        else if (zeros == 0)
            os << "all NonZero";
        else
            os << certified_zeros << " Zero certified, " << unresolved << " Zero screened only";
        os << "\n";
    }
    os << "\n";
    if (r.order) {
        os << "result      order " << *r.order << "\n";
        const auto& c = *r.certificate;
        os << "witness     " << c.group_id << " " << hom_text(c.hom) << "\n";
        os << "certificate " << c.engine.points.size() << " exact evaluations, all zero, span bound "
           << c.engine.span << ", core side " << c.engine.side << "\n";
    } else {
        os << "result      > " << r.max_order << "\n";
    }
    os << "status      " << r.status << "\n";
    for (const auto& w : r.warnings)
        os << "warning     " << w << "\n";
    os << "version     " << r.version << "  " << r.timestamp << "\n";
    return os.str();
}

json classification_to_json(const ClassificationTable& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        json w = nullptr;
        if (r.verdict.witness)
            w = json{{"order", r.verdict.witness->elements.size()},
                     {"generators", {r.verdict.witness->gen_a, r.verdict.witness->gen_b}},
                     {"case", witness_case_name(r.verdict.witness->tag)}};
        rows.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"order", r.order},
                            {"tav", r.verdict.is_tav},
                            {"normally_single_generated", r.verdict.normally_single_generated},
                            {"normal_generator", r.verdict.normal_generator ? json(*r.verdict.normal_generator)
                                                                            : json(nullptr)},
                            {"commutator_order", r.verdict.commutator_order},
                            {"commutator_is_p_group", r.verdict.commutator_is_p_group},
                            {"reasons", r.verdict.reasons},
                            {"witness", w}});
    }
    json counts = json::array();
    for (const auto& c : t.counts)
        counts.push_back(json{{"order", c.order}, {"groups", c.groups}, {"tav", c.tav}, {"complete", c.complete}});
    return json{{"format", "tav-classification/1"},
                {"min_order", t.min_order},
                {"max_order", t.max_order},
                {"groups", t.total_groups()},
                {"tav", t.total_tav()},
                {"rows", rows},
                {"counts", counts}};
}

std::string classification_text(const ClassificationTable& t)
{
    std::ostringstream os;
    os << std::left << std::setw(18) << "group" << std::setw(7) << "order" << std::setw(6) << "tav"
       << std::setw(9) << "[G,G]" << "reason\n";
    for (const auto& r : t.rows) {
        os << std::setw(18) << r.id << std::setw(7) << r.order << std::setw(6) << (r.verdict.is_tav ? "yes" : "no")
           << std::setw(9) << r.verdict.commutator_order;
        if (r.verdict.is_tav && r.verdict.witness)
            os << "witness subgroup of order " << r.verdict.witness->elements.size();
        for (size_t i = 0; i < r.verdict.reasons.size(); ++i)
            os << (i ? "; " : "") << r.verdict.reasons[i];
        os << "\n";
    }
    os << "\n" << t.total_tav() << " TAV groups of " << t.total_groups() << " (orders " << t.min_order << ".."
       << t.max_order << ")\n";
    return os.str();
}

} // namespace tav
