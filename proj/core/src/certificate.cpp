#include "tav/certificate.hpp"

#include <ctime>

#include "tav/error.hpp"
#include "tav/fox.hpp"

namespace tav {

using nlohmann::json;

std::string toolkit_version()
{
    return TAV_VERSION;
}

std::string utc_timestamp()
{
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json verdict_to_json(const ZeroVerdict& v)
{
    json j;
    j["zero"] = v.zero;
    j["mode"] = mode_name(v.mode);
    j["side"] = v.side;
    j["span"] = v.span;
    j["sign"] = v.sign;
    j["shift"] = v.shift;
    j["presolve"] = v.presolve;
    j["points"] = v.points;
    // primes as strings so readers without 64-bit integers keep them exact
    json primes = json::array();
    for (auto p : v.primes)
        primes.push_back(std::to_string(p));
    j["primes"] = primes;
    json values = json::array();
    for (const auto& x : v.values)
        values.push_back(x.get_str());
    j["values"] = values;
    j["witness_point"] = v.witness_point ? json(*v.witness_point) : json(nullptr);
    j["witness_prime"] = v.witness_prime ? json(std::to_string(*v.witness_prime)) : json(nullptr);
    j["witness_value"] = v.witness_value.get_str();
    return j;
}

ZeroVerdict verdict_from_json(const json& j)
{
    try {
        ZeroVerdict v;
        v.zero = j.at("zero").get<bool>();
        v.mode = parse_mode(j.at("mode").get<std::string>());
        v.side = j.at("side").get<size_t>();
        v.span = j.at("span").get<int64_t>();
        v.sign = j.at("sign").get<int>();
        v.shift = j.at("shift").get<int64_t>();
        v.presolve = j.at("presolve").get<bool>();
        v.points = j.at("points").get<std::vector<int64_t>>();
        for (const auto& p : j.at("primes"))
            v.primes.push_back(std::stoull(p.get<std::string>()));
        for (const auto& x : j.at("values"))
            v.values.emplace_back(x.get<std::string>());
        if (!j.at("witness_point").is_null())
            v.witness_point = j.at("witness_point").get<int64_t>();
        if (!j.at("witness_prime").is_null())
            v.witness_prime = std::stoull(j.at("witness_prime").get<std::string>());
        v.witness_value = mpz_class(j.at("witness_value").get<std::string>());
        return v;
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("engine record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        fail(ErrorKind::ParseError, std::string("engine record: bad number ") + e.what());
    }
}

json certificate_to_json(const TavCertificate& c)
{
    json j;
    j["format"] = "tav-certificate/1";
    j["knot"] = c.knot;
    j["knot_hash"] = c.knot_hash;
    j["knot_table_hash"] = c.knot_table_hash;
    j["group"] = c.group_id;
    j["group_order"] = c.group_order;
    j["group_hash"] = c.group_hash;
    j["catalog_hash"] = c.catalog_hash;
    j["representation"] = c.representation;
    j["hom"] = c.hom;
    j["verdict"] = c.zero ? "Zero" : "NonZero";
    j["engine"] = verdict_to_json(c.engine);
    j["timestamp"] = c.timestamp;
    j["version"] = c.version;
    return j;
}

TavCertificate certificate_from_json(const json& j)
{
    try {
        if (j.at("format").get<std::string>() != "tav-certificate/1")
            fail(ErrorKind::ParseError, "unknown certificate format " + j.at("format").dump());
        TavCertificate c;
        c.knot = j.at("knot").get<std::string>();
        c.knot_hash = j.at("knot_hash").get<std::string>();
        c.knot_table_hash = j.at("knot_table_hash").get<std::string>();
        c.group_id = j.at("group").get<std::string>();
        c.group_order = j.at("group_order").get<size_t>();
        c.group_hash = j.at("group_hash").get<std::string>();
        c.catalog_hash = j.at("catalog_hash").get<std::string>();
        c.representation = j.at("representation").get<std::string>();
        c.hom = j.at("hom").get<std::vector<size_t>>();
        auto v = j.at("verdict").get<std::string>();
        if (v != "Zero" && v != "NonZero")
            fail(ErrorKind::ParseError, "verdict must be Zero or NonZero");
        c.zero = v == "Zero";
        c.engine = verdict_from_json(j.at("engine"));
        c.timestamp = j.at("timestamp").get<std::string>();
        c.version = j.at("version").get<std::string>();
        return c;
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("certificate: ") + e.what());
    }
}

namespace {

void require_same(const std::string& what, const std::string& recorded, const std::string& actual)
{
    if (recorded != actual)
        fail(ErrorKind::ProvenanceMismatch, what + " hash " + recorded.substr(0, 12) + "... does not match " +
                                                actual.substr(0, 12) + "...");
}

void mismatch(const std::string& msg)
{
    fail(ErrorKind::Mismatch, msg);
}

} // namespace

VerifyResult verify_certificate(const TavCertificate& c, const KnotTable& knots, const Catalog& catalog,
                                const DetOptions& opt_in)
{
    require_same("knot table", c.knot_table_hash, knots.file_hash);
    KnotPresentation p = knots.resolve(c.knot);
    require_same("knot presentation", c.knot_hash, p.content_hash());
    require_same("catalog", c.catalog_hash, catalog.file_hash);
    const CatalogEntry& e = catalog.find(c.group_id);
    require_same("group", c.group_hash, e.content_hash);
    if (e.order != c.group_order)
        fail(ErrorKind::ProvenanceMismatch, "group order differs");

    const ZeroVerdict& v = c.engine;
    if (c.zero != v.zero)
        mismatch("verdict field disagrees with the engine record");
    if (c.zero && v.mode != DetMode::Certify)
        mismatch("Zero certificate without exact evaluations");

    auto rep = std::make_shared<Representation>(make_representation(e, c.representation));
    TwistedSetup s = make_setup(p, *e.group, c.hom, rep);
    WadaMatrix w = wada_matrix(s);
    DetOptions opt = opt_in;
    opt.presolve = v.presolve;
    PreparedMatrix pm = prepare_matrix(w.numerator, opt);

    VerifyResult r;
    if (pm.zero_line) {
        if (!v.zero)
            mismatch("matrix has a zero line but the certificate says NonZero");
        r.ok = true;
        r.message = "zero row or column";
        return r;
    }
    if (static_cast<size_t>(pm.core.rows()) != v.side)
        mismatch("core side " + std::to_string(pm.core.rows()) + " != recorded " + std::to_string(v.side));
    if (pm.span != v.span)
        mismatch("span bound " + std::to_string(pm.span) + " != recorded " + std::to_string(v.span));
    if (pm.sign != v.sign || pm.shift != v.shift)
        mismatch("extracted unit differs from the record");

    std::vector<int64_t> expect = evaluation_points(v.points.size());
    if (v.points != expect)
        mismatch("evaluation points are not 2, 3, ...");

    if (v.mode == DetMode::Certify) {
        if (v.values.size() != v.points.size())
            mismatch("values and points differ in length");
        for (size_t i = 0; i < v.points.size(); ++i) {
            mpz_class got = eval_det_exact(pm.core, v.points[i]);
            if (got != v.values[i])
                mismatch("at t = " + std::to_string(v.points[i]) + " recorded " + v.values[i].get_str() +
                         ", computed " + got.get_str());
            ++r.points_checked;
        }
        if (v.zero) {
            if (v.points.size() < static_cast<size_t>(v.span) + 1)
                mismatch("only " + std::to_string(v.points.size()) + " points for span " + std::to_string(v.span));
            for (const auto& x : v.values)
                if (x != 0)
                    mismatch("Zero certificate contains a nonzero value");
        } else if (!v.witness_point || v.values.empty() || v.values.back() == 0 ||
                   v.values.back() != v.witness_value || *v.witness_point != v.points.back()) {
            mismatch("NonZero certificate lacks a nonzero witness");
        }
    } else {
        if (!v.witness_point || !v.witness_prime)
            mismatch("screen certificate lacks a witness");
        uint64_t got = eval_det_mod(pm.core, static_cast<uint64_t>(*v.witness_point), *v.witness_prime);
        if (mpz_class(std::to_string(got)) != v.witness_value || got == 0)
            mismatch("at t = " + std::to_string(*v.witness_point) + " mod " + std::to_string(*v.witness_prime) +
                     " recorded " + v.witness_value.get_str() + ", computed " + std::to_string(got));
        r.points_checked = 1;
    }
    r.ok = true;
    r.message = c.zero ? "Zero reproduced at " + std::to_string(r.points_checked) + " points"
                       : "nonzero witness reproduced";
    return r;
}

} // namespace tav
