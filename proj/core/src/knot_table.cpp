#include "tav/knot_table.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tav/error.hpp"
#include "tav/hashing.hpp"

namespace tav {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& msg)
{
    fail(ErrorKind::ParseError, "knot table line " + std::to_string(line) + ": " + msg);
}

KnotPresentation presentation_from_json(const json& j, const std::string& name)
{
    KnotPresentation p;
    p.name = name;
    p.n = j.at("generators").get<uint32_t>();
    for (const auto& r : j.at("relators"))
        p.relators.push_back(parse_word(r.get<std::string>(), p.n));
    if (j.contains("redundant"))
        for (const auto& r : j["redundant"])
            p.redundant.push_back(parse_word(r.get<std::string>(), p.n));
    p.meridian = parse_word(j.at("meridian").get<std::string>(), p.n);
    if (j.contains("longitude"))
        p.longitude = parse_word(j["longitude"].get<std::string>(), p.n);
    if (j.contains("phi"))
        p.phi = j["phi"].get<std::vector<int64_t>>();
    else
        p.phi = abelianization_degrees(p.n, p.all_relators(), p.meridian);
    p.source = p.conjugate_generators() ? SourceTag::Wirtinger : SourceTag::Reduced;
    p.validate();
    return p;
}

} // namespace

KnotTable parse_knot_table(const std::string& text)
{
    KnotTable t;
    std::istringstream in(text);
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        KnotRecord rec;
        rec.line = line;
        try {
            json j = json::parse(raw);
            rec.name = j.at("name").get<std::string>();
            if (j.contains("pd"))
                rec.pd = j["pd"].get<PDCode>();
            if (j.contains("alt_pd")) {
                rec.alt_pd = j["alt_pd"].get<PDCode>();
                wirtinger_from_pd(*rec.alt_pd);
            }
            if (j.contains("presentation")) {
                rec.primary = presentation_from_json(j["presentation"], rec.name);
            } else if (rec.pd) {
                rec.primary = wirtinger_from_pd(*rec.pd);
                rec.primary.name = rec.name;
            } else {
                parse_fail(line, "record needs pd or presentation");
            }
            if (j.contains("reduced")) {
                rec.reduced = presentation_from_json(j["reduced"], rec.name);
                rec.reduced->source = SourceTag::Reduced;
            }
            if (j.contains("alexander"))
                rec.alexander = LaurentPoly::from_coeffs(
                    [&] {
                        std::vector<mpz_class> c;
                        for (const auto& v : j["alexander"])
                            c.emplace_back(static_cast<long>(v.get<int64_t>()));
                        return c;
                    }());
            if (j.contains("fibered"))
                rec.fibered = j["fibered"].get<bool>();
            rec.provenance = j.value("provenance", "");
        } catch (const json::exception& e) {
            parse_fail(line, e.what());
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError && std::string(e.what()).find("knot table line") != std::string::npos)
                throw;
            parse_fail(line, e.what());
        }
        if (t.knots.count(rec.name))
            parse_fail(line, "duplicate knot " + rec.name);
        t.order.push_back(rec.name);
        std::string key = rec.name;
        t.knots.emplace(key, std::move(rec));
    }
    return t;
}

KnotTable load_knot_table(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot read knot table " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    KnotTable t = parse_knot_table(ss.str());
    t.path = path;
    t.file_hash = sha256_hex(ss.str());
    return t;
}

const KnotRecord& KnotTable::get(const std::string& name) const
{
    auto it = knots.find(name);
    if (it == knots.end())
        fail(ErrorKind::KnotNotFound, "no knot '" + name + "' in table");
    return it->second;
}

KnotPresentation KnotTable::resolve(const std::string& expr) const
{
    auto hash = expr.find('#');
    if (hash != std::string::npos) {
        KnotPresentation a = resolve(expr.substr(0, hash));
        KnotPresentation b = resolve(expr.substr(hash + 1));
        KnotPresentation s = connected_sum(a, b);
        s.name = expr;
        return s;
    }
    auto paren = expr.find('(');
    if (paren != std::string::npos && expr.back() != ')')
        fail(ErrorKind::InvalidArgument, "unbalanced cable parameters in " + expr);
    if (paren != std::string::npos) {
        std::string args = expr.substr(paren + 1, expr.size() - paren - 2);
        auto comma = args.find(',');
        if (comma == std::string::npos)
            fail(ErrorKind::InvalidArgument, "cable needs (p,q): " + expr);
        int64_t p = 0, q = 0;
        try {
            p = std::stoll(args.substr(0, comma));
            q = std::stoll(args.substr(comma + 1));
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidArgument, "bad cable parameters in " + expr);
        }
        KnotPresentation c = cable(resolve(expr.substr(0, paren)), p, q);
        c.name = expr;
        return c;
    }
    auto colon = expr.find(':');
    if (colon != std::string::npos) {
        const KnotRecord& r = get(expr.substr(0, colon));
        std::string which = expr.substr(colon + 1);
        if (which == "reduced") {
            if (!r.reduced)
                fail(ErrorKind::KnotNotFound, "knot '" + r.name + "' has no reduced presentation");
            return *r.reduced;
        }
        if (which == "pd" || which == "alt") {
            const auto& pd = which == "pd" ? r.pd : r.alt_pd;
            if (!pd)
                fail(ErrorKind::KnotNotFound, "knot '" + r.name + "' has no " + which + " diagram");
            KnotPresentation w = wirtinger_from_pd(*pd);
            w.name = expr;
            return w;
        }
        fail(ErrorKind::InvalidArgument, "unknown presentation selector '" + which + "'");
    }
    return get(expr).primary;
}

} // namespace tav
