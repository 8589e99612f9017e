#include "tav/tav_scan.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

#include "tav/cache.hpp"
#include "tav/epi_search.hpp"
#include "tav/error.hpp"
#include "tav/fox.hpp"
#include "tav/hom.hpp"
#include "tav/parallel.hpp"

namespace tav {

size_t ClassificationTable::total_tav() const
{
    size_t n = 0;
    for (const auto& r : rows)
        n += r.verdict.is_tav ? 1 : 0;
    return n;
}

ClassificationTable classify_catalog(const Catalog& catalog, size_t min_order, size_t max_order, unsigned threads)
{
    ClassificationTable t;
    t.min_order = min_order;
    t.max_order = max_order;
    auto entries = catalog.in_order_range(min_order, max_order);
    t.rows.resize(entries.size());
    parallel_for(entries.size(), threads, [&](size_t i) {
        const CatalogEntry& e = *entries[i];
        t.rows[i] = ClassificationRow{e.id, e.name, e.order, classify_tav(*e.group)};
    });
    for (size_t o = min_order; o <= max_order; ++o) {
        OrderCount c;
        c.order = o;
        c.complete = catalog.complete(o);
        for (const auto& r : t.rows)
            if (r.order == o) {
                ++c.groups;
                c.tav += r.verdict.is_tav ? 1 : 0;
            }
        if (c.groups > 0 || c.complete)
            t.counts.push_back(c);
    }
    return t;
}

const char* scan_mode_name(ScanMode m)
{
    return m == ScanMode::Certify ? "certify" : "screen";
}

ScanMode parse_scan_mode(const std::string& s)
{
    if (s == "screen" || s == "screen-then-certify")
        return ScanMode::ScreenThenCertify;
    if (s == "certify")
        return ScanMode::Certify;
    fail(ErrorKind::InvalidArgument, "mode must be screen or certify, got '" + s + "'");
}

namespace {

struct GroupWork {
    const CatalogEntry* entry = nullptr;
    std::shared_ptr<const Representation> rep;
};

class Scanner {
public:
    Scanner(const KnotPresentation& p, const ScanOptions& opt, VerdictCache* cache)
        : p_(p), knot_hash_(p.content_hash()), opt_(opt), cache_(cache)
    {
    }

    ZeroVerdict run(const GroupWork& w, OrbitResult& o, DetMode mode, unsigned det_threads)
    {
        CacheKey key{knot_hash_,
                     w.entry->content_hash,
                     opt_.representation,
                     hom_to_string(GroupHom{o.hom, true}),
                     mode_name(mode),
                     toolkit_version()};
        if (cache_) {
            if (auto j = cache_->lookup(key)) {
                try {
                    ZeroVerdict v = verdict_from_json(*j);
                    o.cached = true;
                    return v;
                } catch (const Error& e) {
                    warn(std::string(kind_name(ErrorKind::CacheCorrupt)) + ": " + e.what() + " (recomputed)");
                }
            }
        }
        TwistedSetup s = make_setup(p_, *w.entry->group, o.hom, w.rep);
        WadaMatrix m = wada_matrix(s);
        DetOptions det = opt_.det;
        det.threads = det_threads;
        ZeroVerdict v = det_is_zero(m.numerator, mode, det);
        if (cache_)
            cache_->store(key, verdict_to_json(v));
        return v;
    }

    void warn(const std::string& w)
    {
        std::lock_guard<std::mutex> lk(mu_);
        warnings_.push_back(w);
    }

    std::vector<std::string> take_warnings()
    {
        std::lock_guard<std::mutex> lk(mu_);
        return std::move(warnings_);
    }

private:
    const KnotPresentation& p_;
    std::string knot_hash_;
    const ScanOptions& opt_;
    VerdictCache* cache_;
    std::mutex mu_;
    std::vector<std::string> warnings_;
};

} // namespace

TavReport tav_scan(const std::string& knot, const KnotTable& knots, const Catalog& catalog, const ScanOptions& opt)
{
    if (opt.min_order < 1 || opt.max_order < opt.min_order)
        fail(ErrorKind::InvalidArgument, "empty order range");
    KnotPresentation p = knots.resolve(knot);

    TavReport r;
    r.knot = knot;
    r.knot_hash = p.content_hash();
    r.knot_table_hash = knots.file_hash;
    r.catalog_hash = catalog.file_hash;
    r.min_order = opt.min_order;
    r.max_order = opt.max_order;
    r.mode = scan_mode_name(opt.mode);
    r.representation = opt.representation;
    r.seed = opt.seed;
    r.recertify_fraction = opt.recertify_fraction;
    r.version = toolkit_version();

    for (size_t o = opt.min_order; o <= opt.max_order; ++o)
        if (!catalog.complete(o))
            r.incomplete_orders.push_back(o);
    r.status = r.incomplete_orders.empty() ? "exact" : "assuming catalog completeness";
    if (!r.incomplete_orders.empty())
        r.warnings.push_back(std::string(kind_name(ErrorKind::CatalogIncomplete)) + ": " +
                             std::to_string(r.incomplete_orders.size()) +
                             " orders in range lack a completeness declaration");

    std::unique_ptr<VerdictCache> cache;
    if (opt.cache_dir) {
        cache = std::make_unique<VerdictCache>(*opt.cache_dir);
        for (auto& w : cache->warnings())
            r.warnings.push_back(w);
    }
    Scanner scanner(p, opt, cache.get());

    auto entries = catalog.in_order_range(opt.min_order, opt.max_order);
    DetMode first_mode = opt.mode == ScanMode::Certify ? DetMode::Certify : DetMode::Screen;

    for (size_t i = 0; i < entries.size();) {
        size_t ord = entries[i]->order;
        size_t j = i;
        while (j < entries.size() && entries[j]->order == ord)
            ++j;

        std::vector<GroupSummary> sums;
        std::vector<GroupWork> work;
        for (size_t k = i; k < j; ++k) {
            const CatalogEntry& e = *entries[k];
            GroupSummary s;
            s.id = e.id;
            s.name = e.name;
            s.order = e.order;
            TavVerdict v = classify_tav(*e.group, opt.witness_bound);
            s.is_tav = v.is_tav;
            s.reasons = v.reasons;
            GroupWork w{&e, nullptr};
            if (v.is_tav) {
                s.computed = true;
                for (const auto& orb : enumerate_orbit_reps(p, *e.group, {true, opt.threads})) {
                    OrbitResult o;
                    o.hom = orb.rep.images;
                    o.orbit_size = orb.size;
                    s.epimorphisms += orb.size;
                    s.orbits.push_back(std::move(o));
                }
                if (!s.orbits.empty())
                    w.rep = std::make_shared<Representation>(make_representation(e, opt.representation));
            }
            sums.push_back(std::move(s));
            work.push_back(w);
        }

        std::vector<std::pair<size_t, size_t>> tasks;
        for (size_t g = 0; g < sums.size(); ++g)
            for (size_t o = 0; o < sums[g].orbits.size(); ++o)
                tasks.emplace_back(g, o);
        parallel_for(tasks.size(), opt.threads, [&](size_t t) {
            auto [g, o] = tasks[t];
            OrbitResult& res = sums[g].orbits[o];
            res.verdict = scanner.run(work[g], res, first_mode, 1);
            res.zero = res.verdict.zero;
            res.screened_zero = first_mode == DetMode::Screen && res.zero;
            res.certified = first_mode == DetMode::Certify;
        });

        // certify screened zeros in scan order until one holds up
        std::optional<std::pair<size_t, size_t>> hit;
        for (auto [g, o] : tasks) {
            OrbitResult& res = sums[g].orbits[o];
            if (!res.zero)
                continue;
            if (!res.certified) {
                res.verdict = scanner.run(work[g], res, DetMode::Certify, opt.threads);
                res.zero = res.verdict.zero;
                res.certified = true;
            }
            if (res.zero) {
                hit = {g, o};
                break;
            }
        }

        if (hit) {
            auto [g, o] = *hit;
            const CatalogEntry& e = *work[g].entry;
            TavCertificate c;
            c.knot = knot;
            c.knot_hash = r.knot_hash;
            c.knot_table_hash = r.knot_table_hash;
            c.group_id = e.id;
            c.group_order = e.order;
            c.group_hash = e.content_hash;
            c.catalog_hash = r.catalog_hash;
            c.representation = opt.representation;
            c.hom = sums[g].orbits[o].hom;
            c.zero = true;
            c.engine = sums[g].orbits[o].verdict;
            c.version = r.version;
            c.timestamp = utc_timestamp();
            r.order = ord;
            r.certificate = std::move(c);
        }
        for (auto& s : sums)
            r.groups.push_back(std::move(s));
        if (hit)
            break;
        i = j;
    }

    // exact re-check of a seeded sample of NonZero screens
    std::vector<std::pair<size_t, size_t>> nonzero;
    for (size_t g = 0; g < r.groups.size(); ++g)
        for (size_t o = 0; o < r.groups[g].orbits.size(); ++o)
            if (!r.groups[g].orbits[o].zero && !r.groups[g].orbits[o].certified)
                nonzero.emplace_back(g, o);
    if (!nonzero.empty() && opt.recertify_fraction > 0) {
        auto k = static_cast<size_t>(std::ceil(opt.recertify_fraction * static_cast<double>(nonzero.size())));
        k = std::min(k, nonzero.size());
        std::mt19937_64 rng(opt.seed);
        std::shuffle(nonzero.begin(), nonzero.end(), rng);
        nonzero.resize(k);
        std::sort(nonzero.begin(), nonzero.end());
        std::vector<GroupWork> work(r.groups.size());
        for (auto [g, o] : nonzero) {
            if (!work[g].entry) {
                work[g].entry = &catalog.find(r.groups[g].id);
                work[g].rep =
                    std::make_shared<Representation>(make_representation(*work[g].entry, opt.representation));
            }
        }
        parallel_for(nonzero.size(), opt.threads, [&](size_t t) {
            auto [g, o] = nonzero[t];
            OrbitResult& res = r.groups[g].orbits[o];
            OrbitResult scratch = res;
            ZeroVerdict v = scanner.run(work[g], scratch, DetMode::Certify, 1);
            if (v.zero)
                fail(ErrorKind::Mismatch, "exact re-check of a NonZero screen on " + r.groups[g].id + " gave Zero");
            res.recertified = true;
        });
    }

    for (auto& w : scanner.take_warnings())
        r.warnings.push_back(w);
    r.timestamp = utc_timestamp();
    return r;
}

} // namespace tav
