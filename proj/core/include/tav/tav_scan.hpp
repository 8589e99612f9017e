#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tav/catalog.hpp"
#include "tav/certificate.hpp"
#include "tav/classifier.hpp"
#include "tav/determinant.hpp"
#include "tav/knot_table.hpp"

namespace tav {

struct ClassificationRow {
    std::string id;
    std::string name;
    size_t order = 0;
    TavVerdict verdict;
};

struct OrderCount {
    size_t order = 0;
    size_t groups = 0;
    size_t tav = 0;
    bool complete = false;
};

struct ClassificationTable {
    size_t min_order = 1;
    size_t max_order = 0;
    std::vector<ClassificationRow> rows;
    std::vector<OrderCount> counts;
    size_t total_groups() const { return rows.size(); }
    size_t total_tav() const;
};

ClassificationTable classify_catalog(const Catalog& catalog, size_t min_order, size_t max_order,
                                     unsigned threads = 1);

enum class ScanMode { ScreenThenCertify, Certify };
const char* scan_mode_name(ScanMode m);
ScanMode parse_scan_mode(const std::string& s);

struct ScanOptions {
    size_t min_order = 1;
    size_t max_order = 30;
    ScanMode mode = ScanMode::ScreenThenCertify;
    std::string representation = "regular";
    unsigned threads = 1;
    DetOptions det;
    // share of NonZero screens re-checked exactly
    double recertify_fraction = 0.05;
    uint64_t seed = 20240611;
    std::optional<std::string> cache_dir;
    size_t witness_bound = kDefaultWitnessBound;
};

struct OrbitResult {
    std::vector<size_t> hom; // orbit representative
    size_t orbit_size = 0;
    bool zero = false;
    ZeroVerdict verdict;  // strongest verdict obtained
    bool screened_zero = false;
    bool certified = false; // verdict came from exact evaluation
    bool recertified = false;
    bool cached = false;

    friend bool operator==(const OrbitResult&, const OrbitResult&) = default;
};

struct GroupSummary {
    std::string id;
    std::string name;
    size_t order = 0;
    bool is_tav = false;
    std::vector<std::string> reasons;
    bool computed = false;
    size_t epimorphisms = 0;
    std::vector<OrbitResult> orbits;

    friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct TavReport {
    std::string knot;
    std::string knot_hash;
    std::string knot_table_hash;
    std::string catalog_hash;
    size_t min_order = 1;
    size_t max_order = 0;
    std::string mode;
    std::string representation;
    uint64_t seed = 0;
    double recertify_fraction = 0;
    std::vector<GroupSummary> groups;
    std::optional<size_t> order; // smallest order with a certified Zero
    std::optional<TavCertificate> certificate;
    // orders in range without a completeness declaration
    std::vector<size_t> incomplete_orders;
    std::string status; // "exact" or "assuming catalog completeness"
    std::vector<std::string> warnings;
    std::string timestamp;
    std::string version;

    bool definitive() const { return order.has_value(); }
    friend bool operator==(const TavReport&, const TavReport&) = default;
};

// throws KnotNotFound, GroupNotFound; incomplete catalogs are reported
TavReport tav_scan(const std::string& knot, const KnotTable& knots, const Catalog& catalog,
                   const ScanOptions& opt);

} // namespace tav
