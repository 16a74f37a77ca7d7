#pragma once

#include "scan.hpp"

#include <cullen/cascade.hpp>
#include <cullen/proof_verifier.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cullen::cli {

using nlohmann::json;

/// log10 of a positive rational, for human-readable columns only.
double log10_of(const Rational& q);
std::string decimal(const Rational& q, int digits = 12);

json to_json(const Factorization& f);
json to_json(const ScanRow& row);
json to_json(const LehmerSearchResult& r);
json to_json(const PigeonholePair& p);
json to_json(const ProductBound& pb);
json to_json(const BoundCascade& bc);

/// CSV columns, in order, for scan-style commands.
const std::vector<std::string>& csv_columns();
std::string csv_row(const ScanRow& row);

/// Running min/mean/max of exact ratios over factored composite rows.
struct RatioSummary {
    std::uint64_t rows = 0;
    std::uint64_t prime_rows = 0;
    std::uint64_t composite_factored = 0;
    std::uint64_t unfactored = 0;
    std::uint64_t carmichael = 0;
    std::uint64_t lehmer_refuted = 0;
    std::optional<Rational> min, max;
    Rational sum = 0;

    void add(const ScanRow& row);
    json to_json(const std::string& command) const;
};

} // namespace cullen::cli
