#pragma once

#include "cullen/factorization.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cullen {

/// Line-oriented store of Cullen factorizations:
///
///     n<TAB>status<TAB>p1^e1 p2^e2 ...<TAB>cofactor
///
/// Lines starting with '#' are comments. Records are re-validated on load
/// (product, ordering, primality); lines that fail are skipped and counted.
/// Later lines for the same n replace earlier ones.
///
/// get() reads the snapshot taken at construction. put() appends under a
/// mutex, so any number of workers may share one cache.
class FactorCache {
public:
    explicit FactorCache(std::filesystem::path path);

    FactorCache(const FactorCache&) = delete;
    FactorCache& operator=(const FactorCache&) = delete;

    std::optional<Factorization> get(std::uint64_t n) const;

    /// Throws std::invalid_argument unless f.value == C_n, CacheIoError on
    /// write failure.
    void put(std::uint64_t n, const Factorization& f);

    std::size_t size() const { return snapshot_.size(); }
    std::size_t warning_count() const { return warnings_.size(); }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::filesystem::path& path() const { return path_; }

    static std::string format_line(std::uint64_t n, const Factorization& f);

    /// Parses and validates one record. On failure returns nullopt and sets *why.
    static std::optional<std::pair<std::uint64_t, Factorization>>
    parse_line(const std::string& line, std::string* why = nullptr);

private:
    std::filesystem::path path_;
    std::map<std::uint64_t, Factorization> snapshot_;
    std::vector<std::string> warnings_;
    std::mutex write_mu_;
};

} // namespace cullen
