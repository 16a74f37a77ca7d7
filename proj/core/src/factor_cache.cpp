#include "cullen/factor_cache.hpp"

#include "cullen/cullen_number.hpp"
#include "cullen/errors.hpp"
#include "cullen/primality.hpp"

#include <charconv>
#include <sstream>

namespace cullen {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

bool parse_u64(const std::string& s, std::uint64_t& out)
{
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_big(const std::string& s, BigInt& out)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return false;
    return out.set_str(s, 10) == 0;
}

std::optional<std::pair<std::uint64_t, Factorization>> fail(std::string* why, std::string msg)
{
    if (why)
        *why = std::move(msg);
    return std::nullopt;
}

} // namespace

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path))
{
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec))
        return;
    std::ifstream in(path_);
    if (!in)
        throw CacheIoError("cannot open factor cache " + path_.string());

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        std::string why;
        auto rec = parse_line(line, &why);
        if (!rec) {
            warnings_.push_back(path_.string() + ":" + std::to_string(lineno) + ": " + why);
            continue;
        }
        snapshot_.insert_or_assign(rec->first, std::move(rec->second));
    }
    if (in.bad())
        throw CacheIoError("read error on factor cache " + path_.string());
}

std::optional<Factorization> FactorCache::get(std::uint64_t n) const
{
    auto it = snapshot_.find(n);
    if (it == snapshot_.end())
        return std::nullopt;
    return it->second;
}

void FactorCache::put(std::uint64_t n, const Factorization& f)
{
    if (f.value != cullen(static_cast<std::int64_t>(n)).value)
        throw std::invalid_argument("FactorCache::put: record value is not C_" + std::to_string(n));
    const std::string line = format_line(n, f);

    std::lock_guard lock(write_mu_);
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(path_, ec) || std::filesystem::file_size(path_, ec) == 0;
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw CacheIoError("cannot open factor cache " + path_.string() + " for append");
    if (fresh)
        out << "# n\tstatus\tfactors\tcofactor\n";
    out << line << '\n';
    out.flush();
    if (!out)
        throw CacheIoError("write error on factor cache " + path_.string());
}

std::string FactorCache::format_line(std::uint64_t n, const Factorization& f)
{
    std::ostringstream os;
    os << n << '\t' << to_string(f.status) << '\t' << f.summary() << '\t' << f.cofactor.get_str();
    return os.str();
}

std::optional<std::pair<std::uint64_t, Factorization>>
FactorCache::parse_line(const std::string& line, std::string* why)
{
    const auto fields = split(line, '\t');
    if (fields.size() != 4)
        return fail(why, "expected 4 tab-separated fields, got " + std::to_string(fields.size()));

    std::uint64_t n = 0;
    if (!parse_u64(fields[0], n) || n == 0)
        return fail(why, "bad index '" + fields[0] + "'");
    // C_n for huge n is not something a text cache should make us build.
    if (n > (1u << 20))
        return fail(why, "index " + fields[0] + " out of range");

    Factorization f;
    if (fields[1] == "complete")
        f.status = FactorStatus::complete;
    else if (fields[1] == "partial")
        f.status = FactorStatus::partial;
    else
        return fail(why, "bad status '" + fields[1] + "'");

    if (!fields[2].empty()) {
        for (const auto& tok : split(fields[2], ' ')) {
            PrimePower pp;
            const auto caret = tok.find('^');
            std::uint64_t k = 1;
            if (!parse_big(tok.substr(0, caret), pp.prime))
                return fail(why, "bad prime '" + tok + "'");
            if (caret != std::string::npos && (!parse_u64(tok.substr(caret + 1), k) || k == 0 || k > 4096))
                return fail(why, "bad exponent in '" + tok + "'");
            pp.multiplicity = static_cast<unsigned>(k);
            f.factors.push_back(std::move(pp));
        }
    }
    if (!parse_big(fields[3], f.cofactor) || f.cofactor == 0)
        return fail(why, "bad cofactor '" + fields[3] + "'");

    f.value = cullen(static_cast<std::int64_t>(n)).value;
    if (!f.consistent())
        return fail(why, "record does not multiply out to C_" + std::to_string(n));
    for (auto& pp : f.factors) {
        const PrimalityVerdict v = is_prime(pp.prime);
        if (!v.maybe_prime())
            return fail(why, "listed factor " + pp.prime.get_str() + " is not prime");
        pp.probable = !v.is_prime();
    }
    return std::make_pair(n, std::move(f));
}

} // namespace cullen
