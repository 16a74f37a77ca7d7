#include <cullen/cullen_number.hpp>
#include <cullen/errors.hpp>
#include <cullen/factor_cache.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

using namespace cullen;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() /
                ("cullen_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

Factorization c6()
{
    return general_factor(cullen::cullen(6).value);
}

} // namespace

TEST(FactorCache, MissingFileIsEmpty)
{
    TempDir dir;
    FactorCache cache(dir.path() / "none.txt");
    EXPECT_EQ(cache.size(), 0u);
    EXPECT_FALSE(cache.get(6));
}

TEST(FactorCache, RoundTrip)
{
    TempDir dir;
    const auto file = dir.path() / "c.txt";
    {
        FactorCache cache(file);
        cache.put(6, c6());
        cache.put(20, general_factor(cullen::cullen(20).value));
    }
    FactorCache reloaded(file);
    EXPECT_EQ(reloaded.size(), 2u);
    EXPECT_EQ(reloaded.warning_count(), 0u);
    ASSERT_TRUE(reloaded.get(6));
    EXPECT_EQ(*reloaded.get(6), c6());
    EXPECT_FALSE(reloaded.get(7));
}

TEST(FactorCache, FormatAndParse)
{
    const auto line = FactorCache::format_line(6, c6());
    EXPECT_EQ(line, "6\tcomplete\t5 7 11\t1");
    const auto parsed = FactorCache::parse_line(line);
    ASSERT_TRUE(parsed);
    EXPECT_EQ(parsed->first, 6u);
    EXPECT_EQ(parsed->second, c6());
}

TEST(FactorCache, PartialRecord)
{
    const auto c = cullen::cullen(6).value;
    Factorization f{c, {{BigInt(5), 1, false}}, FactorStatus::partial, BigInt(77)};
    const auto line = FactorCache::format_line(6, f);
    const auto parsed = FactorCache::parse_line(line);
    ASSERT_TRUE(parsed);
    EXPECT_FALSE(parsed->second.complete());
    EXPECT_EQ(parsed->second.cofactor, 77);
}

TEST(FactorCache, RejectsMalformedLines)
{
    std::string why;
    EXPECT_FALSE(FactorCache::parse_line("garbage", &why));
    EXPECT_FALSE(why.empty());
    EXPECT_FALSE(FactorCache::parse_line("6\tcomplete\t5 7 13\t1", &why));   // wrong product
    EXPECT_FALSE(FactorCache::parse_line("6\tcomplete\t7 5 11\t1", &why));   // not ascending
    EXPECT_FALSE(FactorCache::parse_line("6\tcomplete\t5 77\t1", &why));     // 77 not prime
    EXPECT_FALSE(FactorCache::parse_line("6\tcomplete\t5 7\t11", &why));     // complete with cofactor
    EXPECT_FALSE(FactorCache::parse_line("6\tfinished\t5 7 11\t1", &why));   // bad status
    EXPECT_FALSE(FactorCache::parse_line("0\tcomplete\t3\t1", &why));
}

TEST(FactorCache, SkipsBadLinesOnLoad)
{
    TempDir dir;
    const auto file = dir.path() / "c.txt";
    {
        std::ofstream out(file);
        out << "# comment\n";
        out << "6\tcomplete\t5 7 13\t1\n";
        out << "not a record\n";
        out << FactorCache::format_line(6, c6()) << "\n";
        out << "\n";
    }
    FactorCache cache(file);
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_EQ(cache.warning_count(), 2u);
    EXPECT_TRUE(cache.get(6));
}

TEST(FactorCache, LaterLineWins)
{
    TempDir dir;
    const auto file = dir.path() / "c.txt";
    const auto c = cullen::cullen(6).value;
    {
        std::ofstream out(file);
        out << FactorCache::format_line(
                   6, Factorization{c, {{BigInt(5), 1, false}}, FactorStatus::partial, BigInt(77)})
            << "\n";
        out << FactorCache::format_line(6, c6()) << "\n";
    }
    FactorCache cache(file);
    ASSERT_TRUE(cache.get(6));
    EXPECT_TRUE(cache.get(6)->complete());
}

TEST(FactorCache, PutValidatesValue)
{
    TempDir dir;
    FactorCache cache(dir.path() / "c.txt");
    EXPECT_THROW(cache.put(7, c6()), std::invalid_argument);
}

TEST(FactorCache, WriteFailureRaises)
{
    TempDir dir;
    // Parent directory does not exist, so the append cannot open the file.
    FactorCache cache(dir.path() / "missing" / "c.txt");
    EXPECT_THROW(cache.put(6, c6()), CacheIoError);
}

TEST(FactorCache, DirectoryPathRaises)
{
    TempDir dir;
    EXPECT_THROW(FactorCache cache(dir.path()), CacheIoError);
}

TEST(FactorCache, ConcurrentPuts)
{
    TempDir dir;
    const auto file = dir.path() / "c.txt";
    {
        FactorCache cache(file);
        std::vector<std::jthread> threads;
        for (int t = 0; t < 4; ++t)
            threads.emplace_back([&cache, t] {
                for (std::int64_t n = 1 + t; n <= 40; n += 4)
                    cache.put(static_cast<std::uint64_t>(n), general_factor(cullen::cullen(n).value));
            });
    }
    FactorCache reloaded(file);
    EXPECT_EQ(reloaded.size(), 40u);
    EXPECT_EQ(reloaded.warning_count(), 0u);
}
