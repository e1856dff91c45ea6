#include <momentpoly/cache.hpp>

#include <doctest.h>

#include <atomic>
#include <fstream>
#include <unistd.h>

using namespace momentpoly;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("momentpoly_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static std::atomic<int>& counter() {
        static std::atomic<int> c{0};
        return c;
    }
};

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

void write_lines(const fs::path& p, const std::vector<std::string>& lines) {
    std::ofstream out(p, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
}

}  // namespace

TEST_CASE("cache round trip") {
    TempDir dir;
    const CoefficientTable t = expand_product(5);
    write_table_cache(dir.path, t);

    auto lines = read_lines(table_cache_path(dir.path, 5));
    REQUIRE(lines.size() == 25 + 4);  // k^2 + 4
    CHECK(lines[0] == "momentpoly-cache v1");
    CHECK(lines[1] == "k=5");
    CHECK(lines[2].rfind("c0=", 0) == 0);
    CHECK(lines[3] == "1");

    auto back = read_table_cache(dir.path, 5);
    REQUIRE(back.has_value());
    CHECK(back->k == 5);
    CHECK(back->b == t.b);
    CHECK(back->c0 == t.c0);
    // no stray temporary left behind
    size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
    CHECK(files == 1);
}

TEST_CASE("corrupt cache files count as absent") {
    TempDir dir;
    const CoefficientTable t = expand_product(3);
    write_table_cache(dir.path, t);
    const fs::path p = table_cache_path(dir.path, 3);
    const auto good = read_lines(p);

    CHECK_FALSE(read_table_cache(dir.path, 4).has_value());  // missing file

    auto bad = good;
    bad[0] = "momentpoly-cache v2";
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad[1] = "k=4";
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad[3] = "2";  // b_0 must be 1
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad.push_back("77");  // line count must be exactly k^2 + 4
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad.pop_back();
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad[2] = "c0=0.25";  // rational must be numerator/denominator
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    bad = good;
    bad[5] = "not-a-number";
    write_lines(p, bad);
    CHECK_FALSE(read_table_cache(dir.path, 3).has_value());

    write_lines(p, good);
    CHECK(read_table_cache(dir.path, 3).has_value());
}

TEST_CASE("repository builds, caches and reloads") {
    TempDir dir;
    int builds = 0;
    {
        TableRepository repo(dir.path);
        repo.set_progress([&](int) { ++builds; });
        auto a = repo.get(4);
        auto b = repo.get(4);  // memoized
        CHECK(a.get() == b.get());
        CHECK(builds == 1);
        CHECK(fs::exists(table_cache_path(dir.path, 4)));
    }
    {
        TableRepository repo(dir.path);
        repo.set_progress([&](int) { ++builds; });
        auto c = repo.get(4);  // from disk, no rebuild
        CHECK(builds == 1);
        CHECK(c->b == expand_product(4).b);
    }
    // memory-only mode leaves no files
    TableRepository mem;
    CHECK(mem.get(3)->b == expand_product(3).b);
}
