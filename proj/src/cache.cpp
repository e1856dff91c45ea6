#include <momentpoly/cache.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace momentpoly {

namespace {
constexpr const char* kMagic = "momentpoly-cache v1";
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir, int k) {
    return dir / ("bk_" + std::to_string(k) + ".tbl");
}

std::optional<CoefficientTable> read_table_cache(const std::filesystem::path& dir, int k) {
    std::ifstream in(table_cache_path(dir, k));
    if (!in) return std::nullopt;

    std::string line;
    if (!std::getline(in, line) || line != kMagic) return std::nullopt;
    if (!std::getline(in, line) || line != "k=" + std::to_string(k)) return std::nullopt;
    if (!std::getline(in, line) || line.rfind("c0=", 0) != 0) return std::nullopt;

    CoefficientTable t;
    t.k = k;
    const std::string c0_text = line.substr(3);
    if (c0_text.find('/') == std::string::npos) return std::nullopt;
    if (mpq_set_str(t.c0.get_mpq_t(), c0_text.c_str(), 10) != 0) return std::nullopt;
    t.c0.canonicalize();

    const long n = static_cast<long>(k) * k;
    t.b.reserve(n + 1);
    for (long r = 0; r <= n; ++r) {
        if (!std::getline(in, line) || line.empty()) return std::nullopt;
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), line.c_str(), 10) != 0) return std::nullopt;
        t.b.push_back(std::move(v));
    }
    if (std::getline(in, line)) return std::nullopt;  // line count must be exactly k^2+4
    if (t.b.front() != 1) return std::nullopt;
    return t;
}

void write_table_cache(const std::filesystem::path& dir, const CoefficientTable& table) {
    std::filesystem::create_directories(dir);
    const auto target = table_cache_path(dir, table.k);

    std::random_device rd;
    const auto tmp = target.string() + ".tmp" + std::to_string(rd() % 1000000);
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << kMagic << '\n';
        out << "k=" << table.k << '\n';
        out << "c0=" << table.c0.get_num().get_str() << '/' << table.c0.get_den().get_str()
            << '\n';
        for (const auto& br : table.b) out << br.get_str() << '\n';
        out.flush();
        if (!out) throw std::runtime_error("short write to cache file " + tmp);
    }
    std::filesystem::rename(tmp, target);
}

TableRepository::TableRepository(std::filesystem::path cache_dir) : dir_(std::move(cache_dir)) {}

std::shared_ptr<const CoefficientTable> TableRepository::get(int k) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
    }

    std::shared_ptr<const CoefficientTable> built;
    if (!dir_.empty()) {
        if (auto cached = read_table_cache(dir_, k))
            built = std::make_shared<const CoefficientTable>(std::move(*cached));
    }
    if (!built) {
        if (progress_) progress_(k);
        built = std::make_shared<const CoefficientTable>(expand_product(k));
        if (!dir_.empty()) write_table_cache(dir_, *built);
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(k, built);
    return it->second;
}

}  // namespace momentpoly
