#pragma once

#include <momentpoly/exact.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace momentpoly {

/// File name for the cached table of one k: bk_<k>.tbl
std::filesystem::path table_cache_path(const std::filesystem::path& dir, int k);

/// Parse a cached table. Any deviation from the expected layout (header,
/// line count k^2+4, b_0 = 1, k mismatch) makes the file count as absent.
std::optional<CoefficientTable> read_table_cache(const std::filesystem::path& dir, int k);

/// Write atomically: a temporary file in the same directory is renamed into
/// place, so concurrent readers never observe a partial table.
void write_table_cache(const std::filesystem::path& dir, const CoefficientTable& table);

/// Memoizing access to exact coefficient tables, optionally backed by an
/// on-disk cache directory. Tables are built with expand_product on a miss.
/// Thread-safe; loaded tables are immutable and shared.
class TableRepository {
public:
    /// Empty dir: in-memory only.
    explicit TableRepository(std::filesystem::path cache_dir = {});

    std::shared_ptr<const CoefficientTable> get(int k);

    const std::filesystem::path& cache_dir() const { return dir_; }

    /// Invoked as progress(k) before a table has to be built from scratch.
    void set_progress(std::function<void(int)> fn) { progress_ = std::move(fn); }

private:
    std::filesystem::path dir_;
    std::map<int, std::shared_ptr<const CoefficientTable>> memo_;
    std::mutex mu_;
    std::function<void(int)> progress_;
};

}  // namespace momentpoly
