#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smokeml/dataset.hpp"
#include "smokeml/matrix.hpp"

namespace smokeml::testutil {

// Scratch directory under the system temp root, removed on scope exit.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto id = counter.fetch_add(1);
        path_ = std::filesystem::temp_directory_path() /
                ("smokeml-test-" + std::to_string(::getpid()) + "-" + std::to_string(id));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Tiny dataset with auto-named feature columns f0..f{d-1} and target "y".
inline Dataset make_dataset(const std::vector<std::vector<double>>& rows,
                            const std::vector<int>& labels) {
    std::vector<std::string> names;
    const std::size_t dim = rows.empty() ? 0 : rows.front().size();
    for (std::size_t i = 0; i < dim; ++i) names.push_back("f" + std::to_string(i));
    return Dataset(ColumnSchema::from_names(names, "y"), Matrix::from_rows(rows), labels);
}

}  // namespace smokeml::testutil
