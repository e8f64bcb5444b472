#ifndef BRANGES_CACHE_HPP
#define BRANGES_CACHE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <branges/serialize.hpp>

namespace branges {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

/// Digest of the canonical dump of `doc` without its "checksum" field.
std::string payload_checksum(Json doc);

/// JSON artifacts in one directory. Each file carries a "key" describing how
/// it was built and a "checksum" over everything else.
class Cache {
public:
    /// Creates the directory; throws IoError when that fails.
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path(const std::string& name) const { return dir_ / name; }

    /// The stored document, or nullopt when missing, unreadable, tampered
    /// with or built under a different key.
    std::optional<Json> load(const std::string& name, const Json& key) const;

    /// Adds key and checksum, then writes through a temporary file and rename.
    /// Throws IoError.
    Json store(const std::string& name, const Json& key, Json doc) const;

private:
    std::filesystem::path dir_;
};

} // namespace branges

#endif
