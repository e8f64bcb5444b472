#include <branges/cache.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace branges {

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string payload_checksum(Json doc)
{
    doc.erase("checksum");
    return sha256_hex(doc.dump());
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
        throw IoError("cannot create cache directory " + dir_.string()
                      + (ec ? ": " + ec.message() : ""));
}

std::optional<Json> Cache::load(const std::string& name, const Json& key) const
{
    std::ifstream in(path(name));
    if (!in)
        return std::nullopt;
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("checksum")
        || !doc["checksum"].is_string())
        return std::nullopt;
    if (doc["checksum"].get<std::string>() != payload_checksum(doc))
        return std::nullopt;
    if (!doc.contains("key") || doc["key"] != key)
        return std::nullopt;
    return doc;
}

Json Cache::store(const std::string& name, const Json& key, Json doc) const
{
    doc["key"] = key;
    doc.erase("checksum");
    doc["checksum"] = payload_checksum(doc);
    const std::filesystem::path target = path(name);
    const std::filesystem::path tmp = path(name + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << doc.dump(1) << '\n';
        if (!out)
            throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        throw IoError("cannot replace " + target.string() + ": " + ec.message());
    return doc;
}

} // namespace branges
