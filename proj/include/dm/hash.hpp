#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dm {

// FNV-1a 64-bit. Used for content hashes in manifests and provenance checks;
// stable across platforms and cheap enough to hash whole artifact files.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t v);

// Hash of a file's raw bytes, rendered as "fnv1a64:<16 hex digits>".
// Throws std::runtime_error if the file cannot be read.
std::string hash_file(const std::string& path);

std::string hash_string(std::string_view content);

} // namespace dm
