#pragma once
#include <string>

namespace umlab {

// SHA-256 hex digest of a byte string. Self-contained; used to fingerprint
// artifact files in run manifests.
std::string sha256_hex(const std::string& data);

// Digest of a file's contents; BadInput if the file cannot be read.
std::string sha256_file(const std::string& path);

} // namespace umlab
