#pragma once

namespace umlab {

// Version stamped into run manifests; bump on any change that alters
// artifact bytes so stale manifests are distinguishable.
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "v1";

} // namespace umlab
