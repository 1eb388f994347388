#pragma once

#include <string>
#include <string_view>

#include "ddg/graph.hpp"

namespace ddg {

// graph6 codec (printable ASCII, bytes 63..126). The header encodes the
// vertex count; the body packs the upper triangle column-major, six bits per
// byte, zero-padded at the end. Encoding then decoding is the identity, and
// strings produced here match other graph6 implementations byte-for-byte.
std::string graph6_encode(const Graph& g);

// Throws MalformedHeader for a bad length prefix, TruncatedBits when the body
// has the wrong number of bits (too short, too long, or nonzero padding), and
// SizeOverflow when the vertex count is outside [1, kMaxVertices].
Graph graph6_decode(std::string_view s);

// Debug dump: {"n": <count>, "rows": [[0,1,...], ...]} as serialized JSON.
std::string adjacency_json(const Graph& g);

}  // namespace ddg
