#pragma once

#include <fourfa/bytes.hpp>

namespace fourfa {

using MacTag = FixedBytes<32, struct MacTagTag>;

/// HMAC over SHA-256 with the standard 64-byte block; keys longer than a
/// block are hashed first. The full 32-byte tag is returned.
MacTag hmac_sha256(ByteView key, ByteView message);

}
