#pragma once

#include <fourfa/bytes.hpp>
#include <fourfa/crypto/xtea.hpp>

namespace fourfa {

/// First 16 bytes of SHA-256(passphrase).
Key128 derive_key(ByteView passphrase);

inline Key128 derive_key(std::string_view passphrase)
   {
   return derive_key(as_bytes(passphrase));
   }

}
