#pragma once

#include <fourfa/bytes.hpp>
#include <fourfa/crypto/xtea.hpp>

namespace fourfa {

/// Output length is 8 * ceil((len + 1) / 8): padding is always applied.
std::size_t cbc_ciphertext_length(std::size_t plaintext_length);

/// XTEA-CBC with PKCS#7-style padding over 8-byte blocks.
Bytes cbc_encrypt(ByteView plaintext, const Key128& key, const Block64& iv);

/// Throws LengthError when the input is empty or not block aligned, and
/// PaddingError when the final pad is malformed.
Bytes cbc_decrypt(ByteView ciphertext, const Key128& key, const Block64& iv);

}
