#pragma once

#include <array>

#include <fourfa/bytes.hpp>
#include <fourfa/crypto/xtea.hpp>
#include <fourfa/image/raster.hpp>

namespace fourfa {

/*
* Embedded stream, written MSB-first per byte into the least significant bit
* of successive R, G, B samples in row-major order (alpha never touched):
*
*   magic "MTRK" | version 0x01 | payload_len u32 BE | iv (8) | tag (32) | ciphertext
*
* tag = HMAC-SHA256(derive_key(mac_pass), magic | version | payload_len | iv | ciphertext)
* ciphertext = XTEA-CBC(derive_key(key_pass), iv, payload)
*/
namespace envelope {

inline constexpr std::array<uint8_t, 4> magic = {'M', 'T', 'R', 'K'};
inline constexpr uint8_t version = 0x01;
inline constexpr std::size_t header_size = 17;
inline constexpr std::size_t tag_size = 32;
inline constexpr std::size_t overhead = header_size + tag_size;

/// Total embedded bytes for a payload of the given length.
std::size_t sealed_size(std::size_t payload_length);

/// Sample index that carries embedded bit number `bit` (0-based, MSB-first).
inline std::size_t carrier_sample_index(uint32_t channels, std::size_t bit)
   {
   return (bit / 3) * channels + bit % 3;
   }

}

/// Bytes that fit in one LSB per R, G, B sample: floor(w * h * 3 / 8).
std::size_t capacity_of(const RasterImage& image);

/// Throws CapacityExceeded when the cover cannot hold the sealed stream.
RasterImage seal_envelope(const RasterImage& cover,
                          ByteView payload,
                          ByteView mac_pass,
                          ByteView key_pass,
                          const Block64& iv);

/// Throws BadMagic, UnsupportedVersion, TruncatedEnvelope, TamperDetected
/// (tag mismatch, including a wrong mac_pass) or WrongKey (authentic
/// envelope that fails to decrypt under key_pass).
Bytes open_envelope(const RasterImage& image, ByteView mac_pass, ByteView key_pass);

}
