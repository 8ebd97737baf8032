#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fourfa {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Fixed-length opaque byte string. Tag distinguishes otherwise identical sizes.
template<std::size_t N, class Tag>
struct FixedBytes
   {
   static constexpr std::size_t length = N;

   std::array<uint8_t, N> bytes{};

   static FixedBytes from(ByteView in)
      {
      if(in.size() != N)
         throw std::invalid_argument("expected " + std::to_string(N) + " bytes, got " + std::to_string(in.size()));
      FixedBytes out;
      std::copy(in.begin(), in.end(), out.bytes.begin());
      return out;
      }

   uint8_t* data() { return bytes.data(); }
   const uint8_t* data() const { return bytes.data(); }
   static constexpr std::size_t size() { return N; }
   ByteView view() const { return ByteView(bytes); }

   friend bool operator==(const FixedBytes&, const FixedBytes&) = default;
   };

inline ByteView as_bytes(std::string_view s)
   {
   return ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size());
   }

inline Bytes to_bytes(std::string_view s)
   {
   const auto v = as_bytes(s);
   return Bytes(v.begin(), v.end());
   }

inline std::string to_string(ByteView b)
   {
   return std::string(reinterpret_cast<const char*>(b.data()), b.size());
   }

std::string hex_encode(ByteView in);

/// Throws std::invalid_argument on odd length or non-hex characters.
Bytes hex_decode(std::string_view in);

inline uint32_t load_be32(const uint8_t* p)
   {
   return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
   }

inline void store_be32(uint32_t w, uint8_t* p)
   {
   p[0] = static_cast<uint8_t>(w >> 24);
   p[1] = static_cast<uint8_t>(w >> 16);
   p[2] = static_cast<uint8_t>(w >> 8);
   p[3] = static_cast<uint8_t>(w);
   }

}
