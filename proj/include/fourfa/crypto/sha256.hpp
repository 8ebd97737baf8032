#pragma once

#include <array>
#include <cstdint>

#include <fourfa/bytes.hpp>

namespace fourfa {

using Digest256 = FixedBytes<32, struct Digest256Tag>;

/// Incremental SHA-256 (FIPS 180-4).
class Sha256
   {
   public:
      static constexpr std::size_t block_size = 64;
      static constexpr std::size_t output_size = 32;

      Sha256() { clear(); }

      Sha256& update(ByteView in);
      Sha256& update(std::string_view in) { return update(as_bytes(in)); }

      /// Produces the digest and resets the object for reuse.
      Digest256 final();

      void clear();

      static Digest256 hash(ByteView in) { return Sha256().update(in).final(); }
      static Digest256 hash(std::string_view in) { return hash(as_bytes(in)); }
   private:
      void compress(const uint8_t block[64]);

      std::array<uint32_t, 8> m_state;
      std::array<uint8_t, 64> m_buffer;
      std::size_t m_buffered = 0;
      uint64_t m_total = 0;
   };

}
