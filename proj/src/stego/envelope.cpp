#include <fourfa/stego/envelope.hpp>
#include <fourfa/crypto/cbc.hpp>
#include <fourfa/crypto/ct.hpp>
#include <fourfa/crypto/hmac.hpp>
#include <fourfa/crypto/kdf.hpp>
#include <fourfa/errors.hpp>

#include <algorithm>

namespace fourfa {

namespace {

void embed_bytes(RasterImage& image, ByteView stream)
   {
   auto samples = image.samples();
   const uint32_t channels = image.channels();
   std::size_t bit = 0;
   for(uint8_t byte : stream)
      {
      for(int shift = 7; shift >= 0; --shift, ++bit)
         {
         uint8_t& s = samples[envelope::carrier_sample_index(channels, bit)];
         s = static_cast<uint8_t>((s & 0xFE) | ((byte >> shift) & 1));
         }
      }
   }

/// Reads `count` bytes starting at byte offset `first` of the embedded stream.
Bytes extract_bytes(const RasterImage& image, std::size_t first, std::size_t count)
   {
   const auto samples = image.samples();
   const uint32_t channels = image.channels();
   Bytes out(count);
   std::size_t bit = first * 8;
   for(std::size_t i = 0; i != count; ++i)
      {
      uint8_t byte = 0;
      for(int k = 0; k != 8; ++k, ++bit)
         byte = static_cast<uint8_t>((byte << 1) | (samples[envelope::carrier_sample_index(channels, bit)] & 1));
      out[i] = byte;
      }
   return out;
   }

MacTag compute_tag(ByteView mac_pass, ByteView header, ByteView ciphertext)
   {
   const Key128 mac_key = derive_key(mac_pass);
   Bytes msg;
   msg.reserve(header.size() + ciphertext.size());
   msg.insert(msg.end(), header.begin(), header.end());
   msg.insert(msg.end(), ciphertext.begin(), ciphertext.end());
   return hmac_sha256(mac_key.view(), msg);
   }

}

std::size_t envelope::sealed_size(std::size_t payload_length)
   {
   return overhead + cbc_ciphertext_length(payload_length);
   }

std::size_t capacity_of(const RasterImage& image)
   {
   return image.pixel_count() * 3 / 8;
   }

RasterImage seal_envelope(const RasterImage& cover,
                          ByteView payload,
                          ByteView mac_pass,
                          ByteView key_pass,
                          const Block64& iv)
   {
   const std::size_t required = envelope::sealed_size(payload.size());
   const std::size_t available = capacity_of(cover);
   if(required > available)
      throw CapacityExceeded(required, available);

   const Bytes ciphertext = cbc_encrypt(payload, derive_key(key_pass), iv);

   Bytes stream;
   stream.reserve(required);
   stream.insert(stream.end(), envelope::magic.begin(), envelope::magic.end());
   stream.push_back(envelope::version);
   stream.resize(stream.size() + 4);
   store_be32(static_cast<uint32_t>(ciphertext.size()), &stream[5]);
   stream.insert(stream.end(), iv.bytes.begin(), iv.bytes.end());

   const MacTag tag = compute_tag(mac_pass, stream, ciphertext);
   stream.insert(stream.end(), tag.bytes.begin(), tag.bytes.end());
   stream.insert(stream.end(), ciphertext.begin(), ciphertext.end());

   RasterImage stego = cover;
   embed_bytes(stego, stream);
   return stego;
   }

Bytes open_envelope(const RasterImage& image, ByteView mac_pass, ByteView key_pass)
   {
   const std::size_t capacity = capacity_of(image);

   if(capacity < envelope::magic.size())
      throw BadMagic("no envelope present");
   const Bytes magic = extract_bytes(image, 0, envelope::magic.size());
   if(!std::equal(magic.begin(), magic.end(), envelope::magic.begin()))
      throw BadMagic("no envelope present");

   if(capacity < envelope::overhead)
      throw TruncatedEnvelope("image too small for envelope header");
   const Bytes header = extract_bytes(image, 0, envelope::header_size);
   if(header[4] != envelope::version)
      throw UnsupportedVersion("unsupported envelope version " + std::to_string(header[4]));

   const std::size_t payload_len = load_be32(&header[5]);
   if(payload_len > capacity - envelope::overhead)
      throw TruncatedEnvelope("envelope length exceeds image capacity");
   // Only a modified header can carry a length the sealer never writes.
   if(payload_len == 0 || payload_len % 8 != 0)
      throw TamperDetected("envelope authentication failed");

   const Bytes tag = extract_bytes(image, envelope::header_size, envelope::tag_size);
   const Bytes ciphertext = extract_bytes(image, envelope::overhead, payload_len);

   const MacTag expected = compute_tag(mac_pass, header, ciphertext);
   if(!constant_time_equal(expected.view(), tag))
      throw TamperDetected("envelope authentication failed");

   const Block64 iv = Block64::from(ByteView(header).subspan(9, 8));
   try
      {
      return cbc_decrypt(ciphertext, derive_key(key_pass), iv);
      }
   catch(const PaddingError&)
      {
      throw WrongKey("envelope decryption failed");
      }
   }

}
