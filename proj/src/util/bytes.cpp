#include <fourfa/bytes.hpp>

namespace fourfa {

namespace {

int hex_value(char c)
   {
   if(c >= '0' && c <= '9')
      return c - '0';
   if(c >= 'a' && c <= 'f')
      return c - 'a' + 10;
   if(c >= 'A' && c <= 'F')
      return c - 'A' + 10;
   return -1;
   }

}

std::string hex_encode(ByteView in)
   {
   static constexpr char digits[] = "0123456789abcdef";
   std::string out;
   out.reserve(2 * in.size());
   for(uint8_t b : in)
      {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0x0F]);
      }
   return out;
   }

Bytes hex_decode(std::string_view in)
   {
   if(in.size() % 2 != 0)
      throw std::invalid_argument("hex string has odd length");
   Bytes out;
   out.reserve(in.size() / 2);
   for(std::size_t i = 0; i < in.size(); i += 2)
      {
      const int hi = hex_value(in[i]);
      const int lo = hex_value(in[i + 1]);
      if(hi < 0 || lo < 0)
         throw std::invalid_argument("invalid hex character");
      out.push_back(static_cast<uint8_t>((hi << 4) | lo));
      }
   return out;
   }

}
