#include <fourfa/crypto/ct.hpp>

namespace fourfa {

bool constant_time_equal(ByteView a, ByteView b)
   {
   if(a.size() != b.size())
      return false;
   volatile uint8_t diff = 0;
   for(std::size_t i = 0; i != a.size(); ++i)
      diff = diff | (a[i] ^ b[i]);
   return diff == 0;
   }

}
