#include <fourfa/random.hpp>
#include <fourfa/errors.hpp>

#include <cerrno>
#include <sys/random.h>

namespace fourfa {

uint32_t RandomSource::next_u32()
   {
   uint8_t buf[4];
   fill(buf);
   return load_be32(buf);
   }

uint32_t RandomSource::uniform(uint32_t bound)
   {
   if(bound == 0)
      throw std::invalid_argument("uniform bound must be nonzero");
   // Largest multiple of bound that fits; draws above it would bias low values.
   const uint64_t span = uint64_t(1) << 32;
   const uint64_t limit = span - (span % bound);
   for(;;)
      {
      const uint32_t r = next_u32();
      if(r < limit)
         return r % bound;
      }
   }

void SystemRandom::fill(std::span<uint8_t> out)
   {
   std::size_t done = 0;
   while(done < out.size())
      {
      const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
      if(got < 0)
         {
         if(errno == EINTR)
            continue;
         throw Error("getrandom failed");
         }
      done += static_cast<std::size_t>(got);
      }
   }

void DeterministicRandom::fill(std::span<uint8_t> out)
   {
   std::size_t i = 0;
   while(i < out.size())
      {
      uint64_t r = m_gen();
      for(int k = 0; k < 8 && i < out.size(); ++k, ++i)
         {
         out[i] = static_cast<uint8_t>(r);
         r >>= 8;
         }
      }
   }

}
