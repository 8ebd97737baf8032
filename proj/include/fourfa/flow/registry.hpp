#pragma once

#include <map>
#include <memory>
#include <mutex>

#include <fourfa/flow/payload.hpp>
#include <fourfa/flow/session.hpp>

namespace fourfa {

/// Live sessions keyed by id. Events for one session are applied under that
/// session's lock; distinct sessions proceed in parallel. The password
/// accepted in the first factor is held here (never in Session) until the
/// payload is sealed, then wiped.
class SessionRegistry
   {
   public:
      explicit SessionRegistry(std::chrono::seconds lifetime = FlowSettings{}.session_lifetime) :
         m_lifetime(lifetime) {}

      Session create(std::string_view username, Timestamp now, RandomSource& rng);

      /// Throws UnknownSession plus anything apply_event throws.
      Session apply(std::string_view id, const FactorEvent& event, const FlowContext& ctx, Timestamp now);

      /// Assembles and seals the payload, completing the session.
      RasterImage finalize(std::string_view id,
                           const RasterImage& cover,
                           ByteView mac_pass,
                           ByteView key_pass,
                           const Block64& iv,
                           Timestamp now);

      Session snapshot(std::string_view id) const;

      std::size_t size() const;
   private:
      struct Entry
         {
         Timestamp created_at;   // immutable, read without the entry lock
         std::mutex mutex;
         Session session;
         std::string password;
         };

      std::shared_ptr<Entry> find(std::string_view id) const;
      void purge_expired(Timestamp now);

      std::chrono::seconds m_lifetime;
      mutable std::mutex m_mutex;
      std::map<std::string, std::shared_ptr<Entry>, std::less<>> m_sessions;
   };

}
