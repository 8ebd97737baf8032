#include <fourfa/flow/registry.hpp>
#include <fourfa/errors.hpp>

namespace fourfa {

namespace {

void wipe(std::string& s)
   {
   volatile char* p = s.data();
   for(std::size_t i = 0; i != s.size(); ++i)
      p[i] = 0;
   s.clear();
   }

}

Session SessionRegistry::create(std::string_view username, Timestamp now, RandomSource& rng)
   {
   Session s = begin_session(username, now, rng);
   auto entry = std::make_shared<Entry>();
   entry->created_at = s.created_at;
   entry->session = s;

   std::lock_guard lock(m_mutex);
   purge_expired(now);
   m_sessions.emplace(s.id, std::move(entry));
   return s;
   }

std::shared_ptr<SessionRegistry::Entry> SessionRegistry::find(std::string_view id) const
   {
   std::lock_guard lock(m_mutex);
   auto it = m_sessions.find(id);
   if(it == m_sessions.end())
      throw UnknownSession("no such session");
   return it->second;
   }

void SessionRegistry::purge_expired(Timestamp now)
   {
   // Entries a writer still holds stay alive through their shared_ptr.
   for(auto it = m_sessions.begin(); it != m_sessions.end();)
      {
      if(now >= it->second->created_at + 2 * m_lifetime)
         it = m_sessions.erase(it);
      else
         ++it;
      }
   }

Session SessionRegistry::apply(std::string_view id, const FactorEvent& event, const FlowContext& ctx, Timestamp now)
   {
   auto entry = find(id);
   std::lock_guard lock(entry->mutex);

   Session next = apply_event(entry->session, event, ctx, now);
   if(auto* pw = std::get_if<PasswordSubmitted>(&event); pw && next.state == SessionState::AwaitOtp)
      entry->password = pw->password;
   if(next.terminal())
      wipe(entry->password);
   entry->session = next;
   return next;
   }

RasterImage SessionRegistry::finalize(std::string_view id,
                                      const RasterImage& cover,
                                      ByteView mac_pass,
                                      ByteView key_pass,
                                      const Block64& iv,
                                      Timestamp now)
   {
   auto entry = find(id);
   std::lock_guard lock(entry->mutex);

   Session& s = entry->session;
   if(!s.terminal() && now >= s.created_at + m_lifetime)
      throw TerminalSession("session expired");

   const TransactionPayload payload = [&] {
      if(s.terminal())
         throw TerminalSession("session already " + std::string(to_string(s.state)));
      return assemble_payload(s, entry->password);
   }();
   RasterImage stego = finalize_transaction(s, payload, cover, mac_pass, key_pass, iv);
   wipe(entry->password);
   return stego;
   }

Session SessionRegistry::snapshot(std::string_view id) const
   {
   auto entry = find(id);
   std::lock_guard lock(entry->mutex);
   return entry->session;
   }

std::size_t SessionRegistry::size() const
   {
   std::lock_guard lock(m_mutex);
   return m_sessions.size();
   }

}
