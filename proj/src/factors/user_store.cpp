#include <fourfa/factors/user_store.hpp>

#include <mutex>

namespace fourfa {

std::optional<UserRecord> MemoryUserStore::get(std::string_view username) const
   {
   std::shared_lock lock(m_mutex);
   auto it = m_records.find(username);
   if(it == m_records.end())
      return std::nullopt;
   return it->second;
   }

void MemoryUserStore::put(const UserRecord& record)
   {
   std::unique_lock lock(m_mutex);
   m_records.insert_or_assign(record.username, record);
   }

}
