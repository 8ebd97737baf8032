#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include <fourfa/factors/user.hpp>

namespace fourfa {

/// Keyed by username; put replaces any existing record.
class UserStore
   {
   public:
      virtual ~UserStore() = default;
      virtual std::optional<UserRecord> get(std::string_view username) const = 0;
      virtual void put(const UserRecord& record) = 0;
   };

class MemoryUserStore final : public UserStore
   {
   public:
      std::optional<UserRecord> get(std::string_view username) const override;
      void put(const UserRecord& record) override;
   private:
      mutable std::shared_mutex m_mutex;
      std::map<std::string, UserRecord, std::less<>> m_records;
   };

}
