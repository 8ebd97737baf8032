#pragma once

#include <filesystem>
#include <map>
#include <shared_mutex>

#include <fourfa/factors/user_store.hpp>

namespace fourfa {

/// One JSON object per line:
///   {"username":..,"pw_salt":<32 hex>,"pw_digest":<64 hex>,"face":"64x32\n<rows>","home_lat":..,"home_lon":..}
/// Later lines replace earlier lines with the same username.
std::string encode_user_line(const UserRecord& record);

/// Throws std::invalid_argument describing the defect.
UserRecord decode_user_line(std::string_view line);

/// Append-only line-delimited JSON store, loaded fully on open. Writes are
/// serialized and fsync'd; reads are concurrent.
class FileUserStore final : public UserStore
   {
   public:
      /// A missing file is an empty store. Throws StorageError naming the
      /// first corrupt line.
      explicit FileUserStore(std::filesystem::path path);

      std::optional<UserRecord> get(std::string_view username) const override;
      void put(const UserRecord& record) override;

      std::size_t size() const;
   private:
      std::filesystem::path m_path;
      mutable std::shared_mutex m_mutex;
      std::map<std::string, UserRecord, std::less<>> m_records;
   };

}
