#include <fourfa/app/file_user_store.hpp>
#include <fourfa/errors.hpp>

#include <json.hpp>

#include <cerrno>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <mutex>
#include <unistd.h>

namespace fourfa {

using json = nlohmann::json;

std::string encode_user_line(const UserRecord& record)
   {
   json j;
   j["username"] = record.username;
   j["pw_salt"] = hex_encode(record.pw_salt.view());
   j["pw_digest"] = hex_encode(record.pw_digest.view());
   j["face"] = record.face.to_text();
   j["home_lat"] = record.home.lat;
   j["home_lon"] = record.home.lon;
   return j.dump();
   }

UserRecord decode_user_line(std::string_view line)
   {
   const json j = json::parse(line, nullptr, false);
   if(j.is_discarded() || !j.is_object())
      throw std::invalid_argument("not a JSON object");

   auto str = [&](const char* key) -> std::string {
      if(!j.contains(key) || !j.at(key).is_string())
         throw std::invalid_argument(std::string("missing string field ") + key);
      return j.at(key).get<std::string>();
   };
   auto num = [&](const char* key) -> double {
      if(!j.contains(key) || !j.at(key).is_number())
         throw std::invalid_argument(std::string("missing number field ") + key);
      return j.at(key).get<double>();
   };

   UserRecord rec;
   rec.username = str("username");
   if(!is_valid_username(rec.username))
      throw std::invalid_argument("invalid username");

   const std::string salt = str("pw_salt");
   const std::string digest = str("pw_digest");
   if(salt.size() != 32 || digest.size() != 64)
      throw std::invalid_argument("hex field has wrong length");
   rec.pw_salt = Salt128::from(hex_decode(salt));
   rec.pw_digest = Digest256::from(hex_decode(digest));

   rec.face = FaceTemplate::from_text(str("face"));

   const double lat = num("home_lat");
   const double lon = num("home_lon");
   if(!is_valid_location(lat, lon))
      throw std::invalid_argument("home location out of range");
   rec.home = GeoPoint{lat, lon};
   return rec;
   }

FileUserStore::FileUserStore(std::filesystem::path path) : m_path(std::move(path))
   {
   std::ifstream in(m_path);
   if(!in)
      {
      if(std::filesystem::exists(m_path))
         throw StorageError("user store not readable: " + m_path.string());
      return;
      }

   std::string line;
   std::size_t line_no = 0;
   while(std::getline(in, line))
      {
      ++line_no;
      try
         {
         UserRecord rec = decode_user_line(line);
         m_records.insert_or_assign(rec.username, std::move(rec));
         }
      catch(const std::exception& e)
         {
         throw StorageError("user store line " + std::to_string(line_no) + ": " + e.what());
         }
      }
   if(in.bad())
      throw StorageError("user store read failed: " + m_path.string());
   }

std::optional<UserRecord> FileUserStore::get(std::string_view username) const
   {
   std::shared_lock lock(m_mutex);
   auto it = m_records.find(username);
   if(it == m_records.end())
      return std::nullopt;
   return it->second;
   }

void FileUserStore::put(const UserRecord& record)
   {
   check_username(record.username);

   std::unique_lock lock(m_mutex);
   if(auto it = m_records.find(record.username); it != m_records.end() && it->second == record)
      return;

   const std::string line = encode_user_line(record) + "\n";

   const int fd = ::open(m_path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0600);
   if(fd < 0)
      throw StorageError("cannot open user store: " + std::string(std::strerror(errno)));

   std::size_t done = 0;
   while(done < line.size())
      {
      const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
      if(n < 0)
         {
         if(errno == EINTR)
            continue;
         const int err = errno;
         ::close(fd);
         throw StorageError("user store write failed: " + std::string(std::strerror(err)));
         }
      done += static_cast<std::size_t>(n);
      }
   const bool synced = ::fsync(fd) == 0;
   ::close(fd);
   if(!synced)
      throw StorageError("user store fsync failed");

   m_records.insert_or_assign(record.username, record);
   }

std::size_t FileUserStore::size() const
   {
   std::shared_lock lock(m_mutex);
   return m_records.size();
   }

}
