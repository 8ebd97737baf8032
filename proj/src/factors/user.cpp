#include <fourfa/factors/user.hpp>
#include <fourfa/crypto/ct.hpp>
#include <fourfa/errors.hpp>

namespace fourfa {

namespace {

Digest256 password_digest(const Salt128& salt, ByteView password)
   {
   return Sha256().update(salt.view()).update(password).final();
   }

}

bool is_valid_username(std::string_view username)
   {
   if(username.empty() || username.size() > 64)
      return false;
   for(unsigned char c : username)
      {
      if(c < 0x20 || c == 0x7F)
         return false;
      }
   return true;
   }

void check_username(std::string_view username)
   {
   if(!is_valid_username(username))
      throw InvalidUsername("username must be 1..64 bytes without control characters");
   }

UserRecord enroll_user(std::string_view username,
                       ByteView password,
                       const RasterImage& face_image,
                       const GeoPoint& home,
                       const Salt128& salt)
   {
   check_username(username);
   if(!is_valid_location(home.lat, home.lon))
      throw InvalidLocation("home location out of range");

   UserRecord rec;
   rec.username = std::string(username);
   rec.pw_salt = salt;
   rec.pw_digest = password_digest(salt, password);
   rec.face = face_to_template(face_image);
   rec.home = home;
   return rec;
   }

bool verify_password(const UserRecord& record, ByteView password)
   {
   const Digest256 d = password_digest(record.pw_salt, password);
   return constant_time_equal(d.view(), record.pw_digest.view());
   }

bool verify_location(const UserRecord& record, const GeoPoint& reported, double radius_m)
   {
   return geo_distance(record.home, reported) <= radius_m;
   }

}
