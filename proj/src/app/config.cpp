#include <fourfa/app/config.hpp>
#include <fourfa/errors.hpp>
#include <fourfa/image/png.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdlib>

namespace fourfa {

using json = nlohmann::json;

FlowSettings Config::flow_settings() const
   {
   FlowSettings s;
   s.otp_digits = otp_digits;
   s.otp_ttl = otp_ttl;
   s.face_threshold = face_threshold;
   s.geofence_radius_m = geofence_radius_m;
   return s;
   }

MerchantPolicy Config::merchant_policy() const
   {
   return MerchantPolicy{geofence_radius_m, face_threshold};
   }

std::pair<std::string, int> Config::listen_endpoint() const
   {
   const auto colon = listen_addr.rfind(':');
   if(colon == std::string::npos || colon == 0)
      throw ConfigError("listen_addr", "expected host:port");
   const std::string host = listen_addr.substr(0, colon);
   int port = 0;
   try
      {
      std::size_t used = 0;
      port = std::stoi(listen_addr.substr(colon + 1), &used);
      if(used != listen_addr.size() - colon - 1)
         throw std::invalid_argument("trailing");
      }
   catch(const std::exception&)
      {
      throw ConfigError("listen_addr", "expected host:port");
      }
   if(port < 0 || port > 65535)
      throw ConfigError("listen_addr", "port out of range");
   return {host, port};
   }

std::optional<std::string> process_env(const std::string& name)
   {
   if(const char* v = std::getenv(name.c_str()))
      return std::string(v);
   return std::nullopt;
   }

namespace {

/// One configurable value from file and environment, environment winning.
class Source
   {
   public:
      Source(const json& file, const EnvLookup& env) : m_file(file), m_env(env) {}

      std::optional<std::string> text(const std::string& key, const std::string& env_name) const
         {
         if(auto v = m_env(env_name))
            return v;
         if(!m_file.contains(key))
            return std::nullopt;
         const json& v = m_file.at(key);
         if(!v.is_string())
            throw ConfigError(key, "expected a string");
         return v.get<std::string>();
         }

      std::optional<double> number(const std::string& key, const std::string& env_name) const
         {
         if(auto v = m_env(env_name))
            {
            try
               {
               std::size_t used = 0;
               const double d = std::stod(*v, &used);
               if(used != v->size())
                  throw std::invalid_argument("trailing");
               return d;
               }
            catch(const std::exception&)
               {
               throw ConfigError(key, "expected a number");
               }
            }
         if(!m_file.contains(key))
            return std::nullopt;
         const json& v = m_file.at(key);
         if(!v.is_number())
            throw ConfigError(key, "expected a number");
         return v.get<double>();
         }
   private:
      const json& m_file;
      const EnvLookup& m_env;
   };

bool is_integer(double v)
   {
   return std::isfinite(v) && std::floor(v) == v;
   }

}

Config load_config(const std::optional<std::filesystem::path>& file, const EnvLookup& env)
   {
   json doc = json::object();
   if(file)
      {
      Bytes raw;
      try
         {
         raw = read_file(*file);
         }
      catch(const Error&)
         {
         throw ConfigError("config", "cannot read " + file->string());
         }
      const std::string text = to_string(raw);
      if(text.find_first_not_of(" \t\r\n") != std::string::npos)
         {
         doc = json::parse(text, nullptr, false);
         if(doc.is_discarded() || !doc.is_object())
            throw ConfigError("config", "not a JSON object");
         }
      }

   const Source src(doc, env);
   Config cfg;

   if(auto v = src.text("store_path", "FOURFA_STORE"); v && !v->empty())
      cfg.store_path = *v;
   else
      throw ConfigError("store_path", "required");

   if(auto v = src.text("sms_endpoint", "FOURFA_SMS_ENDPOINT"))
      cfg.sms_endpoint = *v;
   if(cfg.sms_endpoint != "mock" &&
      cfg.sms_endpoint.rfind("http://", 0) != 0 && cfg.sms_endpoint.rfind("https://", 0) != 0)
      throw ConfigError("sms_endpoint", "expected \"mock\" or an http(s) URL");

   if(auto v = src.text("sms_token", "FOURFA_SMS_TOKEN"))
      cfg.sms_token = *v;
   if(cfg.sms_endpoint != "mock" && cfg.sms_token.empty())
      throw ConfigError("sms_token", "required for an HTTP endpoint");

   if(auto v = src.number("geofence_radius", "FOURFA_GEOFENCE_M"))
      {
      if(!std::isfinite(*v) || *v <= 0)
         throw ConfigError("geofence_radius", "must be positive");
      cfg.geofence_radius_m = *v;
      }

   if(auto v = src.number("otp_ttl", "FOURFA_OTP_TTL_S"))
      {
      if(!is_integer(*v) || *v <= 0 || *v > 86400)
         throw ConfigError("otp_ttl", "must be a positive whole number of seconds");
      cfg.otp_ttl = std::chrono::seconds(static_cast<long>(*v));
      }

   if(auto v = src.number("otp_digits", "FOURFA_OTP_DIGITS"))
      {
      if(*v != 4 && *v != 6)
         throw ConfigError("otp_digits", "must be 4 or 6");
      cfg.otp_digits = static_cast<int>(*v);
      }

   if(auto v = src.number("face_threshold", "FOURFA_FACE_THRESHOLD"))
      {
      if(!(*v > 0 && *v <= 1))
         throw ConfigError("face_threshold", "must be in (0, 1]");
      cfg.face_threshold = *v;
      }

   if(auto v = src.text("mac_pass", "FOURFA_MAC_PASS"); v && !v->empty())
      cfg.mac_pass = *v;
   else
      throw ConfigError("mac_pass", "required");

   if(auto v = src.text("key_pass", "FOURFA_KEY_PASS"); v && !v->empty())
      cfg.key_pass = *v;
   else
      throw ConfigError("key_pass", "required");

   if(auto v = src.text("listen_addr", "FOURFA_LISTEN"))
      cfg.listen_addr = *v;
   cfg.listen_endpoint();

   return cfg;
   }

}
