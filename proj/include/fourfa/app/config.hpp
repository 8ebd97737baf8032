#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <fourfa/flow/session.hpp>
#include <fourfa/merchant/verifier.hpp>

namespace fourfa {

/// Gateway configuration. File keys and FOURFA_* environment variables:
///
///   store_path       FOURFA_STORE            required
///   sms_endpoint     FOURFA_SMS_ENDPOINT     "mock" (default) or http(s) URL
///   sms_token        FOURFA_SMS_TOKEN        required for a URL endpoint
///   geofence_radius  FOURFA_GEOFENCE_M       500
///   otp_ttl          FOURFA_OTP_TTL_S        120
///   otp_digits       FOURFA_OTP_DIGITS       6
///   face_threshold   FOURFA_FACE_THRESHOLD   0.85
///   mac_pass         FOURFA_MAC_PASS         required
///   key_pass         FOURFA_KEY_PASS         required
///   listen_addr      FOURFA_LISTEN           127.0.0.1:8080
struct Config
   {
   std::filesystem::path store_path;
   std::string sms_endpoint = "mock";
   std::string sms_token;
   double geofence_radius_m = default_geofence_m;
   std::chrono::seconds otp_ttl = default_otp_ttl;
   int otp_digits = default_otp_digits;
   double face_threshold = default_face_threshold;
   std::string mac_pass;
   std::string key_pass;
   std::string listen_addr = "127.0.0.1:8080";

   FlowSettings flow_settings() const;
   MerchantPolicy merchant_policy() const;

   /// Splits listen_addr into host and port.
   std::pair<std::string, int> listen_endpoint() const;
   };

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

/// Reads a JSON object from `file` (an empty file counts as {}), applies
/// environment overrides, fills defaults and validates. Throws ConfigError
/// naming the first invalid field; secret values never appear in messages.
Config load_config(const std::optional<std::filesystem::path>& file, const EnvLookup& env = process_env);

}
