#pragma once

#include <chrono>
#include <string>

#include <fourfa/factors/sms.hpp>

namespace fourfa {

/// Posts {"to": destination, "body": body} as JSON to a third-party SMS API
/// with "Authorization: Bearer <token>". A 2xx reply is a delivery; the
/// delivery id is the reply's "id" (or "sid") field when present.
class HttpSmsTransport final : public SmsTransport
   {
   public:
      HttpSmsTransport(std::string endpoint, std::string token,
                       std::chrono::milliseconds timeout = std::chrono::seconds(10));

      std::string send(std::string_view destination, std::string_view body) override;
   private:
      std::string m_origin;   // scheme://host[:port]
      std::string m_path;
      std::string m_token;
      std::chrono::milliseconds m_timeout;
   };

}
