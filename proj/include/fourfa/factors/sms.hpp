#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fourfa {

/// Out-of-band delivery of one-time codes.
class SmsTransport
   {
   public:
      virtual ~SmsTransport() = default;

      /// Returns a delivery id; throws TransportError on failure.
      virtual std::string send(std::string_view destination, std::string_view body) = 0;
   };

/// Records every message in memory and, when a log path is given, appends a
/// tab-separated line "id destination body" to it. Ids are mock-000001, ...
class MockSmsTransport final : public SmsTransport
   {
   public:
      struct Message
         {
         std::string id;
         std::string destination;
         std::string body;
         };

      MockSmsTransport() = default;
      explicit MockSmsTransport(std::filesystem::path log) : m_log(std::move(log)) {}

      std::string send(std::string_view destination, std::string_view body) override;

      /// While set, every send throws TransportError.
      void set_failing(bool failing);

      std::vector<Message> messages() const;

      /// Digits of the most recent code sent to destination.
      std::optional<std::string> last_code_for(std::string_view destination) const;
   private:
      mutable std::mutex m_mutex;
      std::optional<std::filesystem::path> m_log;
      std::vector<Message> m_messages;
      bool m_failing = false;
   };

/// Text of the OTP message; the code is the only digit run in it.
std::string otp_message_body(std::string_view code);

/// Inverse of otp_message_body.
std::optional<std::string> extract_otp_code(std::string_view body);

}
