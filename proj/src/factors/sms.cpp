#include <fourfa/factors/sms.hpp>
#include <fourfa/errors.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>

namespace fourfa {

std::string otp_message_body(std::string_view code)
   {
   return "Your one-time transaction code: " + std::string(code);
   }

std::optional<std::string> extract_otp_code(std::string_view body)
   {
   const auto first = body.find_first_of("0123456789");
   if(first == std::string_view::npos)
      return std::nullopt;
   std::size_t last = first;
   while(last < body.size() && std::isdigit(static_cast<unsigned char>(body[last])))
      ++last;
   return std::string(body.substr(first, last - first));
   }

std::string MockSmsTransport::send(std::string_view destination, std::string_view body)
   {
   std::lock_guard lock(m_mutex);
   if(m_failing)
      throw TransportError("mock transport is failing");

   char id[32];
   std::snprintf(id, sizeof(id), "mock-%06zu", m_messages.size() + 1);

   if(m_log)
      {
      std::ofstream out(*m_log, std::ios::app);
      out << id << '\t' << destination << '\t' << body << '\n';
      if(!out.flush())
         throw TransportError("mock transport log not writable");
      }

   m_messages.push_back({id, std::string(destination), std::string(body)});
   return id;
   }

void MockSmsTransport::set_failing(bool failing)
   {
   std::lock_guard lock(m_mutex);
   m_failing = failing;
   }

std::vector<MockSmsTransport::Message> MockSmsTransport::messages() const
   {
   std::lock_guard lock(m_mutex);
   return m_messages;
   }

std::optional<std::string> MockSmsTransport::last_code_for(std::string_view destination) const
   {
   std::lock_guard lock(m_mutex);
   for(auto it = m_messages.rbegin(); it != m_messages.rend(); ++it)
      {
      if(it->destination == destination)
         return extract_otp_code(it->body);
      }
   return std::nullopt;
   }

}
