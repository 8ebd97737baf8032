#include <fourfa/app/http_sms.hpp>
#include <fourfa/errors.hpp>

#include <httplib.h>
#include <json.hpp>

namespace fourfa {

HttpSmsTransport::HttpSmsTransport(std::string endpoint, std::string token, std::chrono::milliseconds timeout) :
   m_token(std::move(token)), m_timeout(timeout)
   {
   const auto scheme_end = endpoint.find("://");
   if(scheme_end == std::string::npos)
      throw std::invalid_argument("SMS endpoint must be an absolute URL");
   const auto path_start = endpoint.find('/', scheme_end + 3);
   if(path_start == std::string::npos)
      {
      m_origin = endpoint;
      m_path = "/";
      }
   else
      {
      m_origin = endpoint.substr(0, path_start);
      m_path = endpoint.substr(path_start);
      }
   }

std::string HttpSmsTransport::send(std::string_view destination, std::string_view body)
   {
   httplib::Client client(m_origin);
   client.set_connection_timeout(m_timeout);
   client.set_read_timeout(m_timeout);
   client.set_write_timeout(m_timeout);

   const nlohmann::json req = {{"to", destination}, {"body", body}};
   const httplib::Headers headers = {{"Authorization", "Bearer " + m_token}};

   auto res = client.Post(m_path, headers, req.dump(), "application/json");
   if(!res)
      throw TransportError("SMS API unreachable: " + httplib::to_string(res.error()));
   if(res->status < 200 || res->status >= 300)
      throw TransportError("SMS API rejected message with HTTP " + std::to_string(res->status));

   const auto reply = nlohmann::json::parse(res->body, nullptr, false);
   if(reply.is_object())
      {
      for(const char* key : {"id", "sid"})
         {
         if(reply.contains(key) && reply.at(key).is_string())
            return reply.at(key).get<std::string>();
         }
      }
   return "http-" + std::to_string(res->status);
   }

}
