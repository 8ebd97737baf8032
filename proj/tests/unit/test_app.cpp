#include <gtest/gtest.h>

#include <fourfa/app/config.hpp>
#include <fourfa/app/file_user_store.hpp>
#include <fourfa/app/gateway.hpp>
#include <fourfa/app/http_sms.hpp>
#include <fourfa/image/png.hpp>

#include "support/flow_harness.hpp"

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <map>

using namespace fourfa;
using namespace fourfa::test;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir
   {
   fs::path path;

   TempDir()
      {
      static std::atomic<int> counter{0};
      path = fs::temp_directory_path() /
             ("fourfa-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
      fs::create_directories(path);
      }

   ~TempDir() { fs::remove_all(path); }

   fs::path write(const std::string& name, std::string_view text) const
      {
      write_file(path / name, as_bytes(text));
      return path / name;
      }
   };

EnvLookup env_of(std::map<std::string, std::string> vars)
   {
   return [vars = std::move(vars)](const std::string& name) -> std::optional<std::string> {
      auto it = vars.find(name);
      if(it == vars.end())
         return std::nullopt;
      return it->second;
   };
   }

const EnvLookup no_env = env_of({});

const std::string minimal = R"({"store_path": "users.jsonl", "mac_pass": "m-pass", "key_pass": "k-pass"})";

std::string config_error_field(const TempDir& dir, const std::string& text, const EnvLookup& env = no_env)
   {
   try
      {
      load_config(dir.write("c.json", text), env);
      }
   catch(const ConfigError& e)
      {
      return e.field();
      }
   return "";
   }

}

TEST(Config, DefaultsFromMinimalFile)
   {
   TempDir dir;
   const Config c = load_config(dir.write("c.json", minimal), no_env);
   EXPECT_EQ(c.store_path, "users.jsonl");
   EXPECT_EQ(c.sms_endpoint, "mock");
   EXPECT_EQ(c.geofence_radius_m, 500.0);
   EXPECT_EQ(c.otp_ttl, std::chrono::seconds(120));
   EXPECT_EQ(c.otp_digits, 6);
   EXPECT_EQ(c.face_threshold, 0.85);
   EXPECT_EQ(c.listen_endpoint(), std::make_pair(std::string("127.0.0.1"), 8080));

   const FlowSettings fs = c.flow_settings();
   EXPECT_EQ(fs.otp_digits, 6);
   EXPECT_EQ(fs.geofence_radius_m, 500.0);
   EXPECT_EQ(c.merchant_policy().face_threshold, 0.85);
   }

TEST(Config, EnvironmentOverridesFile)
   {
   TempDir dir;
   const Config c = load_config(dir.write("c.json", minimal),
                                env_of({{"FOURFA_OTP_DIGITS", "4"}, {"FOURFA_GEOFENCE_M", "250.5"}}));
   EXPECT_EQ(c.otp_digits, 4);
   EXPECT_EQ(c.geofence_radius_m, 250.5);

   const Config e = load_config(dir.write("empty.json", ""),
                                env_of({{"FOURFA_STORE", "/tmp/u"}, {"FOURFA_MAC_PASS", "a"}, {"FOURFA_KEY_PASS", "b"}}));
   EXPECT_EQ(e.store_path, "/tmp/u");
   }

TEST(Config, InvalidFieldsAreNamed)
   {
   TempDir dir;
   auto with = [&](const std::string& extra) { return minimal.substr(0, minimal.size() - 1) + ", " + extra + "}"; };

   EXPECT_EQ(config_error_field(dir, with(R"("geofence_radius": -5)")), "geofence_radius");
   EXPECT_EQ(config_error_field(dir, with(R"("otp_digits": 5)")), "otp_digits");
   EXPECT_EQ(config_error_field(dir, with(R"("otp_ttl": 0)")), "otp_ttl");
   EXPECT_EQ(config_error_field(dir, with(R"("face_threshold": 1.5)")), "face_threshold");
   EXPECT_EQ(config_error_field(dir, with(R"("sms_endpoint": "ftp://x")")), "sms_endpoint");
   EXPECT_EQ(config_error_field(dir, with(R"("sms_endpoint": "https://sms.example")")), "sms_token");
   EXPECT_EQ(config_error_field(dir, with(R"("listen_addr": "nowhere")")), "listen_addr");
   EXPECT_EQ(config_error_field(dir, R"({"mac_pass": "a", "key_pass": "b"})"), "store_path");
   EXPECT_EQ(config_error_field(dir, R"({"store_path": "s", "key_pass": "b"})"), "mac_pass");
   EXPECT_EQ(config_error_field(dir, R"({"store_path": "s", "mac_pass": "a"})"), "key_pass");
   EXPECT_EQ(config_error_field(dir, "[1, 2]"), "config");
   EXPECT_THROW(load_config(dir.path / "missing.json", no_env), ConfigError);
   }

TEST(Config, SecretsNeverAppearInErrors)
   {
   TempDir dir;
   const std::string text =
      R"({"store_path": "s", "mac_pass": "mac-SECRET", "key_pass": "key-SECRET", "sms_token": "tok-SECRET", "listen_addr": "bad"})";
   try
      {
      load_config(dir.write("c.json", text), env_of({{"FOURFA_SMS_ENDPOINT", "https://sms.example"}}));
      FAIL() << "expected ConfigError";
      }
   catch(const ConfigError& e)
      {
      EXPECT_EQ(e.field(), "listen_addr");
      EXPECT_EQ(std::string(e.what()).find("SECRET"), std::string::npos) << e.what();
      }

   try
      {
      load_config(dir.write("c.json", minimal), env_of({{"FOURFA_OTP_DIGITS", "SECRET"}}));
      FAIL() << "expected ConfigError";
      }
   catch(const ConfigError& e)
      {
      EXPECT_EQ(std::string(e.what()).find("SECRET"), std::string::npos) << e.what();
      }
   }

TEST(FileUserStore, LineCodecRoundtrips)
   {
   Bank bank;
   const std::string line = encode_user_line(bank.alice);
   EXPECT_EQ(line.find('\n'), std::string::npos);
   EXPECT_EQ(decode_user_line(line), bank.alice);
   EXPECT_THROW(decode_user_line("{}"), std::invalid_argument);
   EXPECT_THROW(decode_user_line("not json"), std::invalid_argument);
   }

TEST(FileUserStore, PersistsAcrossRestart)
   {
   TempDir dir;
   Bank bank;
   const fs::path file = dir.path / "users.jsonl";
   UserRecord bob = enroll_user("bob", as_bytes("pw-bob"), synthetic_face(2), GeoPoint{51.5, -0.12},
                                bank.rng.fixed<Salt128>());
   {
      FileUserStore store(file);
      EXPECT_EQ(store.size(), 0u);
      EXPECT_FALSE(store.get("alice"));
      store.put(bank.alice);
      store.put(bob);
      EXPECT_EQ(store.get("alice"), bank.alice);
   }
   const auto size_before = fs::file_size(file);
   {
      FileUserStore store(file);
      EXPECT_EQ(store.size(), 2u);
      EXPECT_EQ(store.get("alice"), bank.alice);
      EXPECT_EQ(store.get("bob"), bob);

      store.put(bank.alice);
      EXPECT_EQ(fs::file_size(file), size_before);

      UserRecord moved = bank.alice;
      moved.home = GeoPoint{28.6139, 77.2090};
      store.put(moved);
      EXPECT_EQ(store.get("alice")->home, moved.home);
   }
   FileUserStore reopened(file);
   EXPECT_EQ(reopened.size(), 2u);
   EXPECT_EQ(reopened.get("alice")->home, (GeoPoint{28.6139, 77.2090}));
   EXPECT_EQ(reopened.get("bob"), bob);
   }

TEST(FileUserStore, CorruptLineIsReportedByNumber)
   {
   TempDir dir;
   Bank bank;
   const fs::path file = dir.write("users.jsonl", encode_user_line(bank.alice) + "\n{\"username\": \"x\"}\n");
   try
      {
      FileUserStore store(file);
      FAIL() << "expected StorageError";
      }
   catch(const StorageError& e)
      {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
      }
   }

TEST(HttpSms, PostsJsonWithBearerToken)
   {
   httplib::Server api;
   std::string auth, body;
   api.Post("/v1/send", [&](const httplib::Request& req, httplib::Response& res) {
      auth = req.get_header_value("Authorization");
      body = req.body;
      res.set_content(R"({"id": "msg-42"})", "application/json");
   });
   api.Post("/v1/fail", [](const httplib::Request&, httplib::Response& res) { res.status = 503; });
   const int port = api.bind_to_any_port("127.0.0.1");
   std::thread t([&] { api.listen_after_bind(); });
   api.wait_until_ready();

   const std::string base = "http://127.0.0.1:" + std::to_string(port);
   HttpSmsTransport sms(base + "/v1/send", "tok-SECRET");
   EXPECT_EQ(sms.send("+15550100", otp_message_body("123456")), "msg-42");
   EXPECT_EQ(auth, "Bearer tok-SECRET");
   const json sent = json::parse(body);
   EXPECT_EQ(sent.at("to"), "+15550100");
   EXPECT_EQ(extract_otp_code(sent.at("body").get<std::string>()), "123456");

   HttpSmsTransport failing(base + "/v1/fail", "tok-SECRET");
   try
      {
      failing.send("+15550100", "x");
      FAIL() << "expected TransportError";
      }
   catch(const TransportError& e)
      {
      EXPECT_EQ(std::string(e.what()).find("SECRET"), std::string::npos) << e.what();
      }

   api.stop();
   t.join();

   HttpSmsTransport unreachable(base + "/v1/send", "tok", std::chrono::milliseconds(500));
   EXPECT_THROW(unreachable.send("+15550100", "x"), TransportError);
   }

namespace {

struct GatewayFixture
   {
   Bank bank;
   MockSmsTransport sms;
   std::atomic<long> clock_offset{0};
   Config config;
   std::unique_ptr<GatewayServer> server;
   std::unique_ptr<httplib::Client> client;

   GatewayFixture()
      {
      config.mac_pass = "mac";
      config.key_pass = "key";
      server = std::make_unique<GatewayServer>(config, bank.store, sms, bank.rng,
                                               [this] { return T0 + std::chrono::seconds(clock_offset.load()); });
      const int port = server->start("127.0.0.1", 0);
      client = std::make_unique<httplib::Client>("127.0.0.1", port);
      }

   httplib::Result post_json(const std::string& path, const json& j)
      {
      return client->Post(path, j.dump(), "application/json");
      }

   httplib::Result post_png(const std::string& path, const RasterImage& img)
      {
      const Bytes png = encode_png(img);
      return client->Post(path, std::string(png.begin(), png.end()), "image/png");
      }

   static json body(const httplib::Result& r) { return json::parse(r->body); }

   std::string open_session()
      {
      auto r = post_json("/session", {{"username", "alice"}});
      return body(r).at("session_id").get<std::string>();
      }
   };

}

TEST(Gateway, FullFlowMatchesDirectStateMachine)
   {
   GatewayFixture gw;
   std::vector<std::string> http_states;

   auto r = gw.post_json("/session", {{"username", "alice"}});
   ASSERT_TRUE(r);
   ASSERT_EQ(r->status, 201);
   const std::string id = GatewayFixture::body(r).at("session_id");
   http_states.push_back(GatewayFixture::body(r).at("state"));

   auto step = [&](httplib::Result res) {
      ASSERT_TRUE(res);
      ASSERT_EQ(res->status, 200) << res->body;
      http_states.push_back(GatewayFixture::body(res).at("state"));
   };
   step(gw.post_json("/session/" + id + "/password", {{"password", gw.bank.password}}));
   step(gw.client->Post("/session/" + id + "/otp/request"));
   step(gw.post_json("/session/" + id + "/otp/verify", {{"code", *gw.sms.last_code_for(id)}}));
   step(gw.post_png("/session/" + id + "/face", gw.bank.good_face()));
   {
      auto mid = gw.post_json("/session/" + id + "/location", {{"lat", DEHRADUN.lat}, {"lon", DEHRADUN.lon}});
      ASSERT_TRUE(mid);
      http_states.push_back(GatewayFixture::body(mid).at("state"));
   }

   auto fin = gw.post_png("/session/" + id + "/finalize", random_cover(gw.bank.rng, 96, 96));
   ASSERT_TRUE(fin);
   ASSERT_EQ(fin->status, 200) << fin->body;
   EXPECT_EQ(fin->get_header_value("Content-Type"), "image/png");
   EXPECT_EQ(gw.server->sessions().snapshot(id).state, SessionState::Completed);

   Bank direct;
   std::vector<std::string> direct_states;
   Session s = begin_session("alice", T0, direct.rng);
   direct_states.emplace_back(to_string(s.state));
   const FactorEvent events[] = {PasswordSubmitted{direct.password}, OtpRequested{}};
   for(const auto& ev : events)
      {
      s = apply_event(s, ev, direct.ctx(), T0);
      direct_states.emplace_back(to_string(s.state));
      }
   s = apply_event(s, OtpSubmitted{direct.code_for(s)}, direct.ctx(), T0);
   direct_states.emplace_back(to_string(s.state));
   s = apply_event(s, FaceSubmitted{direct.good_face()}, direct.ctx(), T0);
   direct_states.emplace_back(to_string(s.state));
   s = apply_event(s, LocationReported{DEHRADUN}, direct.ctx(), T0);
   direct_states.emplace_back(to_string(s.state));
   EXPECT_EQ(http_states, direct_states);

   const Bytes stego(fin->body.begin(), fin->body.end());
   const RasterImage stego_img = decode_png(stego);
   auto v = gw.post_png("/merchant/verify", stego_img);
   ASSERT_TRUE(v);
   EXPECT_EQ(GatewayFixture::body(v), (json{{"outcome", "approve"}, {"reason", "ok"}}));

   auto again = gw.post_png("/session/" + id + "/finalize", random_cover(gw.bank.rng, 96, 96));
   EXPECT_EQ(again->status, 410);
   EXPECT_EQ(GatewayFixture::body(again).at("error"), "terminal-session");
   }

TEST(Gateway, ParallelChecksReportProgressAndDenials)
   {
   GatewayFixture gw;
   const std::string id = gw.open_session();
   gw.post_json("/session/" + id + "/password", {{"password", gw.bank.password}});
   gw.client->Post("/session/" + id + "/otp/request");
   auto r = gw.post_json("/session/" + id + "/otp/verify", {{"code", *gw.sms.last_code_for(id)}});
   EXPECT_EQ(GatewayFixture::body(r),
             (json{{"state", "ParallelChecks"}, {"face_done", false}, {"geo_done", false}}));

   const GeoPoint far = gw.bank.offset_location(600);
   r = gw.post_json("/session/" + id + "/location", {{"lat", far.lat}, {"lon", far.lon}});
   EXPECT_EQ(GatewayFixture::body(r), (json{{"state", "Denied"}, {"reason", "geolocation"}}));

   const std::string id2 = gw.open_session();
   r = gw.post_json("/session/" + id2 + "/password", {{"password", "nope"}});
   EXPECT_EQ(GatewayFixture::body(r), (json{{"state", "Denied"}, {"reason", "password"}}));
   }

TEST(Gateway, ErrorsMapToStatusCodes)
   {
   GatewayFixture gw;
   auto expect_error = [](const httplib::Result& r, int status, const std::string& kind) {
      ASSERT_TRUE(r);
      EXPECT_EQ(r->status, status) << r->body;
      EXPECT_EQ(GatewayFixture::body(r).at("error"), kind);
   };

   expect_error(gw.post_json("/session", {{"user", "alice"}}), 400, "bad-request");
   expect_error(gw.client->Post("/session", "{", "application/json"), 400, "bad-request");
   expect_error(gw.post_json("/session", {{"username", "a\nb"}}), 400, "invalid-username");
   expect_error(gw.client->Post("/session/nope/otp/request"), 404, "unknown-session");

   const std::string id = gw.open_session();
   expect_error(gw.client->Post("/session/" + id + "/otp/request"), 409, "invalid-transition");
   expect_error(gw.client->Post("/session/" + id + "/face", "not a png", "image/png"), 400, "bad-image");

   gw.post_json("/session/" + id + "/password", {{"password", gw.bank.password}});
   gw.sms.set_failing(true);
   expect_error(gw.client->Post("/session/" + id + "/otp/request"), 502, "transport");
   gw.sms.set_failing(false);
   gw.client->Post("/session/" + id + "/otp/request");
   gw.post_json("/session/" + id + "/otp/verify", {{"code", *gw.sms.last_code_for(id)}});
   expect_error(gw.post_json("/session/" + id + "/location", {{"lat", 95.0}, {"lon", 0.0}}), 400, "invalid-location");
   expect_error(gw.post_png("/session/" + id + "/face", RasterImage(32, 32, 3)), 400, "image-too-small");
   expect_error(gw.post_png("/session/" + id + "/finalize", RasterImage(96, 96, 3)), 409, "not-authenticated");

   gw.post_png("/session/" + id + "/face", gw.bank.good_face());
   gw.post_json("/session/" + id + "/location", {{"lat", DEHRADUN.lat}, {"lon", DEHRADUN.lon}});
   expect_error(gw.post_png("/session/" + id + "/finalize", RasterImage(16, 16, 3)), 413, "capacity");

   gw.clock_offset = 16 * 60;
   expect_error(gw.post_png("/session/" + id + "/finalize", RasterImage(96, 96, 3)), 410, "terminal-session");
   }

TEST(Gateway, MerchantVerifyRejectsPlainImages)
   {
   GatewayFixture gw;
   auto r = gw.post_png("/merchant/verify", random_cover(gw.bank.rng, 64, 64));
   EXPECT_EQ(GatewayFixture::body(r), (json{{"outcome", "deny"}, {"reason", "no-envelope"}}));
   }

TEST(Gateway, LocationUpdateChangesHome)
   {
   GatewayFixture gw;
   auto r = gw.client->Put("/users/alice/location", json{{"lat", 28.6139}, {"lon", 77.2090}}.dump(), "application/json");
   ASSERT_TRUE(r);
   EXPECT_EQ(r->status, 204);
   EXPECT_EQ(gw.bank.store.get("alice")->home, (GeoPoint{28.6139, 77.2090}));

   r = gw.client->Put("/users/nobody/location", json{{"lat", 1.0}, {"lon", 1.0}}.dump(), "application/json");
   EXPECT_EQ(r->status, 404);
   EXPECT_EQ(GatewayFixture::body(r).at("error"), "unknown-user");

   r = gw.client->Put("/users/alice/location", json{{"lat", 1.0}}.dump(), "application/json");
   EXPECT_EQ(r->status, 400);
   }
