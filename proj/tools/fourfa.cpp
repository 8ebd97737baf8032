#include <fourfa/app/config.hpp>
#include <fourfa/app/file_user_store.hpp>
#include <fourfa/app/gateway.hpp>
#include <fourfa/app/http_sms.hpp>
#include <fourfa/errors.hpp>
#include <fourfa/flow/registry.hpp>
#include <fourfa/image/png.hpp>
#include <fourfa/merchant/verifier.hpp>
#include <fourfa/stego/envelope.hpp>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <csignal>
#include <cstdio>
#include <iostream>

namespace {

using namespace fourfa;
namespace fs = std::filesystem;

enum ExitCode : int
   {
   EXIT_OK = 0,
   EXIT_FAILURE_GENERIC = 1,
   EXIT_USAGE = 2,
   EXIT_CAPACITY = 3,
   EXIT_TAMPER = 4,
   EXIT_DENIED = 5,
   };

fs::path stego_output_path(const fs::path& cover)
   {
   fs::path out = cover;
   out.replace_filename(cover.stem().string() + ".stego.png");
   return out;
   }

std::string read_line(std::istream& in)
   {
   std::string line;
   std::getline(in, line);
   if(!line.empty() && line.back() == '\r')
      line.pop_back();
   return line;
   }

int cmd_hide(const std::string& mac, const std::string& key, const fs::path& secret, const fs::path& cover_path)
   {
   const Bytes data = read_file(secret);
   const RasterImage cover = read_png_file(cover_path);
   SystemRandom rng;
   try
      {
      const RasterImage stego = seal_envelope(cover, data, as_bytes(mac), as_bytes(key), rng.fixed<Block64>());
      const fs::path out = stego_output_path(cover_path);
      write_png_file(out, stego);
      std::cerr << "wrote " << out.string() << "\n";
      return EXIT_OK;
      }
   catch(const CapacityExceeded& e)
      {
      std::cerr << "capacity exceeded: " << e.what() << "\n";
      return EXIT_CAPACITY;
      }
   }

int cmd_open(const std::string& mac, const std::string& key, const fs::path& image_path)
   {
   const RasterImage image = read_png_file(image_path);
   try
      {
      const Bytes data = open_envelope(image, as_bytes(mac), as_bytes(key));
      std::fwrite(data.data(), 1, data.size(), stdout);
      std::fflush(stdout);
      return EXIT_OK;
      }
   catch(const BadMagic&)
      {
      std::cerr << "no envelope found in image\n";
      return EXIT_TAMPER;
      }
   catch(const EnvelopeError&)
      {
      std::cerr << "tamper detected: envelope authentication failed\n";
      return EXIT_TAMPER;
      }
   }

struct StoreOptions
   {
   std::string store;
   std::string config;

   fs::path resolve() const
      {
      if(!config.empty())
         return load_config(fs::path(config)).store_path;
      if(!store.empty())
         return store;
      throw ConfigError("store_path", "pass --store, --config or set FOURFA_STORE");
      }
   };

int cmd_enroll(const StoreOptions& so, const std::string& user, const fs::path& face, double lat, double lon)
   {
   const std::string password = read_line(std::cin);
   FileUserStore store(so.resolve());
   SystemRandom rng;
   const UserRecord rec = enroll_user(user, as_bytes(password), read_png_file(face),
                                      GeoPoint::make(lat, lon), rng.fixed<Salt128>());
   store.put(rec);
   std::cerr << "enrolled " << user << "\n";
   return EXIT_OK;
   }

RasterImage noise_cover(RandomSource& rng)
   {
   RasterImage img(128, 128, 3);
   rng.fill(img.samples());
   return img;
   }

int cmd_demo(const StoreOptions& so, const std::string& user, const fs::path& face, double lat, double lon,
             const std::string& cover_path, const std::string& out_path)
   {
   SystemRandom rng;
   std::string mac_pass, key_pass;
   FlowSettings settings;
   MerchantPolicy policy;
   fs::path store_path;
   if(!so.config.empty())
      {
      const Config cfg = load_config(fs::path(so.config));
      mac_pass = cfg.mac_pass;
      key_pass = cfg.key_pass;
      settings = cfg.flow_settings();
      policy = cfg.merchant_policy();
      store_path = cfg.store_path;
      }
   else
      {
      store_path = so.resolve();
      mac_pass = hex_encode(rng.bytes(16));
      key_pass = hex_encode(rng.bytes(16));
      }

   FileUserStore store(store_path);
   MockSmsTransport sms;
   FlowContext ctx{store, sms, rng, settings};
   SessionRegistry registry(settings.session_lifetime);

   const Session started = registry.create(user, system_now(), rng);
   const std::string& id = started.id;

   auto report = [](const Session& s) {
      std::cout << "  state: " << to_string(s.state);
      if(s.state == SessionState::Denied)
         std::cout << " (" << to_string(s.denied) << ")";
      std::cout << "\n";
      return s.state != SessionState::Denied;
   };

   std::cout << "Password: " << std::flush;
   if(!report(registry.apply(id, PasswordSubmitted{read_line(std::cin)}, ctx, system_now())))
      return EXIT_DENIED;

   registry.apply(id, OtpRequested{}, ctx, system_now());
   const auto msgs = sms.messages();
   std::cout << "[mock SMS " << msgs.back().id << "] " << msgs.back().body << "\n";
   std::cout << "Code: " << std::flush;
   if(!report(registry.apply(id, OtpSubmitted{read_line(std::cin)}, ctx, system_now())))
      return EXIT_DENIED;

   if(!report(registry.apply(id, FaceSubmitted{read_png_file(face)}, ctx, system_now())))
      return EXIT_DENIED;
   if(!report(registry.apply(id, LocationReported{GeoPoint::make(lat, lon)}, ctx, system_now())))
      return EXIT_DENIED;

   const RasterImage cover = cover_path.empty() ? noise_cover(rng) : read_png_file(cover_path);
   const RasterImage stego = registry.finalize(id, cover, as_bytes(mac_pass), as_bytes(key_pass),
                                               rng.fixed<Block64>(), system_now());
   report(registry.snapshot(id));
   if(!out_path.empty())
      write_png_file(out_path, stego);

   const Decision d = process_envelope(stego, as_bytes(mac_pass), as_bytes(key_pass), store, policy);
   std::cout << "merchant decision: " << to_string(d.outcome) << " (" << to_string(d.reason) << ")\n";
   return d.outcome == Outcome::Approve ? EXIT_OK : EXIT_DENIED;
   }

GatewayServer* g_server = nullptr;

extern "C" void on_signal(int)
   {
   if(g_server)
      g_server->stop();
   }

int cmd_serve(const std::string& config_path)
   {
   const Config cfg = load_config(fs::path(config_path));
   FileUserStore store(cfg.store_path);
   SystemRandom rng;

   std::unique_ptr<SmsTransport> sms;
   if(cfg.sms_endpoint == "mock")
      sms = std::make_unique<MockSmsTransport>(fs::path(cfg.store_path.string() + ".outbox"));
   else
      sms = std::make_unique<HttpSmsTransport>(cfg.sms_endpoint, cfg.sms_token);

   GatewayServer server(cfg, store, *sms, rng);
   g_server = &server;
   std::signal(SIGINT, on_signal);
   std::signal(SIGTERM, on_signal);
   server.listen();
   g_server = nullptr;
   return EXIT_OK;
   }

}

int main(int argc, char** argv)
   {
   CLI::App app{"Four-factor transaction gateway and LSB envelope tool"};
   app.require_subcommand(1);

   std::string mac, key;
   std::string secret, cover, image;

   auto* hide = app.add_subcommand("hide", "Encrypt a file into the pixels of a PNG cover");
   hide->add_option("-m", mac, "MAC passphrase")->required();
   hide->add_option("-k", key, "Encryption passphrase")->required();
   hide->add_option("secret", secret, "File to hide")->required()->check(CLI::ExistingFile);
   hide->add_option("cover", cover, "Cover PNG")->required()->check(CLI::ExistingFile);

   auto* open = app.add_subcommand("open", "Recover the hidden file from a stego PNG to stdout");
   open->add_option("-m", mac, "MAC passphrase")->required();
   open->add_option("-k", key, "Encryption passphrase")->required();
   open->add_option("image", image, "Stego PNG")->required()->check(CLI::ExistingFile);

   StoreOptions so;
   std::string user, face, out_path, config;
   double lat = 0, lon = 0;
   bool password_stdin = false;

   auto* enroll = app.add_subcommand("enroll", "Enroll a user (password read from stdin)");
   enroll->add_option("--user", user)->required();
   enroll->add_flag("--password-stdin", password_stdin)->required();
   enroll->add_option("--face", face, "Face PNG")->required()->check(CLI::ExistingFile);
   enroll->add_option("--lat", lat)->required();
   enroll->add_option("--lon", lon)->required();
   enroll->add_option("--store", so.store, "User store file")->envname("FOURFA_STORE");
   enroll->add_option("--config", so.config, "Config file");

   auto* demo = app.add_subcommand("demo", "Walk one transaction through all four factors");
   demo->add_option("--user", user)->required();
   demo->add_option("--face", face, "Face PNG")->required()->check(CLI::ExistingFile);
   demo->add_option("--lat", lat)->required();
   demo->add_option("--lon", lon)->required();
   demo->add_option("--cover", cover, "Cover PNG (default: random noise)")->check(CLI::ExistingFile);
   demo->add_option("--out", out_path, "Write the stego PNG here");
   demo->add_option("--store", so.store, "User store file")->envname("FOURFA_STORE");
   demo->add_option("--config", so.config, "Config file");

   auto* serve = app.add_subcommand("serve", "Run the HTTP gateway");
   serve->add_option("--config", config, "Config file")->required()->check(CLI::ExistingFile);

   try
      {
      app.parse(argc, argv);
      }
   catch(const CLI::CallForHelp& e)
      {
      return app.exit(e);
      }
   catch(const CLI::CallForAllHelp& e)
      {
      return app.exit(e);
      }
   catch(const CLI::ParseError& e)
      {
      app.exit(e);
      return EXIT_USAGE;
      }

   try
      {
      if(*hide)
         return cmd_hide(mac, key, secret, cover);
      if(*open)
         return cmd_open(mac, key, image);
      if(*enroll)
         return cmd_enroll(so, user, face, lat, lon);
      if(*demo)
         return cmd_demo(so, user, face, lat, lon, cover, out_path);
      if(*serve)
         return cmd_serve(config);
      }
   catch(const ConfigError& e)
      {
      std::cerr << "configuration error: " << e.what() << "\n";
      return EXIT_USAGE;
      }
   catch(const std::exception& e)
      {
      std::cerr << "error: " << e.what() << "\n";
      return EXIT_FAILURE_GENERIC;
      }
   return EXIT_USAGE;
   }
