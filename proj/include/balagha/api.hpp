#ifndef BALAGHA_API_HPP
#define BALAGHA_API_HPP

#include <memory>
#include <string>
#include <string_view>

#include "balagha/morphology.hpp"
#include "balagha/taxonomy.hpp"

namespace balagha {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json; charset=utf-8";
  std::string body;
};

// Error codes carried in the `code` field of error bodies.
inline constexpr std::string_view kApiMalformedBody = "malformed_body";
inline constexpr std::string_view kApiUnknownDevice = "unknown_device";
inline constexpr std::string_view kApiNotFound = "not_found";
inline constexpr std::string_view kApiValidationFailed = "validation_failed";
inline constexpr std::string_view kApiZeroMorphemes = "zero_morphemes";
inline constexpr std::string_view kApiInternal = "internal";

// Stateless request handler behind `serve`. Routes:
//   GET  /api/taxonomy          catalogue export
//   GET  /api/device/{code}     one device, 404 when unknown
//   POST /api/morphemes         {"text": ...} -> morpheme breakdown
//   POST /api/score             document -> report, 422 on validation errors
//   POST /api/validate          document -> diagnostics array
//   GET  /device/{slug}         HTML definition page
// Error bodies are {"status", "code", "message"} plus "diagnostics" on 422.
class Api {
 public:
  Api(const Taxonomy& taxonomy, Segmenter segmenter);

  HttpResponse handle(std::string_view method, std::string_view path,
                      std::string_view body) const;

 private:
  HttpResponse route(std::string_view method, std::string_view path,
                     std::string_view body) const;

  const Taxonomy& taxonomy_;
  Segmenter segmenter_;
};

// BALAGHA_PORT when set to a valid port, else 8080.
int default_port();

// HTTP front end over an Api. Handles requests concurrently.
class HttpServer {
 public:
  explicit HttpServer(const Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Binds and runs. Returns false when the port cannot be bound.
bool serve(const Api& api, const std::string& host, int port);

}  // namespace balagha

#endif  // BALAGHA_API_HPP
