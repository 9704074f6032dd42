#include "balagha/api.hpp"

#include <cstdlib>
#include <string>

#include "balagha/annotation.hpp"
#include "balagha/errors.hpp"
#include "balagha/report_io.hpp"
#include "balagha/scoring.hpp"
#include "balagha/utf8.hpp"
#include "httplib.h"

namespace balagha {

namespace {

using io::Json;

HttpResponse json_response(int status, const Json& body) {
  return {status, "application/json; charset=utf-8", body.dump()};
}

Json error_body(int status, std::string_view code, const std::string& message) {
  Json j;
  j["status"] = status;
  j["code"] = std::string(code);
  j["message"] = message;
  return j;
}

HttpResponse error_response(int status, std::string_view code,
                            const std::string& message) {
  return json_response(status, error_body(status, code, message));
}

HttpResponse not_found() {
  return error_response(404, kApiNotFound, "no such route");
}

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string device_page(const Device& d) {
  std::string html =
      "<!doctype html>\n<html lang=\"en\">\n<head><meta charset=\"utf-8\">"
      "<title>" +
      html_escape(d.code.str()) + " " + html_escape(d.name_en) +
      "</title></head>\n<body>\n<h1>" + html_escape(d.code.str()) + " " +
      html_escape(d.name_en) + "</h1>\n<p lang=\"ar\" dir=\"rtl\">" +
      html_escape(d.name_ar) + "</p>\n<p>" +
      html_escape(d.definition_summary) + "</p>\n<p>Marks: " +
      html_escape(format_marks(d.allowed_marks)) + "</p>\n";
  if (d.multiplicity_note) {
    html += "<p>" + html_escape(*d.multiplicity_note) + "</p>\n";
  }
  return html + "</body>\n</html>\n";
}

std::optional<Document> parse_body(std::string_view body,
                                   HttpResponse& failure) {
  try {
    return parse_document(body);
  } catch (const FormatError& e) {
    failure = error_response(400, kApiMalformedBody, e.what());
  } catch (const EncodingError& e) {
    failure = error_response(400, kApiMalformedBody, e.what());
  }
  return std::nullopt;
}

}  // namespace

Api::Api(const Taxonomy& taxonomy, Segmenter segmenter)
    : taxonomy_(taxonomy), segmenter_(std::move(segmenter)) {}

HttpResponse Api::handle(std::string_view method, std::string_view path,
                         std::string_view body) const {
  try {
    return route(method, path, body);
  } catch (const std::exception& e) {
    return error_response(500, kApiInternal, e.what());
  }
}

HttpResponse Api::route(std::string_view method, std::string_view path,
                        std::string_view body) const {
  constexpr std::string_view kDevicePrefix = "/api/device/";
  constexpr std::string_view kPagePrefix = "/device/";

  if (method == "GET") {
    if (path == "/api/taxonomy") {
      return json_response(200, io::taxonomy_json(taxonomy_));
    }
    if (path.starts_with(kDevicePrefix)) {
      const std::string_view code = path.substr(kDevicePrefix.size());
      if (const Device* d = taxonomy_.find(code)) {
        return json_response(200, io::device_json(*d));
      }
      return error_response(404, kApiUnknownDevice,
                            "unknown device code '" + std::string(code) + "'");
    }
    if (path.starts_with(kPagePrefix)) {
      if (const Device* d =
              taxonomy_.find_by_slug(path.substr(kPagePrefix.size()))) {
        return {200, "text/html; charset=utf-8", device_page(*d)};
      }
      return error_response(404, kApiUnknownDevice, "unknown device page");
    }
    return not_found();
  }
  if (method != "POST") return not_found();

  if (path == "/api/morphemes") {
    if (utf8::find_invalid(body) != std::string_view::npos) {
      return error_response(400, kApiMalformedBody, "body is not valid UTF-8");
    }
    const Json request = Json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object() ||
        !request.contains("text") || !request["text"].is_string()) {
      return error_response(400, kApiMalformedBody,
                            "expected {\"text\": string}");
    }
    return json_response(200, io::morphemes_json(segmenter_.count(
                                  request["text"].get<std::string>())));
  }
  if (path == "/api/validate") {
    HttpResponse failure;
    const auto doc = parse_body(body, failure);
    if (!doc) return failure;
    return json_response(200,
                         io::diagnostics_json(validate_document(*doc, taxonomy_)));
  }
  if (path == "/api/score") {
    HttpResponse failure;
    const auto doc = parse_body(body, failure);
    if (!doc) return failure;
    try {
      const ScoreReport report = score_document(*doc, taxonomy_, segmenter_);
      return json_response(
          200, io::scored_json(report, validate_document(*doc, taxonomy_)));
    } catch (const ValidationFailed& e) {
      Json j = error_body(422, kApiValidationFailed, e.what());
      j["diagnostics"] = io::diagnostics_json(e.diagnostics());
      return json_response(422, j);
    } catch (const ZeroMorphemes& e) {
      return error_response(422, kApiZeroMorphemes, e.what());
    }
  }
  return not_found();
}

int default_port() {
  if (const char* env = std::getenv("BALAGHA_PORT")) {
    char* end = nullptr;
    const long port = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && port > 0 && port < 65536) {
      return static_cast<int>(port);
    }
  }
  return 8080;
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const Api& api) : impl_(std::make_unique<Impl>()) {
  auto dispatch = [&api](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = api.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, r.content_type);
  };
  impl_->server.Get(".*", dispatch);
  impl_->server.Post(".*", dispatch);
  impl_->server.Options(".*", [](const httplib::Request&,
                                 httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool serve(const Api& api, const std::string& host, int port) {
  HttpServer server(api);
  if (server.bind(host, port) < 0) return false;
  server.run();
  return true;
}

}  // namespace balagha
