#include "asymada/fetch.hpp"

#include <charconv>

#include <httplib.h>

#include "asymada/errors.hpp"

namespace asymada {

Url parse_http_url(const std::string& url) {
  constexpr std::string_view scheme = "http://";
  if (url.rfind("https://", 0) == 0) {
    throw UsageError("https is not supported by this build; download the file manually");
  }
  if (url.rfind(scheme, 0) != 0) throw UsageError("expected an http:// URL: " + url);
  const std::string rest = url.substr(scheme.size());
  const auto slash = rest.find('/');
  std::string authority = rest.substr(0, slash);
  Url u;
  if (slash != std::string::npos) u.path = rest.substr(slash);
  const auto colon = authority.rfind(':');
  if (colon != std::string::npos) {
    const std::string port = authority.substr(colon + 1);
    auto [p, ec] = std::from_chars(port.data(), port.data() + port.size(), u.port);
    if (ec != std::errc{} || p != port.data() + port.size() || u.port < 1 || u.port > 65535) {
      throw UsageError("bad port in URL: " + url);
    }
    authority.resize(colon);
  }
  if (authority.empty()) throw UsageError("missing host in URL: " + url);
  u.host = authority;
  return u;
}

std::string http_get(const std::string& url) {
  const Url u = parse_http_url(url);
  httplib::Client client(u.host, u.port);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  auto res = client.Get(u.path);
  if (!res) throw DataError("request to " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw DataError("request to " + url + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace asymada
