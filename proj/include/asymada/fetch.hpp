#pragma once

#include <string>

namespace asymada {

struct Url {
  std::string host;
  int port = 80;
  std::string path = "/";
};

// Accepts http://host[:port][/path]. https is rejected (no TLS in this build).
Url parse_http_url(const std::string& url);

// Plain HTTP GET, following redirects. Throws DataError on connection
// failures and non-200 responses.
std::string http_get(const std::string& url);

}  // namespace asymada
