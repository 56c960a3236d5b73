#pragma once

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace httplib {
class Server;
}

namespace genii::service {

struct StoredGene {
  std::string id;
  std::string gene;  // canonical gene bytes
  std::optional<bool> liked;
  std::string created_at;  // ISO 8601, UTC
};

// Append-only JSON-lines store. Every mutation is one line, flushed and
// synced before the call returns; loading replays the file. A torn final
// line (crash mid-write) is skipped.
class GeneStore {
 public:
  explicit GeneStore(std::filesystem::path file);

  StoredGene create(const std::string& canonical_gene);
  std::vector<StoredGene> list() const;  // newest first
  std::optional<StoredGene> get(const std::string& id) const;
  // nullopt when the id is unknown.
  std::optional<StoredGene> set_liked(const std::string& id, std::optional<bool> liked);

 private:
  void append(const std::string& line);

  std::filesystem::path file_;
  mutable std::shared_mutex mutex_;
  std::vector<StoredGene> records_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t next_id_ = 1;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

std::string sha256_hex(std::string_view bytes);

// Request handlers, independent of the transport so tests can call them
// directly.
class Service {
 public:
  explicit Service(GeneStore& store) : store_(store) {}

  Response render(const std::string& body) const;
  Response validate(const std::string& body) const;
  Response paths() const;
  Response create_gene(const std::string& body);
  Response list_genes() const;
  Response patch_gene(const std::string& id, const std::string& body);

 private:
  GeneStore& store_;
};

// Routes every endpoint, plus CORS preflight, onto `server`.
void mount(httplib::Server& server, Service& service);

}  // namespace genii::service
