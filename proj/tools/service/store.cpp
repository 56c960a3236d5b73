#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "json.hpp"
#include "service.hpp"

namespace genii::service {
namespace {

using nlohmann::json;

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
  const std::time_t secs = static_cast<std::time_t>(ms / 1000);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms % 1000));
  return out;
}

std::string make_id(std::size_t n) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "g%06zu", n);
  return buf;
}

}  // namespace

GeneStore::GeneStore(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception&) {
      continue;
    }
    if (!rec.is_object() || !rec.contains("op") || !rec.contains("id")) continue;
    const std::string op = rec.value("op", "");
    const std::string id = rec["id"].is_string() ? rec["id"].get<std::string>() : "";
    if (op == "create" && !index_.contains(id)) {
      index_[id] = records_.size();
      records_.push_back({id, rec.value("gene", ""), std::nullopt, rec.value("createdAt", "")});
      next_id_ = std::max(next_id_, records_.size() + 1);
    } else if (op == "like" && index_.contains(id)) {
      const json& v = rec["liked"];
      records_[index_[id]].liked = v.is_boolean() ? std::optional(v.get<bool>()) : std::nullopt;
    }
  }
}

void GeneStore::append(const std::string& line) {
  const int fd = ::open(file_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw std::runtime_error("cannot open gene store " + file_.string());
  const std::string data = line + "\n";
  std::size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      ::close(fd);
      throw std::runtime_error("cannot write gene store " + file_.string());
    }
    done += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
}

StoredGene GeneStore::create(const std::string& canonical_gene) {
  std::unique_lock lock(mutex_);
  StoredGene rec{make_id(next_id_), canonical_gene, std::nullopt, now_iso8601()};
  append(json{{"op", "create"}, {"id", rec.id}, {"gene", rec.gene}, {"createdAt", rec.created_at}}
             .dump());
  ++next_id_;
  index_[rec.id] = records_.size();
  records_.push_back(rec);
  return rec;
}

std::vector<StoredGene> GeneStore::list() const {
  std::shared_lock lock(mutex_);
  return {records_.rbegin(), records_.rend()};
}

std::optional<StoredGene> GeneStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return records_[it->second];
}

std::optional<StoredGene> GeneStore::set_liked(const std::string& id, std::optional<bool> liked) {
  std::unique_lock lock(mutex_);
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  append(json{{"op", "like"}, {"id", id}, {"liked", liked ? json(*liked) : json(nullptr)}}.dump());
  records_[it->second].liked = liked;
  return records_[it->second];
}

}  // namespace genii::service
