#include "service.hpp"

#include <openssl/evp.h>

#include "genii/dataset.hpp"
#include "genii/gene.hpp"
#include "genii/path_generators.hpp"
#include "genii/render.hpp"
#include "httplib.h"
#include "json.hpp"

namespace genii::service {
namespace {

using nlohmann::json;

Response json_response(int status, const json& body) {
  return {status, "application/json", body.dump() + "\n", {}};
}

json issues_json(const std::vector<SchemaIssue>& issues, const std::string& prefix) {
  json out = json::array();
  for (const auto& i : issues) {
    const std::string path = i.path.empty() ? prefix : (prefix.empty() ? i.path : prefix + "." + i.path);
    out.push_back(json{{"path", path}, {"message", i.message}});
  }
  return out;
}

Response schema_error(const std::vector<SchemaIssue>& issues, const std::string& prefix) {
  json errors = issues_json(issues, prefix);
  json first = errors.empty() ? json{{"path", prefix}, {"message", "invalid"}} : errors[0];
  return json_response(400, json{{"error", first}, {"errors", errors}});
}

Response bad_request(const std::string& path, const std::string& message) {
  return schema_error({{"", message}}, path);
}

std::optional<json> parse_body(const std::string& body) {
  try {
    json doc = json::parse(body);
    if (doc.is_object()) return doc;
  } catch (const json::exception&) {
  }
  return std::nullopt;
}

// The gene may arrive as an embedded object or as the raw document text.
std::string gene_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

json record_json(const StoredGene& g) {
  return json{{"id", g.id},
              {"gene", g.gene},
              {"liked", g.liked ? json(*g.liked) : json(nullptr)},
              {"createdAt", g.created_at}};
}

void add_cors(httplib::Response& res) {
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_header("Access-Control-Allow-Methods", "GET, POST, PATCH, OPTIONS");
  res.set_header("Access-Control-Allow-Headers", "Content-Type");
  res.set_header("Access-Control-Expose-Headers", "X-Genii-Hash");
}

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  for (const auto& [k, v] : r.headers) res.set_header(k, v);
  res.set_content(r.body, r.content_type);
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

Response Service::render(const std::string& body) const {
  const auto doc = parse_body(body);
  if (!doc) return bad_request("", "body must be a JSON object");
  if (!doc->contains("gene")) return bad_request("gene", "missing field");
  if (!doc->contains("data")) return bad_request("data", "missing field");

  Gene gene;
  try {
    gene = parse_gene(gene_text((*doc)["gene"]));
  } catch (const SchemaError& e) {
    return schema_error(e.issues(), "gene");
  }
  Dataset data;
  try {
    data = parse_dataset(gene_text((*doc)["data"])).dataset;
  } catch (const SchemaError& e) {
    return schema_error(e.issues(), "data");
  }

  RenderOptions opts;
  if (const auto it = doc->find("options"); it != doc->end()) {
    if (!it->is_object()) return bad_request("options", "must be an object");
    if (const auto d = it->find("dpi"); d != it->end()) {
      if (!d->is_number() || !(d->get<double>() > 0)) return bad_request("options.dpi", "dpi must be > 0");
      opts.dpi = d->get<double>();
    }
    if (const auto b = it->find("background"); b != it->end()) {
      if (!b->is_string()) return bad_request("options.background", "must be a colour string");
      try {
        parse_colour(b->get<std::string>());
      } catch (const Error& e) {
        return bad_request("options.background", e.what());
      }
      opts.background = b->get<std::string>();
    }
    if (const auto p = it->find("debugPath"); p != it->end()) {
      if (!p->is_boolean()) return bad_request("options.debugPath", "must be true or false");
      opts.emit_debug_path = p->get<bool>();
    }
    if (const auto s = it->find("seedName"); s != it->end()) {
      if (!s->is_string()) return bad_request("options.seedName", "must be a string");
      opts.seed_name = s->get<std::string>();
    }
  }

  try {
    RenderResult result = genii::render(gene, data, opts);
    Response r{200, "image/svg+xml", std::move(result.svg), {}};
    r.headers.emplace_back("X-Genii-Hash", sha256_hex(r.body));
    r.headers.emplace_back("X-Genii-Warnings", std::to_string(result.warnings.size()));
    return r;
  } catch (const SchemaError& e) {
    return schema_error(e.issues(), "gene");
  } catch (const Error& e) {
    return json_response(
        422, json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
  }
}

Response Service::validate(const std::string& body) const {
  const auto doc = parse_body(body);
  json errors = json::array();
  if (!doc) {
    errors.push_back(json{{"path", ""}, {"message", "body must be a JSON object"}});
  } else if (!doc->contains("gene")) {
    errors.push_back(json{{"path", "gene"}, {"message", "missing field"}});
  } else {
    errors = issues_json(validate_gene(gene_text((*doc)["gene"])), "gene");
  }
  return json_response(200, json{{"valid", errors.empty()}, {"errors", errors}});
}

Response Service::paths() const {
  json out = json::array();
  for (const auto& info : path_catalogue()) {
    json params = json::array();
    for (auto p : info.parameters) params.push_back(p);
    out.push_back(json{{"name", info.name},
                       {"description", info.description},
                       {"parameters", params},
                       {"spaceFilling", is_space_filling(info.mode)}});
  }
  return json_response(200, out);
}

Response Service::create_gene(const std::string& body) {
  const auto doc = parse_body(body);
  if (!doc) return bad_request("", "body must be a JSON object");
  if (!doc->contains("gene")) return bad_request("gene", "missing field");
  std::string canonical;
  try {
    canonical = serialize_gene(parse_gene(gene_text((*doc)["gene"])));
  } catch (const SchemaError& e) {
    return schema_error(e.issues(), "gene");
  }
  return json_response(201, record_json(store_.create(canonical)));
}

Response Service::list_genes() const {
  json out = json::array();
  for (const auto& g : store_.list()) out.push_back(record_json(g));
  return json_response(200, out);
}

Response Service::patch_gene(const std::string& id, const std::string& body) {
  const auto doc = parse_body(body);
  if (!doc) return bad_request("", "body must be a JSON object");
  const auto it = doc->find("liked");
  if (it == doc->end()) return bad_request("liked", "missing field");
  if (!it->is_boolean() && !it->is_null()) return bad_request("liked", "must be true, false or null");
  const std::optional<bool> liked = it->is_null() ? std::nullopt : std::optional(it->get<bool>());
  const auto rec = store_.set_liked(id, liked);
  if (!rec) return json_response(404, json{{"error", {{"path", "id"}, {"message", "unknown gene id"}}}});
  return json_response(200, record_json(*rec));
}

void mount(httplib::Server& server, Service& service) {
  server.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) { add_cors(res); });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Post("/render", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.render(req.body));
  });
  server.Post("/validate", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.validate(req.body));
  });
  server.Get("/paths", [&](const httplib::Request&, httplib::Response& res) { send(res, service.paths()); });
  server.Post("/genes", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.create_gene(req.body));
  });
  server.Get("/genes", [&](const httplib::Request&, httplib::Response& res) {
    send(res, service.list_genes());
  });
  server.Patch(R"(/genes/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, service.patch_gene(req.matches[1], req.body));
  });
}

}  // namespace genii::service
