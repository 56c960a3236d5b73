#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "service.hpp"
#include "svg_scan.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace genii::service;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GENII_SAMPLES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render_body(const std::string& gene) {
  return json{{"gene", json::parse(gene)}, {"data", json::parse(slurp("sales.data.json"))}}.dump();
}

std::string header(const Response& r, const std::string& key) {
  for (const auto& [k, v] : r.headers)
    if (k == key) return v;
  return {};
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    file_ = fs::temp_directory_path() /
            (std::string("genii-store-") +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".jsonl");
    fs::remove(file_);
    store_ = std::make_unique<GeneStore>(file_);
    service_ = std::make_unique<Service>(*store_);
  }
  void TearDown() override { fs::remove(file_); }

  fs::path file_;
  std::unique_ptr<GeneStore> store_;
  std::unique_ptr<Service> service_;
};

const char* kBadGene =
    R"({"geneVersion": 1, "name": "x", "path": {"mode": "wiggly"}, "object": {"shape": "rect"}})";

}  // namespace

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(ServiceTest, RenderReturnsSvgWithHash) {
  const Response r = service_->render(render_body(slurp("bar.gene.json")));
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.content_type, "image/svg+xml");
  EXPECT_TRUE(genii::testing::scan_svg(r.body).well_formed);
  EXPECT_EQ(header(r, "X-Genii-Hash"), sha256_hex(r.body));
  EXPECT_EQ(service_->render(render_body(slurp("bar.gene.json"))).body, r.body);
}

TEST_F(ServiceTest, RenderAcceptsGeneAsText) {
  const json body{{"gene", slurp("bar.gene.json")}, {"data", json::parse(slurp("sales.data.json"))}};
  const Response r = service_->render(body.dump());
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, service_->render(render_body(slurp("bar.gene.json"))).body);
}

TEST_F(ServiceTest, RenderSchemaErrorNamesField) {
  const Response r = service_->render(render_body(kBadGene));
  ASSERT_EQ(r.status, 400);
  const json doc = json::parse(r.body);
  EXPECT_EQ(doc["error"]["path"], "gene.path.mode");
  EXPECT_FALSE(doc["error"]["message"].get<std::string>().empty());
}

TEST_F(ServiceTest, RenderBadRequests) {
  EXPECT_EQ(service_->render("not json").status, 400);
  EXPECT_EQ(service_->render("[]").status, 400);
  EXPECT_EQ(service_->render(R"({"gene": {}})").status, 400);
  json body = json::parse(render_body(slurp("bar.gene.json")));
  body["options"] = {{"dpi", -1}};
  const Response r = service_->render(body.dump());
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(json::parse(r.body)["error"]["path"], "options.dpi");
}

TEST_F(ServiceTest, Validate) {
  const json ok = json::parse(service_->validate(json{{"gene", json::parse(slurp("bar.gene.json"))}}.dump()).body);
  EXPECT_TRUE(ok["valid"]);
  EXPECT_TRUE(ok["errors"].empty());
  const json bad = json::parse(service_->validate(json{{"gene", json::parse(kBadGene)}}.dump()).body);
  EXPECT_FALSE(bad["valid"]);
  EXPECT_EQ(bad["errors"][0]["path"], "gene.path.mode");
  EXPECT_FALSE(json::parse(service_->validate("{").body)["valid"]);
}

TEST_F(ServiceTest, Paths) {
  const json doc = json::parse(service_->paths().body);
  std::set<std::string> names;
  for (const auto& p : doc) names.insert(p["name"].get<std::string>());
  EXPECT_TRUE(names.contains("hilbert"));
  EXPECT_TRUE(names.contains("ring"));
  EXPECT_TRUE(names.contains("inline_linear"));
}

TEST_F(ServiceTest, GeneLibrary) {
  const std::string body = json{{"gene", json::parse(slurp("bar.gene.json"))}}.dump();
  const Response created = service_->create_gene(body);
  ASSERT_EQ(created.status, 201) << created.body;
  const json rec = json::parse(created.body);
  const std::string id = rec["id"];
  EXPECT_TRUE(rec["liked"].is_null());
  EXPECT_FALSE(rec["createdAt"].get<std::string>().empty());

  const json again = json::parse(service_->create_gene(body).body);
  EXPECT_NE(again["id"], id);
  EXPECT_EQ(again["gene"], rec["gene"]);

  EXPECT_EQ(json::parse(service_->list_genes().body).size(), 2u);

  const Response liked = service_->patch_gene(id, R"({"liked": true})");
  ASSERT_EQ(liked.status, 200);
  EXPECT_EQ(json::parse(liked.body)["liked"], true);
  EXPECT_EQ(service_->patch_gene("nope", R"({"liked": true})").status, 404);
  EXPECT_EQ(service_->patch_gene(id, R"({"liked": 3})").status, 400);
  EXPECT_EQ(service_->create_gene(json{{"gene", json::parse(kBadGene)}}.dump()).status, 400);
}

TEST_F(ServiceTest, StoreSurvivesReload) {
  const auto a = store_->create("{\"a\": 1}\n");
  const auto b = store_->create("{\"b\": 1}\n");
  store_->set_liked(a.id, false);
  store_->set_liked(b.id, true);
  store_->set_liked(b.id, std::nullopt);
  store_.reset();
  // A torn final line from an interrupted write is ignored.
  std::ofstream(file_, std::ios::app) << "{\"op\": \"create\", \"id\": \"g9";

  GeneStore reloaded(file_);
  ASSERT_EQ(reloaded.list().size(), 2u);
  EXPECT_EQ(reloaded.list().front().id, b.id);
  EXPECT_EQ(reloaded.get(a.id)->liked, std::optional<bool>(false));
  EXPECT_FALSE(reloaded.get(b.id)->liked.has_value());
  EXPECT_EQ(reloaded.get(a.id)->gene, "{\"a\": 1}\n");
  const auto c = reloaded.create("{}");
  EXPECT_NE(c.id, a.id);
  EXPECT_NE(c.id, b.id);
}

TEST_F(ServiceTest, OverHttp) {
  httplib::Server server;
  mount(server, *service_);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const std::string body = render_body(slurp("bar.gene.json"));
  const std::string expected = service_->render(body).body;
  std::vector<std::future<bool>> results;
  for (int i = 0; i < 8; ++i)
    results.push_back(std::async(std::launch::async, [&] {
      httplib::Client client("127.0.0.1", port);
      const auto res = client.Post("/render", body, "application/json");
      return res && res->status == 200 && res->body == expected &&
             res->get_header_value("X-Genii-Hash") == sha256_hex(expected) &&
             res->get_header_value("Access-Control-Allow-Origin") == "*";
    }));
  for (auto& f : results) EXPECT_TRUE(f.get());

  httplib::Client client("127.0.0.1", port);
  const auto paths = client.Get("/paths");
  ASSERT_TRUE(paths);
  EXPECT_EQ(paths->status, 200);
  const auto pre = client.Options("/render");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  const auto created =
      client.Post("/genes", json{{"gene", json::parse(slurp("bar.gene.json"))}}.dump(), "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = json::parse(created->body)["id"];
  const auto patched = client.Patch("/genes/" + id, R"({"liked": false})", "application/json");
  ASSERT_TRUE(patched);
  EXPECT_EQ(json::parse(patched->body)["liked"], false);
  const auto bad = client.Post("/render", render_body(kBadGene), "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  server.stop();
  worker.join();
}
