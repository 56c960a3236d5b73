#include <csignal>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "service.hpp"

namespace {
httplib::Server* g_server = nullptr;
void stop(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTTP render service for genii genes", "genii-serve"};
  std::string addr = "127.0.0.1:8080";
  std::string store_path = "genii-genes.jsonl";
  app.add_option("--addr", addr, "host:port to listen on")->envname("GENII_ADDR");
  app.add_option("--store", store_path, "Gene store file (JSON lines)")->envname("GENII_STORE");
  CLI11_PARSE(app, argc, argv);

  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "--addr must be host:port\n";
    return 2;
  }
  const std::string host = addr.substr(0, colon);
  const int port = std::atoi(addr.c_str() + colon + 1);

  genii::service::GeneStore store(store_path);
  genii::service::Service service(store);
  httplib::Server server;
  genii::service::mount(server, service);

  g_server = &server;
  std::signal(SIGINT, stop);
  std::signal(SIGTERM, stop);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "cannot listen on " << addr << "\n";
    return 2;
  }
  std::cerr << "listening on " << addr << "\n";
  server.listen_after_bind();
  return 0;
}
