// Writes the bundled crossed-module documents under fixtures/.  Run from the
// repository root after changing the corpus; the io tests guard against
// drift between these files and the programmatic corpus.

#include <fstream>
#include <iostream>

#include "corpus.hpp"
#include "xmodcat/io.hpp"

using namespace xmodcat;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  auto write = [&](const std::string& name, const XModDocument& doc) {
    std::string path = dir + "/" + name + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << path << "\n";
      std::exit(1);
    }
    out << serialize_document(doc);
    std::cout << "wrote " << path << "\n";
  };

  for (const auto& [name, x] : corpus::all_valid())
    write(name, document_from_crossed_module(*x, name));

  corpus::RawParts p = corpus::peiffer_violation_parts();
  XModDocument doc;
  doc.name = "peiffer_violation";
  doc.x1_table = p.x1.table;
  doc.x2_table = p.x2.table;
  doc.action = p.mu.perm;
  doc.boundary = p.boundary.map;
  write("peiffer_violation", doc);
  return 0;
}
