// Regenerates the shipped group-definition files from roots and eigenvalues.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bct/group_io.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path(bct::shipped_data_dir());
  struct Item {
    const char* dir;
    const char* file;
    bct::GroupDefinition def;
  };
  Item items[] = {{"groups", "g25.json", bct::g25_definition()},
                  {"groups", "g26.json", bct::g26_definition()},
                  {"external", "g4.json", bct::g4_definition()},
                  {"external", "g23.json", bct::g23_definition()}};
  for (auto& item : items) {
    fs::create_directories(root / item.dir);
    std::ofstream out(root / item.dir / item.file);
    // One matrix row per line keeps the files diffable.
    auto j = bct::definition_to_json(item.def);
    auto gens = j["generators"];
    j.erase("generators");
    std::string head = j.dump(1);
    head.resize(head.size() - 2);
    out << head << ",\n \"generators\": [\n";
    for (std::size_t g = 0; g < gens.size(); ++g) {
      out << "  [\n";
      for (std::size_t r = 0; r < gens[g].size(); ++r)
        out << "   " << gens[g][r].dump() << (r + 1 < gens[g].size() ? ",\n" : "\n");
      out << "  ]" << (g + 1 < gens.size() ? ",\n" : "\n");
    }
    out << " ]\n}\n";
    std::cout << (root / item.dir / item.file).string() << "\n";
  }
}
