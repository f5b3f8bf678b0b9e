#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "seedgen.hpp"

using namespace transcat;

int main(int argc, char** argv) {
  CLI::App app{"Regenerates the shipped seed data files"};
  std::string out_dir = "data";
  int max_degree = 16;
  int max_order = 31;
  app.add_option("-o,--out", out_dir, "data directory");
  app.add_option("--max-degree", max_degree, "largest primitive degree")->check(CLI::Range(2, 16));
  app.add_option("--max-order", max_order, "largest small group order")->check(CLI::Range(1, 31));
  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path dir(out_dir);
    const auto prim = seedgen::primitive_seeds(max_degree);
    for (int n = 2; n <= max_degree; ++n) validate_primitive_seeds(prim, n);
    {
      std::ofstream f(dir / "primitive_groups.txt");
      write_primitive_seeds(f, prim);
    }
    const auto small = seedgen::small_group_seeds(max_order);
    validate_small_groups(small);
    {
      std::ofstream f(dir / "small_groups.txt");
      write_small_groups(f, small);
    }
    std::ofstream sums(dir / "CHECKSUMS");
    for (const char* name : {"primitive_groups.txt", "small_groups.txt", "reference_tables.txt"}) {
      sums << file_digest(dir / name) << "  " << name << '\n';
    }
    std::cout << prim.size() << " primitive groups, " << small.size() << " small groups\n";
  } catch (const std::exception& e) {
    std::cerr << "seedgen: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
