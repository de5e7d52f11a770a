// Regenerates the derived corpus files and the manifest. Hand-written rings (vect, ising,
// fibonacci, ising_z2graded, fib_fib_swap, ising_ising_swap, broken_ring) must already exist.
//
//   make_corpus <corpus dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gxcat.hpp"
#include "gxcat/examples.hpp"

using namespace gxcat;
using io::json;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& p, const json& j) {
  std::ofstream(p, std::ios::binary) << j.dump(2) << "\n";
  std::cout << "wrote " << p.string() << "\n";
}

json ring_with_embedding(const GradedFusionRing& r, const FiniteGroup& g, const std::vector<int>& emb) {
  return io::to_json(r, nullptr, &emb, &g);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <corpus dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  json entries = json::array();
  auto add = [&](const std::string& name, const std::string& kind, const std::string& path, bool golden = false) {
    json e{{"name", name}, {"kind", kind}, {"path", path}, {"fnv1a", file_checksum(dir / path)}};
    if (golden) e["goldens"] = "goldens/" + name + ".json";
    entries.push_back(e);
  };

  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Q8", "S4"}) {
    const std::string path = std::string("group_") + name + ".json";
    write(dir / path, io::to_json(build_group(name)));
    add(name, "group", path);
  }

  std::vector<std::pair<std::string, TorsionCocycle>> cocycles{
      {"h3_z2", examples::cyclic_h3_generator(2)},        {"h3_z3", examples::cyclic_h3_generator(3)},
      {"h3_z4", examples::cyclic_h3_generator(4)},        {"h3_z2xz2_a", examples::klein_h3_generator(0)},
      {"h3_z2xz2_b", examples::klein_h3_generator(1)},    {"h3_z2xz2_ab", examples::klein_h3_generator(2)}};
  for (const auto& [name, w] : cocycles) {
    write(dir / (name + ".json"), io::to_json(w));
    add(name, "cocycle", name + ".json", true);
  }

  auto z2 = std::make_shared<const FiniteGroup>(build_group("Z2"));
  auto z3 = std::make_shared<const FiniteGroup>(build_group("Z3"));
  auto s3 = std::make_shared<const FiniteGroup>(build_group("S3"));
  for (const auto& [name, g] : {std::pair{"rep_z2", z2}, std::pair{"rep_z3", z3}, std::pair{"rep_s3", s3}}) {
    auto r = rep_ring(*g);
    std::vector<int> all(static_cast<std::size_t>(r.size()));
    std::iota(all.begin(), all.end(), 0);
    write(dir / (std::string(name) + ".json"), ring_with_embedding(r, *g, all));
  }
  {
    auto toric = twisted_double(TorsionCocycle(z2, 3, 2));
    write(dir / "toric_code.json", ring_with_embedding(toric.ring, *z2, toric.rep_embedding));
    auto semion = twisted_double(examples::cyclic_h3_generator(2));
    write(dir / "double_semion.json", ring_with_embedding(semion.ring, *z2, semion.rep_embedding));
    auto ds3 = twisted_double(TorsionCocycle(s3, 3, 6));
    write(dir / "d_s3.json", ring_with_embedding(ds3.ring, *s3, ds3.rep_embedding));
  }
  for (const char* name : {"vect", "ising", "ising_z2graded", "fibonacci", "rep_z2", "rep_z3", "rep_s3", "toric_code",
                           "double_semion", "d_s3", "fib_fib_swap", "ising_ising_swap"})
    add(name, "ring", std::string(name) + ".json", true);

  std::vector<std::pair<std::string, PointedGXData>> pointed{
      {"pointed_toric", examples::toric_code()},
      {"pointed_double_semion", examples::double_semion()},
      {"pointed_symmetric_z2", examples::symmetric_z2()},
      {"holo_z2_trivial", holomorphic_crossed(TorsionCocycle(z2, 3, 2)).datum},
      {"holo_z2_semion", holomorphic_crossed(examples::cyclic_h3_generator(2)).datum},
      {"holo_z3_trivial", holomorphic_crossed(TorsionCocycle(z3, 3, 3)).datum}};
  for (const auto& [name, d] : pointed) {
    write(dir / (name + ".json"), io::to_json(d));
    add(name, "pointed", name + ".json", true);
  }

  write(dir / "manifest.json", json{{"entries", entries}});
  return 0;
}
