// Writes the frozen catalog source: gen_catalog <output.cpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "torihedra/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_catalog <output.cpp>\n";
    return 2;
  }
  std::ostringstream out;
  out << "// Generated by tools/gen_catalog from the catalog geometry. Do not edit.\n"
         "#include <optional>\n#include <string_view>\n\n"
         "namespace torihedra::detail {\n\nnamespace {\n\n"
         "struct FrozenEntry {\n  std::string_view name;\n  std::string_view text;\n};\n\n"
         "constexpr FrozenEntry kFrozen[] = {\n";
  for (const auto& entry : torihedra::catalog_entries())
    out << "    {\"" << entry.name << "\", R\"tld(" << torihedra::generate_tld(entry.name) << ")tld\"},\n";
  out << "};\n\n}  // namespace\n\n"
         "std::optional<std::string_view> frozen_catalog_text(std::string_view name) {\n"
         "  for (const FrozenEntry& e : kFrozen)\n"
         "    if (e.name == name) return e.text;\n"
         "  return std::nullopt;\n}\n\n}  // namespace torihedra::detail\n";
  std::ofstream file(argv[1]);
  if (!file) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 2;
  }
  file << out.str();
  return 0;
}
