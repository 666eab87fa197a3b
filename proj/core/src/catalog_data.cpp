// Generated by tools/gen_catalog from the catalog geometry. Do not edit.
#include <optional>
#include <string_view>

namespace torihedra::detail {

namespace {

struct FrozenEntry {
  std::string_view name;
  std::string_view text;
};

constexpr FrozenEntry kFrozen[] = {
    {"square-weave", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
edge 0.0 1.2 0 0
edge 0.1 1.3 0 -1
edge 0.2 1.0 -1 -1
edge 0.3 1.1 -1 0
)tld"},
    {"triaxial", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 2.1 0 -1
edge 0.3 1.1 1 -1
edge 1.0 2.2 0 0
edge 1.2 2.0 -1 0
)tld"},
    {"3.4.6.4", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 0
crossing 4 over 1
crossing 5 over 1
edge 0.0 4.2 0 0
edge 0.1 1.3 0 1
edge 0.2 5.0 0 0
edge 0.3 2.2 0 0
edge 1.0 3.2 0 0
edge 1.1 5.2 0 0
edge 1.2 2.0 -1 0
edge 2.1 4.3 0 0
edge 2.3 3.0 0 0
edge 3.1 5.3 0 0
edge 3.3 4.1 0 -1
edge 4.0 5.1 1 0
)tld"},
    {"3.3.6.6", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
crossing 4 over 0
crossing 5 over 1
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 4.1 0 -1
edge 0.3 3.1 0 -1
edge 1.0 2.2 0 0
edge 1.1 5.2 0 0
edge 1.2 2.0 -1 0
edge 2.1 5.3 0 0
edge 3.0 4.2 1 0
edge 3.2 4.0 0 0
edge 3.3 5.0 0 0
edge 4.3 5.1 0 0
)tld"},
    {"3.4.4.6", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
crossing 4 over 0
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 4.1 0 -1
edge 0.3 3.1 0 -1
edge 1.0 2.2 0 0
edge 1.1 4.3 0 0
edge 1.2 2.0 -1 0
edge 2.1 3.3 0 0
edge 3.0 4.2 1 0
edge 3.2 4.0 0 0
)tld"},
    {"4.8.8", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 0
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 3.1 0 -1
edge 0.3 3.0 0 -1
edge 1.0 3.2 0 0
edge 1.1 2.1 -1 0
edge 1.2 2.0 -1 0
edge 2.2 3.3 0 0
)tld"},
    {"6.6.6", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
edge 0.0 1.2 1 0
edge 0.1 1.3 0 0
edge 0.2 2.1 0 -1
edge 0.3 2.0 0 -1
edge 1.0 3.3 0 0
edge 1.1 3.2 0 0
edge 2.2 3.0 0 0
edge 2.3 3.1 1 0
)tld"},
    {"3.12.12", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 0
crossing 4 over 0
crossing 5 over 0
edge 0.0 4.3 0 0
edge 0.1 1.3 0 0
edge 0.2 5.1 0 -1
edge 0.3 5.0 0 -1
edge 1.0 4.2 0 0
edge 1.1 2.3 -1 0
edge 1.2 2.2 -1 0
edge 2.0 5.3 0 0
edge 2.1 3.0 0 0
edge 3.1 5.2 0 0
edge 3.2 4.1 0 0
edge 3.3 4.0 0 0
)tld"},
    {"4.6.12", R"tld(tld 1
crossing 0 over 0
crossing 1 over 0
crossing 2 over 0
crossing 3 over 1
crossing 4 over 1
crossing 5 over 1
crossing 6 over 1
crossing 7 over 1
crossing 8 over 0
crossing 9 over 0
crossing 10 over 1
crossing 11 over 1
edge 0.0 5.2 0 0
edge 0.1 5.1 0 0
edge 0.2 1.3 0 0
edge 0.3 11.1 0 -1
edge 1.0 8.3 0 0
edge 1.1 8.2 0 0
edge 1.2 2.3 -1 0
edge 2.0 7.2 0 0
edge 2.1 3.1 0 0
edge 2.2 3.0 0 0
edge 3.2 10.3 0 0
edge 3.3 4.0 0 0
edge 4.1 9.3 0 0
edge 4.2 9.2 0 0
edge 4.3 5.0 0 0
edge 5.3 6.0 0 -1
edge 6.1 11.0 0 0
edge 6.2 7.1 0 0
edge 6.3 7.0 0 0
edge 7.3 8.1 1 0
edge 8.0 9.1 0 0
edge 9.0 10.2 0 0
edge 10.0 11.3 0 0
edge 10.1 11.2 0 0
)tld"},
    {"Lj:1", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
crossing 4 over 0
crossing 5 over 0
crossing 6 over 1
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 4.1 0 -1
edge 0.3 3.1 0 -1
edge 1.0 2.2 0 0
edge 1.1 5.3 0 0
edge 1.2 2.0 -1 0
edge 2.1 6.3 0 0
edge 3.0 4.2 1 0
edge 3.2 4.0 0 0
edge 3.3 5.1 1 0
edge 4.3 6.1 0 0
edge 5.0 6.2 0 0
edge 5.2 6.0 -1 0
)tld"},
    {"Lj:2", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
crossing 4 over 0
crossing 5 over 0
crossing 6 over 1
crossing 7 over 1
crossing 8 over 0
crossing 9 over 0
crossing 10 over 1
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 4.1 0 -1
edge 0.3 3.1 0 -1
edge 1.0 2.2 0 0
edge 1.1 5.3 0 0
edge 1.2 2.0 -1 0
edge 2.1 6.3 0 0
edge 3.0 4.2 1 0
edge 3.2 4.0 0 0
edge 3.3 9.1 0 0
edge 4.3 10.1 0 0
edge 5.0 6.2 0 0
edge 5.1 7.3 0 0
edge 5.2 6.0 -1 0
edge 6.1 8.3 0 0
edge 7.0 8.2 0 0
edge 7.1 9.3 -1 0
edge 7.2 8.0 -1 0
edge 8.1 10.3 0 0
edge 9.0 10.2 1 0
edge 9.2 10.0 0 0
)tld"},
    {"Lj:3", R"tld(tld 1
crossing 0 over 0
crossing 1 over 1
crossing 2 over 0
crossing 3 over 1
crossing 4 over 0
crossing 5 over 0
crossing 6 over 1
crossing 7 over 1
crossing 8 over 0
crossing 9 over 0
crossing 10 over 1
crossing 11 over 1
crossing 12 over 0
crossing 13 over 0
crossing 14 over 1
edge 0.0 2.3 0 0
edge 0.1 1.3 0 0
edge 0.2 4.1 0 -1
edge 0.3 3.1 0 -1
edge 1.0 2.2 0 0
edge 1.1 5.3 0 0
edge 1.2 2.0 -1 0
edge 2.1 6.3 0 0
edge 3.0 4.2 1 0
edge 3.2 4.0 0 0
edge 3.3 13.1 0 0
edge 4.3 14.1 0 0
edge 5.0 6.2 0 0
edge 5.1 7.3 0 0
edge 5.2 6.0 -1 0
edge 6.1 8.3 0 0
edge 7.0 8.2 0 0
edge 7.1 9.3 0 0
edge 7.2 8.0 -1 0
edge 8.1 10.3 0 0
edge 9.0 10.2 0 0
edge 9.1 11.3 -1 0
edge 9.2 10.0 -1 0
edge 10.1 12.3 0 0
edge 11.0 12.2 1 0
edge 11.1 13.3 0 0
edge 11.2 12.0 0 0
edge 12.1 14.3 0 0
edge 13.0 14.2 1 0
edge 13.2 14.0 0 0
)tld"},
};

}  // namespace

std::optional<std::string_view> frozen_catalog_text(std::string_view name) {
  for (const FrozenEntry& e : kFrozen)
    if (e.name == name) return e.text;
  return std::nullopt;
}

}  // namespace torihedra::detail
