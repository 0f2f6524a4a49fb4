#include "brandt/cache.hpp"

#include <cstdio>
#include <fstream>

#include "brandt/error.hpp"

namespace brandt {

  std::string table_checksum(NearSemiringTable const& t) {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto const* table : {&t.add_table(), &t.mul_table()}) {
      for (Index x : *table) {
        for (int byte = 0; byte < 4; ++byte) {
          h ^= (x >> (8 * byte)) & 0xffu;
          h *= 1099511628211ULL;
        }
      }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  nlohmann::json to_cache_json(NearSemiringTable const& t) {
    std::size_t const m = t.size();
    nlohmann::json    elements = nlohmann::json::array();
    nlohmann::json    add      = nlohmann::json::array();
    nlohmann::json    mul      = nlohmann::json::array();
    for (Index i = 0; i < m; ++i) {
      elements.push_back(t.name(i));
      nlohmann::json add_row = nlohmann::json::array();
      nlohmann::json mul_row = nlohmann::json::array();
      for (Index j = 0; j < m; ++j) {
        add_row.push_back(t.add(i, j));
        mul_row.push_back(t.mul(i, j));
      }
      add.push_back(std::move(add_row));
      mul.push_back(std::move(mul_row));
    }
    return {{"format", cache_format},
            {"n", t.n()},
            {"elements", std::move(elements)},
            {"add", std::move(add)},
            {"mul", std::move(mul)},
            {"checksum", table_checksum(t)}};
  }

  namespace {
    std::vector<Index> flatten(nlohmann::json const& rows, std::size_t m,
                               char const* what) {
      if (!rows.is_array() || rows.size() != m) {
        throw CacheError(std::string(what) + " table has the wrong shape");
      }
      std::vector<Index> out;
      out.reserve(m * m);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != m) {
          throw CacheError(std::string(what) + " table has the wrong shape");
        }
        for (auto const& x : row) {
          if (!x.is_number_unsigned()) {
            throw CacheError(std::string(what)
                             + " table holds a non-index entry");
          }
          out.push_back(x.get<Index>());
        }
      }
      return out;
    }
  }  // namespace

  NearSemiringTable from_cache_json(nlohmann::json const& j) {
    for (char const* key : {"format", "n", "elements", "add", "mul", "checksum"}) {
      if (!j.contains(key)) {
        throw CacheError(std::string("cache is missing \"") + key + "\"");
      }
    }
    if (j["format"] != cache_format) {
      throw CacheError("unsupported cache format " + j["format"].dump());
    }
    auto const            n = j["n"].get<std::size_t>();
    BrandtSemigroup const b(n);

    auto const&             names = j["elements"];
    std::vector<NsrElement> elements;
    for (auto const& name : names) {
      auto const s = name.get<std::string>();
      if (s == "0") {
        elements.emplace_back();
      } else {
        elements.emplace_back(realize(b, parse_canonical_name(s)));
      }
    }
    std::size_t const m = elements.size();
    NearSemiringTable t(n,
                        std::move(elements),
                        flatten(j["add"], m, "add"),
                        flatten(j["mul"], m, "mul"));
    if (table_checksum(t) != j["checksum"].get<std::string>()) {
      throw CacheError("checksum mismatch: the Cayley tables were modified");
    }
    validate(t);
    return t;
  }

  void save_cache(NearSemiringTable const& t, std::filesystem::path const& path) {
    std::ofstream out(path);
    if (!out) {
      throw CacheError("cannot write " + path.string());
    }
    out << to_cache_json(t).dump() << '\n';
    if (!out) {
      throw CacheError("error writing " + path.string());
    }
  }

  NearSemiringTable load_cache(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw CacheError("cannot read " + path.string());
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (nlohmann::json::exception const& e) {
      throw CacheError(path.string() + " is not valid JSON: " + e.what());
    }
    try {
      return from_cache_json(j);
    } catch (nlohmann::json::exception const& e) {
      throw CacheError(path.string() + ": " + e.what());
    }
  }

}  // namespace brandt
