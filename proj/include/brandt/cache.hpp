#ifndef BRANDT_CACHE_HPP_
#define BRANDT_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "brandt/near_semiring.hpp"

namespace brandt {

  inline constexpr int cache_format = 1;

  //! FNV-1a over the add table followed by the mul table, as 16 hex digits.
  std::string table_checksum(NearSemiringTable const& t);

  //! {"format", "n", "elements", "add", "mul", "checksum"}.
  nlohmann::json to_cache_json(NearSemiringTable const& t);

  //! Rebuild and fully validate a table.  Throws CacheError for a wrong
  //! format, missing fields or a checksum mismatch, InvalidArgument for bad
  //! element names, and InvariantViolation when the tables break a law.
  NearSemiringTable from_cache_json(nlohmann::json const& j);

  void              save_cache(NearSemiringTable const&     t,
                               std::filesystem::path const& path);
  NearSemiringTable load_cache(std::filesystem::path const& path);

}  // namespace brandt

#endif  // BRANDT_CACHE_HPP_
