#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext::cache {

/// Bumped whenever a formula changes; records with another tag are skipped.
inline constexpr const char* kEngineVersion = "sl2ext-engine-1";

struct Record {
    std::string key;
    std::vector<std::uint64_t> dims;
};

/// One line of the cache file: {"version":..,"key":..,"dims":[..]}.
std::string record_line(const Record& r);

/// Writes every memo entry of the engine, in key order.
std::size_t export_records(std::ostream& out, const ExtEngine& engine);

struct ImportReport {
    std::size_t imported = 0;
    std::size_t version_mismatch = 0;
    std::size_t corrupt = 0;
    std::size_t foreign = 0;   // key for another characteristic or a quantum order
    std::size_t rejected = 0;  // failed re-derivation under paranoid mode
    std::vector<std::string> warnings;
    std::set<std::string> keys;  // every well-formed key seen, imported or not

    std::size_t warning_count() const { return version_mismatch + corrupt + foreign + rejected; }
};

/// Merges records into the engine memo.  Idempotent: existing keys are kept.
/// With paranoid set, every record is recomputed on a cold engine first and
/// rejected on mismatch.
ImportReport import_records(std::istream& in, const ExtEngine& engine, bool paranoid = false);

}  // namespace sl2ext::cache
