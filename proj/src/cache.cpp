#include "sl2ext/cache.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace sl2ext::cache {

using json = nlohmann::ordered_json;

std::string record_line(const Record& r)
{
    json j;
    j["version"] = kEngineVersion;
    j["key"] = r.key;
    j["dims"] = r.dims;
    return j.dump();
}

std::size_t export_records(std::ostream& out, const ExtEngine& engine)
{
    const auto entries = engine.memo_entries();
    for (const auto& [key, dims] : entries)
        out << record_line({key, dims}) << '\n';
    return entries.size();
}

ImportReport import_records(std::istream& in, const ExtEngine& engine, bool paranoid)
{
    ImportReport report;
    const WeightContext& ctx = engine.context();
    std::unique_ptr<ExtEngine> cold;
    if (paranoid)
        cold = std::make_unique<ExtEngine>(ctx, EngineOptions{false});

    std::string line;
    std::size_t line_no = 0;
    auto warn = [&](std::size_t& counter, const std::string& what) {
        ++counter;
        report.warnings.push_back("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        Record rec;
        QueryKey key;
        try {
            const json j = json::parse(line);
            if (j.at("version").get<std::string>() != kEngineVersion) {
                warn(report.version_mismatch, "engine version mismatch, record skipped");
                continue;
            }
            rec.key = j.at("key").get<std::string>();
            rec.dims = j.at("dims").get<std::vector<std::uint64_t>>();
            key = QueryKey::from_string(rec.key);
        } catch (const std::exception& e) {
            warn(report.corrupt, std::string("corrupt record skipped (") + e.what() + ")");
            continue;
        }
        report.keys.insert(rec.key);
        if (key.quantum != ctx.is_quantum() || key.p != ctx.p()) {
            warn(report.foreign, "record for another ring skipped: " + rec.key);
            continue;
        }
        if (cold) {
            ExtVector fresh;
            try {
                fresh = cold->ext(key.source, key.target);
            } catch (const std::exception& e) {
                warn(report.rejected, "record cannot be re-derived (" + std::string(e.what()) + "): " + rec.key);
                continue;
            }
            auto dims = rec.dims;
            while (!dims.empty() && dims.back() == 0)
                dims.pop_back();
            if (fresh.dims != dims) {
                warn(report.rejected, "record disagrees with re-derivation: " + rec.key);
                continue;
            }
        }
        engine.memo_insert(rec.key, std::move(rec.dims));
        ++report.imported;
    }
    return report;
}

}  // namespace sl2ext::cache
