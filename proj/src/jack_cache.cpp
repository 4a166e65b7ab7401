#include "shimura/jack_cache.hpp"

#include "shimura/serialize.hpp"

#include <fstream>
#include <mutex>

namespace shimura {

JackTablePtr JackCache::find(int degree, const Scalar& theta) const
{
    std::shared_lock lock(mutex_);
    auto it = tables_.find({degree, theta.to_string()});
    return it == tables_.end() ? nullptr : it->second;
}

JackTablePtr JackCache::get_or_compute(int degree, const Scalar& theta, const std::function<JackTable()>& compute)
{
    if (auto hit = find(degree, theta)) return hit;
    auto fresh = std::make_shared<const JackTable>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = tables_.try_emplace({degree, theta.to_string()}, std::move(fresh));
    return it->second;
}

void JackCache::clear()
{
    std::unique_lock lock(mutex_);
    tables_.clear();
}

std::size_t JackCache::size() const
{
    std::shared_lock lock(mutex_);
    return tables_.size();
}

void JackCache::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) return;
    Json doc = Json::parse(in);
    std::unique_lock lock(mutex_);
    for (const auto& entry : doc.at("entries")) {
        JackTable table;
        for (const auto& jp : entry.at("polynomials"))
            table.emplace(parse_partition(jp.at("partition").get<std::string>()), SymFun(coeffs_from_json(jp.at("expansion"))));
        Key key{entry.at("degree").get<int>(), entry.at("theta").get<std::string>()};
        tables_.try_emplace(key, std::make_shared<const JackTable>(std::move(table)));
    }
}

void JackCache::save(const std::string& path) const
{
    Json entries = Json::array();
    {
        std::shared_lock lock(mutex_);
        for (const auto& [key, table] : tables_) {
            Json polys = Json::array();
            for (const auto& [lambda, f] : *table)
                polys.push_back(Json{{"partition", lambda.empty() ? "" : lambda.to_string()}, {"expansion", coeffs_to_json(f.coeffs(), Basis::PowerSum)}});
            entries.push_back(Json{{"degree", key.first}, {"theta", key.second}, {"polynomials", polys}});
        }
    }
    std::ofstream out(path);
    out << Json{{"format", "shimura-jack-cache"}, {"version", 1}, {"entries", entries}}.dump(1) << '\n';
}

JackCache& jack_cache()
{
    static JackCache cache;
    return cache;
}

} // namespace shimura
