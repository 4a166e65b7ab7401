#pragma once

#include "shimura/symmfunc.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>

namespace shimura {

using JackTable = std::map<Partition, SymFun, SizeRevLex>;
using JackTablePtr = std::shared_ptr<const JackTable>;

// Memo of Jack expansions keyed by (degree, θ). Readers share the lock;
// inserts are exclusive and first-writer-wins, so lookups are deterministic
// under any interleaving.
class JackCache {
public:
    /// Null on a miss.
    [[nodiscard]] JackTablePtr find(int degree, const Scalar& theta) const;
    /// Returns the stored table, computing it outside the lock on a miss.
    JackTablePtr get_or_compute(int degree, const Scalar& theta, const std::function<JackTable()>& compute);
    void clear();
    [[nodiscard]] std::size_t size() const;

    /// Merges entries from a JSON cache file; a missing file is not an error.
    void load(const std::string& path);
    /// Writes every entry as JSON.
    void save(const std::string& path) const;

private:
    using Key = std::pair<int, std::string>;
    mutable std::shared_mutex mutex_;
    std::map<Key, JackTablePtr> tables_;
};

/// Process-wide cache used by jack_P.
JackCache& jack_cache();

} // namespace shimura
