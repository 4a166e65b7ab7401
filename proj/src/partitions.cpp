#include "shimura/partitions.hpp"

#include "shimura/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace shimura {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::transpose() const
{
    std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

int Partition::multiplicity(int v) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const
{
    if (parts_.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty() || s == "∅") return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("not a partition: '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

HookParams::HookParams(int p_, int q_) : p(p_), q(q_)
{
    if (p < 1 || q < 1) throw std::invalid_argument("hook parameters require p >= 1 and q >= 1");
}

bool SizeRevLex::operator()(const Partition& a, const Partition& b) const noexcept
{
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

Partition transpose(const Partition& lambda)
{
    return lambda.transpose();
}

bool contains(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (lambda.part(i) < mu.part(i)) return false;
    return true;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    int a = 0, b = 0;
    const int n = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= n; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

bool is_hook(const Partition& lambda, const HookParams& hp)
{
    return lambda.part(hp.p + 1) <= hp.q;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> enumerate_hooks(const HookParams& hp, int d, SizeMode mode)
{
    if (d < 0) throw std::invalid_argument("enumerate_hooks: negative size");
    std::vector<Partition> out;
    for (int n = mode == SizeMode::Exact ? d : 0; n <= d; ++n)
        for (auto& lambda : partitions_of(n))
            if (is_hook(lambda, hp)) out.push_back(std::move(lambda));
    return out;
}

std::vector<int> lambda_natural(const Partition& lambda, int m, int n)
{
    if (m < 0 || n < 0 || lambda.part(m + 1) > n)
        throw NotAHook(lambda.to_string() + " is not an (" + std::to_string(m) + "," + std::to_string(n) + ")-hook partition");
    const Partition t = lambda.transpose();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m; ++i) out.push_back(lambda.part(i));
    for (int j = 1; j <= n; ++j) out.push_back(std::max(t.part(j) - m, 0));
    return out;
}

} // namespace shimura
