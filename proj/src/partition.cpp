#include "spinqw/partition.hpp"

#include <algorithm>
#include <numeric>

#include "spinqw/errors.hpp"

namespace spinqw {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 0, "partition parts must be non-negative");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), s.end());
    if (s.empty() || s == "0") return Partition();
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw PreconditionError("not a partition: '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::vector<int> sorted = parts;
    if (!std::is_sorted(sorted.rbegin(), sorted.rend()))
        throw PreconditionError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::vector<int>& counts)
{
    std::vector<int> parts;
    for (int c = static_cast<int>(counts.size()) - 1; c >= 0; --c)
        for (int r = 0; r < counts[c]; ++r) parts.push_back(c);
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::length() const
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::positive() const
{
    return Partition(std::vector<int>(parts_.begin(), parts_.begin() + length()));
}

Partition Partition::padded(std::size_t n) const
{
    Partition p = positive();
    require(static_cast<std::size_t>(p.length()) <= n, "partition has more positive parts than requested size");
    p.parts_.resize(n, 0);
    return p;
}

Partition Partition::conjugate() const
{
    std::vector<int> out(largest(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
}

MultiplicityVector Partition::multiplicities() const
{
    MultiplicityVector m;
    m.counts.assign(largest() + 1, 0);
    for (int p : parts_) ++m.counts[p];
    if (parts_.empty()) m.counts.clear();
    return m;
}

int Partition::multiplicity(int value) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool interlaces(const Partition& lambda, const Partition& mu)
{
    int ll = lambda.length(), lm = mu.length();
    if (ll - lm < 0 || ll - lm > 1) return false;
    for (int i = 0; i < ll; ++i) {
        if (mu[i] > lambda[i]) return false;
        if (mu[i] < lambda[i + 1]) return false;
    }
    return true;
}

bool contains(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu)) return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] - mu[i] > 1) return false;
    return true;
}

namespace {

void extend(std::vector<int>& cur, int max_part, int max_length, int remaining, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    int top = std::min(remaining, cur.empty() ? max_part : cur.back());
    for (int p = top; p >= 1; --p) {
        cur.push_back(p);
        extend(cur, max_part, max_length, remaining - p, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int max_part, int max_length, int max_weight)
{
    require(max_part >= 0 && max_length >= 0, "enumeration bounds must be non-negative");
    int cap = max_part * max_length;
    if (max_weight >= 0) cap = std::min(cap, max_weight);
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int w = 0; w <= cap; ++w) extend(cur, max_part, max_length, w, out);
    return out;
}

std::vector<Partition> partitions_with_size(int n, int max_part)
{
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(max_part, n)) out.push_back(p.padded(n));
    return out;
}

} // namespace spinqw
