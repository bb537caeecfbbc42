#include "symdisc/simplex.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

constexpr long long kEnumerationGuard = 5'000'000;

void check_nonnegative(int d, int l) {
    if (d < 1) throw argument_error("stirling2: d must be positive");
    if (l < 0) throw argument_error("stirling2: negative l");
}

void validate_partition(const OrderedPartition& p) {
    if (p.d < 1) throw argument_error("partition: d must be positive");
    if (p.blocks.empty()) throw argument_error("partition: no blocks");
    std::vector<char> seen(p.d + 1, 0);
    int prev_min = 0;
    int covered = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) throw argument_error("partition: empty block");
        int prev = 0;
        for (int v : block) {
            if (v < 1 || v > p.d) throw argument_error("partition: element out of range");
            if (v <= prev) throw argument_error("partition: block not strictly ascending");
            if (seen[v]) throw argument_error("partition: element repeated");
            seen[v] = 1;
            prev = v;
            ++covered;
        }
        if (block.front() <= prev_min)
            throw argument_error("partition: blocks must be ordered by minimum");
        prev_min = block.front();
    }
    if (covered != p.d) throw argument_error("partition: blocks do not cover [d]");
}

void validate_sigma(const std::vector<int>& sigma) {
    const int l = static_cast<int>(sigma.size());
    if (l < 1) throw argument_error("simplex: empty permutation");
    std::vector<char> seen(l + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > l || seen[v]) throw argument_error("simplex: sigma is not a bijection on [l]");
        seen[v] = 1;
    }
}

void validate_simplex(const SimplexId& id) {
    validate_partition(id.partition);
    validate_sigma(id.sigma);
    if (id.partition.block_count() != id.dimension())
        throw argument_error("simplex: permutation length differs from block count");
}

// Restricted growth string of a canonical partition: rgs[pos] = index of the
// block containing pos+1. Block order by minimum makes this a valid RGS.
std::vector<int> rgs_of(const OrderedPartition& p) {
    std::vector<int> rgs(p.d, 0);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.blocks[b]) rgs[v - 1] = b;
    return rgs;
}

OrderedPartition partition_of_rgs(int d, int l, const std::vector<int>& rgs) {
    OrderedPartition p;
    p.d = d;
    p.blocks.assign(l, {});
    for (int pos = 0; pos < d; ++pos) p.blocks[rgs[pos]].push_back(pos + 1);
    return p;
}

// completions[i][j] = number of ways to extend an RGS prefix of length i that
// already uses j distinct values into a full length-d string using exactly l.
// Only states with j <= min(i, l) are filled; a prefix of length i cannot use
// more values, and the unreachable entries could overflow 64 bits.
std::vector<std::vector<long long>> rgs_completions(int d, int l) {
    std::vector<std::vector<long long>> table(d + 1, std::vector<long long>(l + 2, 0));
    if (l <= d) table[d][l] = 1;
    for (int i = d - 1; i >= 0; --i)
        for (int j = std::min(i, l); j >= 0; --j) {
            long long t = j * table[i + 1][j];
            if (j < l) t += table[i + 1][j + 1];
            table[i][j] = t;
        }
    return table;
}

long long factorial_ll(int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace

bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.d == b.d && a.blocks == b.blocks;
}

bool operator==(const SimplexId& a, const SimplexId& b) {
    return a.partition == b.partition && a.sigma == b.sigma;
}

bool operator<(const SimplexId& a, const SimplexId& b) {
    if (a.partition.d != b.partition.d) return a.partition.d < b.partition.d;
    if (a.partition.blocks != b.partition.blocks) return a.partition.blocks < b.partition.blocks;
    return a.sigma < b.sigma;
}

BigInt stirling2(int d, int l) {
    check_nonnegative(d, l);
    if (l > d) return 0;
    if (l == 0) return 0; // d >= 1
    // Row-by-row triangle; row[j] = S(i,j).
    std::vector<BigInt> row(l + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= d; ++i) {
        for (int j = std::min(i, l); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[l];
}

BigInt stirling2_formula(int d, int l) {
    check_nonnegative(d, l);
    if (l > d || l == 0) return 0;
    BigInt sum = 0;
    for (int j = 0; j <= l; ++j) {
        BigInt term = binomial(l, j) * int_pow(BigInt(l - j), d); // 0^d = 0 for d >= 1
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum / factorial(l); // exact
}

std::vector<OrderedPartition> enumerate_partitions(int d, int l) {
    if (d < 1) throw argument_error("enumerate_partitions: d must be positive");
    if (l < 1 || l > d) throw argument_error("enumerate_partitions: need 1 <= l <= d");
    if (stirling2(d, l) > kEnumerationGuard)
        throw size_cap_error("enumerate_partitions: S(d,l) exceeds the enumeration guard");

    std::vector<OrderedPartition> out;
    std::vector<int> rgs(d, 0);
    // Lexicographic recursion over RGS values; position 0 is always 0.
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (l - used > d - pos) return; // cannot still reach l blocks
        if (pos == d) {
            if (used == l) out.push_back(partition_of_rgs(d, l, rgs));
            return;
        }
        const int hi = std::min(used, l - 1); // new value allowed only up to l-1
        for (int v = 0; v <= hi; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(used, v + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<SimplexId> enumerate_simplices(int d, const std::vector<int>& dims) {
    if (d < 1) throw argument_error("enumerate_simplices: d must be positive");
    std::vector<int> ls = dims;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    long long total = 0;
    for (int l : ls) {
        if (l < 1 || l > d) throw argument_error("enumerate_simplices: dimension out of range");
        total += simplex_count(d, l);
        if (total > kEnumerationGuard)
            throw size_cap_error("enumerate_simplices: count exceeds the enumeration guard");
    }

    std::vector<SimplexId> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int l : ls) {
        for (auto& p : enumerate_partitions(d, l)) {
            std::vector<int> sigma(l);
            for (int i = 0; i < l; ++i) sigma[i] = i + 1;
            do {
                out.push_back(SimplexId{p, sigma});
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    }
    return out;
}

std::vector<std::vector<int>> simplex_points(const SimplexId& id, const std::vector<int>& T) {
    validate_simplex(id);
    int prev = 0;
    for (int t : T) {
        if (t <= prev) throw argument_error("simplex_points: T must be strictly ascending and positive");
        prev = t;
    }

    const int l = id.dimension();
    const int d = id.partition.d;
    const int t = static_cast<int>(T.size());
    std::vector<std::vector<int>> out;
    if (t < l) return out;

    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    while (true) {
        std::vector<int> point(d, 0);
        for (int b = 0; b < l; ++b) {
            const int value = T[idx[id.sigma[b] - 1]];
            for (int coord : id.partition.blocks[b]) point[coord - 1] = value;
        }
        out.push_back(std::move(point));
        int i = l - 1;
        while (i >= 0 && idx[i] == t - (l - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

PointClass classify_point(const std::vector<int>& x) {
    if (x.empty()) throw argument_error("classify_point: empty point");
    for (int v : x)
        if (v < 1) throw argument_error("classify_point: coordinates must be positive");

    const int d = static_cast<int>(x.size());
    OrderedPartition p;
    p.d = d;
    std::map<int, int> block_of_value; // value -> block index, in first-appearance order
    for (int pos = 1; pos <= d; ++pos) {
        auto it = block_of_value.find(x[pos - 1]);
        if (it == block_of_value.end()) {
            block_of_value.emplace(x[pos - 1], p.block_count());
            p.blocks.push_back({pos});
        } else {
            p.blocks[it->second].push_back(pos);
        }
    }

    std::vector<int> alpha;
    alpha.reserve(block_of_value.size());
    for (const auto& [value, block] : block_of_value) alpha.push_back(value); // ascending

    const int l = p.block_count();
    std::vector<int> sigma(l);
    for (const auto& [value, block] : block_of_value) {
        const int rank = static_cast<int>(std::lower_bound(alpha.begin(), alpha.end(), value) -
                                          alpha.begin());
        sigma[block] = rank + 1;
    }
    return PointClass{SimplexId{std::move(p), std::move(sigma)}, std::move(alpha)};
}

std::string to_string(const SimplexId& id) {
    std::string s = "k=" + std::to_string(id.dimension()) + ";J=";
    for (std::size_t b = 0; b < id.partition.blocks.size(); ++b) {
        if (b) s += '|';
        const auto& block = id.partition.blocks[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(block[i]);
        }
    }
    s += ";sigma=";
    for (std::size_t i = 0; i < id.sigma.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(id.sigma[i]);
    }
    return s;
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw parse_error(std::string("simplex id: empty number in ") + what);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error(std::string("simplex id: bad number in ") + what);
        }
        pos = next + 1;
    }
    if (out.empty()) throw parse_error(std::string("simplex id: empty ") + what);
    return out;
}

} // namespace

SimplexId parse_simplex_id(const std::string& s) {
    const std::string k_tag = "k=";
    const std::string j_tag = ";J=";
    const std::string s_tag = ";sigma=";
    if (s.rfind(k_tag, 0) != 0) throw parse_error("simplex id: expected 'k='");
    const std::size_t j_pos = s.find(j_tag);
    const std::size_t s_pos = s.find(s_tag);
    if (j_pos == std::string::npos || s_pos == std::string::npos || s_pos < j_pos)
        throw parse_error("simplex id: expected 'k=<l>;J=...;sigma=...'");

    int k = 0;
    try {
        k = std::stoi(s.substr(k_tag.size(), j_pos - k_tag.size()));
    } catch (const std::exception&) {
        throw parse_error("simplex id: bad dimension");
    }

    SimplexId id;
    const std::string blocks_str = s.substr(j_pos + j_tag.size(), s_pos - j_pos - j_tag.size());
    std::size_t pos = 0;
    int d = 0;
    while (pos <= blocks_str.size()) {
        std::size_t next = blocks_str.find('|', pos);
        if (next == std::string::npos) next = blocks_str.size();
        auto block = parse_int_list(blocks_str.substr(pos, next - pos), "block");
        d += static_cast<int>(block.size());
        id.partition.blocks.push_back(std::move(block));
        if (next == blocks_str.size()) break;
        pos = next + 1;
    }
    id.partition.d = d;
    id.sigma = parse_int_list(s.substr(s_pos + s_tag.size()), "sigma");

    try {
        validate_simplex(id);
    } catch (const argument_error& e) {
        throw parse_error(std::string("simplex id: ") + e.what());
    }
    if (k != id.dimension()) throw parse_error("simplex id: dimension tag mismatch");
    return id;
}

long long partition_count(int d, int l) {
    check_nonnegative(d, l);
    if (l > d || l == 0) return 0;
    const BigInt s = stirling2(d, l);
    if (s > std::numeric_limits<long long>::max())
        throw size_cap_error("partition_count: S(d,l) exceeds 64-bit rank arithmetic");
    return static_cast<long long>(s);
}

long long simplex_count(int d, int l) {
    check_nonnegative(d, l);
    if (l > d || l == 0) return 0;
    const BigInt s = stirling2(d, l) * factorial(l);
    if (s > std::numeric_limits<long long>::max())
        throw size_cap_error("simplex_count: l! S(d,l) exceeds 64-bit rank arithmetic");
    return static_cast<long long>(s);
}

long long partition_rank(const OrderedPartition& p) {
    validate_partition(p);
    const int d = p.d;
    const int l = p.block_count();
    partition_count(d, l); // overflow guard
    const auto rgs = rgs_of(p);
    const auto table = rgs_completions(d, l);
    long long rank = 0;
    int used = 0;
    for (int i = 0; i < d; ++i) {
        // every value below rgs[i] was already in use, so the block count stays
        rank += rgs[i] * table[i + 1][used];
        if (rgs[i] == used) ++used;
    }
    return rank;
}

OrderedPartition partition_unrank(int d, int l, long long rank) {
    if (d < 1 || l < 1 || l > d) throw argument_error("partition_unrank: need 1 <= l <= d");
    const long long count = partition_count(d, l);
    if (rank < 0 || rank >= count) throw argument_error("partition_unrank: rank out of range");
    const auto table = rgs_completions(d, l);
    std::vector<int> rgs(d, 0);
    int used = 0;
    for (int i = 0; i < d; ++i) {
        const int hi = std::min(used, l - 1);
        int v = 0;
        for (; v <= hi; ++v) {
            const long long sub = (v < used) ? table[i + 1][used] : table[i + 1][used + 1];
            if (rank < sub) break;
            rank -= sub;
        }
        rgs[i] = v;
        if (v == used) ++used;
    }
    return partition_of_rgs(d, l, rgs);
}

long long permutation_rank(const std::vector<int>& sigma) {
    validate_sigma(sigma);
    const int l = static_cast<int>(sigma.size());
    long long rank = 0;
    for (int i = 0; i < l; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < l; ++j)
            if (sigma[j] < sigma[i]) ++smaller;
        rank += smaller * factorial_ll(l - 1 - i);
    }
    return rank;
}

std::vector<int> permutation_unrank(int l, long long rank) {
    if (l < 1) throw argument_error("permutation_unrank: l must be positive");
    if (rank < 0 || rank >= factorial_ll(l))
        throw argument_error("permutation_unrank: rank out of range");
    std::vector<int> pool(l);
    for (int i = 0; i < l; ++i) pool[i] = i + 1;
    std::vector<int> sigma;
    sigma.reserve(l);
    for (int i = l - 1; i >= 0; --i) {
        const long long f = factorial_ll(i);
        const int idx = static_cast<int>(rank / f);
        rank %= f;
        sigma.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return sigma;
}

long long simplex_rank(const SimplexId& id) {
    validate_simplex(id);
    const int l = id.dimension();
    simplex_count(id.partition.d, l); // overflow guard
    return partition_rank(id.partition) * factorial_ll(l) + permutation_rank(id.sigma);
}

SimplexId simplex_unrank(int d, int l, long long rank) {
    const long long count = simplex_count(d, l);
    if (l < 1) throw argument_error("simplex_unrank: l must be positive");
    if (rank < 0 || rank >= count) throw argument_error("simplex_unrank: rank out of range");
    const long long lf = factorial_ll(l);
    return SimplexId{partition_unrank(d, l, rank / lf), permutation_unrank(l, rank % lf)};
}

} // namespace symdisc
