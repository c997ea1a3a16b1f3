#include "tsat/word_census.hpp"

#include <cmath>
#include <cstring>
#include <map>

namespace tsat {
namespace words {

namespace {

// forbidden strings flattened per length, cheapest tail compare
struct TailChecker {
    std::vector<std::pair<int, std::vector<std::string>>> groups;  // (length, strings)

    explicit TailChecker(const ForbiddenSet& fs) {
        for (const auto& [j, set] : fs.by_length)
            groups.emplace_back(j, std::vector<std::string>(set.begin(), set.end()));
    }

    bool forbidden_tail(const std::string& s) const {
        for (const auto& [j, strs] : groups) {
            if (s.size() < static_cast<size_t>(j)) break;
            const char* tail = s.data() + s.size() - static_cast<size_t>(j);
            for (const auto& f : strs)
                if (std::memcmp(tail, f.data(), static_cast<size_t>(j)) == 0) return true;
        }
        return false;
    }
};

void dfs_count(const ForbiddenSet& fs, const TailChecker& tc, std::string& cur, int n_max,
               std::vector<uint64_t>& counts) {
    int depth = static_cast<int>(cur.size());
    ++counts[static_cast<size_t>(depth)];
    if (depth == n_max) return;
    for (int v = 0; v < fs.m; ++v) {
        cur.push_back(letter_char(v));
        if (!tc.forbidden_tail(cur)) dfs_count(fs, tc, cur, n_max, counts);
        cur.pop_back();
    }
}

void enum_guard(const ForbiddenSet& fs, int n_max) {
    if (std::pow(static_cast<double>(fs.m), static_cast<double>(n_max)) > kEnumGuard)
        throw guard_error("count_allowed: m^n_max exceeds the 1e8 enumeration guard; "
                          "use a smaller n_max or the suffix-dp method");
}

}  // namespace

std::vector<mpz_class> count_allowed_enum_serial(const ForbiddenSet& fs, int n_max) {
    enum_guard(fs, n_max);
    TailChecker tc(fs);
    std::vector<uint64_t> counts(static_cast<size_t>(n_max) + 1, 0);
    std::string cur;
    cur.reserve(static_cast<size_t>(n_max));
    dfs_count(fs, tc, cur, n_max, counts);
    return std::vector<mpz_class>(counts.begin(), counts.end());
}

std::vector<mpz_class> count_allowed_enum(const ForbiddenSet& fs, int n_max) {
    enum_guard(fs, n_max);
    TailChecker tc(fs);

    // split the tree at a shallow depth, walk subtrees in parallel
    int split = 0;
    long width = 1;
    while (split < n_max && width < 256) {
        ++split;
        width *= fs.m;
    }

    // factor-free prefixes at the split depth; shallower depths counted here
    std::vector<uint64_t> head(static_cast<size_t>(n_max) + 1, 0);
    std::vector<std::string> frontier{""};
    for (int d = 0; d < split; ++d) {
        head[static_cast<size_t>(d)] += frontier.size();
        std::vector<std::string> next;
        for (const auto& p : frontier)
            for (int v = 0; v < fs.m; ++v) {
                std::string q = p + letter_char(v);
                if (!tc.forbidden_tail(q)) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }

    const int S = static_cast<int>(frontier.size());
    std::vector<std::vector<uint64_t>> per_seed(
        static_cast<size_t>(S), std::vector<uint64_t>(static_cast<size_t>(n_max) + 1, 0));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < S; ++i) {
        std::string cur = frontier[static_cast<size_t>(i)];
        dfs_count(fs, tc, cur, n_max, per_seed[static_cast<size_t>(i)]);
    }

    std::vector<mpz_class> total(head.begin(), head.end());
    for (const auto& local : per_seed)
        for (size_t d = 0; d < local.size(); ++d) total[d] += local[d];
    return total;
}

std::vector<mpz_class> count_allowed_dp(const ForbiddenSet& fs, int n_max) {
    // states: proper prefixes of forbidden strings (the empty prefix
    // included) that are not themselves forbidden
    std::vector<std::string> states{""};
    std::map<std::string, int> id{{"", 0}};
    for (const auto& s : fs.ordered())
        for (size_t len = 1; len < s.size(); ++len) {
            std::string p = s.substr(0, len);
            if (!id.count(p) && !fs.has_forbidden_factor(p)) {
                id[p] = static_cast<int>(states.size());
                states.push_back(p);
            }
        }

    const int S = static_cast<int>(states.size());
    std::vector<std::vector<int>> trans(static_cast<size_t>(S),
                                        std::vector<int>(static_cast<size_t>(fs.m), -1));
    for (int st = 0; st < S; ++st) {
        for (int v = 0; v < fs.m; ++v) {
            std::string t = states[static_cast<size_t>(st)] + letter_char(v);
            if (fs.forbidden_suffix(t)) continue;  // dead
            // longest suffix of t that is a state
            int dest = 0;
            for (size_t drop = 0; drop <= t.size(); ++drop) {
                auto it = id.find(t.substr(drop));
                if (it != id.end()) {
                    dest = it->second;
                    break;
                }
            }
            trans[static_cast<size_t>(st)][static_cast<size_t>(v)] = dest;
        }
    }

    std::vector<mpz_class> dp(static_cast<size_t>(S), mpz_class(0));
    dp[0] = 1;
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    out.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<mpz_class> next(static_cast<size_t>(S), mpz_class(0));
        for (int st = 0; st < S; ++st) {
            if (dp[static_cast<size_t>(st)] == 0) continue;
            for (int v = 0; v < fs.m; ++v) {
                int dest = trans[static_cast<size_t>(st)][static_cast<size_t>(v)];
                if (dest >= 0) next[static_cast<size_t>(dest)] += dp[static_cast<size_t>(st)];
            }
        }
        dp = std::move(next);
        mpz_class total = 0;
        for (const auto& x : dp) total += x;
        out.push_back(total);
    }
    return out;
}

std::vector<mpz_class> count_allowed(const ForbiddenSet& fs, int n_max, CountMethod method) {
    if (n_max < 0) throw std::invalid_argument("count_allowed: negative n_max");
    switch (method) {
        case CountMethod::Enumerate:
            return count_allowed_enum(fs, n_max);
        case CountMethod::SuffixDp:
            return count_allowed_dp(fs, n_max);
        case CountMethod::Auto:
        default:
            if (std::pow(static_cast<double>(fs.m), static_cast<double>(n_max)) <= kEnumGuard)
                return count_allowed_enum(fs, n_max);
            return count_allowed_dp(fs, n_max);
    }
}

}  // namespace words
}  // namespace tsat
