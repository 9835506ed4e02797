#include "gcodim/partitions.hpp"

#include "gcodim/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gcodim {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw Error(Errc::BadParameter, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(Errc::BadParameter, "partition parts must be weakly decreasing");
    }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {

void gen_parts(int rest, int maxpart, int height_left, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (rest == 0) {
        Partition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    if (height_left == 0)
        return;
    for (int a = std::min(rest, maxpart); a >= 1; --a) {
        // remaining height must be able to absorb the rest
        if (static_cast<long>(a) * height_left < rest)
            break;
        cur.push_back(a);
        gen_parts(rest - a, a, height_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n, int max_height) {
    std::vector<Partition> out;
    if (n < 0 || max_height < 0)
        return out;
    std::vector<int> cur;
    gen_parts(n, n, max_height, cur, out);
    return out;
}

BigInt sn_dim(const Partition& lambda) {
    const auto& p = lambda.parts;
    BigInt hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k)
                ++leg;
            hooks *= arm + leg + 1;
        }
    return factorial(static_cast<unsigned long>(lambda.n())) / hooks;
}

BigInt t_ungraded(int n, int m) {
    if (n < 0 || m < 1)
        throw Error(Errc::BadParameter, "t_ungraded needs n >= 0, m >= 1");
    if (n == 0)
        return 1;
    m = std::min(m, n);
    static std::mutex mu;
    static std::map<std::pair<int, int>, BigInt> memo;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find({n, m});
        if (it != memo.end())
            return it->second;
    }
    BigInt s = 0;
    for (const auto& l : partitions(n, m)) {
        BigInt d = sn_dim(l);
        s += d * d;
    }
    std::lock_guard<std::mutex> lk(mu);
    memo.emplace(std::make_pair(n, m), s);
    return s;
}

Rational schur_eval(const Partition& lambda, const std::vector<Rational>& values) {
    const int m = static_cast<int>(values.size());
    const auto& lam = lambda.parts;
    if (lambda.height() > m)
        return 0;
    const std::size_t L = lam.size();
    // Chain of shapes mu^0 ⊆ mu^1 ⊆ ... ⊆ mu^m = lambda, each step a horizontal strip.
    std::map<std::vector<int>, Rational> cur;
    cur[std::vector<int>(L, 0)] = 1;
    for (int step = 0; step < m; ++step) {
        std::map<std::vector<int>, Rational> nxt;
        const Rational& t = values[step];
        for (const auto& [mu, w] : cur) {
            std::vector<int> nu(L);
            auto rec = [&](auto&& self, std::size_t j, int added) -> void {
                if (j == L) {
                    Rational tp = w;
                    for (int a = 0; a < added; ++a)
                        tp *= t;
                    nxt[nu] += tp;
                    return;
                }
                int hi = lam[j];
                if (j > 0)
                    hi = std::min(hi, mu[j - 1]);
                for (int v = mu[j]; v <= hi; ++v) {
                    nu[j] = v;
                    self(self, j + 1, added + v - mu[j]);
                }
            };
            rec(rec, 0, 0);
        }
        cur.swap(nxt);
    }
    auto it = cur.find(lam);
    return it == cur.end() ? Rational(0) : it->second;
}

namespace {

BigInt mn_rec(std::vector<int>& beta, const std::vector<int>& rims, std::size_t idx,
              std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
    if (idx == rims.size())
        return 1;
    auto key = std::make_pair(beta, idx);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    const int r = rims[idx];
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int nb = b - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end())
            continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b)
                ++between;
        beta[i] = nb;
        BigInt sub = mn_rec(beta, rims, idx + 1, memo);
        beta[i] = b;
        if (between % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

BigInt sn_character_value(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.n() != cycle_type.n())
        throw Error(Errc::SizeMismatch, "partition " + lambda.str() + " and cycle type " +
                                            cycle_type.str() + " have different sizes");
    const int L = lambda.height();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i)
        beta[i] = lambda.parts[i] + (L - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
    return mn_rec(beta, cycle_type.parts, 0, memo);
}

BigInt class_size(const Partition& cycle_type) {
    std::map<int, int> mult;
    for (int p : cycle_type.parts)
        ++mult[p];
    BigInt denom = 1;
    for (auto [k, c] : mult)
        denom *= ipow(BigInt(k), static_cast<unsigned long>(c)) *
                 factorial(static_cast<unsigned long>(c));
    return factorial(static_cast<unsigned long>(cycle_type.n())) / denom;
}

Partition cycle_type_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

} // namespace gcodim
