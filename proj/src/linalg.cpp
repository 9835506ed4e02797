#include "gcodim/linalg.hpp"

namespace gcodim {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t from_rational(const Rational& q, std::uint64_t p) {
    BigInt P = static_cast<unsigned long>(p);
    BigInt n = q.get_num() % P;
    if (n < 0)
        n += P;
    BigInt d = q.get_den() % P;
    if (d == 0)
        throw Error(Errc::EmptyUniverse, "denominator divisible by the modulus");
    return mul(n.get_ui(), inv(d.get_ui(), p), p);
}

long long lift(std::uint64_t a, std::uint64_t p) {
    if (a > p / 2)
        return -static_cast<long long>(p - a);
    return static_cast<long long>(a);
}

} // namespace modp

bool ModularEchelon::add(ModRow row) {
    ModRow tmp;
    while (!row.empty()) {
        const Col lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            std::uint64_t s = modp::inv(row.front().second, p_);
            for (auto& e : row)
                e.second = modp::mul(e.second, s, p_);
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        // row -= c * pivot, pivot has leading coefficient 1
        const std::uint64_t c = row.front().second;
        const ModRow& pv = it->second;
        tmp.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pv.size()) {
            if (j == pv.size() || (i < row.size() && row[i].first < pv[j].first)) {
                tmp.push_back(row[i++]);
            } else if (i == row.size() || pv[j].first < row[i].first) {
                tmp.emplace_back(pv[j].first, modp::sub(0, modp::mul(c, pv[j].second, p_), p_));
                ++j;
            } else {
                std::uint64_t v = modp::sub(row[i].second, modp::mul(c, pv[j].second, p_), p_);
                if (v)
                    tmp.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        row.swap(tmp);
    }
    return false;
}

std::vector<Col> ModularEchelon::pivot_columns() const {
    std::vector<Col> out;
    for (const auto& kv : pivots_)
        out.push_back(kv.first);
    return out;
}

namespace {

void make_primitive(IntRow& row) {
    BigInt g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g > 1)
        for (auto& e : row)
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    if (!row.empty() && row.front().second < 0)
        for (auto& e : row)
            e.second = -e.second;
}

} // namespace

IntRow to_int_row(const std::vector<std::pair<Col, Rational>>& v) {
    BigInt l = 1;
    for (const auto& e : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    IntRow r;
    r.reserve(v.size());
    for (const auto& e : v) {
        Rational s = e.second * l;
        if (s != 0)
            r.emplace_back(e.first, s.get_num());
    }
    return r;
}

bool IntegerEchelon::add(IntRow row) {
    make_primitive(row);
    IntRow tmp;
    while (!row.empty()) {
        const Col lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        // row <- a*row - b*pivot with a, b the leading coefficients
        const IntRow& pv = it->second;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), pv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        const BigInt a = pv.front().second / g;
        const BigInt b = row.front().second / g;
        tmp.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pv.size()) {
            if (j == pv.size() || (i < row.size() && row[i].first < pv[j].first)) {
                tmp.emplace_back(row[i].first, a * row[i].second);
                ++i;
            } else if (i == row.size() || pv[j].first < row[i].first) {
                tmp.emplace_back(pv[j].first, -b * pv[j].second);
                ++j;
            } else {
                BigInt v = a * row[i].second - b * pv[j].second;
                if (v != 0)
                    tmp.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row.swap(tmp);
        make_primitive(row);
    }
    return false;
}

std::vector<std::vector<std::uint64_t>> mod_inverse(std::vector<std::vector<std::uint64_t>> a,
                                                    std::uint64_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::uint64_t>> inv(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw Error(Errc::BadParameter, "singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const std::uint64_t s = modp::inv(a[c][c], p);
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] = modp::mul(a[c][k], s, p);
            inv[c][k] = modp::mul(inv[c][k], s, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const std::uint64_t f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] = modp::sub(a[r][k], modp::mul(f, a[c][k], p), p);
                inv[r][k] = modp::sub(inv[r][k], modp::mul(f, inv[c][k], p), p);
            }
        }
    }
    return inv;
}

} // namespace gcodim
