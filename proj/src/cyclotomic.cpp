// Copyright 2026 The gauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gauge/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

int64_t mod(int64_t a, int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Ramanujan sum c_L(k) = sum over primitive L-th roots z of z^k.
int64_t ramanujan_sum(int L, int k) {
    int g = std::gcd(L, k == 0 ? L : k);
    int64_t s = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d == 0) s += moebius(L / d) * d;
    }
    return s;
}

}  // namespace

namespace {

std::vector<int64_t> exact_divide(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    int dq = static_cast<int>(den.size()) - 1;
    int dd = static_cast<int>(num.size()) - 1;
    std::vector<int64_t> out(dd - dq + 1, 0);
    for (int i = dd; i >= dq; --i) {
        int64_t c = num[i];
        out[i - dq] = c;
        for (int j = 0; j <= dq; ++j) num[i - dq + j] -= c * den[j];
    }
    return out;
}

const std::vector<int64_t>& phi_locked(int n, std::map<int, std::vector<int64_t>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = exact_divide(num, phi_locked(d, cache));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<int64_t>> cache;
    if (n < 1) throw SpecError("cyclotomic polynomial order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    return phi_locked(n, cache);
}

Cyclotomic::Cyclotomic(int L) : L_(L), c_(L, 0) {
    if (L < 1) throw SpecError("cyclotomic modulus must be positive");
}

Cyclotomic Cyclotomic::root(int L, int64_t k, Int128 coeff) {
    Cyclotomic r(L);
    r.c_[mod(k, L)] = coeff;
    return r;
}

Cyclotomic Cyclotomic::integer(int L, Int128 n) { return root(L, 0, n); }

void Cyclotomic::adopt(int L) {
    if (L_ == 0) {
        L_ = L;
        c_.assign(L, 0);
    } else if (L_ != L && L != 0) {
        throw SpecError("cyclotomic modulus mismatch");
    }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.L_ == 0) return *this;
    adopt(o.L_);
    for (int i = 0; i < L_; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.L_ == 0) return *this;
    adopt(o.L_);
    for (int i = 0; i < L_; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r += o;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r -= o;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (L_ == 0 || o.L_ == 0) return Cyclotomic();
    if (L_ != o.L_) throw SpecError("cyclotomic modulus mismatch");
    Cyclotomic r(L_);
    for (int i = 0; i < L_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < L_; ++j) {
            if (o.c_[j] == 0) continue;
            int k = i + j;
            if (k >= L_) k -= L_;
            r.c_[k] += c_[i] * o.c_[j];
        }
    }
    return r;
}

Cyclotomic Cyclotomic::scaled(Int128 s) const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

Cyclotomic Cyclotomic::times_root(int64_t k) const {
    if (L_ == 0) return *this;
    Cyclotomic r(L_);
    int64_t sh = mod(k, L_);
    for (int i = 0; i < L_; ++i) r.c_[(i + sh) % L_] = c_[i];
    return r;
}

void Cyclotomic::add_root(int64_t k, Int128 coeff) {
    if (L_ == 0) throw SpecError("add_root on a cyclotomic without modulus");
    c_[mod(k, L_)] += coeff;
}

Cyclotomic Cyclotomic::conj() const {
    if (L_ == 0) return *this;
    Cyclotomic r(L_);
    for (int i = 0; i < L_; ++i) r.c_[(L_ - i) % L_] = c_[i];
    return r;
}

bool Cyclotomic::is_zero() const {
    if (L_ == 0) return true;
    const auto& phi = cyclotomic_polynomial(L_);
    int deg = static_cast<int>(phi.size()) - 1;
    std::vector<Int128> r(c_.begin(), c_.end());
    for (int i = L_ - 1; i >= deg; --i) {
        Int128 c = r[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
    }
    for (int i = 0; i < deg; ++i) {
        if (r[i] != 0) return false;
    }
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> s = 0;
    for (int i = 0; i < L_; ++i) {
        if (c_[i] == 0) continue;
        double a = 2.0 * std::numbers::pi * i / L_;
        s += static_cast<double>(c_[i]) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return s;
}

std::optional<Int128> Cyclotomic::as_integer() const {
    if (L_ == 0) return Int128(0);
    // phi(L) * n = sum_k c_k c_L(k) for a rational value n.
    Int128 acc = 0;
    for (int k = 0; k < L_; ++k) {
        if (c_[k] != 0) acc += c_[k] * ramanujan_sum(L_, k);
    }
    int ph = euler_phi(L_);
    if (acc % ph != 0) return std::nullopt;
    Int128 n = acc / ph;
    if (!(*this - integer(L_, n)).is_zero()) return std::nullopt;
    return n;
}

std::optional<std::pair<Int128, int>> Cyclotomic::as_monomial() const {
    if (L_ == 0) return std::nullopt;
    std::optional<std::pair<Int128, int>> negative;
    for (int k = 0; k < L_; ++k) {
        auto n = times_root(-k).as_integer();
        if (!n || *n == 0) continue;
        if (*n > 0) return std::make_pair(*n, k);
        if (!negative) negative = std::make_pair(*n, k);
    }
    return negative;
}

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace gauge
