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

#ifndef GAUGE_CYCLOTOMIC_HPP
#define GAUGE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gauge {

using Int128 = __int128;

/// Element of Z[w] with w = exp(2 pi i / L), held as the coefficient vector
/// of 1, w, ..., w^(L-1). The representation is not unique; equality and
/// zero tests reduce modulo the L-th cyclotomic polynomial.
///
/// A default-constructed value is the zero of an unspecified ring and adopts
/// the modulus of whatever it is first combined with.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    explicit Cyclotomic(int L);

    static Cyclotomic root(int L, int64_t k, Int128 coeff = 1);
    static Cyclotomic integer(int L, Int128 n);

    int modulus() const { return L_; }
    const std::vector<Int128>& coeffs() const { return c_; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic scaled(Int128 s) const;
    /// Multiply by w^k.
    Cyclotomic times_root(int64_t k) const;
    /// Add coeff * w^k in place.
    void add_root(int64_t k, Int128 coeff = 1);
    /// Complex conjugate.
    Cyclotomic conj() const;

    bool is_zero() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    /// The exact rational integer this element equals, if it is one.
    std::optional<Int128> as_integer() const;
    /// If the canonical reduction is a single term c * w^k, returns (c, k).
    std::optional<std::pair<Int128, int>> as_monomial() const;

   private:
    void adopt(int L);
    int L_ = 0;
    std::vector<Int128> c_;
};

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<int64_t>& cyclotomic_polynomial(int n);

std::string int128_to_string(Int128 v);

}  // namespace gauge

#endif
