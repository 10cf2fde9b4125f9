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

#include "gauge/lattice.hpp"

#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

namespace {
int mod(int a, int m) {
    a %= m;
    return a < 0 ? a + m : a;
}
}  // namespace

const char* boundary_name(Boundary b) { return b == Boundary::Periodic ? "periodic" : "open"; }

Lattice2D::Lattice2D(GroupSpec g, int n, int m, Boundary vertical, Boundary horizontal)
    : group_(std::move(g)), n_(n), m_(m), vertical_(vertical), horizontal_(horizontal) {
    if (n < 2) throw SpecError("lattice needs N >= 2");
    if (m < 1) throw SpecError("lattice needs M >= 1");
    if (vertical == Boundary::Periodic) {
        if (m < 2 || m % 2) throw SpecError("vertically periodic lattice needs even M >= 2");
        if (horizontal != Boundary::Periodic) throw SpecError("a torus needs periodic horizontal boundaries");
    }
    int nrows = vertical == Boundary::Periodic ? m : m + 1;
    row_x_.resize(nrows);
    for (int j = 0; j < nrows; ++j) {
        if (horizontal == Boundary::Periodic) {
            for (int k = 0; k < n; ++k) row_x_[j].push_back(j % 2 + 2 * k);
        } else {
            for (int k = 0; k < n + j; ++k) row_x_[j].push_back(-j + 2 * k);
        }
        for (int x : row_x_[j]) {
            index_[{j, x}] = static_cast<int>(sites_.size());
            sites_.push_back({j, x, row_kind(j)});
        }
    }
}

std::optional<int> Lattice2D::site(int row, int x) const {
    if (vertical_ == Boundary::Periodic) {
        row = mod(row, m_);
    } else if (row < 0 || row >= rows()) {
        return std::nullopt;
    }
    if (horizontal_ == Boundary::Periodic) x = mod(x, 2 * n_);
    auto it = index_.find({row, x});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Lattice2D::site_or_throw(int row, int x) const {
    auto s = site(row, x);
    if (!s) throw SpecError("no lattice site at row " + std::to_string(row) + ", x " + std::to_string(x));
    return *s;
}

std::vector<SiteKind> Lattice2D::kinds() const {
    std::vector<SiteKind> k;
    for (const auto& s : sites_) k.push_back(s.kind);
    return k;
}

std::vector<int> Lattice2D::dims() const { return std::vector<int>(sites_.size(), group_.order()); }

}  // namespace gauge
